"""Finite multidigraphs, their directed line graphs, and instance generation."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Optional, Sequence


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Multidigraph:
    """A multidigraph with ordered vertices and ordered edges.

    Edges are ``(tail, head)`` pairs of vertex *indices*.  Parallel edges
    and loops are allowed.  The orderings fix the bases of Z^V and Z^E used
    by every matrix built from the graph.
    """

    vertices: tuple[Hashable, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple((int(t), int(h)) for t, h in self.edges))
        n = len(self.vertices)
        for idx, (t, h) in enumerate(self.edges):
            if not (0 <= t < n and 0 <= h < n):
                raise ValueError(f"edge {idx} = ({t}, {h}) references a vertex outside 0..{n - 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]]) -> "Multidigraph":
        """Graph on vertices ``0..n-1``."""
        return cls(tuple(range(n)), tuple(edges))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def tail(self, e: int) -> int:
        return self.edges[e][0]

    def head(self, e: int) -> int:
        return self.edges[e][1]

    def out_edges(self, v: int) -> list[int]:
        _check_vertex(self, v)
        return [i for i, (t, _) in enumerate(self.edges) if t == v]

    def in_edges(self, v: int) -> list[int]:
        _check_vertex(self, v)
        return [i for i, (_, h) in enumerate(self.edges) if h == v]

    def disjoint_union(self, other: "Multidigraph") -> "Multidigraph":
        shift = self.n_vertices
        verts = [(0, v) for v in self.vertices] + [(1, v) for v in other.vertices]
        edges = list(self.edges) + [(t + shift, h + shift) for t, h in other.edges]
        return Multidigraph(tuple(verts), tuple(edges))


@dataclass(frozen=True)
class BasePoint:
    """Sink ``w*``, base edge ``e* = (w*, v*)`` and its target ``v*``."""

    sink: int
    base_edge: int
    target: int

    @classmethod
    def from_edge(cls, g: Multidigraph, e: int) -> "BasePoint":
        if not 0 <= e < g.n_edges:
            raise ValueError(f"edge index {e} out of range 0..{g.n_edges - 1}")
        t, h = g.edges[e]
        return cls(sink=t, base_edge=e, target=h)

    def validate(self, g: Multidigraph) -> None:
        if not 0 <= self.base_edge < g.n_edges:
            raise ValueError(f"base edge {self.base_edge} out of range")
        if g.edges[self.base_edge] != (self.sink, self.target):
            raise ValueError(
                f"base edge {self.base_edge} is {g.edges[self.base_edge]}, "
                f"not ({self.sink}, {self.target})"
            )


def _check_vertex(g: Multidigraph, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < g.n_vertices:
        raise ValueError(f"vertex index {v!r} out of range 0..{g.n_vertices - 1}")


def out_degree(g: Multidigraph, v: int) -> int:
    _check_vertex(g, v)
    return sum(1 for t, _ in g.edges if t == v)


def in_degree(g: Multidigraph, v: int) -> int:
    _check_vertex(g, v)
    return sum(1 for _, h in g.edges if h == v)


def out_degrees(g: Multidigraph) -> list[int]:
    deg = [0] * g.n_vertices
    for t, _ in g.edges:
        deg[t] += 1
    return deg


def in_degrees(g: Multidigraph) -> list[int]:
    deg = [0] * g.n_vertices
    for _, h in g.edges:
        deg[h] += 1
    return deg


def edge_name(g: Multidigraph, e: int) -> str:
    t, h = g.edges[e]
    return f"{g.vertices[t]}>{g.vertices[h]}#{e}"


def line_graph(g: Multidigraph) -> Multidigraph:
    """Directed line graph: one vertex per edge, an edge ``(e, f)`` whenever ``head(e) == tail(f)``.

    Vertex ``i`` of the result is edge ``i`` of ``g``; it is named
    ``"tail>head#i"``.  Edges come in lexicographic order of ``(e, f)``.
    """
    by_tail: list[list[int]] = [[] for _ in range(g.n_vertices)]
    for f, (t, _) in enumerate(g.edges):
        by_tail[t].append(f)
    edges = [(e, f) for e, (_, h) in enumerate(g.edges) for f in by_tail[h]]
    names = tuple(edge_name(g, e) for e in range(g.n_edges))
    return Multidigraph(names, tuple(edges))


def is_k_out_regular(g: Multidigraph) -> Optional[int]:
    """Common out-degree ``k >= 1`` if every vertex has it, else ``None``."""
    if g.n_vertices == 0:
        raise ValueError("empty graph has no out-degree")
    degs = set(out_degrees(g))
    if len(degs) == 1:
        k = degs.pop()
        return k if k > 0 else None
    return None


def check_hypotheses(g: Multidigraph, bp: BasePoint) -> tuple[bool, list[str]]:
    """In-degree hypotheses: every in-degree >= 1 and ``indeg(v*) >= 2``."""
    bp.validate(g)
    reasons = []
    indeg = in_degrees(g)
    for v, d in enumerate(indeg):
        if d < 1:
            reasons.append(f"vertex {g.vertices[v]!r} has in-degree 0")
    if indeg[bp.target] < 2:
        reasons.append(
            f"target vertex {g.vertices[bp.target]!r} has in-degree {indeg[bp.target]} < 2"
        )
    return not reasons, reasons


def reachable_to(g: Multidigraph, w: int) -> set[int]:
    """Vertices with a directed path to ``w`` (``w`` included)."""
    _check_vertex(g, w)
    preds: list[list[int]] = [[] for _ in range(g.n_vertices)]
    for t, h in g.edges:
        preds[h].append(t)
    seen = {w}
    queue = deque([w])
    while queue:
        v = queue.popleft()
        for u in preds[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def random_k_out_regular(n: int, k: int, seed, max_attempts: int = 1000) -> tuple[Multidigraph, BasePoint]:
    """Random k-out-regular multidigraph satisfying the in-degree hypotheses.

    Every vertex draws ``k`` heads uniformly with replacement; draws are
    rejected until all in-degrees are positive and some edge has a head of
    in-degree at least 2.  The first such edge becomes the base edge.
    """
    if n < 2 or k < 2:
        raise ValueError(f"need n >= 2 and k >= 2, got n={n}, k={k}")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        edges = [(v, rng.randrange(n)) for v in range(n) for _ in range(k)]
        indeg = [0] * n
        for _, h in edges:
            indeg[h] += 1
        if min(indeg) < 1:
            continue
        for e, (_, h) in enumerate(edges):
            if indeg[h] >= 2:
                g = Multidigraph.from_edges(n, edges)
                return g, BasePoint.from_edge(g, e)
    raise GenerationError(f"no eligible graph after {max_attempts} attempts (n={n}, k={k})")
