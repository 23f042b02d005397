"""Seeded fuzz harness for the line-graph surjection theorem."""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Optional

from .critical import (
    StructuralMaps,
    TheoremReport,
    matrix_tree_consistent,
    structural_maps,
    verify_main_theorem,
)
from .digraph import BasePoint, Multidigraph, random_k_out_regular

MUTATIONS = ("rho", "tau")
N_RANGE = (2, 8)
K_CHOICES = (2, 3)


def mutate_maps(maps: StructuralMaps, bp: BasePoint, kind: str) -> StructuralMaps:
    """Deliberately broken maps for negative controls.

    ``"rho"`` bumps one entry of rho (a row other than the sink when there
    is one, in the first non-base column).  ``"tau"`` leaves the base-edge
    column of tau unzeroed and rebuilds rho from it.
    """
    if kind == "rho":
        nv, ne = maps.rho.shape
        row = next((v for v in range(nv) if v != bp.sink), 0)
        col = next((e for e in range(ne) if e != bp.base_edge), bp.base_edge)
        return replace(maps, rho=maps.rho.with_entry(row, col, maps.rho[row, col] + 1))
    if kind == "tau":
        tau = maps.tau.with_entry(bp.target, bp.base_edge, 1)
        return replace(maps, tau=tau, rho=maps.rho0 @ tau)
    raise ValueError(f"unknown mutation {kind!r}; choose from {MUTATIONS}")


@dataclass
class TrialResult:
    index: int
    n: int
    k: int
    n_edges: int
    report: TheoremReport
    matrix_tree_ok: Optional[bool]

    @property
    def passed(self) -> bool:
        return self.report.all_binding_passed and self.matrix_tree_ok is not False


def trial_instance(seed, index: int, n: Optional[int] = None,
                   k: Optional[int] = None) -> tuple[Multidigraph, BasePoint, int, int]:
    """The instance for trial ``index``; a pure function of ``(seed, index, n, k)``."""
    rng = random.Random(f"{seed}:{index}")
    n = n if n is not None else rng.randint(*N_RANGE)
    k = k if k is not None else rng.choice(K_CHOICES)
    g, bp = random_k_out_regular(n, k, rng.getrandbits(64))
    return g, bp, n, k


def run_trial(seed, index: int, n: Optional[int] = None, k: Optional[int] = None,
              mutation: Optional[str] = None) -> TrialResult:
    g, bp, n, k = trial_instance(seed, index, n, k)
    maps = structural_maps(g, bp)
    if mutation:
        maps = mutate_maps(maps, bp, mutation)
    report = verify_main_theorem(g, bp, maps=maps)
    return TrialResult(index, n, k, g.n_edges, report, matrix_tree_consistent(g))


def run_fuzz(trials: int, seed, n: Optional[int] = None, k: Optional[int] = None,
             mutation: Optional[str] = None) -> list[TrialResult]:
    """Run ``trials`` random eligible instances.

    When ``n`` or ``k`` is omitted each trial draws it from ``2..8`` and
    ``{2, 3}`` respectively.
    """
    return [run_trial(seed, i, n, k, mutation) for i in range(trials)]


def summarize(results: list[TrialResult], seed) -> str:
    results = sorted(results, key=lambda r: r.index)
    failed = [r for r in results if not r.passed]
    checked_mt = sum(1 for r in results if r.matrix_tree_ok is not None)
    lines = []
    for r in failed:
        names = ", ".join(c.name for c in r.report.failures) or "matrix_tree"
        lines.append(f"trial {r.index} (n={r.n}, k={r.k}, |E|={r.n_edges}) FAILED: {names}")
    lines.append(
        f"fuzz seed={seed}: {len(results)} instances, {len(results) - len(failed)} passed, "
        f"{len(failed)} failed, matrix-tree cross-checked on {checked_mt}"
    )
    return "\n".join(lines)
