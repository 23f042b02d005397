"""Finitely generated abelian groups presented as cokernels of integer matrices.

A group is ``Z^n / L`` where ``L`` is the column lattice of an ``n x m``
relation matrix.  Homomorphisms are given by integer matrices between the
ambient spaces, so maps defined on bases (vertices, edges) can be induced
directly on the quotients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence, Union

from .exactint import (
    IntMatrix,
    SnfDecomposition,
    column_lattice_basis,
    hermite_normal_form,
    hnf_pivots,
    integer_kernel,
    lattice_solver,
    smith_normal_form,
    unimodular_inverse,
)


class InductionError(ValueError):
    """A matrix does not respect the relation lattices, so no map is induced."""


class AbelianGroup:
    """``Z^n`` modulo the column lattice of ``relations``.

    Canonical coordinates come from the Smith form ``U R V = S``: the class
    of ``x`` has coordinates ``U x``, read modulo the diagonal of ``S``.
    Coordinates whose modulus is 1 are dropped.
    """

    def __init__(self, relations: IntMatrix):
        self.relations = relations
        self.snf: SnfDecomposition = smith_normal_form(relations)
        diag = self.snf.diagonal
        n = relations.rows
        moduli = [diag[i] if i < len(diag) else 0 for i in range(n)]
        # Positions in U-coordinates that survive (modulus != 1), in
        # divisibility order: torsion factors first, then free ones.
        self._torsion_pos = [i for i, d in enumerate(moduli) if d > 1]
        self._free_pos = [i for i, d in enumerate(moduli) if d == 0]
        self._moduli = moduli
        self.invariant_factors: tuple[int, ...] = tuple(moduli[i] for i in self._torsion_pos)
        self.free_rank: int = len(self._free_pos)

    @property
    def ngens(self) -> int:
        """Number of ambient generators."""
        return self.relations.rows

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> Union[int, float]:
        return order(self)

    @property
    def moduli(self) -> tuple[int, ...]:
        """Modulus of each canonical coordinate (0 for free coordinates)."""
        return self.invariant_factors + (0,) * self.free_rank

    @cached_property
    def _u_inverse(self) -> IntMatrix:
        return unimodular_inverse(self.snf.U)

    def same_type(self, other: "AbelianGroup") -> bool:
        return (self.invariant_factors, self.free_rank) == (other.invariant_factors, other.free_rank)

    def element(self, ambient: Sequence[int]) -> "GroupElement":
        return reduce(self, ambient)

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.moduli))

    def lift(self, elem: "GroupElement") -> list[int]:
        """An ambient vector representing ``elem``."""
        full = [0] * self.ngens
        for pos, c in zip(self._torsion_pos + self._free_pos, elem.coords):
            full[pos] = c
        return self._u_inverse.apply(full)

    def generators(self) -> list["GroupElement"]:
        """Canonical generators, one per invariant factor then one per free summand."""
        out = []
        for idx in range(len(self.moduli)):
            coords = [0] * len(self.moduli)
            coords[idx] = 1
            out.append(GroupElement(self, tuple(coords)))
        return out

    def elements(self):
        """Iterate over all elements of a finite group."""
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite group")

        def rec(prefix, rest):
            if not rest:
                yield GroupElement(self, tuple(prefix))
                return
            for c in range(rest[0]):
                yield from rec(prefix + [c], rest[1:])

        yield from rec([], list(self.invariant_factors))

    def _normalize(self, coords: Sequence[int]) -> "GroupElement":
        return GroupElement(self, tuple(c % d if d else c for c, d in zip(coords, self.moduli)))

    def contains_relation(self, ambient: Sequence[int]) -> bool:
        return not any(reduce(self, ambient).coords)

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"<AbelianGroup {self} on {self.ngens} generators>"


@dataclass(frozen=True)
class GroupElement:
    group: AbelianGroup = field(compare=False, repr=False)
    coords: tuple[int, ...]

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return self.group._normalize([a + b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "GroupElement":
        return self.group._normalize([-a for a in self.coords])

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __rmul__(self, k: int) -> "GroupElement":
        return self.group._normalize([k * a for a in self.coords])

    def is_zero(self) -> bool:
        return not any(self.coords)


def cokernel(relations: IntMatrix) -> AbelianGroup:
    return AbelianGroup(relations)


def reduce(g: AbelianGroup, ambient: Sequence[int]) -> GroupElement:
    """Canonical coordinates of the class of an ambient vector."""
    if len(ambient) != g.ngens:
        raise ValueError(f"ambient vector has length {len(ambient)}, group has {g.ngens} generators")
    y = g.snf.U.apply(list(ambient))
    return g._normalize([y[i] for i in g._torsion_pos + g._free_pos])


def order(g: AbelianGroup) -> Union[int, float]:
    """Number of elements, or ``math.inf`` when there is a free summand."""
    if g.free_rank:
        return math.inf
    return math.prod(g.invariant_factors)


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism ``src -> dst`` induced by an ambient matrix (dst-ambient x src-ambient)."""

    src: AbelianGroup
    dst: AbelianGroup
    matrix: IntMatrix

    def __call__(self, x: GroupElement) -> GroupElement:
        return reduce(self.dst, self.matrix.apply(self.src.lift(x)))

    def apply_ambient(self, ambient: Sequence[int]) -> GroupElement:
        return reduce(self.dst, self.matrix.apply(list(ambient)))

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """``self o inner``."""
        if inner.dst is not self.src and inner.dst.relations != self.src.relations:
            raise ValueError("homomorphisms are not composable")
        return GroupHom(inner.src, self.dst, self.matrix @ inner.matrix)


def induced_hom(src: AbelianGroup, dst: AbelianGroup, a: IntMatrix) -> GroupHom:
    """Hom on cokernels induced by ``a``; raises :class:`InductionError` if ill-defined."""
    if a.shape != (dst.ngens, src.ngens):
        raise ValueError(f"matrix shape {a.shape} does not map Z^{src.ngens} to Z^{dst.ngens}")
    images = a @ src.relations
    solve = lattice_solver(dst.relations)
    for j in range(images.cols):
        if solve(images.column(j)) is None:
            raise InductionError(
                f"relation column {j} of the source maps outside the target relation lattice"
            )
    return GroupHom(src, dst, a)


def identity_hom(g: AbelianGroup) -> GroupHom:
    return GroupHom(g, g, IntMatrix.identity(g.ngens))


def scalar_hom(g: AbelianGroup, k: int) -> GroupHom:
    return GroupHom(g, g, IntMatrix.identity(g.ngens).scale(k))


def homs_equal(f: GroupHom, h: GroupHom) -> bool:
    """Whether two homs with the same source and target agree on every generator."""
    if f.src.relations != h.src.relations or f.dst.relations != h.dst.relations:
        raise ValueError("homomorphisms have different source or target")
    diff = f.matrix - h.matrix
    return all(f.dst.contains_relation(col) for col in diff.columns())


def is_surjective(h: GroupHom) -> bool:
    """Image columns plus target relations span the whole target ambient lattice."""
    n = h.dst.ngens
    hnf, _ = hermite_normal_form(h.matrix.hstack(h.dst.relations))
    pivots = hnf_pivots(hnf)
    return len(pivots) == n and all(hnf[i, j] == 1 for i, j in pivots)


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of ``parent`` generated by ``generators``.

    ``lattice`` is the canonical basis of the preimage lattice in the parent's
    ambient space (generators together with parent relations), and
    ``structure`` is the abstract isomorphism type of the subgroup.
    """

    parent: AbelianGroup
    generators: tuple[GroupElement, ...]
    structure: AbelianGroup
    lattice: IntMatrix

    @property
    def order(self):
        return order(self.structure)


def subgroup_from_ambient(parent: AbelianGroup, columns: Sequence[Sequence[int]]) -> Subgroup:
    """Subgroup generated by the classes of the given ambient vectors."""
    n = parent.ngens
    gens = IntMatrix.from_columns([list(c) for c in columns], n)
    basis = column_lattice_basis(gens.hstack(parent.relations))
    # Express parent relations in the lattice basis: relations = basis @ C.
    coeffs = []
    solve = lattice_solver(basis)
    for col in parent.relations.columns():
        x = solve(col)
        assert x is not None, "parent relations must lie in the subgroup lattice"
        coeffs.append(x)
    c = IntMatrix.from_columns(coeffs, basis.cols)
    elements = tuple(reduce(parent, col) for col in basis.columns())
    return Subgroup(parent, elements, cokernel(c), basis)


def subgroup(parent: AbelianGroup, generators: Sequence[GroupElement]) -> Subgroup:
    return subgroup_from_ambient(parent, [parent.lift(x) for x in generators])


def kernel(h: GroupHom) -> Subgroup:
    """Classes ``x`` of the source with ``h(x) == 0``.

    The preimage lattice is ``{x : a x in im(R_dst)}``, i.e. the projection
    onto the first block of the integer kernel of ``[a | -R_dst]``.
    """
    n_src = h.src.ngens
    block = h.matrix.hstack(-h.dst.relations)
    null = integer_kernel(block)
    cols = [c[:n_src] for c in null.columns()]
    return subgroup_from_ambient(h.src, cols)


def image(h: GroupHom) -> Subgroup:
    return subgroup_from_ambient(h.dst, h.matrix.columns())


def k_torsion(g: AbelianGroup, k: int) -> Subgroup:
    """Elements killed by ``k``: generated by ``(d / gcd(d, k)) e_i`` per torsion factor ``d``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    gens = []
    nf = len(g.moduli)
    for i, d in enumerate(g.invariant_factors):
        coords = [0] * nf
        coords[i] = d // math.gcd(d, k)
        gens.append(g._normalize(coords))
    return subgroup(g, gens)


def subgroups_equal(a: Subgroup, b: Subgroup) -> bool:
    if a.parent is not b.parent and a.parent.relations != b.parent.relations:
        raise ValueError("subgroups of different groups")
    return a.lattice == b.lattice


def torsion_subgroup(g: AbelianGroup) -> Subgroup:
    nf = len(g.moduli)
    gens = []
    for i in range(len(g.invariant_factors)):
        coords = [0] * nf
        coords[i] = 1
        gens.append(GroupElement(g, tuple(coords)))
    return subgroup(g, gens)
