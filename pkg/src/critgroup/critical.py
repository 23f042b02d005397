"""Critical groups of multidigraphs and the line-graph surjection.

Conventions: every matrix acts on column vectors, and column ``v`` of the
Laplacian is ``Delta(v) = sum over edges (v, u) of (u - v)``.  The
functional Laplacian used elsewhere in the literature is the negative
transpose of this; it is never used here.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Optional

from .abelian import (
    AbelianGroup,
    GroupHom,
    InductionError,
    cokernel,
    homs_equal,
    image,
    induced_hom,
    is_surjective,
    k_torsion,
    kernel,
    order,
    scalar_hom,
    subgroups_equal,
)
from .digraph import (
    BasePoint,
    Multidigraph,
    _check_vertex,
    check_hypotheses,
    is_k_out_regular,
    line_graph,
)
from .exactint import IntMatrix, determinant, lattice_solver


class HypothesisError(ValueError):
    pass


class SizeError(ValueError):
    pass


MAX_ENUM_VERTICES = 10
MAX_ENUM_EDGES = 20


def laplacian_matrix(g: Multidigraph) -> IntMatrix:
    n = g.n_vertices
    rows = [[0] * n for _ in range(n)]
    for t, h in g.edges:
        rows[h][t] += 1
        rows[t][t] -= 1
    return IntMatrix.from_rows(rows, n)


def phi_matrix(g: Multidigraph, sink: int) -> IntMatrix:
    """Laplacian with the sink column replaced by the sink's basis vector."""
    _check_vertex(g, sink)
    rows = laplacian_matrix(g).to_rows()
    for i, r in enumerate(rows):
        r[sink] = 1 if i == sink else 0
    return IntMatrix.from_rows(rows, g.n_vertices)


def critical_group(g: Multidigraph, sink: int) -> AbelianGroup:
    return cokernel(phi_matrix(g, sink))


def _delete_row_col(m: IntMatrix, k: int) -> IntMatrix:
    keep = [i for i in range(m.rows) if i != k]
    return IntMatrix.from_rows([[m[i, j] for j in keep] for i in keep], len(keep))


def kappa(g: Multidigraph, root: int) -> int:
    """Number of spanning arborescences rooted at ``root`` (matrix-tree theorem)."""
    _check_vertex(g, root)
    return abs(determinant(_delete_row_col(laplacian_matrix(g), root)))


def enumerate_arborescences(g: Multidigraph, root: int) -> int:
    """Brute-force count of spanning arborescences rooted at ``root``.

    Tries every choice of one out-edge per non-root vertex and keeps the
    choices whose successor map leads every vertex to the root.
    """
    _check_vertex(g, root)
    if g.n_vertices > MAX_ENUM_VERTICES or g.n_edges > MAX_ENUM_EDGES:
        raise SizeError(
            f"enumeration limited to {MAX_ENUM_VERTICES} vertices and {MAX_ENUM_EDGES} edges"
        )
    others = [v for v in range(g.n_vertices) if v != root]
    # Loops can never be part of an arborescence.
    choices = [[h for t, h in g.edges if t == v and h != v] for v in others]
    count = 0
    for heads in itertools.product(*choices):
        succ = dict(zip(others, heads))
        ok = True
        good = {root}
        for v in others:
            path = []
            while v not in good:
                if v in path:
                    ok = False
                    break
                path.append(v)
                v = succ[v]
            if not ok:
                break
            good.update(path)
        if ok:
            count += 1
    return count


@dataclass(frozen=True)
class StructuralMaps:
    tau: IntMatrix
    rho0: IntMatrix
    rho: IntMatrix
    psi: IntMatrix
    sigma: IntMatrix


def structural_maps(g: Multidigraph, bp: BasePoint) -> StructuralMaps:
    """Matrices of the modified target map, rho0, rho, psi and the out-edge sum map."""
    bp.validate(g)
    nv, ne = g.n_vertices, g.n_edges
    w, v_star, e_star = bp.sink, bp.target, bp.base_edge
    lap = laplacian_matrix(g)
    delta_w = lap.column(w)

    tau_cols = []
    for e, (_, h) in enumerate(g.edges):
        col = [0] * nv
        if e != e_star:
            col[h] = 1
        tau_cols.append(col)
    tau = IntMatrix.from_columns(tau_cols, nv)

    # rho0(v) = Delta(w*) - v* - w* + v
    shift = list(delta_w)
    shift[v_star] -= 1
    shift[w] -= 1
    rho0_cols = []
    for v in range(nv):
        col = list(shift)
        col[v] += 1
        rho0_cols.append(col)
    rho0 = IntMatrix.from_columns(rho0_cols, nv)

    rho = rho0 @ tau
    direct = [[0] * nv if e == e_star else [s + (i == h) for i, s in enumerate(shift)]
              for e, (_, h) in enumerate(g.edges)]
    if rho != IntMatrix.from_columns(direct, nv):
        raise AssertionError("rho0 @ tau disagrees with the direct formula for rho")

    psi_cols = lap.columns()
    psi_cols[w] = list(delta_w)
    psi_cols[w][v_star] -= 1
    psi = IntMatrix.from_columns(psi_cols, nv)

    sigma_cols = [[1 if g.edges[e][0] == v else 0 for e in range(ne)] for v in range(nv)]
    sigma = IntMatrix.from_columns(sigma_cols, ne)

    return StructuralMaps(tau=tau, rho0=rho0, rho=rho, psi=psi, sigma=sigma)


def rho_bar(g: Multidigraph, bp: BasePoint, maps: Optional[StructuralMaps] = None) -> GroupHom:
    """Hom ``K(LG, e*) -> K(G, w*)`` induced by rho.

    The line-graph vertex for ``e*`` is vertex ``bp.base_edge`` of ``line_graph(g)``.
    """
    maps = maps or structural_maps(g, bp)
    src = critical_group(line_graph(g), bp.base_edge)
    dst = critical_group(g, bp.sink)
    return induced_hom(src, dst, maps.rho)


def verify_divisibility(g: Multidigraph, bp: BasePoint) -> bool:
    """``kappa(G, w*)`` divides ``kappa(LG, e*)``."""
    ok, reasons = check_hypotheses(g, bp)
    if not ok:
        raise HypothesisError("; ".join(reasons))
    a = kappa(g, bp.sink)
    b = kappa(line_graph(g), bp.base_edge)
    if a == 0:
        return b == 0
    return b % a == 0


@dataclass
class Check:
    name: str
    passed: bool
    binding: bool
    detail: str = ""


@dataclass
class TheoremReport:
    """Outcome of every checkable claim of the main theorem on one instance.

    Checks whose premises do not hold on the instance are kept but marked
    non-binding; ``all_binding_passed`` looks only at binding ones.
    """

    hypotheses_ok: bool
    hypothesis_reasons: list[str]
    k: Optional[int]
    line_group: str
    base_group: str
    diagram_top_ok: bool = False
    diagram_bottom_ok: bool = False
    rho_bar_defined: bool = False
    rho_bar_surjective: Optional[bool] = None
    kernel_structure: Optional[str] = None
    ktorsion_structure: Optional[str] = None
    kernel_equals_ktorsion: Optional[bool] = None
    order_factorization_ok: Optional[bool] = None
    divisibility_ok: Optional[bool] = None
    infinite: bool = False
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, binding: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), binding, detail))
        return bool(passed)

    @property
    def all_binding_passed(self) -> bool:
        return all(c.passed for c in self.checks if c.binding)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.binding and not c.passed]

    def to_text(self) -> str:
        lines = [
            f"K(LG,e*) = {self.line_group}",
            f"K(G,w*)  = {self.base_group}",
            f"k-out-regular: {self.k if self.k is not None else 'no'}",
        ]
        if not self.hypotheses_ok:
            lines.append("hypotheses not met: " + "; ".join(self.hypothesis_reasons))
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            tag = "binding" if c.binding else "non-binding"
            line = f"{status}  {c.name.ljust(width)}  {tag:<11}  K(LG,e*)={self.line_group}  K(G,w*)={self.base_group}"
            if c.detail:
                line += f"  [{c.detail}]"
            lines.append(line)
        lines.append("result: " + ("all binding checks passed" if self.all_binding_passed
                                   else f"{len(self.failures)} binding check(s) failed"))
        return "\n".join(lines)

    def to_records(self) -> str:
        """One JSON object per check, one per line."""
        out = []
        for c in self.checks:
            out.append(json.dumps({
                "check": c.name,
                "binding": c.binding,
                "passed": c.passed,
                "line_group": self.line_group,
                "base_group": self.base_group,
                "detail": c.detail,
            }, sort_keys=True))
        return "\n".join(out)


def verify_main_theorem(g: Multidigraph, bp: BasePoint,
                        maps: Optional[StructuralMaps] = None) -> TheoremReport:
    """Check every claim of the surjection theorem and its proof on ``(g, bp)``.

    ``maps`` overrides the structural matrices; this is how the test suite
    injects deliberate faults.  Mathematical failures are recorded in the
    report, never raised.
    """
    bp.validate(g)
    hyp_ok, reasons = check_hypotheses(g, bp)
    k = is_k_out_regular(g) if g.n_vertices else None
    maps = maps or structural_maps(g, bp)
    lg = line_graph(g)
    phi_g = phi_matrix(g, bp.sink)
    phi_lg = phi_matrix(lg, bp.base_edge)
    k_lg = cokernel(phi_lg)
    k_g = cokernel(phi_g)
    infinite = not (k_lg.is_finite and k_g.is_finite)

    report = TheoremReport(
        hypotheses_ok=hyp_ok, hypothesis_reasons=reasons, k=k,
        line_group=str(k_lg), base_group=str(k_g), infinite=infinite,
    )
    report.add("hypotheses", hyp_ok, binding=False, detail="; ".join(reasons))

    nv = g.n_vertices
    report.add("rho0_involution", maps.rho0 @ maps.rho0 == IntMatrix.identity(nv), binding=True)
    report.add("rho_factors", maps.rho == maps.rho0 @ maps.tau, binding=True)
    report.diagram_top_ok = report.add(
        "diagram_top", maps.tau @ phi_lg == maps.psi @ maps.tau, binding=True)
    report.diagram_bottom_ok = report.add(
        "diagram_bottom", maps.rho0 @ maps.psi == phi_g, binding=True)
    cok_psi = cokernel(maps.psi)
    report.add("psi_cokernel_iso", cok_psi.same_type(k_g), binding=True,
               detail=f"cok psi = {cok_psi}")

    try:
        hom = induced_hom(k_lg, k_g, maps.rho)
    except InductionError as exc:
        report.add("rho_bar_defined", False, binding=True, detail=str(exc))
        return report
    report.rho_bar_defined = report.add("rho_bar_defined", True, binding=True)
    report.rho_bar_surjective = is_surjective(hom)
    report.add("rho_bar_surjective", report.rho_bar_surjective, binding=hyp_ok)

    ker = kernel(hom)
    report.kernel_structure = str(ker.structure)

    if k is not None:
        _check_sigma(report, maps, k_lg, cok_psi, phi_lg, k)
        tors = k_torsion(k_lg, k)
        report.ktorsion_structure = str(tors.structure)
        report.kernel_equals_ktorsion = subgroups_equal(ker, tors)
        detail = f"ker = {ker.structure}, {k}-torsion = {tors.structure}"
        if infinite:
            detail += ", groups infinite"
        report.add("kernel_equals_ktorsion", report.kernel_equals_ktorsion,
                   binding=hyp_ok, detail=detail)

    if not infinite:
        ok = order(k_lg) == order(k_g) * order(ker.structure)
        img = image(hom).structure
        report.add("first_isomorphism", order(k_lg) == order(img) * order(ker.structure),
                   binding=True, detail=f"image = {img}")
        report.order_factorization_ok = report.add(
            "order_factorization", ok, binding=hyp_ok,
            detail=f"{order(k_lg)} = {order(k_g)} * {order(ker.structure)}")

    if hyp_ok:
        report.divisibility_ok = report.add(
            "kappa_divisibility", verify_divisibility(g, bp), binding=True,
            detail=f"kappa(G)={kappa(g, bp.sink)}, kappa(LG)={kappa(lg, bp.base_edge)}")
    return report


def _check_sigma(report: TheoremReport, maps: StructuralMaps, k_lg: AbelianGroup,
                 cok_psi: AbelianGroup, phi_lg: IntMatrix, k: int) -> None:
    solve = lattice_solver(phi_lg)
    sigma_psi = maps.sigma @ maps.psi
    bad = [j for j in range(sigma_psi.cols) if solve(sigma_psi.column(j)) is None]
    report.add("sigma_bar_defined", not bad, binding=True,
               detail=f"columns outside im phi_LG: {bad}" if bad else "")
    if bad:
        return
    try:
        tau_bar = induced_hom(k_lg, cok_psi, maps.tau)
    except InductionError as exc:
        report.add("sigma_tau_is_k", False, binding=True, detail=str(exc))
        return
    sigma_bar = GroupHom(cok_psi, k_lg, maps.sigma)
    report.add("sigma_tau_is_k", homs_equal(sigma_bar.compose(tau_bar), scalar_hom(k_lg, k)),
               binding=True)


def matrix_tree_consistent(g: Multidigraph) -> Optional[bool]:
    """``kappa == enumerate_arborescences`` at every root; ``None`` above the size guard."""
    if g.n_vertices > MAX_ENUM_VERTICES or g.n_edges > MAX_ENUM_EDGES:
        return None
    return all(kappa(g, r) == enumerate_arborescences(g, r) for r in range(g.n_vertices))
