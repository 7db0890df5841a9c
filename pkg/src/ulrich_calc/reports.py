"""Numerical invariants and dimension counts for the rank-2 existence argument.

Every report computes its closed forms from ``(d, K.H, K^2)`` and then checks
them against a second route through the Picard lattice (adjunction, exact
``h^0`` on P2/Hirzebruch).  Disagreement raises :class:`ConsistencyError`.
Dimensions of moduli and incidence spaces are bounds, labelled ``_lb``/``_ub``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cohomology import h0_line
from .errors import ConsistencyError, PreconditionError
from .surface import (
    DivClass,
    SurfaceModel,
    canonical,
    chi_line,
    genus_adj,
    half,
    intersect,
    is_ample,
    make_surface,
)
from .ulrich import is_ulrich_line, lm_numerics

ASSUMED = "assumed"


def _expect(label: str, got: int, want: int) -> None:
    if got != want:
        raise ConsistencyError(f"{label}: got {got}, expected {want}")


def _basic(S: SurfaceModel, H: DivClass) -> tuple[int, int, int]:
    S.check(H)
    d = intersect(S, H, H)
    KH = intersect(S, canonical(S), H)
    half(d + KH, "d + K.H")
    return d, KH, S.K2


def brill_noether_rho(g: int, r: int, deg: int) -> int:
    if g < 0 or r < 1:
        raise PreconditionError(f"need g >= 0 and r >= 1, got g={g}, r={r}")
    return g - (r + 1) * (g - deg + r)


@dataclass(frozen=True)
class PencilNumbers:
    """Linear-growth numerology for pencils of degree ``g-k+2`` and ``g-k+3``."""

    g: int
    k: int
    non_maximal_gonality: bool
    dim_W_top: int  # dim W^1_{g-k+2}
    rho_top: int
    excess_dim: int  # dim (C + W^1_{g-k+2})
    rho_pencil: int  # rho(g, 1, g-k+3)


def lemma_pencil_numbers(g: int, k: int) -> PencilNumbers:
    rho_top = brill_noether_rho(g, 1, g - k + 2)
    rho_pencil = brill_noether_rho(g, 1, g - k + 3)
    _expect("rho(g,1,g-k+2)", rho_top, g - 2 * k + 2)
    _expect("rho(g,1,g-k+3)", rho_pencil, g - 2 * k + 4)
    return PencilNumbers(
        g=g,
        k=k,
        non_maximal_gonality=2 * k <= g + 2,
        dim_W_top=g - 2 * k + 2,
        rho_top=rho_top,
        excess_dim=g - 2 * k + 3,
        rho_pencil=rho_pencil,
    )


@dataclass(frozen=True)
class InvariantReport:
    surface: str
    H: DivClass
    d: int
    KH: int
    K2: int
    g: int
    cliff: int
    gon: int
    pencil_deg: int
    family_dim: int
    hyp_degree_ok: bool
    hyp_genus_ok: bool
    hyp_antipencil_ok: bool
    degenerate_trio: bool
    h0_anticanonical: int
    h0_anticanonical_exact: bool
    fiber_degree: Optional[int]
    clifford_dimension_one: str = ASSUMED
    cliff_computed_by_adjoint: str = ASSUMED
    ample: Optional[bool] = None


def invariant_report(S: SurfaceModel, H: DivClass) -> InvariantReport:
    d, KH, K2 = _basic(S, H)
    K = canonical(S)
    C = K + 3 * H
    g = 1 + half(9 * d + 9 * KH + 2 * K2, "9d + 9 K.H")
    _expect("g(C) from adjunction on K+3H", genus_adj(S, C), g)
    cliff = 2 * d + 3 * KH + K2
    gon = cliff + 2
    pencil_deg = half(5 * d + 3 * KH, "5d + 3 K.H") + 2
    _expect("g - k + 3", g - gon + 3, pencil_deg)
    if S.exact_cohomology:
        h0_ac, exact = h0_line(S, -K), True
    else:
        # h^2(-K) = h^0(2K) = 0, so chi is a lower bound for h^0
        h0_ac, exact = chi_line(S, -K), False
    fiber = intersect(S, C, DivClass(0, 1)) if S.is_hirzebruch else None
    family_dim = d - K2 + 5
    return InvariantReport(
        surface=str(S),
        H=H,
        d=d,
        KH=KH,
        K2=K2,
        g=g,
        cliff=cliff,
        gon=gon,
        pencil_deg=pencil_deg,
        family_dim=family_dim,
        hyp_degree_ok=d > -KH + 1,
        hyp_genus_ok=g >= 4,
        hyp_antipencil_ok=h0_ac >= 2,
        degenerate_trio=family_dim <= 0,
        h0_anticanonical=h0_ac,
        h0_anticanonical_exact=exact,
        fiber_degree=fiber,
        ample=is_ample(S, H),
    )


@dataclass(frozen=True)
class CyclesReport:
    """Bounds from the count of 0-cycles on a smooth ``D`` in ``|K+2H|``."""

    deg_D_H: int
    g_D: int
    alpha: int
    h0_KplusH: int
    rr_excess: int  # h^0(O_D(H+zeta)) - h^0(O_D(2K+H-zeta))
    general_fiber_dim: int
    bound: int
    dim_linear_system_D: int
    dimZ_ub: int
    sigma_bounds: dict = field(default_factory=dict)

    def sigma_i_dim_bound(self, i: int) -> int:
        return self.alpha - 1 - i


def lemma_cycles_report(S: SurfaceModel, H: DivClass, max_i: int = 3) -> CyclesReport:
    d, KH, K2 = _basic(S, H)
    K = canonical(S)
    D = K + 2 * H
    deg_D_H = 2 * d + KH
    _expect("deg O_D(H)", intersect(S, D, H), deg_D_H)
    g_D = 2 * d + 3 * KH + K2 + 1
    _expect("g(D)", genus_adj(S, D), g_D)
    alpha = half(d + KH, "d + K.H") + 2
    h0_KH = half(d + KH, "d + K.H") + 1
    _expect("chi(K+H)", chi_line(S, K + H), h0_KH)
    if S.exact_cohomology:
        _expect("h^0(K+H)", h0_line(S, K + H), h0_KH)
    rr_excess = half(d - 3 * KH - 2 * K2, "d - 3 K.H") + 2
    _expect("Riemann-Roch on D", 1 - g_D + deg_D_H + alpha, rr_excess)
    bound = d - KH - K2 + 3
    general = rr_excess - 1
    _expect("general component of V", general + alpha, bound)
    sigma = {}
    for i in range(1, max_i + 1):
        sigma_dim = half(d + KH, "d + K.H") - i + 1
        total = sigma_dim + (rr_excess + i - 1)
        if total > bound - 1:
            raise ConsistencyError(f"Sigma_{i} stratum bound {total} exceeds {bound - 1}")
        sigma[i] = sigma_dim
    dim_D = chi_line(S, D) - 1
    if S.exact_cohomology:
        _expect("dim |K+2H|", h0_line(S, D) - 1, dim_D)
    dimZ = dim_D + bound
    _expect("dim Z", dimZ, 3 * d - K2 + 3)
    return CyclesReport(
        deg_D_H=deg_D_H,
        g_D=g_D,
        alpha=alpha,
        h0_KplusH=h0_KH,
        rr_excess=rr_excess,
        general_fiber_dim=general,
        bound=bound,
        dim_linear_system_D=dim_D,
        dimZ_ub=dimZ,
        sigma_bounds=sigma,
    )


@dataclass(frozen=True)
class DimensionLedger:
    dim_linear_system: int
    rho: int
    dimW_lb: int
    dimG_lb: int
    grass_dim: int
    lm_family_lb: int
    dimP_lb: int
    dimZ_ub: int
    cycles_bound: int
    moduli_dim: int
    checks: dict = field(default_factory=dict)


def dimension_ledger(S: SurfaceModel, H: DivClass) -> DimensionLedger:
    inv = invariant_report(S, H)
    d, K2 = inv.d, inv.K2
    C = canonical(S) + 3 * H
    checks: dict[str, str] = {}

    def check(label, got, want):
        _expect(label, got, want)
        checks[label] = "ok"

    dim_ls = chi_line(S, C) - 1
    if S.exact_cohomology:
        check("dim |K+3H| = h0(K+3H) - 1", h0_line(S, C) - 1, dim_ls)
    rho = brill_noether_rho(inv.g, 1, inv.pencil_deg)
    check("rho = g - 2k + 4", rho, inv.g - 2 * inv.gon + 4)
    dimW = dim_ls + rho
    check("dimW_lb = 5d - K2 + 1", dimW, 5 * d - K2 + 1)
    dimG = dimW
    grass = 2 * (2 * d - 2)
    lm_family = dimG - grass
    check("lm_family_lb = d - K2 + 5", lm_family, d - K2 + 5)
    lm = lm_numerics(S, H)
    check("h0(E) = chi(E) = 2d", lm.chi, 2 * d)
    check("c2(E) = g - k + 3", lm.c2, inv.pencil_deg)
    dimP = lm_family + lm.chi - 1
    check("dimP_lb = 3d - K2 + 4", dimP, 3 * d - K2 + 4)
    cyc = lemma_cycles_report(S, H)
    dimZ = cyc.dimZ_ub
    check("dimZ_ub = 3d - K2 + 3", dimZ, 3 * d - K2 + 3)
    check("dimZ_ub = dimP_lb - 1", dimZ, dimP - 1)
    moduli = 4 * lm.c2 - intersect(S, lm.c1, lm.c1) - 3
    check("4c2 - c1^2 - 3 = d - K2 + 5", moduli, d - K2 + 5)
    check("moduli_dim = lm_family_lb", moduli, lm_family)
    return DimensionLedger(
        dim_linear_system=dim_ls,
        rho=rho,
        dimW_lb=dimW,
        dimG_lb=dimG,
        grass_dim=grass,
        lm_family_lb=lm_family,
        dimP_lb=dimP,
        dimZ_ub=dimZ,
        cycles_bound=cyc.bound,
        moduli_dim=moduli,
        checks=checks,
    )


@dataclass(frozen=True)
class ChowShape:
    """Sizes in the Pfaffian presentation of the Chow form."""

    N: int
    grass_sub_dim: int
    grass_ambient_dim: int
    grass_dim: int
    taut_rank: int
    matrix_size: int

    def describe(self) -> str:
        return (
            f"P^{self.N}, G({self.grass_sub_dim},{self.grass_ambient_dim}), "
            f"{self.matrix_size}x{self.matrix_size} skew"
        )


def chow_shape(S: SurfaceModel, H: DivClass) -> ChowShape:
    d, KH, _ = _basic(S, H)
    N = half(d - KH, "d - K.H")
    _expect("chi(O(1))", chi_line(S, H), N + 1)
    if S.exact_cohomology:
        _expect("h^0(O(1))", h0_line(S, H), N + 1)
    return ChowShape(
        N=N,
        grass_sub_dim=N - 2,
        grass_ambient_dim=N + 1,
        grass_dim=3 * (N - 2),
        taut_rank=3,
        matrix_size=2 * d,
    )


def small_surface_exceptions() -> list[tuple[SurfaceModel, DivClass, DivClass]]:
    """The three polarized surfaces with ``d - K^2 + 5 <= 0`` and an Ulrich line bundle on each."""
    trio = [
        (make_surface("P2"), DivClass(1), DivClass(0)),
        (make_surface("F0"), DivClass(1, 1), DivClass(0, 1)),
        (make_surface("F1"), DivClass(1, 2), DivClass(1, 1)),
    ]
    for S, H, L in trio:
        if not is_ulrich_line(S, H, L).is_ulrich:
            raise ConsistencyError(f"{L} is not Ulrich on ({S}, {H})")
    return trio


def to_jsonable(record) -> dict:
    """Dataclass report to plain JSON types, field order preserved."""

    def conv(x):
        if isinstance(x, DivClass):
            return list(x.coords)
        if isinstance(x, dict):
            return {str(k): conv(v) for k, v in x.items()}
        if isinstance(x, (list, tuple)):
            return [conv(v) for v in x]
        return x

    out = {}
    for k in record.__dataclass_fields__:
        out[k] = conv(getattr(record, k))
    return out


__all__ = [
    "ChowShape",
    "CyclesReport",
    "DimensionLedger",
    "InvariantReport",
    "PencilNumbers",
    "brill_noether_rho",
    "chow_shape",
    "dimension_ledger",
    "invariant_report",
    "lemma_cycles_report",
    "lemma_pencil_numbers",
    "small_surface_exceptions",
    "to_jsonable",
]
