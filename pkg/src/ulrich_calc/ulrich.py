"""Ulrich line bundles, cohomology tables and rank-2 special Ulrich numerics.

A line bundle ``L`` on a polarized surface ``(S, H)`` is Ulrich iff

    h^0(L-H) = h^1(L-H) = h^1(L-2H) = h^2(L-2H) = 0.

The determinant condition ``2 H.L = H.(K+3H)`` is necessary, so candidates
lie on an affine line of ``Pic(F_a)``.  Along that line ``chi(L-H)`` is a
quadratic in the line parameter with leading coefficient ``v^2/2 < 0`` for
ample ``H`` (Hodge index), so at most two points can satisfy the necessary
condition ``chi(L-H) = 0``.  The enumerator walks the line inside a
coordinate cap and refuses to answer if a root of that quadratic lies
outside the cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional

from .cohomology import cohomology
from .errors import ConsistencyError, PreconditionError, UnboundedSearchError, UnsupportedSurfaceError
from .surface import (
    ChernData,
    DivClass,
    SurfaceModel,
    canonical,
    chi,
    chi_line,
    chi_rank2,
    chern_twist,
    half,
    intersect,
    ulrich_c1_condition,
)

EXACT = "exact"
FILTER_ONLY = "numerical-filter-only"


@dataclass(frozen=True)
class UlrichVerdict:
    """Outcome of the Ulrich test for one line bundle.

    ``is_ulrich`` is ``None`` when only the numerical filter could be run
    (blow-ups of P2); ``filter_passed`` then reports whether the determinant
    condition and ``chi(L-H) = chi(L-2H) = 0`` hold.
    """

    L: DivClass
    is_ulrich: Optional[bool]
    witnesses: Optional[tuple[int, int, int, int]]
    mode: str
    filter_passed: bool

    @property
    def undetermined(self) -> bool:
        return self.is_ulrich is None


def is_ulrich_line(S: SurfaceModel, H: DivClass, L: DivClass) -> UlrichVerdict:
    S.check(H)
    S.check(L)
    filter_passed = (
        ulrich_c1_condition(S, H, ChernData(1, L))
        and chi_line(S, L - H) == 0
        and chi_line(S, L - 2 * H) == 0
    )
    if not S.exact_cohomology:
        return UlrichVerdict(L, None, None, FILTER_ONLY, filter_passed)
    one = cohomology(S, L - H)
    two = cohomology(S, L - 2 * H)
    witnesses = (one.h0, one.h1, two.h1, two.h2)
    ok = not any(witnesses)
    if ok and not filter_passed:
        raise ConsistencyError(f"{L} passes the vanishing test but fails the numerical filter")
    return UlrichVerdict(L, ok, witnesses, EXACT, filter_passed)


def _ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``u x + v y = g = gcd(x, y) >= 0``."""
    old_r, r = x, y
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def _integer_roots(a2: int, a1: int, a0: int) -> Optional[list[int]]:
    """Integer roots of ``a2 m^2 + a1 m + a0``; ``None`` if it vanishes identically."""
    if a2 == 0:
        if a1 == 0:
            return None if a0 == 0 else []
        return [-a0 // a1] if a0 % a1 == 0 else []
    disc = a1 * a1 - 4 * a2 * a0
    if disc < 0:
        return []
    r = isqrt(disc)
    if r * r != disc:
        return []
    roots = set()
    for num in (-a1 + r, -a1 - r):
        if num % (2 * a2) == 0:
            roots.add(num // (2 * a2))
    return sorted(roots)


def default_cap(H: DivClass) -> int:
    return 10 * max(1, max(abs(c) for c in H))


def _window(L0: DivClass, v: DivClass, cap: int) -> range:
    lo, hi = None, None
    for x, dx in zip(L0, v):
        if dx == 0:
            if abs(x) > cap:
                return range(0)
            continue
        a, b = (-cap - x), (cap - x)
        if dx < 0:
            a, b = -b, -a
            dx = -dx
        m_lo = -((-a) // dx)
        m_hi = b // dx
        lo = m_lo if lo is None else max(lo, m_lo)
        hi = m_hi if hi is None else min(hi, m_hi)
    if lo is None:
        raise UnboundedSearchError("degenerate direction")
    return range(lo, hi + 1)


def enumerate_ulrich_lines(S: SurfaceModel, H: DivClass, cap: Optional[int] = None) -> list[DivClass]:
    """All Ulrich line bundles on ``(S, H)``, lexicographically sorted.

    Raises :class:`UnboundedSearchError` if a candidate with
    ``chi(L-H) = 0`` exists beyond ``|coords| <= cap``.
    """
    if not S.exact_cohomology:
        raise UnsupportedSurfaceError(f"exact cohomology unsupported on {S}; cannot enumerate")
    S.check(H)
    if cap is None:
        cap = default_cap(H)
    if cap < 1:
        raise PreconditionError("bound cap must be >= 1")
    K = canonical(S)
    target = intersect(S, H, K + 3 * H)
    if target % 2:
        return []
    c = target // 2
    w = [sum(S.gram[i][j] * H[j] for j in range(S.rank)) for i in range(S.rank)]

    if S.rank == 1:
        if w[0] == 0:
            raise UnboundedSearchError("H is numerically trivial")
        if c % w[0]:
            return []
        L = DivClass(c // w[0])
        if abs(L[0]) > cap:
            raise UnboundedSearchError(f"candidate {L} lies beyond cap {cap}")
        return [L] if is_ulrich_line(S, H, L).is_ulrich else []

    g, u, v_ = _ext_gcd(w[0], w[1])
    if g == 0:
        raise UnboundedSearchError("H is numerically trivial")
    if c % g:
        return []
    L0 = DivClass(u * (c // g), v_ * (c // g))
    step = DivClass(w[1] // g, -w[0] // g)

    # 2 chi(L0 + m step - H) = a2 m^2 + a1 m + a0
    X = L0 - H
    a2 = intersect(S, step, step)
    a1 = 2 * intersect(S, step, X) - intersect(S, step, K)
    a0 = 2 + intersect(S, X, X - K)
    roots = _integer_roots(a2, a1, a0)
    if roots is None:
        raise UnboundedSearchError(f"chi(L-H) vanishes along the whole determinant line for H={H}")

    window = _window(L0, step, cap)
    for m in roots:
        if m not in window:
            raise UnboundedSearchError(
                f"candidate {L0 + m * step} lies beyond cap {cap}; raise the cap"
            )
    found = [L for L in (L0 + m * step for m in window) if is_ulrich_line(S, H, L).is_ulrich]
    return sorted(found, key=lambda D: D.coords)


@dataclass(frozen=True)
class CohomologyTable:
    """Values ``gamma[i][j] = h^i(F(j))`` over a twist window.

    ``rows`` lists ``(i, values)`` with ``i = 2`` first, matching the usual
    printed orientation.  For rank-2 data the h-values are ``None`` and only
    ``chi`` is filled in.
    """

    js: tuple[int, ...]
    rows: tuple[tuple[int, tuple[Optional[int], ...]], ...]
    chi: tuple[int, ...]

    def row(self, i: int) -> tuple[Optional[int], ...]:
        return dict(self.rows)[i]

    def column(self, j: int) -> tuple[Optional[int], ...]:
        k = self.js.index(j)
        return tuple(vals[k] for _, vals in self.rows)

    def render(self) -> str:
        cells = [["j"] + [str(j) for j in self.js]]
        for i, vals in self.rows:
            cells.append([f"h^{i}"] + ["-" if x is None else str(x) for x in vals])
        cells.append(["chi"] + [str(x) for x in self.chi])
        width = max(len(x) for r in cells for x in r)
        lines = [" ".join(x.rjust(width) for x in r) for r in cells[1:]]
        rule = "-" * len(lines[0])
        head = " ".join(x.rjust(width) for x in cells[0])
        return "\n".join([rule, *lines[:-1], rule, head, lines[-1]])


def cohomology_table(
    S: SurfaceModel, H: DivClass, E: ChernData, j_min: int, j_max: int
) -> CohomologyTable:
    if j_min > j_max:
        raise PreconditionError(f"empty twist range {j_min}..{j_max}")
    js = tuple(range(j_min, j_max + 1))
    twisted = [chern_twist(S, E, j * H) for j in js]
    chis = tuple(chi(S, F) for F in twisted)
    if E.rank == 2:
        blank = tuple(None for _ in js)
        return CohomologyTable(js, ((2, blank), (1, blank), (0, blank)), chis)
    triples = [cohomology(S, F.c1) for F in twisted]
    rows = tuple((i, tuple(t[i] for t in triples)) for i in (2, 1, 0))
    return CohomologyTable(js, rows, chis)


@dataclass(frozen=True)
class LMNumerics:
    """Chern numbers of the rank-2 Lazarsfeld-Mukai candidate with det ``K+3H``."""

    c1: DivClass
    c2: int
    chi: int
    det_is_special: bool
    family_dim: int
    degenerate: bool = field(default=False)

    def chern(self) -> ChernData:
        return ChernData(2, self.c1, self.c2)


def lm_numerics(S: SurfaceModel, H: DivClass) -> LMNumerics:
    K = canonical(S)
    d = intersect(S, H, H)
    KH = intersect(S, K, H)
    c1 = K + 3 * H
    c2 = half(5 * d + 3 * KH, "5d + 3 K.H") + 2
    E = ChernData(2, c1, c2)
    e_chi = chi_rank2(S, E)
    if e_chi != 2 * d:
        raise ConsistencyError(f"chi(E) = {e_chi} but 2d = {2 * d}")
    if not ulrich_c1_condition(S, H, E):
        raise ConsistencyError("K+3H fails the determinant condition")
    family_dim = d - S.K2 + 5
    return LMNumerics(c1, c2, e_chi, True, family_dim, family_dim <= 0)


@dataclass(frozen=True)
class TwoNIdentity:
    """Candidate ``L = (s, t)`` on ``(F_a, (2, n))`` forced by the determinant condition."""

    a: int
    n: int
    s: int
    t: Fraction
    integral: bool
    chi_factored: Fraction
    chi_check: Optional[int]


def hirzebruch_2n_identity(a: int, n: int, s: int) -> TwoNIdentity:
    if a < 0:
        raise PreconditionError("a must be >= 0")
    if n <= 2 * a:
        raise PreconditionError(f"need n > 2a, got a={a}, n={n}")
    t = (Fraction(a) - Fraction(n, 2)) * s + Fraction(5 * n - 5 * a - 2, 2)
    factored = Fraction((s - 3) * (s - 1) * (a - n), 2)
    if t.denominator != 1:
        return TwoNIdentity(a, n, s, t, False, factored, None)
    S = SurfaceModel("F", a)
    value = chi_line(S, DivClass(s, int(t)) - DivClass(2, n))
    if value != factored:
        raise ConsistencyError(f"chi(L-H) = {value} but (s-3)(s-1)(a-n)/2 = {factored}")
    return TwoNIdentity(a, n, s, t, True, factored, value)
