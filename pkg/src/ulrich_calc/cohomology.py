"""Exact cohomology of line bundles on P2 and Hirzebruch surfaces.

On ``F_a`` the projection to P1 pushes ``O(s C0 + t f)`` forward to
``O(t) + O(t-a) + ... + O(t-sa)`` for ``s >= 0`` and to zero for ``s < 0``,
so ``h^0`` is a sum of ``h^0(P1, O(m))``.  ``h^2`` comes from Serre duality
and ``h^1`` from Riemann-Roch.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ConsistencyError, UnsupportedSurfaceError
from .surface import DivClass, SurfaceModel, canonical, chi_line


@dataclass(frozen=True)
class CohomTriple:
    h0: int
    h1: int
    h2: int

    @property
    def chi(self) -> int:
        return self.h0 - self.h1 + self.h2

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)

    def __getitem__(self, i: int) -> int:
        return self.as_tuple()[i]


def _require_exact(S: SurfaceModel) -> None:
    if not S.exact_cohomology:
        raise UnsupportedSurfaceError(f"exact cohomology unsupported on {S} (blow-up at general points)")


def h0_line(S: SurfaceModel, L: DivClass) -> int:
    _require_exact(S)
    S.check(L)
    if S.kind == "P2":
        (t,) = L
        return comb(t + 2, 2) if t >= 0 else 0
    s, t = L
    a = S.param
    if s < 0:
        return 0
    return sum(max(0, t - k * a + 1) for k in range(s + 1))


def h0_oracle(a: int, L: DivClass) -> int:
    """Count monomial sections of ``O(s C0 + t f)`` on ``F_a`` by brute force.

    Sections correspond to lattice points ``(k, m)`` with ``0 <= k <= s`` and
    ``0 <= m <= t - k a``.  Deliberately naive: it scans a bounding rectangle
    and shares nothing with :func:`h0_line`.
    """
    s, t = L
    if s < 0:
        return 0
    m_hi = max(t, t - s * a, 0)
    count = 0
    for k in range(0, s + 1):
        for m in range(0, m_hi + 1):
            if m + k * a <= t:
                count += 1
    return count


def cohomology(S: SurfaceModel, L: DivClass) -> CohomTriple:
    _require_exact(S)
    h0 = h0_line(S, L)
    h2 = h0_line(S, canonical(S) - L)
    h1 = h0 + h2 - chi_line(S, L)
    if h1 < 0:
        raise ConsistencyError(f"negative h^1 = {h1} for {L} on {S}")
    return CohomTriple(h0, h1, h2)
