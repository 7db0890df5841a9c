"""Picard lattices of rational surfaces and Riemann-Roch on them.

Three families are modelled, each with a fixed integral basis of Pic(S):

* ``P2``   -- basis ``(h)`` with ``h^2 = 1``.
* ``F<a>`` -- Hirzebruch surface, basis ``(C0, f)`` with ``C0^2 = -a``,
  ``C0.f = 1``, ``f^2 = 0``.  The class of type ``(s, t)`` is ``s*C0 + t*f``.
* ``dP<r>`` -- blow-up of P2 at ``r`` general points, basis
  ``(h, e1, ..., er)`` with ``h^2 = 1``, ``ei^2 = -1``.

Every surface here is rational, so ``chi(O_S) = 1``.  Formulas that divide by
two go through :func:`half`, which fails loudly if the result is not integral.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Union

from .errors import DimensionMismatchError, ParityError, ParseError, SurfaceRangeError

CHI_O = 1
MAX_BLOWUPS = 8

_DESCRIPTOR = re.compile(r"^(?:(P2)|F(0|[1-9]\d*)|dP(\d+))$")
_COORDS = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")


def half(value: Union[int, Fraction], what: str = "value") -> int:
    """Return ``value / 2`` as an int, raising :class:`ParityError` if it is odd."""
    q = Fraction(value) / 2
    if q.denominator != 1:
        raise ParityError(f"{what} = {value} is odd; expected an even integer")
    return int(q)


def as_int(value: Fraction, what: str = "value") -> int:
    if Fraction(value).denominator != 1:
        raise ParityError(f"{what} = {value} is not an integer")
    return int(value)


@dataclass(frozen=True)
class DivClass:
    """Integer coordinates of a divisor class in a surface's fixed basis."""

    coords: tuple[int, ...]

    def __init__(self, *coords: Union[int, Iterable[int]]):
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        object.__setattr__(self, "coords", tuple(int(c) for c in coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: "DivClass") -> None:
        if len(other) != len(self):
            raise DimensionMismatchError(f"cannot combine classes of length {len(self)} and {len(other)}")

    def __add__(self, other: "DivClass") -> "DivClass":
        self._check(other)
        return DivClass(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "DivClass") -> "DivClass":
        self._check(other)
        return DivClass(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "DivClass":
        return DivClass(-a for a in self.coords)

    def __mul__(self, k: int) -> "DivClass":
        return DivClass(k * a for a in self.coords)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)

    def __repr__(self) -> str:
        return f"DivClass({', '.join(str(c) for c in self.coords)})"

    @classmethod
    def parse(cls, text: str) -> "DivClass":
        """Parse the comma-separated form, e.g. ``"2,5"`` or ``"-3,-4"``."""
        if not _COORDS.match(text):
            raise ParseError(f"bad divisor class {text!r}; expected comma-separated integers")
        return cls(int(x) for x in text.split(","))


@dataclass(frozen=True)
class SurfaceModel:
    """A rational surface together with its Picard lattice.

    ``kind`` is one of ``"P2"``, ``"F"`` (Hirzebruch, ``param`` = a) or
    ``"dP"`` (blow-up of P2, ``param`` = r).
    """

    kind: str
    param: int = 0

    def __post_init__(self):
        if self.kind == "P2":
            if self.param != 0:
                raise SurfaceRangeError("P2 takes no parameter")
        elif self.kind == "F":
            if self.param < 0:
                raise SurfaceRangeError(f"Hirzebruch index must be >= 0, got {self.param}")
        elif self.kind == "dP":
            if not 1 <= self.param <= MAX_BLOWUPS:
                raise SurfaceRangeError(
                    f"blow-up of P2 at {self.param} points is outside the supported range 1..{MAX_BLOWUPS}"
                )
        else:
            raise ParseError(f"unknown surface kind {self.kind!r}")

    @property
    def rank(self) -> int:
        return {"P2": 1, "F": 2, "dP": self.param + 1}[self.kind]

    @property
    def is_hirzebruch(self) -> bool:
        return self.kind == "F"

    @property
    def exact_cohomology(self) -> bool:
        """True where h^0 of every line bundle is computed exactly."""
        return self.kind in ("P2", "F")

    @cached_property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        if self.kind == "P2":
            return ((1,),)
        if self.kind == "F":
            return ((-self.param, 1), (1, 0))
        n = self.rank
        return tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n)) for i in range(n))

    @property
    def K2(self) -> int:
        return intersect(self, canonical(self), canonical(self))

    def div(self, *coords: int) -> DivClass:
        D = DivClass(*coords)
        self.check(D)
        return D

    def zero(self) -> DivClass:
        return DivClass((0,) * self.rank)

    def check(self, D: DivClass) -> None:
        if len(D) != self.rank:
            raise DimensionMismatchError(f"{self} has Picard rank {self.rank}, got class of length {len(D)}")

    def __str__(self) -> str:
        return {"P2": "P2", "F": f"F{self.param}", "dP": f"dP{self.param}"}[self.kind]


def make_surface(spec: str) -> SurfaceModel:
    """Build a surface from a descriptor ``P2``, ``F<a>`` or ``dP<r>``."""
    m = _DESCRIPTOR.match(spec.strip())
    if not m:
        raise ParseError(f"bad surface descriptor {spec!r}; expected P2, F<a> or dP<r>")
    if m.group(1):
        return SurfaceModel("P2")
    if m.group(2) is not None:
        return SurfaceModel("F", int(m.group(2)))
    return SurfaceModel("dP", int(m.group(3)))


def intersect(S: SurfaceModel, A: DivClass, B: DivClass) -> int:
    S.check(A)
    S.check(B)
    G = S.gram
    return sum(A[i] * G[i][j] * B[j] for i in range(S.rank) for j in range(S.rank) if G[i][j])


def canonical(S: SurfaceModel) -> DivClass:
    if S.kind == "P2":
        return DivClass(-3)
    if S.kind == "F":
        return DivClass(-2, -(S.param + 2))
    return DivClass((-3,) + (1,) * S.param)


def genus_adj(S: SurfaceModel, C: DivClass) -> int:
    """Arithmetic genus ``1 + C.(C+K)/2`` of a curve in the class ``C``."""
    return 1 + half(intersect(S, C, C + canonical(S)), "C.(C+K)")


def chi_line(S: SurfaceModel, L: DivClass) -> int:
    """Riemann-Roch: ``chi(L) = chi(O_S) + L.(L-K)/2``."""
    return CHI_O + half(intersect(S, L, L - canonical(S)), "L.(L-K)")


@dataclass(frozen=True)
class ChernData:
    """Numerical data of a sheaf: rank, first and second Chern class."""

    rank: int
    c1: DivClass
    c2: int = 0

    def __post_init__(self):
        if self.rank not in (1, 2):
            raise ValueError(f"only ranks 1 and 2 are supported, got {self.rank}")
        if self.rank == 1 and self.c2 != 0:
            raise ValueError("a line bundle has c2 = 0")


def chi_rank2(S: SurfaceModel, E: ChernData) -> int:
    """Riemann-Roch for a rank-2 sheaf: ``2 + (c1^2 - c1.K)/2 - c2``."""
    if E.rank != 2:
        raise ValueError("chi_rank2 needs rank-2 data")
    K = canonical(S)
    return 2 * CHI_O + half(intersect(S, E.c1, E.c1) - intersect(S, E.c1, K), "c1.(c1-K)") - E.c2


def chi(S: SurfaceModel, E: ChernData) -> int:
    return chi_line(S, E.c1) if E.rank == 1 else chi_rank2(S, E)


def chern_twist(S: SurfaceModel, E: ChernData, M: DivClass) -> ChernData:
    """Chern data of ``E (x) O(M)``."""
    if E.rank == 1:
        return ChernData(1, E.c1 + M)
    c2 = E.c2 + intersect(S, E.c1, M) + intersect(S, M, M)
    return ChernData(2, E.c1 + 2 * M, c2)


def ulrich_c1_condition(S: SurfaceModel, H: DivClass, E: ChernData) -> bool:
    """Whether ``H . (c1 - rank/2 (K + 3H))`` vanishes."""
    K = canonical(S)
    lhs = Fraction(intersect(S, H, E.c1))
    rhs = Fraction(E.rank, 2) * intersect(S, H, K + 3 * H)
    return lhs == rhs


def is_ample(S: SurfaceModel, H: DivClass) -> bool | None:
    """Ampleness of ``H``; ``None`` when the model cannot decide (blow-ups).

    On Hirzebruch surfaces ``sC0 + tf`` is ample iff ``s > 0`` and ``t > a s``,
    which coincides with very ampleness.
    """
    S.check(H)
    if S.kind == "P2":
        return H[0] > 0
    if S.kind == "F":
        s, t = H
        return s > 0 and t > S.param * s
    return None
