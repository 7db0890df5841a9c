"""Shared polarization samples for the test modules."""

from ulrich_calc import DivClass, make_surface


def sampled_polarizations():
    """Ample Hirzebruch classes plus two families on each blow-up of P2."""
    out = []
    for a in range(5):
        for s0 in (1, 2, 3):
            for t0 in range(a * s0 + 1, a * s0 + 4):
                out.append((make_surface(f"F{a}"), DivClass(s0, t0)))
    for r in range(1, 9):
        out.append((make_surface(f"dP{r}"), DivClass((3,) + (-1,) * r)))
        out.append((make_surface(f"dP{r}"), DivClass((5,) + (-2,) + (-1,) * (r - 1))))
    return out


def hirzebruch_sweep():
    """H = (s0, t0) on F_a, a <= 4, 1 <= s0 <= 3, a s0 < t0 <= a s0 + 6."""
    return [
        (make_surface(f"F{a}"), DivClass(s0, t0))
        for a in range(5)
        for s0 in (1, 2, 3)
        for t0 in range(a * s0 + 1, a * s0 + 7)
    ]
