import pytest

from ulrich_calc import (
    DivClass,
    PreconditionError,
    brill_noether_rho,
    canonical,
    chi_line,
    chow_shape,
    dimension_ledger,
    genus_adj,
    h0_line,
    intersect,
    invariant_report,
    is_ulrich_line,
    lemma_cycles_report,
    lemma_pencil_numbers,
    lm_numerics,
    make_surface,
    small_surface_exceptions,
)
from ulrich_calc.reports import to_jsonable

from _samples import hirzebruch_sweep, sampled_polarizations

F2 = make_surface("F2")
H25 = DivClass(2, 5)


def test_brill_noether_rho_examples():
    assert brill_noether_rho(18, 1, 17) == 14
    g, k = 18, 4
    assert brill_noether_rho(g, 1, g - k + 3) == g - 2 * k + 4 == 14
    assert brill_noether_rho(4, 1, 3) == 0
    with pytest.raises(PreconditionError):
        brill_noether_rho(-1, 1, 0)
    with pytest.raises(PreconditionError):
        brill_noether_rho(3, 0, 2)


@pytest.mark.parametrize("g, k", [(18, 4), (10, 3), (7, 5), (30, 8), (9, 2)])
def test_lemma_pencil_numbers(g, k):
    p = lemma_pencil_numbers(g, k)
    assert p.dim_W_top == p.rho_top == g - 2 * k + 2
    assert p.excess_dim == p.dim_W_top + 1
    assert p.rho_pencil == p.excess_dim + 1
    assert p.non_maximal_gonality == (2 * k <= g + 2)


def test_invariant_report_golden():
    r = invariant_report(F2, H25)
    assert (r.d, r.KH, r.K2, r.g, r.cliff, r.gon, r.pencil_deg, r.family_dim) == (12, -10, 8, 18, 2, 4, 17, 9)
    assert r.hyp_degree_ok and r.hyp_genus_ok and r.hyp_antipencil_ok
    assert not r.degenerate_trio
    assert r.h0_anticanonical == 9 and r.h0_anticanonical_exact
    assert r.fiber_degree == 4
    assert r.clifford_dimension_one == "assumed"


@pytest.mark.parametrize(
    "spec, H, d",
    [("P2", DivClass(1), 1), ("F0", DivClass(1, 1), 2), ("F1", DivClass(1, 2), 3)],
)
def test_degenerate_trio(spec, H, d):
    r = invariant_report(make_surface(spec), H)
    assert r.degenerate_trio and r.d == d


def test_trio_flag_false_on_example():
    assert not invariant_report(F2, H25).degenerate_trio


def test_blowup_antipencil_is_chi_bound():
    r = invariant_report(make_surface("dP6"), DivClass(3, -1, -1, -1, -1, -1, -1))
    assert not r.h0_anticanonical_exact
    assert r.h0_anticanonical == 4 and r.hyp_antipencil_ok
    assert r.fiber_degree is None


def test_lemma_cycles_examples():
    for S, H in [(F2, H25), (make_surface("F0"), DivClass(2, 3))]:
        c = lemma_cycles_report(S, H)
        assert (c.deg_D_H, c.g_D, c.alpha, c.h0_KplusH, c.bound) == (14, 3, 3, 2, 17)
    c = lemma_cycles_report(F2, H25)
    assert c.dim_linear_system_D + c.bound == 31 == 3 * 12 - 8 + 3
    assert h0_line(F2, canonical(F2) + H25) == c.h0_KplusH
    for i in (1, 2, 3):
        assert c.sigma_bounds[i] == c.sigma_i_dim_bound(i) == 6 - 5 - i + 1


def test_dimension_ledger_golden():
    L = dimension_ledger(F2, H25)
    got = (
        L.dim_linear_system,
        L.rho,
        L.dimW_lb,
        L.grass_dim,
        L.lm_family_lb,
        L.dimP_lb,
        L.dimZ_ub,
        L.moduli_dim,
    )
    assert got == (39, 14, 53, 44, 9, 32, 31, 9)
    assert 4 * 17 - 56 - 3 == 9
    assert all(v == "ok" for v in L.checks.values())


def test_dimension_ledger_f3():
    L = dimension_ledger(make_surface("F3"), DivClass(2, 7))
    assert L.dimW_lb == 73
    assert L.lm_family_lb == 13


SWEEP = hirzebruch_sweep()


@pytest.mark.parametrize("S, H", SWEEP, ids=[f"{S}-{H}" for S, H in SWEEP])
def test_ledger_sweep(S, H):
    inv = invariant_report(S, H)
    if inv.g < 0:
        pytest.skip("rational-curve polarization, no Brill-Noether number")
    L = dimension_ledger(S, H)
    d, K2 = inv.d, inv.K2
    assert L.dimW_lb == 5 * d - K2 + 1
    assert L.lm_family_lb == d - K2 + 5
    assert L.dimP_lb == 3 * d - K2 + 4
    assert L.dimZ_ub == 3 * d - K2 + 3
    assert L.moduli_dim == d - K2 + 5
    assert inv.g == genus_adj(S, canonical(S) + 3 * H)
    assert inv.pencil_deg == lm_numerics(S, H).c2


@pytest.mark.parametrize("S, H", sampled_polarizations())
def test_report_cross_module_consistency(S, H):
    inv = invariant_report(S, H)
    assert inv.gon == inv.cliff + 2
    assert inv.pencil_deg == inv.g - inv.gon + 3
    assert inv.pencil_deg == lm_numerics(S, H).c2


def test_chow_shape_examples():
    c = chow_shape(F2, H25)
    assert (c.N, c.grass_sub_dim, c.grass_ambient_dim, c.grass_dim, c.taut_rank, c.matrix_size) == (
        11,
        9,
        12,
        27,
        3,
        24,
    )
    assert c.describe() == "P^11, G(9,12), 24x24 skew"
    assert h0_line(F2, H25) == 12
    assert chow_shape(make_surface("F1"), DivClass(1, 2)).N == 4
    assert chow_shape(make_surface("F0"), DivClass(1, 1)).N == 3


def test_small_surface_exceptions():
    trio = small_surface_exceptions()
    assert [(str(S), H, L) for S, H, L in trio] == [
        ("P2", DivClass(1), DivClass(0)),
        ("F0", DivClass(1, 1), DivClass(0, 1)),
        ("F1", DivClass(1, 2), DivClass(1, 1)),
    ]
    for S, H, L in trio:
        assert is_ulrich_line(S, H, L).is_ulrich
        d = intersect(S, H, H)
        assert d - S.K2 + 5 <= 0
        assert chi_line(S, L) == d


def test_to_jsonable_keeps_field_order():
    rec = to_jsonable(invariant_report(F2, H25))
    assert list(rec)[:4] == ["surface", "H", "d", "KH"]
    assert rec["H"] == [2, 5]
