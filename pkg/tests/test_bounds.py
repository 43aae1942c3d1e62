import math

import pytest

from struveint.bounds import (
    INCONCLUSIVE_BAND,
    Side,
    Target,
    a_factor,
    check,
    default_x_star,
    eval_bound,
    get_bound,
    list_bounds,
    m_factor,
    margin_status,
    product_asymptote,
)
from struveint.errors import DomainError, ValidityError
from struveint.integrals import F
from struveint.specfun import bessel_k_scaled, gamma_fn, struve_l, struve_l_scaled

SQRT_PI = math.sqrt(math.pi)

ALL_IDS = {
    "LB-2.1", "LB-2.2", "LB-2.3", "LB-2.6", "LB-PRIOR",
    "UB-2.4", "UB-2.5", "UB-GAU1", "UB-GAU1-FULL", "UB-GAU2", "UB-ANU", "UB-3.8",
    "PB-2.7", "PB-2.8", "PB-2.9",
    "RB-3.1", "RB-AUG18", "RB-NASELL", "RB-SEGURA",
    "PRB-KL1", "PRB-KL0", "PRB-KL2", "PRB-G1", "PRB-G2", "PRB-G3",
    "NB-3.10", "NB-3.11", "IMON",
}


def test_catalog_cardinality_and_ids():
    bounds = list_bounds()
    assert len(bounds) == 28
    assert {b.bound_id for b in bounds} == ALL_IDS


def test_lb23_entry_shape():
    spec = get_bound("LB-2.3")
    assert spec.side is Side.LOWER
    assert spec.target is Target.F_INTEGRAL
    assert spec.validity(-0.99, 0.5, 1.0, None) is None
    assert spec.validity(-1.0, 0.5, 1.0, None) is not None


def test_prb_kl1_two_sided_constants():
    spec = get_bound("PRB-KL1")
    assert spec.side is Side.TWO_SIDED
    low, high = eval_bound("PRB-KL1", nu=1.0, x=2.0)
    assert low.to_float() == pytest.approx(0.5, rel=1e-15)
    assert high.to_float() == pytest.approx(
        2.0 * gamma_fn(3.0) / (SQRT_PI * gamma_fn(2.5)), rel=1e-13
    )


def test_eval_ub_gau2_explicit_formula():
    # (1/(1-beta)) e^{-beta x} x^nu L_nu(x) at nu=1, beta=0.5, x=2:
    # 2 * e^{-1} * 2 * L_1(2), frozen via the 40-digit oracle
    v = eval_bound("UB-GAU2", nu=1.0, beta=0.5, x=2.0)
    assert v.to_float() == pytest.approx(1.6227306172926954181, rel=1e-12)
    assert v.to_float() == pytest.approx(
        4.0 * math.exp(-1.0) * struve_l(1.0, 2.0), rel=1e-13
    )


def test_validity_gate_reports_hypothesis():
    with pytest.raises(ValidityError, match="-1/2 < nu <= 0"):
        eval_bound("LB-2.1", nu=1.0, beta=0.5, x=2.0)
    with pytest.raises(ValidityError, match="beta"):
        eval_bound("UB-2.4", nu=1.0, beta=None, x=2.0)
    with pytest.raises(ValidityError, match="x_star"):
        eval_bound("UB-3.8", nu=1.0, beta=0.5, x=10.0)
    with pytest.raises(ValidityError, match="x >= x_star"):
        eval_bound("UB-3.8", nu=1.0, beta=0.5, x=1.0, x_star=4.0)


def test_lb23_truncated_reproduces_table_cell():
    # five-term truncation feeds the (nu=1, beta=0.75, x=10) relative error
    l5 = eval_bound("LB-2.3", nu=1.0, beta=0.75, x=10.0, truncation=5)
    f = F(1.0, 0.75, 10.0)
    assert 1.0 - l5.ratio_to(f) == pytest.approx(0.3723, abs=1.5e-4)


def test_lb23_adaptive_dominates_truncated():
    full = eval_bound("LB-2.3", nu=1.0, beta=0.75, x=10.0)
    l5 = eval_bound("LB-2.3", nu=1.0, beta=0.75, x=10.0, truncation=5)
    assert full > l5


def test_check_strict_example():
    m = check("UB-2.5", nu=0.0, beta=0.5, x=5.0)
    assert m.strict and m.signed_margin > 0.0
    assert margin_status(m) == "strict"


def test_check_rb31_tight_at_small_x():
    m = check("RB-3.1", nu=0.5, x=1e-4)
    assert m.strict
    assert 0.0 < m.signed_margin < 1e-4  # margin -> 0 as x -> 0


def test_check_imon_closed_forms():
    # L_{1/2}(3)/L_{-1/2}(3) = (cosh 3 - 1)/sinh 3 < 1; frozen oracle values
    m = check("IMON", nu=0.5, x=3.0)
    assert m.strict
    assert m.reference_value.to_float() == pytest.approx(
        4.1770988918997221537 / 4.6148229034076009479, rel=1e-12
    )


def test_margin_inconclusive_band():
    # at nu=1/2 the IMON gap decays like e^{-x}: far below reference accuracy
    m = check("IMON", nu=0.5, x=60.0)
    assert abs(m.signed_margin) < INCONCLUSIVE_BAND
    assert margin_status(m) == "inconclusive"


def test_m_factor():
    assert m_factor(0.5, 0.5, 4.0) == pytest.approx(6.0, rel=1e-15)
    # pole as x_star approaches 1/(1-beta) from above
    assert m_factor(0.5, 0.5, 2.0 + 1e-9) > 1e8
    # at x_star = 2/(1-beta) the first branch is (2nu+3+4/(1-beta))/(2nu+1)
    nu, beta = 1.0, 0.25
    xs = default_x_star(beta)
    first = (2.0 * nu + 3.0 + 4.0 / (1.0 - beta)) / (2.0 * nu + 1.0)
    assert m_factor(nu, beta, xs) == pytest.approx(max(first, 2.0 / (1 - beta)))
    with pytest.raises(DomainError):
        m_factor(0.5, 0.5, 2.0)
    with pytest.raises(DomainError):
        m_factor(-0.6, 0.5, 10.0)
    with pytest.raises(DomainError):
        m_factor(0.5, 1.0, 10.0)


def test_a_factor():
    assert a_factor(1.0) == 4.0
    assert a_factor(0.0) == 29.0
    assert a_factor(0.5) == 3.0  # boundary uses the nu >= 1/2 branch
    with pytest.raises(DomainError):
        a_factor(-0.5)


def test_product_asymptote():
    large = product_asymptote("large_x", 2.0)
    assert large.limit == 0.5
    assert large.first_order == pytest.approx(1.25)
    small = product_asymptote("small_x", 0.5)
    assert small.slope == pytest.approx(0.5, rel=1e-13)  # Gamma(3/2)/(sqrt(pi) Gamma(2))
    with pytest.raises(DomainError):
        product_asymptote("large_x", -0.6)
    with pytest.raises(DomainError):
        product_asymptote("sideways", 1.0)


def test_product_asymptote_numeric_large_x():
    # x K_{nu+1}(x) L_nu(x) at x=500 within 1e-3 of 1/2 + (2nu+1)/2000
    nu, x = 1.0, 500.0
    product = (bessel_k_scaled(nu + 1.0, x) * struve_l_scaled(nu, x)).scale(x)
    assert product.to_float() == pytest.approx(0.5 + 3.0 / 2000.0, abs=1e-3)


def test_lower_bounds_negative_at_small_x():
    assert eval_bound("LB-2.1", nu=-0.25, beta=0.5, x=0.01).sign < 0.0
    assert eval_bound("LB-2.2", nu=1.5, beta=0.5, x=0.01).sign < 0.0
    # and the margins still count as strict satisfaction of the lower bound
    m = check("LB-2.1", nu=-0.25, beta=0.5, x=0.01)
    assert m.strict and m.signed_margin > 1.0


def test_lb23_improves_on_prior():
    for nu, beta, x in ((-0.49, 0.1, 0.5), (0.0, 0.5, 2.0), (5.0, 0.9, 50.0)):
        full = eval_bound("LB-2.3", nu=nu, beta=beta, x=x)
        prior = eval_bound("LB-PRIOR", nu=nu, beta=beta, x=x)
        assert full > prior


def test_segura_chain():
    from struveint.specfun import bessel_k_scaled as ks

    for nu, x in ((1.0, 0.3), (2.5, 5.0), (7.0, 50.0)):
        sharp, simple = eval_bound("RB-SEGURA", nu=nu, x=x)
        ratio = ks(nu, x).ratio_to(ks(nu - 1.0, x))
        assert ratio < sharp.to_float() < simple.to_float()


def test_nasell_and_aug18_hold():
    for nu, x in ((0.5, 0.2), (1.0, 3.0), (5.0, 40.0)):
        assert check("RB-NASELL", nu=nu, x=x).strict
        assert check("RB-AUG18", nu=nu, x=x).strict
        assert check("RB-3.1", nu=nu, x=x).strict


def test_nb_constants_exact():
    v10 = eval_bound("NB-3.10", nu=0.25, beta=0.5, x=3.0)
    v11 = eval_bound("NB-3.11", nu=0.25, beta=0.5, x=3.0)
    assert v10.to_float() == pytest.approx(14.0 / (1.5 * 0.5), rel=1e-15)
    assert v11.to_float() == pytest.approx(7.0 / (1.5 * 0.5), rel=1e-15)
    assert check("NB-3.10", nu=0.25, beta=0.5, x=3.0).strict
    assert check("NB-3.11", nu=0.25, beta=0.5, x=3.0).strict


def test_two_sided_product_limits():
    # 1/2 approached at large x, upper constant at small x
    nu = 0.0
    upper = 2.0 * gamma_fn(nu + 2.0) / (SQRT_PI * gamma_fn(nu + 1.5))
    small = (bessel_k_scaled(nu + 2.0, 1e-5) * struve_l_scaled(nu, 1e-5)).scale(1e-5)
    big = (bessel_k_scaled(nu + 2.0, 300.0) * struve_l_scaled(nu, 300.0)).scale(300.0)
    assert small.to_float() == pytest.approx(upper, abs=1e-3)
    assert big.to_float() == pytest.approx(0.5, abs=1e-2)
    assert check("PRB-KL1", nu=nu, x=1.0).strict


def test_ub38_with_default_x_star():
    beta = 0.5
    xs = default_x_star(beta)
    m = check("UB-3.8", nu=1.0, beta=beta, x=10.0, x_star=xs)
    assert m.strict


def test_unknown_bound_id():
    with pytest.raises(KeyError, match="unknown bound id"):
        eval_bound("LB-9.9", nu=1.0, beta=0.5, x=1.0)


def test_g_bounds_strict():
    assert check("PB-2.7", nu=-0.25, beta=0.5, x=2.0).strict
    assert check("PB-2.8", nu=2.5, beta=0.5, x=2.0).strict
    assert check("PB-2.9", nu=1.0, beta=0.5, x=2.0).strict


def test_g_below_f_on_grid():
    # integrand ordering L_{nu+1} < L_nu makes G < F pointwise for nu >= -1/2
    from struveint.integrals import G

    for nu in (-0.49, 0.0, 1.0, 5.0):
        for beta in (0.25, 0.75):
            for x in (0.5, 5.0, 50.0):
                assert G(nu, beta, x) < F(nu, beta, x)


def test_lb23_dominates_prior_on_default_grid():
    # the prior bound is the first series term, so dominance must be grid-wide
    from struveint.harness import default_grid

    grid = default_grid()
    for nu in grid.nu_values:
        if not nu > -0.5:
            continue
        for beta in grid.beta_values:
            for x in grid.x_values:
                full = eval_bound("LB-2.3", nu=nu, beta=beta, x=x)
                prior = eval_bound("LB-PRIOR", nu=nu, beta=beta, x=x)
                assert full > prior


def test_rb31_tight_in_both_limits():
    small = [check("RB-3.1", nu=1.0, x=x).signed_margin for x in (1e-2, 1e-3, 1e-4)]
    large = [check("RB-3.1", nu=1.0, x=x).signed_margin for x in (1e2, 1e3, 1e4)]
    assert all(m > 0 for m in small + large)
    assert all(b < a for a, b in zip(small, small[1:]))  # -> 0 as x -> 0
    assert all(b < a for a, b in zip(large, large[1:]))  # -> 0 as x -> inf
