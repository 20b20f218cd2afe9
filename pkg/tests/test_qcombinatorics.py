import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from promweb.qcombinatorics import (
    InexactDivisionError,
    IntPolynomial,
    NotRationalError,
    cyclotomic_poly,
    eval_at_root,
    fake_degree,
    fixed_webs_formula,
    hook_value_by_limits,
    kappa,
    limit_at_root,
    q_factorial,
    q_hook_polynomial,
    q_int,
)
from promweb.tableaux import count_syt

polys = st.lists(st.integers(min_value=-20, max_value=20), max_size=8).map(IntPolynomial)


def float_eval(p: IntPolynomial, m: int, d: int) -> complex:
    """Floating-point cross-check oracle."""
    z = cmath.exp(2j * cmath.pi * d / m)
    return sum(c * z ** e for e, c in enumerate(p.coeffs))


def test_polynomial_basics():
    p = IntPolynomial([1, 0, 1])
    assert str(p) == "q^2 + 1"
    assert p(2) == 5
    assert IntPolynomial([0, 0]).is_zero()
    assert IntPolynomial([]).degree == float("-inf")
    assert str(IntPolynomial([-1, 0, -3])) == "-3q^2 - 1"


def test_q_factorial_three():
    assert q_factorial(3).coeffs == (1, 2, 2, 1)
    assert q_int(0).is_zero()


def test_cyclotomic_values():
    assert cyclotomic_poly(12).coeffs == (1, 0, -1, 0, 1)
    assert cyclotomic_poly(1).coeffs == (-1, 1)
    assert cyclotomic_poly(6).coeffs == (1, -1, 1)


def test_exact_division_raises():
    with pytest.raises(InexactDivisionError):
        IntPolynomial([1, 0, 1]).exact_div(q_int(2))


def test_two_by_two_hook_polynomial():
    assert q_hook_polynomial((2, 2)).coeffs == (1, 0, 1)


def test_three_row_fake_degree_closed_form():
    fd = fake_degree((4, 4, 4))
    assert fd.shift == kappa((4, 4, 4)) == 12
    assert fd.body(1) == 462


@pytest.mark.parametrize("shape", [(2, 1), (3, 2, 2), (4, 4, 4), (5, 3), (3, 3, 3, 3)])
def test_hook_polynomial_at_one_counts_tableaux(shape):
    assert q_hook_polynomial(shape)(1) == count_syt(shape)


def test_four_four_four_table():
    p = q_hook_polynomial((4, 4, 4))
    values = [eval_at_root(p, 12, d) for d in range(12)]
    assert values == [462, 0, 0, 6, 12, 0, 30, 0, 12, 6, 0, 0]


def test_non_rational_value_raises():
    with pytest.raises(NotRationalError):
        eval_at_root(IntPolynomial([0, 1]), 3, 1)


@pytest.mark.parametrize("shape", [(4, 4, 4), (3, 3, 3), (5, 5, 5), (4, 4), (6, 6), (2, 2, 2, 2)])
def test_cyclotomic_reduction_matches_limit_rules(shape):
    p = q_hook_polynomial(shape)
    m = sum(shape)
    for d in range(m):
        assert Fraction(eval_at_root(p, m, d)) == hook_value_by_limits(shape, m, d)


@pytest.mark.parametrize("shape", [(3, 3, 3), (4, 4), (2, 2, 2)])
def test_cyclotomic_reduction_matches_floats(shape):
    p = q_hook_polynomial(shape)
    m = sum(shape)
    for d in range(m):
        assert abs(float_eval(p, m, d) - eval_at_root(p, m, d)) < 1e-6


def test_limit_rules_reject_unpaired_residues():
    with pytest.raises(ValueError):
        limit_at_root([1], [2], 3)
    assert limit_at_root([3, 1], [3, 1], 3) == 1
    assert limit_at_root([6], [3], 3) == 2


@pytest.mark.parametrize("n,d,value", [(4, 3, 12), (4, 4, 6), (4, 2, 30), (4, 6, 0), (4, 12, 0),
                                       (3, 3, 6), (3, 9, 0), (5, 5, 6), (5, 3, 30)])
def test_fixed_webs_formula_values(n, d, value):
    assert fixed_webs_formula(n, d) == value


def test_fixed_webs_formula_at_d_one_omits_a_factor():
    # The closed form at d = 1 gives half of the true count.
    assert fixed_webs_formula(4, 1) == 231
    assert count_syt((4, 4, 4)) == 462


def test_fixed_webs_formula_rejects_non_divisors():
    with pytest.raises(ValueError):
        fixed_webs_formula(4, 5)


@given(polys, polys)
@settings(max_examples=100)
def test_polynomial_ring_laws(a, b):
    assert a * b == b * a
    assert (a + b) - b == a
    assert (a * b)(3) == a(3) * b(3)


@given(polys, st.integers(min_value=1, max_value=9))
@settings(max_examples=100)
def test_divmod_identity(a, m):
    c = cyclotomic_poly(m)
    q, r = a.divmod(c)
    assert q * c + r == a
    assert r.degree < c.degree


@given(polys, st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=30))
@settings(max_examples=100)
def test_folding_respects_powers(a, m, d):
    """Products of values are values of products when both are rational."""
    sq = a * a
    try:
        v = eval_at_root(a, m, d)
    except NotRationalError:
        return
    assert eval_at_root(sq, m, d) == v * v
