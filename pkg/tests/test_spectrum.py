import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasiradial.exact import QuadExt, is_perfect_square
from quasiradial.spectrum import (
    DomainError,
    Gamma,
    as_gamma,
    check_invariants,
    conjugate_exponent,
    make_spectrum,
    solve_k,
    solve_k_roots,
    solve_mu,
)


@st.composite
def gammas(draw, allow_one=False):
    q = draw(st.integers(min_value=1, max_value=30))
    p = draw(st.integers(min_value=q + 1, max_value=q * q + 40))
    if allow_one and draw(st.integers(0, 9)) == 0:
        return Gamma(Fraction(1))
    sign = draw(st.sampled_from([1, -1]))
    return Gamma(Fraction(sign * p, q))


ns = st.integers(min_value=2, max_value=25)


def test_solve_k_examples():
    assert solve_k(Fraction(7, 5), 2) == QuadExt(Fraction(3, 2))
    assert solve_k(Fraction(1), 2) == QuadExt(Fraction(4, 3))
    for g in (Fraction(7, 5), Fraction(-9, 2), Fraction(1), Fraction(5)):
        assert solve_k(g, 1) == QuadExt(1)


def test_solve_mu_examples():
    assert solve_mu(Fraction(7, 5), 2) == QuadExt(5)
    assert solve_mu(Fraction(-7, 5), 2) == QuadExt(-5)
    assert solve_mu(1, 2) == QuadExt(3)


def test_spectrum_7_5():
    s = make_spectrum("7/5", 2)
    assert s.k == QuadExt(Fraction(3, 2))
    assert s.lam == QuadExt(1)
    assert s.mu == QuadExt(5)
    assert s.t_rat == Fraction(1, 2)
    assert s.period == pytest.approx(math.pi, rel=1e-15)
    assert s.z0 == pytest.approx((2 / 3) ** 1.5, rel=1e-14)
    assert s.alpha == QuadExt(Fraction(4, 5))
    assert s.k_conj == QuadExt(4)


def test_spectrum_rational_for_square_discriminant():
    s = make_spectrum("7/3", 2)
    assert s.k.is_rational() and s.lam.is_rational() and s.mu.is_rational()


def test_spectrum_n1_is_linear():
    s = make_spectrum("7/5", 1)
    assert s.k == QuadExt(1)
    assert s.t_rat == 1
    assert s.period == pytest.approx(2 * math.pi)


def test_conjugate_exponent_examples():
    assert conjugate_exponent(make_spectrum("7/5", 2)) == QuadExt(4)
    assert conjugate_exponent(make_spectrum("-7/5", 2)) == QuadExt(Fraction(3, 2))
    s = make_spectrum("7/3", 2)
    g = Fraction(7, 3)
    assert conjugate_exponent(s) * (1 - g) == 2 - s.k * (1 + g)
    with pytest.raises(DomainError):
        conjugate_exponent(make_spectrum(1, 2))


def test_domain_errors():
    with pytest.raises(DomainError):
        make_spectrum(1, 1)
    with pytest.raises(DomainError):
        Gamma(Fraction(1, 2))
    with pytest.raises(DomainError):
        make_spectrum("7/5", 0)
    with pytest.raises(TypeError):
        as_gamma(1.4)


@given(gammas(allow_one=True), ns)
def test_invariants_exact(g, n):
    report = check_invariants(make_spectrum(g, n))
    assert report and all(report.values()), report


@given(gammas(), ns)
def test_rational_iff_perfect_square(g, n):
    p, q = abs(g.p), g.q
    square = is_perfect_square(n * n * p * p - q * q * (2 * n - 1)) is not None
    assert make_spectrum(g, n).k.is_rational() == square


@given(gammas(), ns)
def test_mu_odd_in_gamma(g, n):
    assert solve_mu(-g, n) == -solve_mu(g, n)


@given(gammas(), ns)
def test_conjugate_is_larger_root_at_minus_gamma(g, n):
    s = make_spectrum(g, n)
    assert conjugate_exponent(s) == solve_k_roots(-g, n)[1]
    assert conjugate_exponent(make_spectrum(-g, n)) == s.k


@given(gammas(), ns)
def test_k_larger_root_above_one(g, n):
    lo, hi = solve_k_roots(g, n)
    assert hi > 1 and lo <= hi


def test_to_dict_fields():
    d = make_spectrum("7/5", 2).to_dict()
    assert (d["k"], d["lambda"], d["mu"]) == ("3/2", "1", "5")
    assert d["exact"]["k"] == {"a": "3/2", "b": "0", "m": "0"}
