import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasiradial.classifier import (
    band,
    classify,
    dioph_solution,
    discriminant,
    enumerate_algebraic,
    gamma_from_s,
    maximal_series,
    minimal_series,
    n_bound,
    pell_s,
    series_tag,
    worker_count,
)
from quasiradial.spectrum import DomainError, Gamma


def brute_force_ns(p, q, n_max):
    # direct integer check, independent of the classifier's bound
    out = []
    for n in range(2, n_max + 1):
        d = n * n * p * p - q * q * (2 * n - 1)
        if d >= 0 and math.isqrt(d) ** 2 == d:
            out.append(n)
    return out


def test_discriminant_examples():
    assert discriminant("7/5", 2) == 121
    assert discriminant("7/3", 2) == 169
    assert discriminant("5/3", 2) == 73


def test_n_bound_examples():
    assert n_bound("5/3") == 3
    # 650/98 = 6.63...
    assert n_bound("7/5") == 6
    assert n_bound(2) == 1


def test_classify_examples():
    c = classify("7/5")
    assert c.ns == [2]
    assert c.certificates[0].k == Fraction(3, 2)
    assert c.certificates[0].series == "minimal"
    assert classify(2).ns == []
    c = classify("7/4")
    assert c.ns == [3]
    assert c.certificates[0].series == "maximal_even"


def test_classify_aronsson_sentinel():
    c = classify(1)
    assert c.all_n and 17 in c and 0 not in c


def test_dioph_examples():
    assert dioph_solution("7/5", 2) == (5, 1)
    assert dioph_solution("7/3", 2) == (9, 1)
    assert dioph_solution("7/4", 3) == (10, 1)
    with pytest.raises(DomainError):
        dioph_solution("5/3", 2)


def test_pell_examples():
    assert pell_s("7/5", 2) == Fraction(3, 5)
    assert gamma_from_s(Fraction(3, 5), 2).value == Fraction(7, 5)
    assert pell_s("13/8", 2) == Fraction(1, 2)
    assert gamma_from_s(Fraction(1, 2), 2).value == Fraction(13, 8)
    assert gamma_from_s(Fraction(1, 3), 3).value == Fraction(23, 9)


def test_series_examples():
    assert minimal_series(2).value == Fraction(7, 5)
    assert minimal_series(3).value == Fraction(9, 7)
    assert maximal_series(3) == (Gamma(Fraction(7, 3)), 2)
    assert maximal_series(4) == (Gamma(Fraction(7, 4)), 3)
    assert maximal_series(5) == (Gamma(Fraction(23, 5)), 6)
    assert discriminant("23/5", 6) == 137**2


@given(st.integers(min_value=2, max_value=12), st.integers(min_value=1, max_value=40))
def test_classify_complete_against_brute_force(q, dp):
    p = q + dp
    if math.gcd(p, q) != 1:
        return
    # no admissible N can exceed q^2 (p^2 + 2 - q^2) / (2 p^2) < q^2
    assert classify(Fraction(p, q)).ns == brute_force_ns(p, q, q * q + 2)


@given(st.integers(min_value=2, max_value=12), st.integers(min_value=1, max_value=40))
def test_sign_symmetry(q, dp):
    g = Fraction(q + dp, q)
    assert classify(g).ns == classify(-g).ns
    assert classify(-g).sign == -1


@settings(max_examples=100, deadline=None)
@given(
    st.integers(min_value=2, max_value=10),
    st.integers(min_value=1, max_value=9),
    st.integers(min_value=2, max_value=10),
)
def test_pell_round_trip(n, num, den):
    if num >= den:
        return
    s = Fraction(num, den)
    g = gamma_from_s(s, n)
    assert n in classify(g)
    back = pell_s(g, n)
    # s and (2N - 1)/s give the same gamma; the normalized root is the one in (0, 1)
    assert back == s or back == (2 * n - 1) / s and back < 1
    assert gamma_from_s(back, n) == g


def test_certificate_fields_consistent():
    for g in ("7/5", "7/3", "7/4", "23/5", "13/8", "8/3"):
        for cert in classify(g).certificates:
            gam = Gamma(Fraction(g))
            p, q, n = gam.p, gam.q, cert.n
            assert cert.d**2 == cert.discriminant == discriminant(g, n)
            A, B = cert.dioph_A, cert.dioph_B
            assert A * A * q - 2 * A * B * p * n + q * (2 * n - 1) * B * B == 0
            gv, k = gam.value, cert.k
            assert (2 * n - 1) * (gv + 1) * k * k - 2 * (n * n * gv + 2 * n - 1) * k + n * n * (1 + gv) == 0
            assert k > 1


def test_series_tags():
    assert series_tag(7, 5, 2) == "minimal"
    assert series_tag(7, 3, 2) == "maximal"
    assert series_tag(7, 4, 3) == "maximal_even"
    assert series_tag(8, 3, 4) == "beyond_maximal"
    assert series_tag(13, 8, 2) == "interior"


def test_p_equals_q_squared_minus_one_family():
    # odd q: p = q^2 - 1 with N = (q^2 - 1)/2 has d = N p - 1
    for q in range(3, 30, 2):
        p, n = q * q - 1, (q * q - 1) // 2
        assert discriminant(Fraction(p, q), n) == (n * p - 1) ** 2
        assert n in classify(Fraction(p, q))


def test_bands():
    assert list(band(3)) == [4, 5, 6, 7, 8]
    assert list(band(3, "sharp")) == [5, 6, 7]
    assert list(band(4, "sharp")) == [6, 7]
    with pytest.raises(ValueError):
        band(3, "wide")


def test_enumerate_q3():
    rows = enumerate_algebraic(3)
    assert [(q, p, c.n) for q, p, c in rows] == [(3, 7, 2), (3, 8, 4)]
    assert [(q, p, c.n) for q, p, c in enumerate_algebraic(3, "sharp")] == [(3, 7, 2)]


def test_enumerate_properties_small():
    rows = enumerate_algebraic(12)
    assert rows == sorted(rows, key=lambda r: (r[0], r[1], r[2].n))
    for q, p, cert in rows:
        assert p % q != 0
        assert q + 2 <= p <= q * q - 1
        assert brute_force_ns(p, q, q * q).count(cert.n) == 1


def test_enumerate_parallel_matches_serial():
    assert enumerate_algebraic(40, workers=2) == enumerate_algebraic(40, workers=1)


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("GH_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("GH_THREADS", "many")
    with pytest.raises(DomainError):
        worker_count()
