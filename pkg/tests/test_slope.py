import numpy as np
import pytest
from hypothesis import given, strategies as st

from eudoxus import config
from eudoxus.arith import negate
from eudoxus.constructors import e_slope, from_integer, from_rational, sqrt_nat
from eudoxus.errors import CertificateViolation, ResourceLimitError
from eudoxus.slope import (DefectCertificate, Slope, Trust, concentrate, defect_sample,
                           empirical_certificate, equivalence_evidence, opt_div)

from oracles import opt_div_brute

nonzero = st.integers(-10**6, 10**6).filter(bool)


def test_opt_div_worked_examples():
    assert opt_div(4, 7) == 1
    assert opt_div(3, 7) == 0
    assert opt_div(7, 2) == 3      # 3.5 rounds down for q > 0
    assert opt_div(-7, 2) == -4


@given(st.integers(-10**12, 10**12), nonzero)
def test_opt_div_matches_brute_force(p, q):
    r = opt_div(p, q)
    assert r == opt_div_brute(p, q)
    assert abs(2 * p - 2 * q * r) <= abs(q)


def test_opt_div_on_numpy_arrays():
    p = np.arange(-500, 501, dtype=np.int64)
    for q in (-9, -2, 1, 6, 13):
        got = opt_div(p, q)
        assert list(got) == [opt_div(int(x), q) for x in p]


def test_opt_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        opt_div(3, 0)


def test_slope_is_odd_and_cached():
    calls = []

    def positive(n):
        calls.append(n)
        return 3 * n + 1

    lam = Slope(positive)
    assert lam(0) == 0
    assert lam(5) == 16 and lam(-5) == -16
    lam(5)
    assert calls == [5]
    assert lam.cache_size() == 1


def test_index_cap():
    lam = from_integer(2)
    with config.override(index_cap=100):
        assert lam(100) == 200
        with pytest.raises(ResourceLimitError):
            lam(101)
        with pytest.raises(ResourceLimitError):
            lam(-101)
    assert lam(10**6) == 2 * 10**6


def test_cache_cap_evicts_large_indices():
    lam = Slope(lambda n: n)
    with config.override(cache_cap=20):
        for n in range(1, 60):
            lam(n)
        assert lam.cache_size() <= 20
        assert lam(1) == 1


def test_certificate_rejects_negative_bound():
    with pytest.raises(ValueError):
        DefectCertificate(-1, 0, Trust.PROVEN)


def test_trust_combines_to_weaker():
    assert Trust.PROVEN & Trust.PROVEN is Trust.PROVEN
    assert Trust.PROVEN & Trust.EMPIRICAL is Trust.EMPIRICAL


def test_uncertified_slope_has_no_bound():
    with pytest.raises(ValueError):
        Slope(lambda n: n).bound


def test_defect_sample_catches_a_false_proven_bound():
    liar = Slope.certified(lambda n: n * n, 0, Trust.PROVEN, 'square')
    with pytest.raises(CertificateViolation) as info:
        defect_sample(liar, [(1, 1), (2, 3)])
    assert info.value.pair == (1, 1)


def test_defect_sample_needs_pairs():
    with pytest.raises(ValueError):
        defect_sample(from_integer(1), [])


def test_empirical_certificate_covers_observed_defect():
    floor_sqrt = Slope(lambda n: int(n * 1.5) + (n % 3 == 0))
    certified = empirical_certificate(floor_sqrt)
    assert certified.trust is Trust.EMPIRICAL
    assert defect_sample(certified, [(n, m) for n in range(-30, 31) for m in range(-30, 31)]) \
        <= certified.bound


@pytest.mark.parametrize('slope', [sqrt_nat(2), sqrt_nat(7), from_rational(-22, 7), e_slope()],
                         ids=['sqrt2', 'sqrt7', '-22/7', 'e'])
def test_concentrate_is_well_adjusted(slope):
    k = concentrate(slope)
    s = slope.bound
    assert k.bound == 1
    assert k.trust is slope.trust
    for n in range(-150, 151):
        assert abs(k(n) - slope(n)) <= s
        for m in range(-40, 41):
            assert abs(k(n + m) - k(n) - k(m)) <= 1


def test_concentrate_commutes_with_negation():
    for slope in (sqrt_nat(2), from_rational(5, 4), from_integer(0)):
        a, b = concentrate(slope), concentrate(negate(slope))
        assert all(a(n) == -b(n) for n in range(1, 500))


def test_equivalence_evidence():
    assert equivalence_evidence(from_integer(5), from_integer(5), range(1, 100), 0)
    rho = sqrt_nat(2)
    rho_rho = Slope(lambda n: rho(rho(n)))
    assert equivalence_evidence(rho_rho, from_integer(2), range(1, 1001), 2)
    assert not equivalence_evidence(from_integer(1), from_integer(2), [100], 10)
    with pytest.raises(ValueError):
        equivalence_evidence(rho, rho, [], 0)
