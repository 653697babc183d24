import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eudoxus import arith
from eudoxus.constructors import e_slope, from_integer, from_rational, poly_root, sqrt_nat, \
    HomogenizedPolynomial
from eudoxus.errors import ZeroDivisorError
from eudoxus.slope import Trust, concentrate, defect_sample

rationals = st.tuples(st.integers(-60, 60), st.integers(1, 20))


def grid(width=25, extra=200, seed=1):
    rng = random.Random(seed)
    pairs = [(n, m) for n in range(-width, width + 1) for m in range(-width, width + 1)]
    pairs += [(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)) for _ in range(extra)]
    return pairs


def test_sum_and_negation_bounds():
    a, b = sqrt_nat(2), from_rational(7, 3)
    assert arith.add(a, b).bound == 10
    assert arith.negate(a).bound == 8
    assert arith.subtract(a, b).bound == 10
    assert arith.add(a, b)(10) == a(10) + b(10)
    assert arith.negate(a)(10) == -a(10)


@settings(max_examples=40, deadline=None)
@given(rationals, rationals)
def test_product_of_rationals(x, y):
    a, b = from_rational(*x), from_rational(*y)
    prod = arith.multiply(a, b)
    assert prod.trust is Trust.PROVEN
    defect_sample(prod, grid(12, 50))          # raises if the bound is wrong
    n = 10**6
    exact = Fraction(*x) * Fraction(*y)
    assert abs(Fraction(prod(n), n) - exact) <= Fraction(prod.bound, n)


def test_product_bound_formula():
    a, b = sqrt_nat(2), sqrt_nat(3)
    assert arith.product_bound(a, b) == 2 * 8 + (2 + 8) * 2
    defect_sample(arith.multiply(a, b), grid())


def test_int_power_edge_cases():
    a = sqrt_nat(2)
    assert arith.int_power(a, 1) is a
    one = arith.int_power(a, 0)
    assert [one(n) for n in (1, 5, -3)] == [1, 5, -3]
    with pytest.raises(ValueError):
        arith.int_power(a, -1)


@pytest.mark.parametrize('e', [2, 3, 4])
def test_int_power_tracks_composition(e):
    rho = sqrt_nat(2)
    power = arith.int_power(rho, e)
    assert power.trust is Trust.EMPIRICAL
    assert defect_sample(power, grid(20, 100)) <= power.bound
    for n in (10, 1000, 10**6):
        comp = n
        for _ in range(e):
            comp = rho(comp)
        assert abs(power(n) - comp) <= power.bound


@pytest.mark.parametrize('slope', [
    sqrt_nat(2), from_rational(-7, 3), e_slope(),
    poly_root(HomogenizedPolynomial([-3, 1, 0, 0, 0, 1], (1, 2))),
    from_rational(1, 1000),
], ids=['sqrt2', '-7/3', 'e', 'quintic', '1/1000'])
def test_inverse_contract(slope):
    k = concentrate(slope)
    beta = arith.inverse(k)
    slack = abs(k(1)) + 1
    rng = random.Random(3)
    for v in [0, 1, -1, 7, 10**6] + [rng.randint(-10**9, 10**9) for _ in range(100)]:
        assert abs(v - k(beta(v))) <= slack
    for _ in range(100):
        v, w = rng.randint(-10**8, 10**8), rng.randint(-10**8, 10**8)
        d = beta(v + w) - beta(v) - beta(w)
        assert abs(k(d)) <= 3 * abs(k(1)) + 5
        assert abs(d) <= beta.bound


def test_inverse_rejects_bad_witness():
    k = concentrate(sqrt_nat(2))
    with pytest.raises(ValueError):
        arith.inverse(k, witness=1)


def test_zero_has_no_witness():
    with pytest.raises(ZeroDivisorError):
        arith.find_witness(concentrate(from_integer(0)))
    with pytest.raises(ZeroDivisionError):       # also a builtin ZeroDivisionError
        arith.inverse(concentrate(from_rational(1, 10**9)))
