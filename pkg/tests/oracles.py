"""Reference implementations that share no code with the package.

They are slow and simple on purpose: brute force, the decimal module,
exact rational bisection and textbook series.
"""

import decimal
from fractions import Fraction

import mpmath


def opt_div_brute(p, q):
    """Search the handful of integers near p/q for the defining inequality."""
    guess = p // q
    hits = [r for r in range(guess - 2, guess + 3) if 2 * p - abs(q) <= 2 * q * r < 2 * p + abs(q)]
    assert len(hits) == 1, (p, q, hits)
    return hits[0]


def isqrt_decimal(m):
    """floor(sqrt(m)) through the decimal module at generous precision."""
    if m == 0:
        return 0
    ctx = decimal.Context(prec=len(str(m)) + 20)
    root = int(ctx.sqrt(decimal.Decimal(m)).to_integral_value(rounding=decimal.ROUND_FLOOR))
    # the decimal root is correctly rounded; nudge across a float-free boundary
    while root * root > m:
        root -= 1
    while (root + 1) ** 2 <= m:
        root += 1
    return root


def sqrt_digits(m, digits):
    """sqrt(m) rounded half-even to ``digits`` places, as a string."""
    scaled = isqrt_decimal(m * 10 ** (2 * (digits + 2)))
    value = Fraction(scaled, 10 ** (digits + 2))
    q = round(value * 10**digits)
    whole, frac = divmod(q, 10**digits)
    return f'{whole}.{frac:0{digits}d}' if digits else str(whole)


def bisect_root(coefficients, lo, hi, steps=80):
    """Root of an increasing integer polynomial by exact rational bisection."""
    def p(x):
        return sum(c * x**i for i, c in enumerate(coefficients))

    a, b = Fraction(lo), Fraction(hi)
    assert p(a) < 0 < p(b)
    for _ in range(steps):
        mid = (a + b) / 2
        if p(mid) < 0:
            a = mid
        else:
            b = mid
    return a, b


def pi_machin(digits):
    """pi as a Fraction accurate to well beyond ``digits`` places."""
    scale = 10 ** (digits + 10)

    def arctan_inv(x):
        total, term, k, sign = 0, scale // x, 1, 1
        while term:
            total += sign * (term // k)
            term //= x * x
            k += 2
            sign = -sign
        return total

    return Fraction(4 * (4 * arctan_inv(5) - arctan_inv(239)), scale)


def e_series(terms=40):
    total, term = Fraction(0), Fraction(1)
    for k in range(terms):
        total += term
        term /= k + 1
    return total


def lattice_brute(m):
    r = 0
    while (r + 1) ** 2 <= m:
        r += 1
    return sum(1 for p in range(-r, r + 1) for q in range(-r, r + 1) if p * p + q * q <= m)


def steiner_mpmath(n, dps=60):
    """argmax of (k/n)^(n/k) over 1..4n using high-precision logarithms."""
    with mpmath.workdps(dps):
        values = [(mpmath.mpf(n) / k) * mpmath.log(mpmath.mpf(k) / n) for k in range(1, 4 * n + 1)]
    best = max(range(len(values)), key=lambda i: (values[i], -i))
    return best + 1
