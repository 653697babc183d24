"""Executable checks of every bound the construction relies on.

``run_paper_bounds`` exercises the slope-level inequalities (defect bounds,
optimal-division inequalities, concentration, growth, the concrete slopes).
``run_axiom_suite`` checks the ordered-field laws on a corpus of reals at a
fixed precision.  Both return one :class:`CheckReport` per registered check,
sorted by id, and never raise.
"""

import dataclasses
import itertools
import json
import math
import random
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

import mpmath
import numpy as np

from . import arith
from .constructors import (HomogenizedPolynomial, circle_defect, e_slope, from_integer,
                           from_rational, lattice_count, pi_slope, poly_root, sqrt_nat,
                           steiner_compare)
from .errors import CertificateViolation, ResourceLimitError
from .real import (Real, Side, archimedean_witness, cauchy_term, compare_within,
                   dedekind_side, sign_within, sup_finite)
from .slope import Slope, Trust, concentrate, defect_sample, opt_div

__all__ = ['CheckReport', 'ANCHORS', 'run_paper_bounds', 'run_axiom_suite', 'run_verification',
           'default_corpus', 'write_report', 'summarize', 'registered_checks']

QUINTIC = ((-3, 1, 0, 0, 0, 1), (1, 2))

#: every bound the harness must cover, keyed by a short name
ANCHORS = {
    'slope-equivalence': 'λ(m+n) − λ(m) − λ(n) bounded; λ ~ λ′ iff λ − λ′ bounded',
    'integer-embedding': 'j̄(n) = nj',
    'rational-embedding': 'φ(n) = min{k ∈ N | qk ≥ pn}',
    'product-well-defined': 'α ~ α′, β ~ β′ ⇒ α∘β ~ α′∘β′',
    'positivity-order': 'x > 0 ⇔ ∃a: λ(a) > 1;  x > y ⇔ ∃n: λ(n) > 2 + κ(n)',
    'sqrt2-slope': 'ρ(n) = min{k | 2n² ≤ k²}: n ≤ ρ(n) ≤ 2n, |ρ(n+m)−ρ(n)−ρ(m)| ≤ 8',
    'sqrt2-square': '2n ≤ ρ(ρ(n)) ≤ 2n+2',
    'quintic-slope': 'α(n) = min{k | 3n⁵ ≤ k⁵ + n⁴k}: |α(m+n)−α(m)−α(n)| ≤ 3',
    'quintic-residual': '0 ≤ [α(n)⁵/n⁴] + α(n) − 3n ≤ 50',
    'iterate-estimate': '|n^(e−1)α^∘e(n) − α(n)^e| ≤ n^(e−1)(1+|α(1)|+S)^(e−1)',
    'pi-lattice': '|β(n) − nπ| ≤ 2√2√n;  n ↦ [β(n²)/n]',
    'circle-non-slope': 's(5^u) = 4u − 1',
    'e-steiner': 'ε(n) = argmax_k (k/n)^(n/k)',
    'optimal-division': '2p − |q| ≤ 2qr < 2p + |q|;  4:7 = 1, 3:7 = 0',
    'optdiv-three': '−q ≤ a−b−c ≤ q ⇒ |a:3q − b:3q − c:3q| ≤ 1',
    'optdiv-denominators': '|c:nm − c:m(n+m) − c:n(n+m)| ≤ 1',
    'concentration': 'λ′(n) = λ(3sn):3s;  |λ′ − λ| ≤ s, defect(λ′) ≤ 1',
    'well-adjusted': '|λ(n+1) − λ(n)| ≤ |λ(1)| + 1, λ(n) ≥ −1 + n:k, ...',
    'growth': '|λ(n+k) − λ(n)| ≤ kb,  |λ(n+kB) − λ(n)| ≥ k',
    'commutativity': '|α∘β(n) − β∘α(n)| ≤ S_α(1+|β(1)|+S_β) + S_β(1+|α(1)|+S_α)',
    'right-inverse': 'β(v) = n_v, |v − α(n_v)| ≤ |α(1)|+1;  |α(β(v+w)−β(v)−β(w))| ≤ 3|α(1)|+5',
    'order-laws': 'totality, transitivity, x<y ⇒ x+t<y+t, t>0 ⇒ tx<ty',
    'archimedean': 'N = 1 + max{Λ(2n), 0} ⇒ Na > A',
    'completeness': 'σ(n) = max{δ(n) | δ ∈ Δ}: |σ(n+m)−σ(n)−σ(m)| ≤ 4',
    'correspondence': 'r_n = λ(n+1)/(n+1);  A = {p/q | p̄ ≤ λ∘q̄}',
}


@dataclasses.dataclass
class CheckReport:
    check_id: str
    anchor: str
    parameters: Dict[str, Any]
    outcome: str                     # 'pass' | 'fail' | 'skipped'
    reason: Optional[str] = None
    witness: Any = None

    @property
    def passed(self):
        return self.outcome == 'pass'

    def to_json(self):
        return json.dumps(dataclasses.asdict(self), default=str, sort_keys=True,
                          ensure_ascii=False)


class CheckFailed(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class Skipped(Exception):
    pass


def expect(condition, message, witness=None):
    if not condition:
        raise CheckFailed(message, witness)


@dataclasses.dataclass
class _Check:
    check_id: str
    anchor_key: str
    func: Callable


_BOUNDS: Dict[str, _Check] = {}


def _bound_check(check_id, anchor_key):
    def register(func):
        _BOUNDS[check_id] = _Check(check_id, anchor_key, func)
        return func
    return register


def registered_checks():
    return dict(_BOUNDS)


@dataclasses.dataclass
class _Context:
    seed: int
    scale: str
    check_id: str

    @property
    def full(self):
        return self.scale == 'full'

    def rng(self):
        return random.Random(f'{self.seed}:{self.check_id}')

    def pick(self, small, full):
        return full if self.full else small


def _run(check: _Check, ctx_args, anchor_text=None) -> CheckReport:
    ctx = _Context(check_id=check.check_id, **ctx_args)
    anchor = anchor_text or ANCHORS.get(check.anchor_key, check.anchor_key)
    try:
        params = check.func(ctx) or {}
    except CheckFailed as exc:
        return CheckReport(check.check_id, anchor, {'scale': ctx.scale, 'seed': ctx.seed},
                           'fail', str(exc), exc.witness)
    except Skipped as exc:
        return CheckReport(check.check_id, anchor, {'scale': ctx.scale, 'seed': ctx.seed},
                           'skipped', str(exc))
    except Exception as exc:   # reported, never propagated
        return CheckReport(check.check_id, anchor, {'scale': ctx.scale, 'seed': ctx.seed},
                           'fail', f'{type(exc).__name__}: {exc}', {'error': repr(exc)})
    params = {'scale': ctx.scale, 'seed': ctx.seed, **params}
    return CheckReport(check.check_id, anchor, params, 'pass')


def run_paper_bounds(seed: int = 0, scale: str = 'small') -> List[CheckReport]:
    """Run every registered bound check; reports are sorted by id."""
    if scale not in ('small', 'full'):
        raise ValueError(f"scale must be 'small' or 'full', got {scale!r}")
    reports = [_run(check, {'seed': seed, 'scale': scale}) for check in _BOUNDS.values()]
    return sorted(reports, key=lambda r: r.check_id)


# -- shared slopes -----------------------------------------------------------

def _rho():
    return sqrt_nat(2)


def _quintic():
    return poly_root(HomogenizedPolynomial(*QUINTIC))


def _named_slopes():
    return {'rho': _rho(), 'alpha': _quintic(), '7/3': from_rational(7, 3),
            'sqrt3': sqrt_nat(3), '-sqrt5': arith.negate(sqrt_nat(5)), 'e': e_slope()}


def _random_pairs(rng, count, radius):
    return [(rng.randint(-radius, radius), rng.randint(-radius, radius)) for _ in range(count)]


def _worst_defect(slope, pairs):
    worst, where = -1, None
    for n, m in pairs:
        d = abs(slope(n + m) - slope(n) - slope(m))
        if d > worst:
            worst, where = d, (n, m)
    return worst, where


# -- optimal division ----------------------------------------------------------

@_bound_check('optdiv.definition', 'optimal-division')
def _check_optdiv_definition(ctx):
    expect(opt_div(4, 7) == 1 and opt_div(3, 7) == 0, 'worked examples 4:7, 3:7 differ',
           {'4:7': opt_div(4, 7), '3:7': opt_div(3, 7)})
    limit = 1000
    for q in itertools.chain(range(-50, 0), range(1, 51)):
        for p in range(-limit, limit + 1):
            r = opt_div(p, q)
            ok = 2 * p - abs(q) <= 2 * q * r < 2 * p + abs(q) and abs(2 * p - 2 * q * r) <= abs(q)
            expect(ok, 'defining inequality violated', {'p': p, 'q': q, 'r': r})
    return {'p_range': limit, 'q_range': 50}


@_bound_check('optdiv.three_q', 'optdiv-three')
def _check_three_q(ctx):
    # exhaustive on a small box, then random far samples
    for q in range(1, 7):
        for b in range(-30, 31):
            for c in range(-30, 31):
                for a in range(b + c - q, b + c + q + 1):
                    v = opt_div(a, 3 * q) - opt_div(b, 3 * q) - opt_div(c, 3 * q)
                    expect(abs(v) <= 1, 'sum of quotients off by more than 1',
                           {'a': a, 'b': b, 'c': c, 'q': q, 'value': v})
    rng = ctx.rng()
    count = ctx.pick(20000, 200000)
    for _ in range(count):
        q = rng.randint(1, 10**6)
        b, c = rng.randint(-10**12, 10**12), rng.randint(-10**12, 10**12)
        a = b + c + rng.randint(-q, q)
        v = opt_div(a, 3 * q) - opt_div(b, 3 * q) - opt_div(c, 3 * q)
        expect(abs(v) <= 1, 'sum of quotients off by more than 1',
               {'a': a, 'b': b, 'c': c, 'q': q, 'value': v})
    return {'exhaustive_box': 'q<=6, |b|,|c|<=30', 'random_samples': count}


def denominator_violations(n_max=30, c_max=10**6):
    """Exhaustive ``|c:nm - c:m(n+m) - c:n(n+m)| <= 1`` check.

    Returns the first violation as a dict, or ``None``.  The expression is
    symmetric in ``n, m`` so only ``n <= m`` is scanned.
    """
    c = np.arange(-c_max, c_max + 1, dtype=np.int64 if c_max >= 2**29 else np.int32)
    for n in range(1, n_max + 1):
        for m in range(n, n_max + 1):
            v = opt_div(c, n * m) - opt_div(c, m * (n + m)) - opt_div(c, n * (n + m))
            bad = np.flatnonzero(np.abs(v) > 1)
            if bad.size:
                i = int(bad[0])
                return {'n': n, 'm': m, 'c': int(c[i]), 'value': int(v[i])}
    return None


@_bound_check('optdiv.denominators', 'optdiv-denominators')
def _check_denominators(ctx):
    c_max = ctx.pick(10**4, 10**6)
    found = denominator_violations(30, c_max)
    expect(found is None, 'quotient identity off by more than 1', found)
    return {'n_m_range': 30, 'c_range': c_max}


# -- concentration and well-adjusted slopes -------------------------------------

@_bound_check('concentrate.bounds', 'concentration')
def _check_concentration(ctx):
    w = ctx.pick(60, 200)
    rng = ctx.rng()
    checked = []
    for name, slope in _named_slopes().items():
        s = max(slope.bound, 1)
        lam = concentrate(slope)
        for n in range(-w, w + 1):
            expect(abs(lam(n) - slope(n)) <= s, 'offset exceeds s', {'slope': name, 'n': n})
        pairs = [(n, m) for n in range(-w, w + 1) for m in range(-w, w + 1)]
        pairs += _random_pairs(rng, 500, 10**6)
        worst, where = _worst_defect(lam, pairs)
        expect(worst <= 1, 'concentrated defect exceeds 1', {'slope': name, 'pair': where})
        for t in range(1, 31):
            for n in range(1, ctx.pick(50, 200)):
                expect(abs(slope(t * n) - t * slope(n)) <= slope.bound * (t - 1),
                       'scaling bound violated', {'slope': name, 't': t, 'n': n})
        checked.append(name)
    return {'slopes': checked, 'window': w}


def well_adjusted_violation(lam, window, values):
    """First failure of the well-adjusted property list on ``lam``, or None."""
    one = abs(lam(1))
    for n in range(-window, window):
        if abs(lam(n + 1) - lam(n)) > one + 1:
            return {'property': 'step', 'n': n}
    k = next((k for k in range(1, window + 1) if abs(lam(k)) > 1), None)
    if k is None:
        return None
    sign = 1 if lam(k) > 1 else -1
    for n in range(1, window + 1):
        if sign * lam(n) < -1 + opt_div(n, k):
            return {'property': 'lower-growth', 'n': n, 'k': k}
    seen = {}
    for n in range(-window, window + 1):
        seen[lam(n)] = seen.get(lam(n), 0) + 1
    v, count = max(seen.items(), key=lambda kv: kv[1])
    if count > k:
        return {'property': 'multiplicity', 'value': v, 'count': count, 'k': k}
    lo, hi = lam(-window), lam(window)
    for v in values:
        if not min(lo, hi) <= v <= max(lo, hi):
            continue
        if all(abs(v - lam(n)) > one + 1 for n in range(-window, window + 1)):
            return {'property': 'gap', 'value': v}
    return None


@_bound_check('well_adjusted.properties', 'well-adjusted')
def _check_well_adjusted(ctx):
    w = ctx.pick(300, 2000)
    rng = ctx.rng()
    for name, slope in _named_slopes().items():
        lam = concentrate(slope)
        values = [rng.randint(-w, w) for _ in range(50)]
        bad = well_adjusted_violation(lam, w, values)
        expect(bad is None, 'well-adjusted property fails', {'slope': name, **(bad or {})})
    return {'window': w}


def growth_constants(slope, samples, b_search=10**4):
    """``(b, B)`` with ``|lam(n+k)-lam(n)| <= kb`` and ``|lam(n+kB)-lam(n)| >= k``
    on ``samples`` (pairs of ``n``, ``k``), or ``B = None`` if none found."""
    b = abs(slope(1)) + 2 * slope.bound
    for n, k in samples:
        if abs(slope(n + k) - slope(n)) > k * b:
            raise CheckFailed('upper growth bound violated', {'n': n, 'k': k, 'b': b})
    big = 1
    while big <= b_search:
        if all(abs(slope(n + k * big) - slope(n)) >= k for n, k in samples):
            return b, big
        big *= 2
    return b, None


@_bound_check('growth.bounds', 'growth')
def _check_growth(ctx):
    rng = ctx.rng()
    samples = [(rng.randint(-10**6, 10**6), rng.randint(0, 200))
               for _ in range(ctx.pick(300, 3000))]
    found = {}
    for name, slope in _named_slopes().items():
        b, big = growth_constants(slope, samples)
        expect(big is not None, 'no separation constant B found', {'slope': name})
        found[name] = [b, big]
    return {'constants': found}


# -- the concrete slopes ------------------------------------------------------

@_bound_check('sqrt2.defect', 'sqrt2-slope')
def _check_rho_defect(ctx):
    rho = _rho()
    pairs = _random_pairs(ctx.rng(), ctx.pick(10**4, 10**5), 10**4)
    worst = defect_sample(rho, pairs)
    expect(worst <= 8, 'defect above 8', {'worst': worst})
    return {'pairs': len(pairs), 'max_defect': worst}


@_bound_check('sqrt2.bounds', 'sqrt2-slope')
def _check_rho_bounds(ctx):
    rho = _rho()
    top = ctx.pick(10**4, 10**5)
    for n in range(1, top + 1):
        r = rho(n)
        expect(n <= r <= 2 * n and 2 * n * n <= r * r and (r - 1)**2 < 2 * n * n,
               'bracketing of rho fails', {'n': n, 'rho': r})
    return {'n_max': top}


@_bound_check('sqrt2.square', 'sqrt2-square')
def _check_rho_square(ctx):
    rho = _rho()
    top = ctx.pick(10**4, 10**5)
    for n in range(1, top + 1):
        v = rho(rho(n))
        expect(2 * n <= v <= 2 * n + 2, 'rho(rho(n)) outside [2n, 2n+2]', {'n': n, 'value': v})
    return {'n_max': top}


@_bound_check('quintic.defect', 'quintic-slope')
def _check_quintic_defect(ctx):
    alpha = _quintic()
    pairs = _random_pairs(ctx.rng(), ctx.pick(10**4, 10**5), 10**4)
    worst = defect_sample(alpha, pairs)
    expect(worst <= 3, 'defect above 3', {'worst': worst})
    return {'pairs': len(pairs), 'max_defect': worst}


@_bound_check('quintic.bracketing', 'quintic-slope')
def _check_quintic_bracket(ctx):
    alpha = _quintic()
    poly = HomogenizedPolynomial(*QUINTIC)
    expect(alpha(100) == 114, 'alpha(100) != 114', {'alpha(100)': alpha(100)})
    top = ctx.pick(2000, 10**4)
    for n in range(1, top + 1):
        a = alpha(n)
        expect(poly.homogenized(a - 1, n) < 0 <= poly.homogenized(a, n) and n < a <= 2 * n,
               'bracketing fails', {'n': n, 'alpha': a})
    return {'n_max': top}


@_bound_check('quintic.residual', 'quintic-residual')
def _check_quintic_residual(ctx):
    alpha = _quintic()
    top = ctx.pick(2000, 10**4)
    lo, hi = None, None
    for n in range(1, top + 1):
        a = alpha(n)
        v = a**5 // n**4 + a - 3 * n
        expect(0 <= v <= 50, 'residual outside [0, 50]', {'n': n, 'value': v})
        lo = v if lo is None else min(lo, v)
        hi = v if hi is None else max(hi, v)
    return {'n_max': top, 'range': [lo, hi]}


def iterate(slope, e, n):
    for _ in range(e):
        n = slope(n)
    return n


@_bound_check('iterate.estimate', 'iterate-estimate')
def _check_iterate(ctx):
    for name in ('alpha', 'rho', '7/3'):
        slope = _named_slopes()[name]
        c = 1 + slope.certificate.growth
        for e in range(1, 6):
            power = arith.int_power(slope, e)
            for n in range(1, 201):
                comp = iterate(slope, e, n)
                lhs = abs(n**(e - 1) * comp - slope(n)**e)
                expect(lhs <= n**(e - 1) * c**(e - 1), 'iterate estimate violated',
                       {'slope': name, 'e': e, 'n': n})
                expect(abs(power(n) - comp) <= c**(e - 1) + 1,
                       'scaled power drifts from composition', {'slope': name, 'e': e, 'n': n})
    return {'e_max': 5, 'n_max': 200}


@_bound_check('pi.accuracy', 'pi-lattice')
def _check_pi_accuracy(ctx):
    top = ctx.pick(2 * 10**4, 10**5)
    with mpmath.workdps(40):
        pi_hat = Fraction(mpmath.nstr(mpmath.pi, 35, strip_zeros=False))
    for n in range(top + 1):
        beta = lattice_count(n)
        allowed = math.isqrt(8 * n - 1) + 1 + 1 if n else 1   # ceil(sqrt(8n)) + 1
        expect(abs(beta - n * pi_hat) <= allowed, 'lattice count too far from n pi',
               {'n': n, 'beta': beta})
    pi = pi_slope()
    expect(pi(10) == 31 and pi(100) == 314 and pi(-10) == -31, 'pi slope values', None)
    return {'n_max': top}


@_bound_check('circle.non_slope', 'circle-non-slope')
def _check_circle_defect(ctx):
    values = [circle_defect(5**u) for u in range(1, 7)]
    expect(values == [4 * u - 1 for u in range(1, 7)], 'circle defect sequence', values)
    return {'values': values}


@_bound_check('e.steiner', 'e-steiner')
def _check_e(ctx):
    e = e_slope()
    expect((e(1), e(2), e(10)) == (3, 5, 27), 'steiner argmax values',
           {'1': e(1), '2': e(2), '10': e(10)})
    for n in range(1, 51):
        k = e(n)
        expect(steiner_compare(k, k - 1, n) >= 0 and steiner_compare(k, k + 1, n) >= 0,
               'not a local maximum', {'n': n, 'k': k})
    with mpmath.workdps(30):
        e_hat = Fraction(mpmath.nstr(mpmath.e, 25))
    expect(abs(Fraction(e(100), 100) - e_hat) <= Fraction(1, 100), 'e(100)/100 too far', e(100))
    return {'local_max_n': 50}


# -- arithmetic ----------------------------------------------------------------

@_bound_check('product.commutativity', 'commutativity')
def _check_commutativity(ctx):
    slopes = _named_slopes()
    rng = ctx.rng()
    indices = list(range(1, 300)) + [rng.randint(1, 10**9) for _ in range(ctx.pick(100, 1000))]
    for (na, a), (nb, b) in itertools.combinations(slopes.items(), 2):
        sa, sb = a.bound, b.bound
        allowed = sa * (1 + abs(b(1)) + sb) + sb * (1 + abs(a(1)) + sa)
        for n in indices:
            expect(abs(a(b(n)) - b(a(n))) <= allowed, 'commutativity estimate violated',
                   {'a': na, 'b': nb, 'n': n})
    return {'pairs': len(slopes) * (len(slopes) - 1) // 2, 'indices': len(indices)}


@_bound_check('product.well_defined', 'product-well-defined')
def _check_product_well_defined(ctx):
    slopes = _named_slopes()
    rng = ctx.rng()
    indices = [rng.randint(-10**9, 10**9) for _ in range(ctx.pick(200, 2000))]
    for (na, a), (nb, b) in itertools.product(slopes.items(), repeat=2):
        a2, b2 = concentrate(a), concentrate(b)
        # |a(b(n)) - a2(b2(n))| <= |a(-s)| + |r| + S_a with |s| <= S_b, |r| <= S_a
        allowed = a.certificate.growth * b.bound + 2 * a.bound
        for n in indices:
            expect(abs(a(b(n)) - a2(b2(n))) <= allowed, 'representatives disagree',
                   {'a': na, 'b': nb, 'n': n})
    return {'indices': len(indices)}


def _random_tree(rng, leaves, depth):
    if depth == 0 or rng.random() < 0.25:
        return rng.choice(leaves)
    op = rng.choice(('add', 'neg', 'mul', 'sub'))
    if op == 'neg':
        return arith.negate(_random_tree(rng, leaves, depth - 1))
    left, right = _random_tree(rng, leaves, depth - 1), _random_tree(rng, leaves, depth - 1)
    return {'add': arith.add, 'mul': arith.multiply, 'sub': arith.subtract}[op](left, right)


@_bound_check('propagation.rules', 'slope-equivalence')
def _check_propagation(ctx):
    rng = ctx.rng()
    named = _named_slopes()
    leaves = [named['rho'], named['alpha'], named['7/3'], named['sqrt3'], from_integer(-2)]
    trees = ctx.pick(25, 200)
    for i in range(trees):
        tree = _random_tree(rng, leaves, 4)
        pairs = [(n, m) for n in range(-20, 21) for m in range(-20, 21)]
        pairs += _random_pairs(rng, 200, 10**5)
        try:
            defect_sample(tree, pairs)
        except CertificateViolation as exc:
            raise CheckFailed('propagated bound exceeded',
                              {'tree': tree.label, 'pair': exc.pair, 'observed': exc.observed})
    return {'trees': trees, 'depth': 4}


@_bound_check('rational.embedding', 'rational-embedding')
def _check_rational(ctx):
    rng = ctx.rng()
    for _ in range(ctx.pick(50, 300)):
        p, q = rng.randint(0, 10**4), rng.randint(1, 10**4)
        phi = from_rational(p, q)
        for n in range(1, 40):
            literal = next(k for k in itertools.count() if q * k >= p * n)
            expect(phi(n) == literal, 'ceiling form differs from the min form', {'p': p, 'q': q})
    for _ in range(ctx.pick(20, 50)):
        p, q = rng.randint(-10**4, 10**4), rng.randint(1, 10**4)
        product = Real(arith.multiply(from_integer(q), from_rational(p, q)))
        expect(compare_within(product, p, Fraction(1, 10**12)).is_indistinguishable,
               'q * (p/q) differs from p', {'p': p, 'q': q})
    return {}


@_bound_check('integer.embedding', 'integer-embedding')
def _check_integer(ctx):
    for j in range(-20, 21):
        slope = from_integer(j)
        expect(all(slope(n) == j * n for n in range(-50, 51)), 'integer slope is not linear', j)
        expect(slope.bound == 0, 'integer slope has nonzero defect bound', j)
    return {'j_range': 20}


@_bound_check('inverse.contract', 'right-inverse')
def _check_inverse(ctx):
    rng = ctx.rng()
    named = _named_slopes()
    for name in ('rho', 'alpha', '7/3', '-sqrt5', 'e'):
        k = concentrate(named[name])
        beta = arith.inverse(k)
        slack = abs(k(1)) + 1
        for _ in range(ctx.pick(200, 1000)):
            v = rng.randint(-10**9, 10**9)
            expect(abs(v - k(beta(v))) <= slack, 'inverse misses v', {'slope': name, 'v': v})
        pairs = _random_pairs(rng, ctx.pick(200, 1000), 10**9)
        for v, w in pairs:
            d = beta(v + w) - beta(v) - beta(w)
            expect(abs(k(d)) <= 3 * abs(k(1)) + 5, 'intermediate bound violated',
                   {'slope': name, 'v': v, 'w': w})
            expect(abs(d) <= beta.bound, 'inverse defect above its bound',
                   {'slope': name, 'v': v, 'w': w, 'bound': beta.bound})
    return {}


# -- order, completeness, correspondence ---------------------------------------

@_bound_check('order.positivity', 'positivity-order')
def _check_positivity(ctx):
    reals = [Real(s) for s in _named_slopes().values()]
    for x in reals:
        k = x.normal
        positive = k(1 << 10) > 0
        witness = next(n for n in itertools.count(1) if abs(k(n)) > 1)
        sign = 1 if k(witness) > 0 else -1
        expect((sign > 0) == positive, 'witness sign disagrees', {'x': x.label})
        expected = 'greater' if sign > 0 else 'less'
        expect(sign_within(x).order.value == expected, 'sign_within disagrees', {'x': x.label})
        for n in range(2 * witness, 2 * witness + 500):
            expect(sign * k(n) > 0, 'nonpositive value past the witness', {'x': x.label, 'n': n})
    a, b = Real.sqrt(2), Real.rational(7, 5)
    n = next(n for n in itertools.count(1) if a.normal(n) > 2 + b.normal(n))
    expect(compare_within(a, b).is_greater, 'order criterion disagrees', {'n': n})
    return {'reals': [x.label for x in reals]}


@_bound_check('sup.defect', 'completeness')
def _check_sup(ctx):
    families = [
        [Real.integer(1), Real.rational(3, 2), Real.sqrt(2)],
        [Real.sqrt(2), Real.rational(1414, 1000), Real.rational(14142, 10000)],
        [Real(_quintic()), Real.rational(113, 100), Real(arith.negate(sqrt_nat(3)))],
        [Real.e(), Real.rational(27, 10), Real.rational(2718, 1000)],
    ]
    rng = ctx.rng()
    w = ctx.pick(80, 250)
    for family in families:
        sup = sup_finite(family)
        sigma = sup.raw
        pairs = [(n, m) for n in range(-w, w + 1) for m in range(-w, w + 1)]
        pairs += _random_pairs(rng, 300, 10**8)
        worst, where = _worst_defect(sigma, pairs)
        expect(worst <= 4, 'sup defect above 4', {'family': sup.label, 'pair': where})
        for x in family:
            for n in range(1, w):
                expect(sigma(n) >= x.normal(n), 'sup below a member', {'family': sup.label, 'n': n})
    return {'families': len(families), 'window': w}


@_bound_check('correspondence.cauchy_dedekind', 'correspondence')
def _check_correspondence(ctx):
    rng = ctx.rng()
    for name, slope in _named_slopes().items():
        x = Real(slope)
        for _ in range(ctx.pick(100, 1000)):
            n, m = rng.randint(0, 10**6), rng.randint(0, 10**6)
            gap = abs(cauchy_term(x, n) - cauchy_term(x, m))
            allowed = slope.bound * (Fraction(1, n + 1) + Fraction(1, m + 1))
            expect(gap <= allowed, 'cauchy terms too far apart', {'x': name, 'n': n, 'm': m})
    root2 = Real.sqrt(2)
    for _ in range(ctx.pick(30, 200)):
        q = rng.randint(1, 1000)
        p = rng.randint(0, 2 * q)
        side = dedekind_side(root2, p, q, Fraction(1, 10**9))
        expected = Side.A if p * p < 2 * q * q else Side.B
        expect(side is expected, 'dedekind side wrong', {'p': p, 'q': q, 'side': side.value})
    return {}


@_bound_check('archimedean.witness', 'archimedean')
def _check_archimedean(ctx):
    pairs = [(Real.integer(1), Real.integer(5)), (Real.rational(1, 3), Real.sqrt(2)),
             (Real.sqrt(2), Real.integer(100)), (Real.rational(1, 997), Real.e()),
             (Real(_quintic()), Real.rational(-7, 2))]
    found = []
    for a, big in pairs:
        count = archimedean_witness(a, big)
        expect(compare_within(count * a, big).is_greater, 'N a <= A', {'a': a.label, 'N': count})
        found.append(count)
    return {'witnesses': found}


@_bound_check('meta.anchor_coverage', 'meta')
def _check_coverage(ctx):
    covered = {c.anchor_key for c in _BOUNDS.values()} | {'order-laws'}
    missing = sorted(set(ANCHORS) - covered)
    expect(not missing, 'anchors without a check', missing)
    return {'anchors': len(ANCHORS)}


# -- axiom suite --------------------------------------------------------------

#: members too expensive for fine precision, with the finest eps they support
COARSE = {'pi': Fraction(1, 10**4)}


def default_corpus(include_pi=False):
    corpus = [Real.integer(2), Real.integer(-3), Real.rational(7, 3), Real.sqrt(2),
              Real.sqrt(3), Real(_quintic(), label='quintic'), Real.e()]
    if include_pi:
        corpus.append(Real.pi())
    return corpus


_AXIOMS = [
    ('axiom.add.commutative', 2), ('axiom.add.associative', 3), ('axiom.add.identity', 1),
    ('axiom.add.inverse', 1), ('axiom.mul.commutative', 2), ('axiom.mul.associative', 3),
    ('axiom.mul.identity', 1), ('axiom.mul.inverse', 1), ('axiom.distributive', 3),
    ('axiom.order.totality', 2), ('axiom.order.transitivity', 3),
    ('axiom.order.translation', 3), ('axiom.order.scaling', 3), ('axiom.archimedean', 2),
    ('axiom.sup.upper_bound', 3), ('axiom.sup.least', 3),
]


def _axiom_law(check_id, eps, tuple_):
    """Check one law on one tuple; returns ``None`` or a failure message."""
    def same(x, y):
        return compare_within(x, y, eps).is_indistinguishable

    if check_id == 'axiom.add.commutative':
        x, y = tuple_
        return None if same(x + y, y + x) else 'x + y != y + x'
    if check_id == 'axiom.add.associative':
        x, y, z = tuple_
        return None if same((x + y) + z, x + (y + z)) else '(x+y)+z != x+(y+z)'
    if check_id == 'axiom.add.identity':
        (x,) = tuple_
        return None if same(x + 0, x) else 'x + 0 != x'
    if check_id == 'axiom.add.inverse':
        (x,) = tuple_
        return None if same(x + (-x), 0) else 'x + (-x) != 0'
    if check_id == 'axiom.mul.commutative':
        x, y = tuple_
        return None if same(x * y, y * x) else 'xy != yx'
    if check_id == 'axiom.mul.associative':
        x, y, z = tuple_
        return None if same((x * y) * z, x * (y * z)) else '(xy)z != x(yz)'
    if check_id == 'axiom.mul.identity':
        (x,) = tuple_
        return None if same(x * 1, x) and same(1 * x, x) else '1x != x'
    if check_id == 'axiom.mul.inverse':
        (x,) = tuple_
        inv = x.inverse()
        return None if same(x * inv, 1) and same(inv * x, 1) else 'x inv(x) != 1'
    if check_id == 'axiom.distributive':
        x, y, z = tuple_
        return None if same(x * (y + z), x * y + x * z) else 'x(y+z) != xy + xz'
    if check_id == 'axiom.order.totality':
        x, y = tuple_
        forward, backward = compare_within(x, y, eps), compare_within(y, x, eps)
        if forward.order is not backward.flipped().order:
            return 'compare(x,y) and compare(y,x) are not mirror images'
        if x is y and not forward.is_indistinguishable:
            return 'x compares unequal to itself'
        return None
    if check_id == 'axiom.order.transitivity':
        x, y, z = tuple_
        if compare_within(x, y, eps).is_greater and compare_within(y, z, eps).is_greater:
            return None if compare_within(x, z, eps).is_greater else 'x>y>z but not x>z'
        return None
    if check_id == 'axiom.order.translation':
        x, y, t = tuple_
        if compare_within(x, y, eps).is_less:
            return None if compare_within(x + t, y + t, eps).is_less else 'x<y but not x+t<y+t'
        return None
    if check_id == 'axiom.order.scaling':
        x, y, t = tuple_
        if sign_within(t, eps).is_greater and compare_within(x, y, eps).is_less:
            return None if compare_within(t * x, t * y, eps).is_less else 'x<y, t>0 but not tx<ty'
        return None
    if check_id == 'axiom.archimedean':
        a, big = tuple_
        if not sign_within(a, eps).is_greater:
            return None
        count = archimedean_witness(a, big)
        return None if compare_within(count * a, big, eps).is_greater else 'N a <= A'
    if check_id == 'axiom.sup.upper_bound':
        family = list(tuple_)
        s = sup_finite(family)
        for x in family:
            if compare_within(x, s, eps).is_greater:
                return f'{x.label} exceeds the sup'
        return None
    if check_id == 'axiom.sup.least':
        family = list(tuple_)
        s = sup_finite(family)
        for k in _LEASTNESS_K:
            below = s - Real.rational(1, k)
            tol = max(Fraction(1, 10 * k), eps)
            if not any(compare_within(x, below, tol).is_greater for x in family):
                return f'sup - 1/{k} is still an upper bound'
        return None
    raise KeyError(check_id)


_LEASTNESS_K = (1, 2, 5, 10, 100, 1000)

_LAW = {
    'axiom.add.commutative': 'x + y = y + x',
    'axiom.add.associative': '(x + y) + z = x + (y + z)',
    'axiom.add.identity': 'x + 0 = x',
    'axiom.add.inverse': 'x + (−x) = 0',
    'axiom.mul.commutative': 'xy = yx',
    'axiom.mul.associative': '(xy)z = x(yz)',
    'axiom.mul.identity': '1x = x1 = x',
    'axiom.mul.inverse': 'x ≠ 0 ⇒ x·x⁻¹ = x⁻¹·x = 1',
    'axiom.distributive': 'x(y + z) = xy + xz',
    'axiom.order.totality': 'exactly one of x < y, x = y, x > y',
    'axiom.order.transitivity': 'x > y, y > z ⇒ x > z',
    'axiom.order.translation': 'x < y ⇒ x + t < y + t',
    'axiom.order.scaling': 'x < y, t > 0 ⇒ tx < ty',
    'axiom.archimedean': ANCHORS['archimedean'],
    'axiom.sup.upper_bound': 'x ≤ sup D for x ∈ D',
    'axiom.sup.least': 'sup D − 1/k < x for some x ∈ D',
}


def run_axiom_suite(corpus: List[Real], eps=Fraction(1, 10**9), seed: int = 0,
                    samples: Optional[int] = None, prefix: str = 'axiom') -> List[CheckReport]:
    """Check the ordered-field laws on tuples drawn from ``corpus``.

    ``samples`` caps the tuples per law (drawn with ``seed``); ``None`` uses
    every tuple.  Members listed in :data:`COARSE` are left out of a law
    when ``eps`` is finer than they support, and the report says so.
    ``prefix`` replaces the leading ``axiom`` of each check id so several
    runs can share one report.
    """
    if not corpus:
        raise ValueError('corpus must be nonempty')
    eps = Fraction(eps)
    usable = [x for x in corpus if eps >= COARSE.get(x.label, 0)]
    dropped = sorted(x.label for x in corpus if x not in usable)
    reports = []
    for check_id, arity in _AXIOMS:
        anchor = _LAW[check_id]
        params = {'eps': str(eps), 'seed': seed, 'corpus': [x.label for x in corpus]}
        if dropped:
            params['excluded'] = dropped
            params['excluded_reason'] = f'cost too high below eps {min(COARSE.values())}'
        if not usable:
            reports.append(CheckReport(check_id, anchor, params, 'skipped',
                                       'every corpus member needs coarser eps'))
            continue
        if check_id.startswith('axiom.sup'):
            tuples = list(itertools.combinations(usable, min(arity, len(usable))))
        else:
            tuples = list(itertools.product(usable, repeat=arity))
        if samples is not None and len(tuples) > samples:
            tuples = random.Random(f'{seed}:{check_id}').sample(tuples, samples)
        params['tuples'] = len(tuples)
        outcome, reason, witness = 'pass', None, None
        over_budget = []
        for tuple_ in tuples:
            try:
                problem = _axiom_law(check_id, eps, tuple_)
            except ResourceLimitError as exc:
                if any(x.label in COARSE for x in tuple_):
                    # composed pi terms outgrow the lattice budget; say so
                    over_budget.append([x.label for x in tuple_])
                    continue
                problem = f'ResourceLimitError: {exc}'
            except Exception as exc:
                problem = f'{type(exc).__name__}: {exc}'
            if problem:
                outcome, reason = 'fail', problem
                witness = [x.label for x in tuple_]
                break
        if over_budget:
            params['over_budget'] = over_budget
            if outcome == 'pass' and len(over_budget) == len(tuples):
                outcome, reason = 'skipped', 'every tuple exceeds the evaluation budget'
        reports.append(CheckReport(check_id, anchor, params, outcome, reason, witness))
    for report in reports:
        report.check_id = prefix + report.check_id[len('axiom'):]
    return sorted(reports, key=lambda r: r.check_id)


def run_verification(seed: int = 0, scale: str = 'small') -> List[CheckReport]:
    """Everything the ``verify`` command runs, sorted by check id.

    The bound checks, the axiom suite on the default corpus at ``10^-9``
    (pi listed as excluded), and a reduced-precision axiom run at
    ``10^-4`` that includes pi.
    """
    reports = run_paper_bounds(seed, scale)
    reports += run_axiom_suite(default_corpus(include_pi=True), Fraction(1, 10**9), seed)
    coarse = [Real.pi(), Real.sqrt(2), Real.rational(7, 3)]
    reports += run_axiom_suite(coarse, COARSE['pi'], seed,
                               samples=None if scale == 'full' else 4, prefix='axiom_reduced')
    return sorted(reports, key=lambda r: r.check_id)


def write_report(reports, path):
    with open(path, 'w', encoding='utf-8') as fh:
        for report in reports:
            fh.write(report.to_json() + '\n')


def summarize(reports) -> str:
    lines = []
    for r in reports:
        line = f'{r.outcome.upper():7} {r.check_id}'
        if r.reason:
            line += f'  ({r.reason})'
        lines.append(line)
    counts = {k: sum(r.outcome == k for r in reports) for k in ('pass', 'fail', 'skipped')}
    lines.append(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")
    return '\n'.join(lines)
