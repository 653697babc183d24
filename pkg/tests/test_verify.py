import json
from fractions import Fraction

import pytest

from eudoxus import verify
from eudoxus.real import Real
from eudoxus.slope import opt_div

ARGS = {'seed': 0, 'scale': 'small'}


def run_one(check_id, **kw):
    return verify._run(verify.registered_checks()[check_id], {**ARGS, **kw})


def test_circle_check_reports_values():
    report = run_one('circle.non_slope')
    assert report.passed
    assert report.parameters['values'] == [3, 7, 11, 15, 19, 23]


def test_off_by_one_opt_div_is_caught(monkeypatch):
    monkeypatch.setattr(verify, 'opt_div', lambda p, q: opt_div(p, q) + (p % 5 == 0))
    report = run_one('optdiv.three_q')
    assert report.outcome == 'fail'
    assert {'a', 'b', 'c', 'q'} <= set(report.witness)
    assert run_one('optdiv.definition').outcome == 'fail'


def test_missing_anchor_fails_the_meta_check(monkeypatch):
    monkeypatch.setitem(verify.ANCHORS, 'unchecked-bound', 'x = x')
    report = run_one('meta.anchor_coverage')
    assert report.outcome == 'fail' and report.witness == ['unchecked-bound']


def test_crashing_check_is_reported_not_raised():
    def boom(ctx):
        raise RuntimeError('kaput')

    report = verify._run(verify._Check('zz.boom', 'meta', boom), ARGS)
    assert report.outcome == 'fail' and 'kaput' in report.reason
    assert report.witness == {'error': "RuntimeError('kaput')"}


@pytest.mark.parametrize('check_id', ['growth.bounds', 'propagation.rules', 'inverse.contract'])
def test_checks_are_deterministic(check_id):
    assert run_one(check_id).to_json() == run_one(check_id).to_json()


def test_scale_is_validated():
    with pytest.raises(ValueError):
        verify.run_paper_bounds(0, 'huge')


def test_literal_denominator_ordering_is_false():
    # the ordering c:m(n+m) - c:n(n+m) - c:nm is off already at n = m = 1;
    # the registered check uses c:nm - c:m(n+m) - c:n(n+m)
    n = m = 1
    c = 2
    assert abs(opt_div(c, m * (n + m)) - opt_div(c, n * (n + m)) - opt_div(c, n * m)) > 1
    assert verify.denominator_violations(30, 2000) is None


def test_axiom_suite_on_small_corpus():
    corpus = [Real.integer(2), Real.rational(-7, 3), Real.sqrt(3)]
    reports = verify.run_axiom_suite(corpus, Fraction(1, 10**9), seed=1)
    assert [r.check_id for r in reports] == sorted(r.check_id for r in reports)
    assert len({r.check_id for r in reports}) == len(reports) == len(verify._AXIOMS)
    assert all(r.passed for r in reports), verify.summarize(reports)


def test_axiom_suite_flags_a_broken_law():
    # a "real" whose certificate is a lie: n -> n^2 claims defect 0
    from eudoxus.slope import Slope, Trust
    liar = Real(Slope.certified(lambda n: n * n, 0, Trust.PROVEN, 'liar'))
    reports = verify.run_axiom_suite([liar, Real.integer(1)], Fraction(1, 10**3), samples=4)
    assert any(r.outcome == 'fail' and r.witness for r in reports)


def test_pi_is_excluded_at_fine_precision():
    reports = verify.run_axiom_suite([Real.pi()], Fraction(1, 10**9))
    assert all(r.outcome == 'skipped' for r in reports)
    assert all(r.parameters['excluded'] == ['pi'] for r in reports)
    with pytest.raises(ValueError):
        verify.run_axiom_suite([])


def test_report_file_round_trips(tmp_path):
    reports = [run_one('circle.non_slope'), run_one('integer.embedding')]
    path = tmp_path / 'report.jsonl'
    verify.write_report(reports, path)
    lines = [json.loads(line) for line in path.read_text().splitlines()]
    assert [doc['check_id'] for doc in lines] == ['circle.non_slope', 'integer.embedding']
    assert set(lines[0]) == {'check_id', 'anchor', 'parameters', 'outcome', 'reason', 'witness'}
    assert verify.summarize(reports).endswith('2 passed, 0 failed, 0 skipped')
