from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eudoxus.errors import InvalidBracketError, ZeroDivisorError
from eudoxus.expr import (Add, Constant, Div, IntegerLiteral, Mul, Neg, ParseError, PolyRoot,
                          Pow, RationalLiteral, Root, Sqrt, Sub, decimal_upper_bound,
                          eval_expr, exact_decimal, parse, to_source)

nat = st.integers(0, 10**6)
leaves = st.one_of(
    nat.map(IntegerLiteral),
    st.tuples(nat, st.integers(1, 999)).map(lambda t: RationalLiteral(*t)),
    st.sampled_from([Constant('pi'), Constant('e')]),
    st.integers(1, 99).map(Sqrt),
    st.tuples(st.integers(1, 99), st.integers(2, 5)).map(lambda t: Root(*t)),
    st.tuples(st.lists(st.integers(-9, 9), min_size=1, max_size=4), st.integers(1, 9),
              st.integers(-3, 3), st.integers(4, 9))
      .map(lambda t: PolyRoot(tuple(t[0]) + (t[1],), (t[2], t[3]))),
)


def extend(children):
    binary = st.sampled_from([Add, Sub, Mul, Div])
    return st.one_of(
        children.map(Neg),
        st.tuples(children, st.integers(0, 6)).map(lambda t: Pow(*t)),
        st.tuples(binary, children, children).map(lambda t: t[0](t[1], t[2])),
    )


trees = st.recursive(leaves, extend, max_leaves=12)


@given(trees)
def test_print_parse_round_trip(node):
    assert parse(to_source(node)) == node


@pytest.mark.parametrize('source,expected', [
    ('sqrt(2)^2 - 2', Sub(Pow(Sqrt(2), 2), IntegerLiteral(2))),
    ('polyroot(-3,1,0,0,0,1; 1,2)', PolyRoot((-3, 1, 0, 0, 0, 1), (1, 2))),
    ('1/0', RationalLiteral(1, 0)),
    ('2/3^2', Pow(RationalLiteral(2, 3), 2)),
    ('1 + 2 * 3', Add(IntegerLiteral(1), Mul(IntegerLiteral(2), IntegerLiteral(3)))),
    ('1 - 2 - 3', Sub(Sub(IntegerLiteral(1), IntegerLiteral(2)), IntegerLiteral(3))),
    ('-pi', Neg(Constant('pi'))),
    ('2 / e', Div(IntegerLiteral(2), Constant('e'))),
    ('root( 5 , 3 )', Root(5, 3)),
    ('(1/3)/(1/3)', Div(RationalLiteral(1, 3), RationalLiteral(1, 3))),
])
def test_parse(source, expected):
    assert parse(source) == expected


@pytest.mark.parametrize('source,position', [
    ('1 +', 3), ('sqrt(2', 6), ('2 $ 3', 2), ('foo(1)', 0), ('root(5, 1)', 8),
    ('sqrt(0)', 5), ('polyroot(3; 0, 1)', 0), ('(1 + 2', 6), ('1 2', 2), ('2^-1', 2),
])
def test_parse_errors_carry_positions(source, position):
    with pytest.raises(ParseError) as info:
        parse(source)
    assert info.value.position == position


def test_exact_decimal():
    assert exact_decimal(Fraction(1, 8)) == '0.125'
    assert exact_decimal(Fraction(-5, 2)) == '-2.5'
    assert exact_decimal(Fraction(3)) == '3'
    assert exact_decimal(Fraction(1, 3)) == '1/3'


@given(st.fractions(min_value=0, max_value=10**6))
def test_decimal_upper_bound_is_an_upper_bound(value):
    text = decimal_upper_bound(value)
    assert '/' not in text
    bound = Fraction(text)
    assert value <= bound <= value * Fraction(1001, 1000) + Fraction(1, 10**30)


def test_eval_examples():
    assert eval_expr(parse('2/3 + 1/6'), 6).decimal == '0.833333'
    r = eval_expr(parse('sqrt(2)^2 - 2'), 10)
    assert r.decimal == '0.0000000000'
    assert r.error_bound <= Fraction(1, 10**10)
    e = eval_expr(parse('e'), 4)
    assert (e.decimal, e.certificate, str(e)) == ('2.7183', 'empirical', '2.7183 (uncertified)')
    assert eval_expr(parse('sqrt(2)'), 10).certificate == 'proven'


def test_eval_errors():
    with pytest.raises(ZeroDivisorError):
        eval_expr(parse('1/0'), 5)
    with pytest.raises(ZeroDivisorError):
        eval_expr(parse('1/(sqrt(2) - sqrt(2))'), 5)
    with pytest.raises(InvalidBracketError):
        eval_expr(parse('polyroot(1,1; 1,2)'), 5)
    with pytest.raises(ValueError):
        eval_expr(parse('1'), 51)


def test_session_reuses_subtrees():
    session = {}
    eval_expr(parse('sqrt(2) * sqrt(3)'), 6, session=session)
    before = len(session)
    eval_expr(parse('sqrt(2) * sqrt(3) + 1'), 6, session=session)
    assert Sqrt(2) in session and len(session) == before + 2
