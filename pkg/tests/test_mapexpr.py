import pytest
from hypothesis import given, strategies as st

from spernerkit.mapexpr import (
    ArityError,
    BinOp,
    Call,
    EvalError,
    Neg,
    Num,
    ParseError,
    UnknownVariableError,
    Var,
    eval_map,
    parse,
    parse_expr,
    pretty,
    to_source,
)


def test_parse_examples():
    p = parse("x1, x2, x0", 2)
    assert p.coords == (Var(1), Var(2), Var(0))
    p = parse("x0 + 0.5*x1, x1 - 0.5*x1, x2", 2)
    assert p.coords[0] == BinOp("+", Var(0), BinOp("*", Num(0.5), Var(1)))
    with pytest.raises(ParseError) as err:
        parse("x0 + * 2", 0)
    assert err.value.position == 5


def test_parse_errors():
    with pytest.raises(ArityError):
        parse("x0, x1", 2)
    with pytest.raises(UnknownVariableError) as err:
        parse("x0, x3", 1)
    assert err.value.position == 4
    with pytest.raises(ParseError):
        parse("x0 $ x1", 1)
    with pytest.raises(ParseError):
        parse("min(x0), x1", 1)
    with pytest.raises(ParseError):
        parse("(x0, x1", 1)
    with pytest.raises(ParseError):
        parse("sin(x0), x1", 1)
    with pytest.raises(ParseError):
        parse("x0 x1, x1", 1)
    with pytest.raises(ParseError) as err:
        parse("x0 +", 0)
    assert err.value.position == 4


def test_precedence_and_associativity():
    assert parse_expr("x0 - x1 - x2", 2) == BinOp("-", BinOp("-", Var(0), Var(1)), Var(2))
    assert parse_expr("x0 + x1*x2", 2) == BinOp("+", Var(0), BinOp("*", Var(1), Var(2)))
    assert parse_expr("-x0*x1", 1) == BinOp("*", Neg(Var(0)), Var(1))
    assert parse_expr("x0 / x1 / 2", 1) == BinOp("/", BinOp("/", Var(0), Var(1)), Num(2.0))
    assert parse_expr("max(x0, abs(-x1))", 1) == Call("max", (Var(0), Call("abs", (Neg(Var(1)),))))
    assert parse_expr("1.5e-3 + .5", 0) == BinOp("+", Num(1.5e-3), Num(0.5))


def test_eval_examples():
    assert eval_map(parse("x1, x2, x0", 2), (0.2, 0.3, 0.5)) == [0.3, 0.5, 0.2]
    assert eval_map(parse("x0+x1, 0, x2", 2), (0.25, 0.25, 0.5)) == [0.5, 0, 0.5]
    with pytest.raises(EvalError) as err:
        eval_map(parse("1/x0, x1, x2", 2), (0, 1, 0))
    assert err.value.index == 0 and err.value.reason == "division by zero"
    assert eval_map(parse("min(x0, x1), max(x0, x1), abs(x0 - x1)", 2), (0.2, 0.7, 0.1)) == pytest.approx(
        [0.2, 0.7, 0.5])


def exprs(n):
    leaf = st.one_of(st.builds(Var, st.integers(0, n)),
                     st.builds(Num, st.floats(0, 1e6, allow_nan=False, allow_infinity=False)))

    def grow(inner):
        return st.one_of(
            st.builds(BinOp, st.sampled_from("+-*/"), inner, inner),
            st.builds(Neg, inner),
            st.builds(lambda a, b: Call("min", (a, b)), inner, inner),
            st.builds(lambda a: Call("abs", (a,)), inner),
        )

    return st.recursive(leaf, grow, max_leaves=12)


@given(exprs(2))
def test_pretty_print_round_trips(tree):
    assert parse_expr(to_source(tree), 2) == tree


@given(st.lists(exprs(1), min_size=2, max_size=2))
def test_program_round_trips(coords):
    p = parse(", ".join(to_source(c) for c in coords), 1)
    assert parse(pretty(p), 1).coords == p.coords
