import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hns4 import builtin_system, conj, div_left, div_right, exp_closed, mul, pseudonorm, render
from hns4.expr import (
    Add,
    BasisElem,
    Call,
    DivLeft,
    DivRight,
    EvalError,
    ExprError,
    LexError,
    Literal,
    Mul,
    Neg,
    ParseError,
    Sub,
    TokenKind,
    evaluate,
    evaluate_text,
    parse,
    tokenize,
    unparse,
)

from conftest import SYSTEM_IDS, SYSTEMS, close, coeffs4

H, AH, CD = (builtin_system(k) for k in ("H", "AH", "CD"))


def kinds(text):
    return [t.kind for t in tokenize(text)]


def test_tokenize_basis_product():
    assert kinds("e2*e3") == [TokenKind.BASIS, TokenKind.STAR, TokenKind.BASIS, TokenKind.END]
    assert [t.value for t in tokenize("E2*e3")[::2]] == [2, 3]


def test_tokenize_number_with_exponent():
    toks = tokenize("1.5e-2 + e4")
    assert [t.kind for t in toks] == [TokenKind.NUMBER, TokenKind.PLUS, TokenKind.BASIS, TokenKind.END]
    assert toks[0].value == 0.015
    assert toks[2].value == 4


def test_tokenize_positions():
    assert [t.position for t in tokenize(" 12 +e1")] == [2, 5, 6, 8]


def test_lex_error_column():
    with pytest.raises(LexError) as info:
        tokenize("2 @ 3")
    assert info.value.column == 3


@pytest.mark.parametrize("text", ["1e+", "1.2.3", "3E-x", "1e+400"])
def test_malformed_numbers(text):
    with pytest.raises(LexError):
        tokenize(text)


def test_parse_precedence():
    assert parse("1 + 2*e2") == Add(Literal(1.0), Mul(Literal(2.0), BasisElem(2)))
    assert parse("e3 \\ e2") == DivLeft(BasisElem(3), BasisElem(2))
    assert parse("e1 / e2 * e3") == Mul(DivRight(BasisElem(1), BasisElem(2)), BasisElem(3))
    assert parse("-e2 - e3") == Sub(Neg(BasisElem(2)), BasisElem(3))
    assert parse("conj(e2)") == Call("conj", BasisElem(2))


def test_parse_missing_paren():
    with pytest.raises(ParseError, match=r"expected '\)'"):
        parse("exp(e2 + e3")


@pytest.mark.parametrize("text", ["2e2", "2 e2", "e2(e3)", "3e5"])
def test_implicit_multiplication_rejected(text):
    with pytest.raises(ParseError, match="implicit multiplication"):
        parse(text)


@pytest.mark.parametrize("text", ["sin(e2)", "e5", "foo"])
def test_unknown_identifiers(text):
    with pytest.raises(ParseError):
        parse(text)


@pytest.mark.parametrize("text", ["", "+", "e2 *", "()", ")"])
def test_incomplete_input(text):
    with pytest.raises(ParseError):
        parse(text)


def test_eval_examples():
    assert evaluate_text("e2*e3", H).a == (0, 0, 0, 1)
    with pytest.raises(EvalError, match="zero divisor"):
        evaluate_text("1/(e1+e3)", AH)
    assert close(evaluate_text("exp(3.141592653589793*e2)", H), (-1, 0, 0, 0), 1e-12)


def test_eval_functions():
    w = AH.number(1, 2, 3, 4)
    text = "1 + 2*e2 + 3*e3 + 4*e4"
    assert evaluate_text(f"conj({text})", AH) == conj(w)
    assert evaluate_text(f"pnorm({text})", AH).a == (pseudonorm(w), 0, 0, 0)
    assert evaluate_text(f"norm({text})", AH).a[0] == pytest.approx(pseudonorm(w) ** 2)
    assert evaluate_text(f"exp({text})", AH) == exp_closed(w)


def test_division_operators():
    e2, e3 = H.basis(2), H.basis(3)
    assert evaluate_text("e2 / e3", H) == div_right(e2, e3)
    assert evaluate_text("e3 \\ e2", H) == div_left(e2, e3)
    assert evaluate_text("e2 / e3", H) != evaluate_text("e3 \\ e2", H)


def test_eval_division_by_zero_names_subexpression():
    with pytest.raises(EvalError) as info:
        evaluate_text("e2 / (e3 - e3)", H)
    assert "(e3 - e3)" in str(info.value)
    assert "zero" in str(info.value)


def test_overflow_is_an_eval_error():
    with pytest.raises(EvalError):
        evaluate_text("exp(1000)", H)
    with pytest.raises(EvalError):
        evaluate_text("1e+300*1e+300", H)


def test_deep_nesting_is_reported():
    with pytest.raises(ExprError):
        evaluate_text("(" * 5000 + "1" + ")" * 5000, H)


def test_render():
    assert render((0, 0, 0, 1)) == "e4"
    assert render((0, 0, 0, 0)) == "0"
    assert render((1, 2, -3, 4)) == "1 + 2*e2 - 3*e3 + 4*e4"
    assert render((-1, 0, -1, 0.5)) == "-1 - e3 + 0.5*e4"
    assert render((0, -2.5, 0, 0)) == "-2.5*e2"
    assert render((1 / 3, 0, 0, 0)) == "0.333333"
    assert render((1e20, 1e-7, 0, 0)) == "1e+20 + 1e-07*e2"


@pytest.mark.parametrize("system", SYSTEMS, ids=SYSTEM_IDS)
@given(a=coeffs4)
def test_render_round_trip(system, a):
    w = system.number(*a)
    # d significant digits round to within half a unit in the last place: 5 * 10**-d relative
    for digits, tol in ((6, 5e-6), (7, 1e-6), (17, 0.0)):
        back = evaluate_text(w.render(digits), system)
        for x, y in zip(w.a, back.a):
            assert abs(x - y) <= tol * abs(x)


@settings(max_examples=500)
@given(text=st.text(alphabet="e1234+-*/\\() .0123456789Eexpconjnorm@#", max_size=40))
def test_parser_totality(text):
    try:
        evaluate_text(text, AH)
    except ExprError:
        pass


@settings(max_examples=200)
@given(text=st.text(max_size=30))
def test_parser_totality_arbitrary_unicode(text):
    try:
        evaluate_text(text, CD)
    except ExprError:
        pass


# --- randomized trees against direct library calls ------------------------

leaf = st.one_of(
    st.floats(min_value=0, max_value=5, allow_nan=False).map(Literal),
    st.integers(1, 4).map(BasisElem),
)


def _extend(children):
    binary = st.sampled_from([Add, Sub, Mul, DivRight, DivLeft])
    return st.one_of(
        st.builds(lambda op, l, r: op(l, r), binary, children, children),
        children.map(Neg),
        st.builds(Call, st.sampled_from(["conj", "exp", "pnorm"]), children),
    )


trees = st.recursive(leaf, _extend, max_leaves=8)


def library_eval(node, system):
    """Reference evaluator calling the algebra directly."""
    from hns4 import add, neg, scale, sub

    if isinstance(node, Literal):
        return scale(node.value, system.one())
    if isinstance(node, BasisElem):
        return system.basis(node.index)
    if isinstance(node, Neg):
        return neg(library_eval(node.operand, system))
    if isinstance(node, Call):
        arg = library_eval(node.arg, system)
        return {"conj": conj, "exp": exp_closed, "pnorm": lambda w: scale(pseudonorm(w), system.one())}[node.name](arg)
    left, right = library_eval(node.left, system), library_eval(node.right, system)
    if isinstance(node, DivRight):
        return div_right(left, right)
    if isinstance(node, DivLeft):
        return div_left(right, left)
    return {Add: add, Sub: sub, Mul: mul}[type(node)](left, right)


@pytest.mark.parametrize("system", SYSTEMS, ids=SYSTEM_IDS)
@settings(max_examples=100)
@given(tree=trees)
def test_operator_semantics(system, tree):
    try:
        expected = library_eval(tree, system)
    except (ZeroDivisionError, ValueError, OverflowError):
        with pytest.raises(ExprError):
            evaluate(tree, system)
        return
    assert evaluate(tree, system) == expected
    assert evaluate_text(unparse(tree), system) == expected


def test_unparse_negative_literal():
    assert unparse(Literal(-2.0)) == "(-2.0)"
    assert evaluate_text(unparse(Mul(Literal(-2.0), BasisElem(2))), H).a == (0, -2, 0, 0)
    assert math.isclose(evaluate_text("-.5", H).a[0], -0.5)
