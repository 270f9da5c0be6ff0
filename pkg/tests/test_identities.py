import random
from fractions import Fraction
from itertools import product as iproduct

import pytest

from kantor.errors import ExprSyntaxError, MissingBracketError
from kantor.identities import (
    Bracket,
    Prod,
    Scale,
    Sub,
    Var,
    builtin_identities,
    check_identity,
    evaluate_identity,
    free_variables,
    identity,
    parse_expr,
    suite_holds,
)
from kantor.linalg import unit_vec
from kantor import zoo


def test_parse_associator():
    ast = parse_expr("(a*b)*c - a*(b*c)")
    assert ast == Sub(Prod(Prod(Var("a"), Var("b")), Var("c")), Prod(Var("a"), Prod(Var("b"), Var("c"))))


def test_parse_poisson_rule():
    ast = parse_expr("{a*b, c} - a*{b,c} - {a,c}*b")
    assert ast == Sub(
        Sub(
            Bracket(Prod(Var("a"), Var("b")), Var("c")),
            Prod(Var("a"), Bracket(Var("b"), Var("c"))),
        ),
        Prod(Bracket(Var("a"), Var("c")), Var("b")),
    )


def test_parse_left_commutativity():
    ast = parse_expr("a*(b*x) - b*(a*x)")
    assert free_variables(ast) == {"a", "b", "x"}


def test_parse_scalar_prefix():
    ast = parse_expr("2/3*(a*b) - c")
    assert ast == Sub(Scale(Fraction(2, 3), Prod(Var("a"), Var("b"))), Var("c"))


def test_parse_errors_carry_offsets():
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr("a*b*c")
    assert err.value.offset == 3
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr("(a*b")
    assert err.value.offset == 4
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr("a?b")
    assert err.value.offset == 1


def test_undeclared_variable_rejected():
    with pytest.raises(ExprSyntaxError):
        identity("bad", ("a",), "a*b")


def test_catalog_contents():
    cat = builtin_identities()
    assert len(cat) >= 10
    for name in (
        "associative", "commutative", "anticommutative", "jordan", "lie",
        "left_leibniz", "malcev", "flexible", "noncommutative_jordan",
        "left_commutative", "poisson_leibniz", "conservative_left_commutative",
    ):
        assert name in cat


def test_jordan_fixture_satisfies_jordan(jordan):
    assert suite_holds(jordan, builtin_identities()["jordan"])


def test_sl2_is_lie(sl2):
    assert suite_holds(sl2, builtin_identities()["lie"])


def test_m7_malcev_but_not_associative(m7):
    cat = builtin_identities()
    assert suite_holds(m7, cat["anticommutative"])
    assert suite_holds(m7, cat["malcev"])
    verdict = check_identity(m7, cat["associative"].identities[0])
    assert not verdict.holds
    w = verdict.witness
    assert w.coefficient != 0
    assert any(w.defect)
    # the witness assignment reproduces the defect through direct evaluation
    again = evaluate_identity(m7, verdict.identity, w.assignment)
    assert again == w.defect


def test_eq4_template_on_nilpotent_fixture(nilp4):
    cat = builtin_identities()
    assert suite_holds(nilp4, cat["left_commutative"])
    assert suite_holds(nilp4, cat["conservative_left_commutative"], bracket=zoo.zero_algebra(3))


def test_missing_bracket_raises(nilp4):
    cat = builtin_identities()
    with pytest.raises(MissingBracketError):
        check_identity(nilp4, cat["poisson_leibniz"].identities[0])


def _multilinear_all_tuples_oracle(alg, ident):
    """Direct substitution of all basis tuples; valid for multilinear
    identities only, and fully independent of the symbolic expansion."""
    n = alg.dim
    k = len(ident.variables)
    for combo in iproduct(range(n), repeat=k):
        assignment = {
            v: unit_vec(n, i) for v, i in zip(ident.variables, combo)
        }
        if any(evaluate_identity(alg, ident, assignment)):
            return False
    return True


def test_multilinear_agreement_with_basis_oracle(sl2, m7, matrix2):
    cat = builtin_identities()
    multilinear = [
        cat["associative"].identities[0],
        cat["lie"].identities[1],          # jacobi
        cat["left_leibniz"].identities[0],
        cat["left_commutative"].identities[0],
    ]
    fixtures = [sl2, m7, matrix2, zoo.simple_left_commutative(2), zoo.left_leibniz2()]
    for alg in fixtures:
        for ident in multilinear:
            assert check_identity(alg, ident).holds == _multilinear_all_tuples_oracle(alg, ident)


def _random_vectors(alg, variables, rng):
    return {
        v: tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(alg.dim))
        for v in variables
    }


def test_soundness_protocol_random_points():
    rng = random.Random(2024)
    cat = builtin_identities()
    fixtures = [
        zoo.fixture(n)
        for n in ("matrix2", "sl2", "jordan_sym2", "nilpotent4", "m7", "slc2", "leibniz2", "zero2")
    ]
    for alg in fixtures:
        for suite in cat.values():
            if suite.needs_bracket:
                continue
            for ident in suite.identities:
                verdict = check_identity(alg, ident)
                if verdict.holds:
                    for _ in range(25):
                        assignment = _random_vectors(alg, ident.variables, rng)
                        assert not any(evaluate_identity(alg, ident, assignment))
                else:
                    assert any(verdict.witness.defect)


def test_scaled_identity_evaluation():
    alg = zoo.simple_left_commutative(2)
    ident = identity("scaled", ("a", "b"), "2*(a*b) - 2*(a*b)")
    assert check_identity(alg, ident).holds


def test_identity_file_roundtrip(tmp_path):
    import json

    from kantor.identities import load_identity

    path = tmp_path / "flex.json"
    path.write_text(json.dumps({"name": "flex", "vars": ["a", "b"], "zero": "(a*b)*a - a*(b*a)"}))
    ident = load_identity(path)
    assert ident.name == "flex"
    assert check_identity(zoo.jordan_sym2(), ident).holds

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "x", "vars": ["a"]}))
    from kantor.errors import AlgebraFormatError

    with pytest.raises(AlgebraFormatError):
        load_identity(bad)
