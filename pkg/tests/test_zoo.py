from fractions import Fraction

import pytest

from kantor.algebra import Algebra
from kantor.conservative import conservativity
from kantor.errors import GateError
from kantor.identities import builtin_identities, suite_holds
from kantor.linalg import Matrix
from kantor import zoo


def test_m7_products(m7):
    x, y, z = m7.gen("x"), m7.gen("y"), m7.gen("z")
    xp, yp, zp = m7.gen("x'"), m7.gen("y'"), m7.gen("z'")
    h = m7.gen("h")
    assert x * xp == h
    assert xp * yp == -2 * z
    assert x * h == -2 * x  # anticommutative completion of h x = 2x
    assert y * x == -2 * zp


def test_simple_left_commutative_values():
    alg = zoo.simple_left_commutative(2)
    e1, e2 = alg.gen(0), alg.gen(1)
    assert e1 * e2 == 2 * e2
    assert e2 * e2 == 2 * e2
    assert suite_holds(alg, builtin_identities()["left_commutative"])


def test_simple_left_commutative_one_dimensional():
    alg = zoo.simple_left_commutative(1)
    e1 = alg.gen(0)
    assert e1 * e1 == e1
    assert suite_holds(alg, builtin_identities()["associative"])
    assert conservativity(alg).conservative


def test_quasi_mutation_extremes(matrix2):
    assert zoo.quasi_mutation(matrix2, 1).table == matrix2.table
    sym = zoo.quasi_mutation(matrix2, Fraction(1, 2))
    assert suite_holds(sym, builtin_identities()["commutative"])
    opp = zoo.quasi_mutation(matrix2, 0)
    assert opp.table == matrix2.opposite().table


def test_quasi_mutation_opposite_property(matrix2):
    lam = Fraction(2, 5)
    # swapping the parameter lambda <-> 1 - lambda is exactly opposition,
    # and mutating the opposite algebra at 1 - lambda undoes both swaps
    assert zoo.quasi_mutation(matrix2, lam).opposite().table == zoo.quasi_mutation(matrix2, 1 - lam).table
    assert zoo.quasi_mutation(matrix2.opposite(), 1 - lam).table == zoo.quasi_mutation(matrix2, lam).table


def test_quasi_mutation_requires_associative(sl2):
    with pytest.raises(GateError):
        zoo.quasi_mutation(sl2, Fraction(1, 3))


def test_quasi_mutation_third_is_conservative(matrix2):
    assert conservativity(zoo.quasi_mutation(matrix2, Fraction(1, 3))).conservative


def test_poisson_fixture_preconditions_and_product():
    comm, bracket = zoo.truncated_poisson_pair()
    cat = builtin_identities()
    assert suite_holds(comm, cat["associative"])
    assert suite_holds(comm, cat["commutative"])
    assert suite_holds(bracket, cat["lie"])
    assert suite_holds(comm, cat["poisson_leibniz"], bracket=bracket)
    star = zoo.poisson_kantor_product(comm, bracket)
    assert conservativity(star).conservative


def test_poisson_zero_bracket_is_commutative_product():
    comm, _ = zoo.truncated_poisson_pair()
    star = zoo.poisson_kantor_product(comm, zoo.zero_algebra(4).rename(comm.basis_names))
    assert star.table == comm.table


def test_poisson_rejects_bad_bracket():
    comm, _ = zoo.truncated_poisson_pair()
    bad = Algebra.from_products(4, {(1, 2): {0: 1}, (2, 1): {0: -1}}, comm.basis_names)
    # {x,y} = 1 does not satisfy the Leibniz compatibility on the quotient
    with pytest.raises(GateError) as err:
        zoo.poisson_kantor_product(comm, bad)
    assert err.value.check == "poisson_leibniz"


def test_structurable_identity_involution():
    # the identity map is an involution only of a commutative algebra;
    # there the twist changes nothing (x - conj(x) = 0)
    diag = Algebra.from_products(2, {(0, 0): {0: 1}, (1, 1): {1: 1}})
    twisted = zoo.structurable_twist(diag, Matrix.identity(2))
    assert twisted.table == diag.table


def test_structurable_identity_involution_needs_commutative(matrix2):
    with pytest.raises(GateError) as err:
        zoo.structurable_twist(matrix2, Matrix.identity(4))
    assert err.value.check == "involution-antiautomorphism"


def test_structurable_transpose_twist_conservative(matrix2):
    twisted = zoo.structurable_twist(matrix2, zoo.transpose_involution_2x2())
    assert conservativity(twisted).conservative


def test_structurable_rejects_non_antiautomorphism(matrix2):
    bad = Matrix.from_rows(
        [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    )  # an involutive permutation that is not an anti-automorphism
    with pytest.raises(GateError) as err:
        zoo.structurable_twist(matrix2, bad)
    assert err.value.check == "involution-antiautomorphism"


def test_structurable_rejects_non_involution(matrix2):
    not_square_root = Matrix.from_rows(
        [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    )
    with pytest.raises(GateError) as err:
        zoo.structurable_twist(matrix2, not_square_root)
    assert err.value.check == "involution-squares-to-identity"


def test_find_unit(matrix2, sl2):
    unit = zoo.find_unit(matrix2)
    assert unit == zoo.matrix_unit(matrix2, 2)
    assert zoo.find_unit(sl2) is None


def test_matrix_algebra_associative(matrix2):
    assert suite_holds(matrix2, builtin_identities()["associative"])


def test_fixture_registry():
    assert "m7" in zoo.FIXTURES
    with pytest.raises(KeyError):
        zoo.fixture("nope")
    for name in sorted(zoo.FIXTURES):
        if name == "wn3":
            continue
        alg = zoo.fixture(name)
        assert alg.dim >= 1


def test_bundled_data_files_match_constructors():
    import pathlib

    from kantor.storage import load_algebra_pair, load_linear_map

    data = pathlib.Path(zoo.__file__).parent / "data"
    for name in ("m7", "wn2", "w2sym", "s2", "nilpotent4", "slc2"):
        alg, bracket = load_algebra_pair(data / f"{name}.json")
        built = zoo.fixture(name)
        assert alg.table == built.table and alg.basis_names == built.basis_names
        assert bracket is None
    comm, bracket = load_algebra_pair(data / "truncated_poisson.json")
    c2, b2 = zoo.truncated_poisson_pair()
    assert comm.table == c2.table and bracket.table == b2.table
    sigma = load_linear_map(data / "involution_transpose_2x2.json", expected_dim=4)
    assert sigma == zoo.transpose_involution_2x2()
