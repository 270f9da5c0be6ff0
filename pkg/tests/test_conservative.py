import pytest
from hypothesis import given, settings, strategies as st

from kantor.algebra import Algebra
from kantor.conservative import (
    DEFAULT_TERMINAL_CONVENTION,
    TERMINAL_CONVENTIONS,
    conservativity,
    is_terminal,
    jacobi_space,
    quasi_units,
    verify_associated,
)
from kantor.linalg import AffineSolutionSet, Subspace, dot, unit_vec
from kantor.multiops import MultilinearOp
from kantor.wn import build_wn, w2sym_associated_F, wn_associated_F
from kantor import zoo


def test_zero_algebra_f_zero():
    z = zoo.zero_algebra(2)
    assert verify_associated(z, MultilinearOp.zero(2, 2))


def test_wn2_formula_is_associated(wn2):
    assert verify_associated(wn2, wn_associated_F(2))


def test_w2sym_formula_is_associated(w2sym):
    assert verify_associated(w2sym, w2sym_associated_F())


def test_wrong_f_rejected(wn2):
    wrong = MultilinearOp.zero(2, 8)
    assert not verify_associated(wn2, wrong)


def test_m7_not_conservative(m7):
    verdict = conservativity(m7)
    assert not verdict.conservative
    assert verdict.f is None
    w = verdict.witness
    # Fredholm certificate: kills the bracket-map columns, pairs to 1 with
    # the target of the failing pair
    from kantor.conservative import _bracket_matrix

    M, _ = _bracket_matrix(m7)
    for j in range(M.cols):
        assert dot(w.certificate, M.col(j)) == 0
    assert dot(w.certificate, w.target) == 1


@pytest.mark.parametrize("n", [2, 3])
def test_simple_left_commutative_not_conservative(n):
    verdict = conservativity(zoo.simple_left_commutative(n))
    assert not verdict.conservative
    assert verdict.witness is not None


def test_nilpotent4_conservative_with_zero_f(nilp4):
    verdict = conservativity(nilp4)
    assert verdict.conservative
    assert verdict.f.is_zero()
    assert verify_associated(nilp4, MultilinearOp.zero(2, 3))


def test_canonical_f_satisfies_equation(wn2):
    verdict = conservativity(wn2)
    assert verdict.conservative
    assert verify_associated(wn2, verdict.f)
    assert verdict.kernel == jacobi_space(wn2)


def test_jacobi_space_wn2(wn2):
    js = jacobi_space(wn2)
    expected = Subspace.from_spanning(8, [unit_vec(8, i) for i in (1, 2, 3, 5, 6, 7)])
    assert js == expected
    assert js.dim == 6
    assert 8 - js.dim == 2


def test_jacobi_space_trivial_cases(sl2):
    assert jacobi_space(zoo.zero_algebra(3)) == Subspace.full(3)
    assert jacobi_space(sl2) == Subspace.full(3)


def test_quasi_unit_unital(matrix2):
    qs = quasi_units(matrix2)
    assert qs.feasible
    unit = zoo.find_unit(matrix2)
    # the unit solves the defining identity, so it lies in the coset
    assert qs.same_set(AffineSolutionSet(unit, qs.kernel))


def test_quasi_unit_wn2(wn2):
    qs = quasi_units(wn2)
    assert qs.feasible
    minus_e1 = tuple(-x for x in unit_vec(8, 0))
    assert qs.particular == minus_e1
    assert qs.kernel == jacobi_space(wn2)
    # -e1 is a left quasi-unit but not a left unit
    e1 = wn2.gen(0)
    e2 = wn2.gen(1)
    assert (-e1) * e2 != e2


def test_quasi_unit_zero_algebra():
    qs = quasi_units(zoo.zero_algebra(2))
    assert qs.feasible
    assert qs.kernel == Subspace.full(2)


def test_quasi_unit_defining_identity(wn2):
    e = wn2.element(quasi_units(wn2).particular)
    for i in range(8):
        for j in range(8):
            x, y = wn2.gen(i), wn2.gen(j)
            assert e * (x * y) == (e * x) * y + x * (e * y) - x * y


@settings(deadline=None, max_examples=15)
@given(st.data())
def test_conservativity_invariant_under_basis_permutation(data):
    n = data.draw(st.integers(1, 3))
    entries = st.integers(-2, 2)
    table = data.draw(
        st.lists(
            st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
    perm = data.draw(st.permutations(range(n)))
    alg = Algebra.from_table(table)
    permuted = Algebra.from_table(
        [
            [[table[perm[i]][perm[j]][perm[k]] for k in range(n)] for j in range(n)]
            for i in range(n)
        ]
    )
    assert conservativity(alg).conservative == conservativity(permuted).conservative


@settings(deadline=None, max_examples=15)
@given(st.data())
def test_kernel_is_jacobi_space(data):
    n = data.draw(st.integers(1, 3))
    entries = st.integers(-2, 2)
    table = data.draw(
        st.lists(
            st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
    alg = Algebra.from_table(table)
    assert conservativity(alg).kernel == jacobi_space(alg)
    qs = quasi_units(alg)
    assert qs.kernel == jacobi_space(alg)


def test_terminal_calibration_w2sym(w2sym):
    winners = [c for c in TERMINAL_CONVENTIONS if is_terminal(w2sym, c)]
    assert winners == [DEFAULT_TERMINAL_CONVENTION]


def test_terminal_s2_h1(s2, h1):
    assert is_terminal(s2)
    assert is_terminal(h1)


def test_terminal_trivial_and_negative_cases(sl2, m7, wn2):
    assert is_terminal(zoo.zero_algebra(2))
    assert is_terminal(sl2, "sym")  # [P,x] = 0 for anticommutative products
    assert is_terminal(sl2)
    assert not is_terminal(m7)
    # computed verdict for the full bilinear-operations algebra
    assert not is_terminal(wn2)


def test_terminal_fixtures_are_conservative():
    for name in sorted(zoo.FIXTURES):
        if name == "wn3":
            continue
        alg = zoo.fixture(name)
        if is_terminal(alg):
            assert conservativity(alg).conservative, name


def test_unknown_convention_rejected(w2sym):
    with pytest.raises(ValueError):
        is_terminal(w2sym, "both")


def test_wn1():
    w1 = build_wn(1)
    assert w1.dim == 1
    u = w1.gen(0)
    assert u * u == -u
    assert conservativity(w1).conservative
