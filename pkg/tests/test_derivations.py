from fractions import Fraction

from kantor.algebra import Algebra
from kantor.claims import (
    audit_derivations,
    wn2_derivation_display,
    wn2_derivation_relations,
)
from kantor.derivations import (
    DerivationAlgebra,
    derivation_algebra,
    derived_series,
    inner_derivations,
    is_derivation,
    is_solvable,
)
from kantor.linalg import Matrix, Subspace, unit_vec
from kantor import zoo


def test_zero_map_is_derivation(wn2):
    assert is_derivation(wn2, Matrix.zero(8, 8))


def test_identity_not_derivation(wn2):
    assert not is_derivation(wn2, Matrix.identity(8))


def test_relations_family_are_derivations(wn2):
    assert is_derivation(wn2, wn2_derivation_relations(1, 0))
    assert is_derivation(wn2, wn2_derivation_relations(0, 1))
    assert is_derivation(wn2, wn2_derivation_relations(3, Fraction(-1, 2)))


def test_display_family_z_direction_is_derivation(wn2):
    # with w = 0 the display matrix coincides with the relations family
    assert is_derivation(wn2, wn2_derivation_display(1, 0))


def test_display_family_w_direction_is_not(wn2):
    # the stray w in row 4, column 2 of the display breaks the Leibniz rule
    assert not is_derivation(wn2, wn2_derivation_display(0, 1))


def test_der_wn2(wn2):
    der = derivation_algebra(wn2)
    assert der.dim == 2
    assert derived_series(der) == [2, 1, 0]
    assert is_solvable(der)
    relations_span = Subspace.from_spanning(
        64,
        [
            wn2_derivation_relations(1, 0).flatten(),
            wn2_derivation_relations(0, 1).flatten(),
        ],
    )
    assert der.subspace == relations_span
    # the display family differs (the audit reports it as an erratum)
    errata = audit_derivations("wn2", der)
    assert any("stray w" in e.computed for e in errata)


def test_der_w2sym(w2sym):
    der = derivation_algebra(w2sym)
    assert der.dim == 2
    assert derived_series(der) == [2, 1, 0]


def test_der_s2_computed_truth(s2):
    # The recorded claim says zero; the Leibniz system says otherwise, and
    # every basis solution re-verifies.  The audit carries the discrepancy.
    der = derivation_algebra(s2)
    assert der.dim == 2
    for d in der.basis:
        assert is_derivation(s2, d)
    errata = audit_derivations("s2", der)
    assert any("dim Der" in e.subject for e in errata)
    # the inner derivation by z2 is one of them
    Lz2 = s2.left_mul_operator(unit_vec(4, 1))
    assert is_derivation(s2, Lz2)
    assert der.subspace.contains(Lz2.flatten())


def test_der_zero_algebra_is_full_matrix_space():
    der = derivation_algebra(zoo.zero_algebra(2))
    assert der.dim == 4
    # the series of gl_2 stabilizes at sl_2: not solvable
    assert derived_series(der) == [4, 3]
    assert not is_solvable(der)


def test_derivation_basis_passes_leibniz(wn2, w2sym, s2, m7):
    for alg in (wn2, w2sym, s2, m7):
        der = derivation_algebra(alg)
        for d in der.basis:
            assert is_derivation(alg, d)


def test_lie_closure(wn2):
    der = derivation_algebra(wn2)
    k = der.dim
    for i in range(k):
        for j in range(k):
            br = der.basis[i] @ der.basis[j] - der.basis[j] @ der.basis[i]
            assert der.subspace.contains(br.flatten())


def test_inner_derivations_wn2(wn2):
    inner = inner_derivations(wn2)
    der = derivation_algebra(wn2)
    assert all(der.subspace.contains(v) for v in inner.basis)
    L2 = wn2.left_mul_operator(unit_vec(8, 1))
    L6 = wn2.left_mul_operator(unit_vec(8, 5))
    assert inner.contains(L2.flatten())
    assert inner.contains(L6.flatten())
    # the recorded relation, with operators composing as right actions
    assert L2 @ L6 - L6 @ L2 == L2


def test_inner_derivations_w2sym(w2sym):
    M2 = w2sym.left_mul_operator(unit_vec(6, 1))
    M5 = w2sym.left_mul_operator(unit_vec(6, 4))
    assert M2 @ M5 - M5 @ M2 == M2
    inner = inner_derivations(w2sym)
    assert inner.dim == 2


def test_inner_derivations_zero_algebra():
    assert inner_derivations(zoo.zero_algebra(2)).dim == 0


def test_derived_series_abelian():
    abelian = DerivationAlgebra(
        2,
        (Matrix.identity(2), Matrix.from_rows([[0, 1], [0, 0]])),
        Subspace.from_spanning(4, [(1, 0, 0, 1), (0, 1, 0, 0)]),
        Algebra.zero(2, ["D1", "D2"]),
    )
    assert derived_series(abelian) == [2, 0]
    assert is_solvable(abelian)
