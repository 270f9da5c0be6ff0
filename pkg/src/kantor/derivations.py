"""Derivation algebras: solving the Leibniz equations and the induced Lie
structure.

A derivation is a linear map D with D(xy) = D(x)y + x D(y).  Writing the
unknown matrix entries as a vector, the Leibniz condition on all basis
pairs is one linear system (n^3 equations in n^2 unknowns); its kernel is
Der(A).  Matrices act on coordinate columns: D(e_j) is column j.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra
from .errors import DimensionMismatchError
from .linalg import F0, Matrix, Subspace, nullspace, solve_many, unit_vec


def is_derivation(alg: Algebra, d: Matrix) -> bool:
    """Leibniz condition checked on every basis pair."""
    n = alg.dim
    if d.rows != n or d.cols != n:
        raise DimensionMismatchError.of(n, (d.rows, d.cols))
    for i in range(n):
        di = d.col(i)
        for j in range(n):
            lhs = d.apply(alg.table[i][j])
            rhs = alg.mul_vec(di, unit_vec(n, j))
            rhs2 = alg.mul_vec(unit_vec(n, i), d.col(j))
            if lhs != tuple(a + b for a, b in zip(rhs, rhs2)):
                return False
    return True


def _derivation_system(alg: Algebra) -> Matrix:
    """Rows of the Leibniz equations over the unknowns D[r][s] (row-major).

    Unknown index r*n + s is the matrix entry D[r][s]; the equation for
    basis pair (i, j) and output coordinate k reads

        sum_s D[k][s] c_ijs  -  sum_r D[r][i] c_rjk  -  sum_r D[r][j] c_irk  = 0.
    """
    n = alg.dim
    rows = []
    for i in range(n):
        for j in range(n):
            t = alg.table[i][j]
            for k in range(n):
                row = [F0] * (n * n)
                for s in range(n):
                    if t[s]:
                        row[k * n + s] += t[s]
                for r in range(n):
                    c = alg.c(r, j, k)
                    if c:
                        row[r * n + i] -= c
                    c = alg.c(i, r, k)
                    if c:
                        row[r * n + j] -= c
                rows.append(row)
    return Matrix.from_rows(rows)


@dataclass(frozen=True)
class DerivationAlgebra:
    amb_dim: int
    basis: tuple       # matrices, canonical as RREF n^2-vectors
    subspace: Subspace
    lie: Algebra       # bracket [D, D'] = DD' - D'D in this basis

    @property
    def dim(self) -> int:
        return len(self.basis)


def derivation_algebra(alg: Algebra) -> DerivationAlgebra:
    n = alg.dim
    ker = nullspace(_derivation_system(alg))
    basis = tuple(
        Matrix(n, n, tuple(v)) for v in ker.basis
    )
    k = len(basis)
    brackets = [
        (basis[i] @ basis[j] - basis[j] @ basis[i]).flatten()
        for i in range(k)
        for j in range(k)
    ]
    if k:
        coords = solve_many(Matrix.from_cols(list(ker.basis)), brackets)
    else:
        coords = []
    table = [[None] * k for _ in range(k)]
    for idx, sol in enumerate(coords):
        i, j = divmod(idx, k)
        if sol is None:
            raise RuntimeError("derivation space not closed under commutator")
        table[i][j] = sol
    lie = Algebra.from_table(table, names=[f"D{i + 1}" for i in range(k)]) if k else Algebra.zero(0, [])
    return DerivationAlgebra(n, basis, ker, lie)


def derived_series(da: DerivationAlgebra):
    """Dimensions of g, [g,g], [[g,g],[g,g]], ... until they stabilize."""
    lie = da.lie
    dims = [lie.dim]
    current = Subspace.full(lie.dim) if lie.dim else Subspace.zero(0)
    while True:
        products = []
        for bi in current.basis:
            for bj in current.basis:
                products.append(lie.mul_vec(bi, bj))
        nxt = Subspace.from_spanning(lie.dim, products)
        if nxt.dim == current.dim:
            break
        dims.append(nxt.dim)
        current = nxt
    return dims


def is_solvable(da: DerivationAlgebra) -> bool:
    return derived_series(da)[-1] == 0


def inner_derivations(alg: Algebra) -> Subspace:
    """{L_a : a in the Jacobi space}, as a subspace of n^2-vectors."""
    from .conservative import jacobi_space

    js = jacobi_space(alg)
    vecs = [alg.left_mul_operator(v).flatten() for v in js.basis]
    return Subspace.from_spanning(alg.dim * alg.dim, vecs)
