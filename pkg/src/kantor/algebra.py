"""Finite-dimensional algebras presented by structure constants.

An `Algebra` is a based rational vector space with a bilinear product given
by the tensor c[i][j][k]: e_i e_j = sum_k c[i][j][k] e_k.  Nothing here
assumes associativity, commutativity, or anything else about the product,
so the same object doubles as an arbitrary bilinear map V x V -> V.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatchError, NotClosedError
from .linalg import (
    F0,
    Matrix,
    nullspace,
    Subspace,
    add_vec,
    frac,
    is_zero_vec,
    scale_vec,
    solve_many,
    sub_vec,
    unit_vec,
    vec,
    zero_vec,
)


def default_names(n: int):
    return tuple(f"e{i + 1}" for i in range(n))


@dataclass(frozen=True)
class Algebra:
    basis_names: tuple
    table: tuple  # table[i][j] is the coordinate vector of e_i e_j

    def __post_init__(self):
        n = len(self.basis_names)
        if len(set(self.basis_names)) != n:
            raise ValueError("basis labels must be unique")
        if len(self.table) != n or any(
            len(row) != n or any(len(p) != n for p in row) for row in self.table
        ):
            raise ValueError("structure tensor must have shape n x n x n")

    @classmethod
    def from_table(cls, table, names=None) -> "Algebra":
        table = tuple(tuple(vec(p) for p in row) for row in table)
        n = len(table)
        return cls(tuple(names) if names else default_names(n), table)

    @classmethod
    def from_products(cls, n, products, names=None) -> "Algebra":
        """Build from a sparse {(i, j): {k: coeff}} description (0-based)."""
        table = [[[F0] * n for _ in range(n)] for _ in range(n)]
        for (i, j), out in products.items():
            for k, c in out.items():
                table[i][j][k] = frac(c)
        return cls.from_table(table, names)

    @classmethod
    def zero(cls, n, names=None) -> "Algebra":
        return cls.from_products(n, {}, names)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def c(self, i, j, k) -> Fraction:
        return self.table[i][j][k]

    def index_of(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise KeyError(f"no basis element named {name!r}") from None

    def gen(self, i) -> "Element":
        if isinstance(i, str):
            i = self.index_of(i)
        return Element(self, unit_vec(self.dim, i))

    def element(self, coords) -> "Element":
        coords = vec(coords)
        if len(coords) != self.dim:
            raise DimensionMismatchError.of(self.dim, len(coords))
        return Element(self, coords)

    def zero_element(self) -> "Element":
        return Element(self, zero_vec(self.dim))

    def basis_elements(self):
        return [self.gen(i) for i in range(self.dim)]

    def mul_vec(self, x, y):
        """Product of two coordinate vectors (the hot path; zero-skipping)."""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatchError.of(n, (len(x), len(y)))
        out = [F0] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            ti = self.table[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, ck in enumerate(ti[j]):
                    if ck:
                        out[k] += c * ck
        return tuple(out)

    def multiply(self, x: "Element", y: "Element") -> "Element":
        if x.algebra is not self and x.algebra != self:
            raise DimensionMismatchError("element does not belong to this algebra")
        if y.algebra is not self and y.algebra != self:
            raise DimensionMismatchError("element does not belong to this algebra")
        return Element(self, self.mul_vec(x.coords, y.coords))

    def left_mul_operator(self, a) -> Matrix:
        """Matrix of x -> a x; column j holds the coordinates of a e_j."""
        av = a.coords if isinstance(a, Element) else vec(a)
        cols = [self.mul_vec(av, unit_vec(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_cols(cols)

    def right_mul_operator(self, a) -> Matrix:
        av = a.coords if isinstance(a, Element) else vec(a)
        cols = [self.mul_vec(unit_vec(self.dim, j), av) for j in range(self.dim)]
        return Matrix.from_cols(cols)

    def opposite(self) -> "Algebra":
        n = self.dim
        return Algebra(
            self.basis_names,
            tuple(tuple(self.table[j][i] for j in range(n)) for i in range(n)),
        )

    def rename(self, names) -> "Algebra":
        return Algebra(tuple(names), self.table)


@dataclass(frozen=True)
class Element:
    algebra: Algebra
    coords: tuple

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, add_vec(self.coords, other.coords))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, sub_vec(self.coords, other.coords))

    def __neg__(self) -> "Element":
        return Element(self.algebra, tuple(-c for c in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        return Element(self.algebra, scale_vec(frac(other), self.coords))

    def __rmul__(self, other):
        return Element(self.algebra, scale_vec(frac(other), self.coords))

    def is_zero(self) -> bool:
        return is_zero_vec(self.coords)

    def __str__(self):
        parts = []
        for name, c in zip(self.algebra.basis_names, self.coords):
            if not c:
                continue
            if c == 1:
                parts.append(f"+ {name}")
            elif c == -1:
                parts.append(f"- {name}")
            elif c > 0:
                parts.append(f"+ {c}*{name}")
            else:
                parts.append(f"- {-c}*{name}")
        if not parts:
            return "0"
        first = parts[0]
        first = first[2:] if first.startswith("+ ") else "-" + first[2:]
        return " ".join([first] + parts[1:])

    def _check(self, other: "Element"):
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise DimensionMismatchError("elements of different algebras")


def multiply(alg: Algebra, x: Element, y: Element) -> Element:
    return alg.multiply(x, y)


def annihilator(alg: Algebra) -> Subspace:
    """{x : x v = v x = 0 for every v}, via one linear solve over the basis."""
    n = alg.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([alg.c(i, j, k) for i in range(n)])
            rows.append([alg.c(j, i, k) for i in range(n)])
    return nullspace(Matrix.from_rows(rows))


def closure_witness(alg: Algebra, s: Subspace):
    """First basis product of s that leaves s, or None when s is closed."""
    if s.ambient_dim != alg.dim:
        raise DimensionMismatchError.of(alg.dim, s.ambient_dim)
    for i, bi in enumerate(s.basis):
        for j, bj in enumerate(s.basis):
            p = alg.mul_vec(bi, bj)
            if not s.contains(p):
                return (i, j, p)
    return None


def verify_subalgebra(alg: Algebra, s: Subspace) -> bool:
    return closure_witness(alg, s) is None


def generated_subalgebra(alg: Algebra, generators) -> Subspace:
    """Least subspace containing the generators and closed under the product.

    Iterates span-then-add-products; terminates because the dimension grows
    strictly until the fixed point.
    """
    gens = [g.coords if isinstance(g, Element) else vec(g) for g in generators]
    current = Subspace.from_spanning(alg.dim, gens)
    while True:
        extra = []
        for bi in current.basis:
            for bj in current.basis:
                p = alg.mul_vec(bi, bj)
                if not current.contains(p):
                    extra.append(p)
        if not extra:
            return current
        current = Subspace.from_spanning(alg.dim, list(current.basis) + extra)


def induced_algebra(alg: Algebra, s: Subspace, basis=None, names=None) -> Algebra:
    """The restricted product on a closed subspace, in a chosen basis.

    The default basis is the canonical RREF basis of s; passing `basis`
    (rows spanning s) reproduces hand-picked presentations.
    """
    if basis is None:
        rows = list(s.basis)
    else:
        rows = [b.coords if isinstance(b, Element) else vec(b) for b in basis]
        if Subspace.from_spanning(alg.dim, rows) != s or len(rows) != s.dim:
            raise ValueError("supplied basis does not span the subspace")
    k = len(rows)
    products = []
    for i in range(k):
        for j in range(k):
            products.append(alg.mul_vec(rows[i], rows[j]))
    coords = solve_many(Matrix.from_cols(rows), products)
    table = [[None] * k for _ in range(k)]
    for idx, sol in enumerate(coords):
        i, j = divmod(idx, k)
        if sol is None:
            raise NotClosedError(i, j, products[idx])
        table[i][j] = sol
    return Algebra.from_table(table, names)


def is_nilpotent4(alg: Algebra) -> bool:
    """True iff every 4-fold basis product vanishes, in all 5 bracketings."""
    n = alg.dim
    basis = [unit_vec(n, i) for i in range(n)]
    m = alg.mul_vec
    # Skip the two inner bracketings when the pair product is already zero.
    pair = [[m(basis[i], basis[j]) for j in range(n)] for i in range(n)]
    for a in range(n):
        for b in range(n):
            ab = pair[a][b]
            for c in range(n):
                for d in range(n):
                    if any(m(m(ab, basis[c]), basis[d])):
                        return False
                    if any(m(ab, pair[c][d])):
                        return False
                    if any(m(m(basis[a], pair[b][c]), basis[d])):
                        return False
                    if any(m(basis[a], m(pair[b][c], basis[d]))):
                        return False
                    if any(m(basis[a], m(basis[b], pair[c][d]))):
                        return False
    return True
