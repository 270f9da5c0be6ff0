"""Constructors for the concrete algebras and twists used throughout.

Every constructor validates its own defining identities through the
identity engine before returning (a transcription slip in a table fails
fast, at the source).
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Algebra
from .errors import GateError
from .linalg import F0, F1, Matrix, frac, solve_many, unit_vec
from .identities import builtin_identities, check_suite


def _gate(alg: Algebra, suite_name: str, bracket: Algebra = None):
    suite = builtin_identities()[suite_name]
    for verdict in check_suite(alg, suite, bracket):
        if not verdict.holds:
            raise GateError(verdict.identity.name, f"witness {verdict.witness.assignment}")


def zero_algebra(n: int) -> Algebra:
    return Algebra.zero(n)


def matrix_algebra(k: int) -> Algebra:
    """k x k matrix units E_ab with E_ab E_cd = delta_bc E_ad."""
    n = k * k
    names = [f"E{a + 1}{b + 1}" for a in range(k) for b in range(k)]
    products = {}
    for a in range(k):
        for b in range(k):
            for c in range(k):
                for d in range(k):
                    if b == c:
                        products[(a * k + b, c * k + d)] = {a * k + d: 1}
    alg = Algebra.from_products(n, products, names)
    _gate(alg, "associative")
    return alg


def matrix_unit(alg: Algebra, k: int):
    """Coordinates of the identity matrix in the matrix-units basis."""
    return tuple(
        F1 if i % k == i // k else F0 for i in range(k * k)
    )


def sl2() -> Algebra:
    """The 3-dimensional simple Lie algebra: [h,e]=2e, [h,f]=-2f, [e,f]=h."""
    alg = Algebra.from_products(
        3,
        {
            (0, 1): {1: 2},
            (1, 0): {1: -2},
            (0, 2): {2: -2},
            (2, 0): {2: 2},
            (1, 2): {0: 1},
            (2, 1): {0: -1},
        },
        names=("h", "e", "f"),
    )
    _gate(alg, "lie")
    return alg


def jordan_sym2() -> Algebra:
    """Symmetric 2x2 matrices under a o b = (ab + ba)/2."""
    half = Fraction(1, 2)
    alg = Algebra.from_products(
        3,
        {
            (0, 0): {0: 1},
            (1, 1): {1: 1},
            (2, 2): {0: 1, 1: 1},
            (0, 2): {2: half},
            (2, 0): {2: half},
            (1, 2): {2: half},
            (2, 1): {2: half},
        },
        names=("u", "v", "s"),
    )
    _gate(alg, "jordan")
    return alg


def nilpotent4_example() -> Algebra:
    """dim 3, e1 e1 = e2, e1 e2 = e2 e1 = e3, everything else zero."""
    alg = Algebra.from_products(3, {(0, 0): {1: 1}, (0, 1): {2: 1}, (1, 0): {2: 1}})
    from .algebra import is_nilpotent4

    if not is_nilpotent4(alg):  # pragma: no cover - structural fact
        raise GateError("nilpotent4")
    return alg


def left_leibniz2() -> Algebra:
    """Smallest non-Lie left Leibniz algebra: e1 e1 = e2."""
    alg = Algebra.from_products(2, {(0, 0): {1: 1}})
    _gate(alg, "left_leibniz")
    return alg


def malcev_m7() -> Algebra:
    """The simple 7-dimensional Malcev algebra.

    The printed products are completed by anticommutativity; all other
    products of basis elements are zero.  The constructor asserts
    anticommutativity and the Malcev identity as a transcription gate.
    """
    names = ("h", "x", "y", "z", "x'", "y'", "z'")
    idx = {n: i for i, n in enumerate(names)}
    given = {
        ("h", "x"): {"x": 2},
        ("h", "y"): {"y": 2},
        ("h", "z"): {"z": 2},
        ("h", "x'"): {"x'": -2},
        ("h", "y'"): {"y'": -2},
        ("h", "z'"): {"z'": -2},
        ("x", "x'"): {"h": 1},
        ("y", "y'"): {"h": 1},
        ("z", "z'"): {"h": 1},
        ("x", "y"): {"z'": 2},
        ("y", "z"): {"x'": 2},
        ("z", "x"): {"y'": 2},
        ("x'", "y'"): {"z": -2},
        ("y'", "z'"): {"x": -2},
        ("z'", "x'"): {"y": -2},
    }
    products = {}
    for (a, b), combo in given.items():
        out = {idx[c]: frac(v) for c, v in combo.items()}
        products[(idx[a], idx[b])] = out
        products[(idx[b], idx[a])] = {k: -v for k, v in out.items()}
    alg = Algebra.from_products(7, products, names)
    _gate(alg, "malcev")
    return alg


def simple_left_commutative(n: int) -> Algebra:
    """Basis e_1..e_n with e_i e_j = j e_j."""
    if n < 1:
        raise ValueError("n must be at least 1")
    products = {(i, j): {j: j + 1} for i in range(n) for j in range(n)}
    alg = Algebra.from_products(n, products)
    _gate(alg, "left_commutative")
    return alg


def quasi_mutation(alg: Algebra, lam) -> Algebra:
    """a o b = lambda ab + (1 - lambda) ba on an associative algebra."""
    _gate(alg, "associative")
    lam = frac(lam)
    mu = F1 - lam
    n = alg.dim
    table = tuple(
        tuple(
            tuple(lam * alg.c(i, j, k) + mu * alg.c(j, i, k) for k in range(n))
            for j in range(n)
        )
        for i in range(n)
    )
    return Algebra(alg.basis_names, table)


def poisson_kantor_product(comm: Algebra, bracket: Algebra) -> Algebra:
    """a * b = ab + {a,b} for a Poisson pair (validated before summing)."""
    if comm.dim != bracket.dim:
        raise GateError("dimension-match", "product and bracket tables differ in dim")
    _gate(comm, "associative")
    _gate(comm, "commutative")
    _gate(bracket, "lie")
    _gate(comm, "poisson_leibniz", bracket=bracket)
    n = comm.dim
    table = tuple(
        tuple(
            tuple(comm.c(i, j, k) + bracket.c(i, j, k) for k in range(n))
            for j in range(n)
        )
        for i in range(n)
    )
    return Algebra(comm.basis_names, table)


def truncated_poisson_pair():
    """A Poisson structure on Q[x,y]/(x^2, y^2): basis 1, x, y, xy.

    The symplectic bracket {x,y} = 1 does not survive the truncation (with
    x^2 = 0 the rule would force {x^2, y} = 2x != 0), so the bracket here is
    {x,y} = xy, extended by the Leibniz rule in the quotient: {x,xy} =
    x{x,y} = 0, {y,xy} = {y,x}y = 0, {1,.} = 0.
    """
    names = ("1", "x", "y", "xy")
    comm = Algebra.from_products(
        4,
        {
            (0, 0): {0: 1},
            (0, 1): {1: 1},
            (1, 0): {1: 1},
            (0, 2): {2: 1},
            (2, 0): {2: 1},
            (0, 3): {3: 1},
            (3, 0): {3: 1},
            (1, 2): {3: 1},
            (2, 1): {3: 1},
        },
        names,
    )
    bracket = Algebra.from_products(
        4,
        {
            (1, 2): {3: 1},
            (2, 1): {3: -1},
        },
        names,
    )
    return comm, bracket


def find_unit(alg: Algebra):
    """Coordinates of the two-sided unit, or None."""
    n = alg.dim
    rows = []
    target = []
    for j in range(n):
        for k in range(n):
            rows.append([alg.c(i, j, k) for i in range(n)])
            target.append(F1 if j == k else F0)
            rows.append([alg.c(j, i, k) for i in range(n)])
            target.append(F1 if j == k else F0)
    sol = solve_many(Matrix.from_rows(rows), [target])[0]
    return sol


def validate_involution(alg: Algebra, sigma: Matrix):
    """Check sigma^2 = id, sigma(xy) = sigma(y) sigma(x), sigma(unit) = unit."""
    n = alg.dim
    if sigma.rows != n or sigma.cols != n:
        raise GateError("involution-shape", f"expected {n}x{n}")
    if sigma @ sigma != Matrix.identity(n):
        raise GateError("involution-squares-to-identity")
    for i in range(n):
        si = sigma.col(i)
        for j in range(n):
            lhs = sigma.apply(alg.table[i][j])
            rhs = alg.mul_vec(sigma.col(j), si)
            if lhs != rhs:
                raise GateError(
                    "involution-antiautomorphism", f"fails on basis pair ({i}, {j})"
                )
    unit = find_unit(alg)
    if unit is None:
        raise GateError("unital", "algebra has no two-sided unit")
    if sigma.apply(unit) != unit:
        raise GateError("involution-fixes-unit")
    return unit


def structurable_twist(alg: Algebra, sigma: Matrix) -> Algebra:
    """x * y = xy + y(x - sigma(x)) on a unital algebra with involution."""
    validate_involution(alg, sigma)
    n = alg.dim
    table = []
    for i in range(n):
        ei = unit_vec(n, i)
        delta = tuple(a - b for a, b in zip(ei, sigma.col(i)))
        row = []
        for j in range(n):
            ej = unit_vec(n, j)
            prod = alg.table[i][j]
            extra = alg.mul_vec(ej, delta)
            row.append(tuple(a + b for a, b in zip(prod, extra)))
        table.append(tuple(row))
    return Algebra(alg.basis_names, tuple(table))


def transpose_involution_2x2() -> Matrix:
    """Matrix transpose as an involution of the 2x2 matrix-units basis."""
    rows = [
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
    ]
    return Matrix.from_rows(rows)


def _wn2():
    from .wn import build_wn

    return build_wn(2)


def _wn3():
    from .wn import build_wn

    return build_wn(3)


def _w2sym():
    from .wn import build_w2sym

    return build_w2sym()


def _s2():
    from .wn import build_s2

    return build_s2()


def _h1():
    from .wn import build_h1

    return build_h1()


def _poisson_star():
    comm, bracket = truncated_poisson_pair()
    return poisson_kantor_product(comm, bracket)


FIXTURES = {
    "zero2": lambda: zero_algebra(2),
    "zero3": lambda: zero_algebra(3),
    "matrix2": lambda: matrix_algebra(2),
    "sl2": sl2,
    "jordan_sym2": jordan_sym2,
    "nilpotent4": nilpotent4_example,
    "leibniz2": left_leibniz2,
    "m7": malcev_m7,
    "slc2": lambda: simple_left_commutative(2),
    "slc3": lambda: simple_left_commutative(3),
    "poisson_trunc": _poisson_star,
    "wn2": _wn2,
    "wn3": _wn3,
    "w2sym": _w2sym,
    "s2": _s2,
    "h1": _h1,
}


def fixture(name: str) -> Algebra:
    try:
        ctor = FIXTURES[name]
    except KeyError:
        raise KeyError(
            f"unknown fixture {name!r}; available: {', '.join(sorted(FIXTURES))}"
        ) from None
    return ctor()
