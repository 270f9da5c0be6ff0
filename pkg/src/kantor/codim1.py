"""Complete enumeration of codimension-1 subalgebras.

Every hyperplane of an n-space has a unique reduced-echelon basis whose
single non-pivot column is some p (1-based here): rows e_j + a_j e_p for
j < p and e_j for j > p.  The pivot cases are disjoint and jointly cover
all hyperplanes, so closure of the hyperplane under the product becomes,
per pivot, a polynomial system in the a_j, solved exactly by the Groebner
engine; rational solutions are materialized as subspaces and re-verified,
anything else is reported unresolved, never guessed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, verify_subalgebra
from .errors import BudgetExceededError
from .linalg import F0, F1, Subspace
from .poly import (
    MAX_REDUCTIONS,
    MAX_TOTAL_DEGREE,
    Poly,
    buchberger,
    solve_rational,
)


def _pivot_variables(p: int):
    return tuple(f"a{j}" for j in range(1, p))


def hyperplane_basis(n: int, p: int, alphas):
    """Echelon basis rows of the hyperplane for pivot p (1-based)."""
    alphas = list(alphas)
    rows = []
    for j in range(1, n + 1):
        if j == p:
            continue
        row = [F0] * n
        row[j - 1] = F1
        if j < p:
            row[p - 1] = alphas[j - 1]
        rows.append(row)
    return rows


def pivot_system(alg: Algebra, p: int):
    """Closure generators for the pivot-p hyperplane family.

    Unknowns a_j (j < p); membership of a product v in the hyperplane reads
    v_p - sum_{m != p} v_m a_m with a_m := 0 for m > p, so each basis pair
    contributes one generator of degree <= 3.
    """
    n = alg.dim
    if not 1 <= p <= n:
        raise ValueError(f"pivot must be in 1..{n}")
    variables = _pivot_variables(p)
    alphas = [Poly.var(v, variables) for v in variables]
    zero = Poly.zero(variables)
    one = Poly.const(1, variables)

    # symbolic hyperplane basis: rows indexed by j != p
    basis = []
    for j in range(1, n + 1):
        if j == p:
            continue
        row = [zero] * n
        row[j - 1] = one
        if j < p:
            row[p - 1] = alphas[j - 1]
        basis.append(row)

    def mul(x, y):
        out = [zero] * n
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                c = xi * yj
                for k, ck in enumerate(alg.table[i][j]):
                    if ck:
                        out[k] = out[k] + c * ck
        return out

    generators = []
    for h in basis:
        for hp in basis:
            v = mul(h, hp)
            g = v[p - 1]
            for m in range(1, p):
                g = g - v[m - 1] * alphas[m - 1]
            if not g.is_zero():
                generators.append(g)
    return variables, tuple(generators)


@dataclass(frozen=True)
class PivotCase:
    pivot: int
    variables: tuple
    ideal: tuple               # closure generators
    groebner: object           # GroebnerBasis, or None on budget failure
    solutions: object          # SolutionSet, or None on budget failure
    subalgebras: tuple         # verified Subspaces, solution order
    error: object = None       # BudgetExceededError when the pivot failed


@dataclass(frozen=True)
class Codim1Report:
    algebra_dim: int
    cases: tuple
    subalgebras: tuple  # flat, pivots ascending then lex solution order

    @property
    def budget_errors(self):
        return tuple(c.error for c in self.cases if c.error is not None)


def codim1_subalgebras(
    alg: Algebra,
    max_reductions=MAX_REDUCTIONS,
    max_degree=MAX_TOTAL_DEGREE,
) -> Codim1Report:
    """Search every pivot case; verify every rational solution.

    A budget failure in one pivot is recorded on that case and the sweep
    continues; every returned subspace passes verify_subalgebra.
    """
    n = alg.dim
    cases = []
    flat = []
    for p in range(1, n + 1):
        variables, gens = pivot_system(alg, p)
        try:
            gb = buchberger(gens, variables=variables, max_reductions=max_reductions, max_degree=max_degree)
            sols = solve_rational(gb, max_reductions=max_reductions, max_degree=max_degree)
        except BudgetExceededError as exc:
            cases.append(PivotCase(p, variables, gens, None, None, (), exc))
            continue
        subs = []
        for point in sols.points:
            sub = Subspace.from_spanning(n, hyperplane_basis(n, p, point))
            if not verify_subalgebra(alg, sub):  # pragma: no cover - solver guarantee
                raise RuntimeError(f"pivot {p}: solution fails closure re-verification")
            subs.append(sub)
        case = PivotCase(p, variables, gens, gb, sols, tuple(subs))
        cases.append(case)
        flat.extend(subs)
    return Codim1Report(n, tuple(cases), tuple(flat))


def grid_hyperplane_oracle(alg: Algebra, bound: int = 3):
    """All closed hyperplanes whose normal has coordinates in [-bound, bound].

    Brute-force necessary-condition oracle for small examples: enumerates
    primitive integer normals up to sign, takes each kernel hyperplane, and
    keeps the ones closed under the product.  Exhaustive over the grid, so
    any reported subalgebra with a small normal must appear here too.
    """
    from itertools import product as iproduct
    from math import gcd

    n = alg.dim
    seen = set()
    found = []
    for coords in iproduct(range(-bound, bound + 1), repeat=n):
        if not any(coords):
            continue
        g = 0
        for c in coords:
            g = gcd(g, c)
        prim = tuple(c // g for c in coords)
        for c in prim:
            if c:
                if c < 0:
                    prim = tuple(-x for x in prim)
                break
        if prim in seen:
            continue
        seen.add(prim)
        from .linalg import Matrix, nullspace

        sub = nullspace(Matrix.from_rows([prim]))
        if verify_subalgebra(alg, sub):
            found.append(sub)
    return found


def normal_vector(sub: Subspace):
    """Primitive integer normal of a hyperplane subspace."""
    if sub.dim != sub.ambient_dim - 1:
        raise ValueError("not a hyperplane")
    comp = sub.orthogonal_complement()
    (v,) = comp.basis
    from math import gcd, lcm

    den = 1
    for c in v:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in v]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    for c in ints:
        if c:
            if c < 0:
                ints = [-x for x in ints]
            break
    return tuple(ints)
