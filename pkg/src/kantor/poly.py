"""Sparse multivariate polynomials over the rationals and a small Groebner
engine.

Monomial order is lexicographic with the declared variable order (first
variable largest); that is what makes zero-dimensional bases triangular so
rational points can be read off by univariate root search plus
back-substitution.  The engine is guarded by hard budgets on the number of
S-polynomial reductions and on total degree: exceeding either raises
BudgetExceededError, never silently degrades.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .errors import BudgetExceededError
from .linalg import F0, F1, frac

MAX_REDUCTIONS = 10_000
MAX_TOTAL_DEGREE = 12


class Poly:
    """Polynomial as {exponent tuple: nonzero coefficient} over named vars."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "Poly":
        return cls(variables)

    @classmethod
    def const(cls, c, variables) -> "Poly":
        c = frac(c)
        z = (0,) * len(tuple(variables))
        return cls(variables, {z: c} if c else {})

    @classmethod
    def var(cls, name, variables) -> "Poly":
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls(variables, {tuple(e): F1})

    # -- ring operations --------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.variables == self.variables:
                return self, other
            merged = tuple(dict.fromkeys(self.variables + other.variables))
            return self.extend(merged), other.extend(merged)
        return self, Poly.const(other, self.variables)

    def extend(self, variables) -> "Poly":
        """Reindex onto a superset of the variables (union semantics)."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        pos = [variables.index(v) for v in self.variables]
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for p, x in zip(pos, e):
                ne[p] = x
            terms[tuple(ne)] = c
        return Poly(variables, terms)

    def __add__(self, other):
        a, b = self._coerce(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, F0) + c
        return Poly(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._coerce(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = frac(other)
            return Poly(self.variables, {e: c * v for e, v in self.terms.items()})
        a, b = self._coerce(other)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, F0) + c1 * c2
        return Poly(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(1, self.variables)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return self.is_constant() and self.constant_value() == frac(other)
        a, b = self._coerce(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.variables, tuple(sorted(self.terms.items()))))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), F0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=0)

    def leading(self):
        """(exponent, coefficient) of the lex-largest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        _, c = self.leading()
        inv = F1 / c
        return Poly(self.variables, {e: inv * v for e, v in self.terms.items()})

    def support_variables(self):
        used = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used.add(self.variables[i])
        return used

    def evaluate(self, assignment) -> Fraction:
        """Value at {var: rational}; every supported variable must be bound."""
        vals = [frac(assignment.get(v, 0)) for v in self.variables]
        out = F0
        for e, c in self.terms.items():
            t = c
            for x, v in zip(e, vals):
                if x:
                    t *= v**x
            out += t
        return out

    def substitute(self, name, value: "Poly") -> "Poly":
        """Replace a variable by a polynomial (exact, no remainder)."""
        i = self.variables.index(name)
        out = Poly.zero(self.variables)
        powers = {0: Poly.const(1, self.variables)}
        for e, c in self.terms.items():
            k = e[i]
            if k not in powers:
                powers[k] = value**k if k else Poly.const(1, self.variables)
            rest = list(e)
            rest[i] = 0
            out = out + Poly(self.variables, {tuple(rest): c}) * powers[k]
        return out

    # -- printing -----------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for v, x in zip(self.variables, e):
                if x == 1:
                    factors.append(v)
                elif x:
                    factors.append(f"{v}^{x}")
            body = "*".join(factors)
            mag = abs(c)
            coeff = "" if (mag == 1 and body) else str(mag)
            piece = "*".join(p for p in (coeff, body) if p) or "1"
            parts.append(("- " if c < 0 else "+ ") + piece)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"Poly({self})"

    def machine_form(self):
        """Exponent-vector/coefficient pairs, lex-descending."""
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self.sorted_terms()]


def _common_variables(polys):
    merged = tuple(dict.fromkeys(v for p in polys for v in p.variables))
    return [p.extend(merged) for p in polys], merged


def _divides(ea, eb):
    return all(x <= y for x, y in zip(ea, eb))


def normal_form(p: Poly, basis) -> Poly:
    """Multivariate division remainder of p by the basis (lex order)."""
    if not basis:
        return p
    aligned, merged = _common_variables([p] + list(basis))
    p = aligned[0]
    basis = [b for b in aligned[1:] if not b.is_zero()]
    lead = [(b, *b.leading()) for b in basis]
    remainder = Poly.zero(merged)
    work = p
    while not work.is_zero():
        e, c = work.leading()
        for b, eb, cb in lead:
            if _divides(eb, e):
                shift = tuple(x - y for x, y in zip(e, eb))
                factor = Poly(merged, {shift: c / cb})
                work = work - factor * b
                break
        else:
            remainder = remainder + Poly(merged, {e: c})
            work = work - Poly(merged, {e: c})
    return remainder


def s_polynomial(f: Poly, g: Poly) -> Poly:
    (f, g), _ = _common_variables([f, g])
    ef, cf = f.leading()
    eg, cg = g.leading()
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = Poly(f.variables, {tuple(a - b for a, b in zip(lcm, ef)): F1 / cf})
    mg = Poly(g.variables, {tuple(a - b for a, b in zip(lcm, eg)): F1 / cg})
    return mf * f - mg * g


@dataclass(frozen=True)
class GroebnerBasis:
    variables: tuple
    generators: tuple  # reduced, monic, sorted by leading monomial descending
    reductions_used: int = 0

    def __iter__(self):
        return iter(self.generators)


@dataclass
class _Budget:
    max_reductions: int = MAX_REDUCTIONS
    max_degree: int = MAX_TOTAL_DEGREE
    reductions: int = 0

    def spend(self):
        self.reductions += 1
        if self.reductions > self.max_reductions:
            raise BudgetExceededError(
                f"exceeded {self.max_reductions} S-polynomial reductions",
                reductions=self.reductions,
            )

    def check_degree(self, p: Poly):
        d = p.total_degree()
        if d > self.max_degree:
            raise BudgetExceededError(
                f"intermediate degree {d} exceeds cap {self.max_degree}",
                degree=d,
            )


def _linear_prepass(gens, budget):
    """Repeatedly eliminate variables occurring linearly with a constant
    coefficient in some generator.

    Each eliminated variable contributes its monic binding polynomial back to
    the generating set, so the ideal is unchanged; the proof-style
    substitution chains collapse most desk-scale systems before Buchberger
    proper starts.
    """
    gens = [g for g in gens if not g.is_zero()]
    bindings = []
    changed = True
    while changed:
        changed = False
        for g in gens:
            if g.is_zero():
                continue
            for vi, v in enumerate(g.variables):
                lin = [e for e in g.terms if e[vi]]
                if not lin:
                    continue
                if any(e[vi] > 1 for e in lin) or len(lin) != 1:
                    continue
                e = lin[0]
                if any(x for i, x in enumerate(e) if i != vi):
                    continue
                coeff = g.terms[e]
                # g = coeff*v + rest, rest free of v
                rest = Poly(g.variables, {k: c for k, c in g.terms.items() if k != e})
                value = rest * (F1 / -coeff)
                binding = Poly.var(v, g.variables) - value
                new = []
                for other in gens:
                    if other is g:
                        continue
                    s = other.substitute(v, value)
                    budget.spend()
                    budget.check_degree(s)
                    if not s.is_zero():
                        new.append(s)
                bindings = [b.substitute(v, value) for b in bindings]
                bindings.append(binding)
                gens = new
                changed = True
                break
            if changed:
                break
    return bindings + gens


def _interreduce(gens):
    gens = [g.monic() for g in gens if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        for i in range(len(gens)):
            rest = gens[:i] + gens[i + 1 :]
            r = normal_form(gens[i], rest)
            if r.is_zero():
                gens = rest
                changed = True
                break
            r = r.monic()
            if r.terms != gens[i].terms:
                gens[i] = r
                changed = True
                break
    return sorted(gens, key=lambda g: g.leading()[0], reverse=True)


def buchberger(generators, variables=(), max_reductions=MAX_REDUCTIONS, max_degree=MAX_TOTAL_DEGREE) -> GroebnerBasis:
    """Reduced lexicographic Groebner basis of the given ideal.

    Runs the linear-substitution pre-pass, then Buchberger's algorithm with
    the coprime-leading-terms criterion, then inter-reduction.  Raises
    BudgetExceededError when a guardrail trips.  `variables` fixes the
    (lex) variable order explicitly; otherwise the union of the generators'
    variables is used in first-seen order.
    """
    declared = tuple(variables)
    polys = [p for p in generators if not p.is_zero()]
    if not polys:
        return GroebnerBasis(declared, ())
    if declared:
        polys = [p.extend(declared) for p in polys]
        merged = declared
    else:
        polys, merged = _common_variables(polys)
    budget = _Budget(max_reductions, max_degree)
    for p in polys:
        budget.check_degree(p)
    basis = _linear_prepass(polys, budget)
    basis = [g.monic() for g in basis if not g.is_zero()]
    # Constant in the ideal: the whole ring; basis is just {1}.
    if any(g.is_constant() for g in basis):
        return GroebnerBasis(merged, (Poly.const(1, merged),), budget.reductions)
    pairs = list(combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.pop(0)
        f, g = basis[i], basis[j]
        ef, _ = f.leading()
        eg, _ = g.leading()
        if all(a == 0 or b == 0 for a, b in zip(ef, eg)):
            continue  # coprime leading terms: S-poly reduces to zero
        budget.spend()
        r = normal_form(s_polynomial(f, g), basis)
        if r.is_zero():
            continue
        budget.check_degree(r)
        if r.is_constant():
            return GroebnerBasis(merged, (Poly.const(1, merged),), budget.reductions)
        basis.append(r.monic())
        k = len(basis) - 1
        pairs.extend((t, k) for t in range(k))
    reduced = _interreduce(basis)
    return GroebnerBasis(merged, tuple(g.extend(merged) for g in reduced), budget.reductions)


# -- rational solutions ------------------------------------------------------


@dataclass(frozen=True)
class UnresolvedComponent:
    """A solution component not resolved into rational points.

    kind is "positive-dimensional" (free variables remain) or
    "irrational-factor" (a univariate factor with no rational root);
    `partial` fixes the already-extracted coordinates and `detail` shows the
    offending data verbatim.
    """

    kind: str
    partial: tuple  # ((var, value), ...)
    detail: str


@dataclass(frozen=True)
class SolutionSet:
    variables: tuple
    points: tuple      # tuples of Fractions, aligned with `variables`
    unresolved: tuple  # UnresolvedComponent entries

    @property
    def is_empty(self) -> bool:
        return not self.points and not self.unresolved


def _integer_divisors(n):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def univariate_rational_roots(coeffs):
    """All rational roots (with multiplicity collapsed) of sum c_i x^i.

    Works on the primitive integer multiple of the polynomial, testing
    candidates p/q with p | constant term and q | leading term.  Returns
    (roots, leftover_degree): leftover_degree > 0 means a nontrivial factor
    without rational roots remains.
    """
    coeffs = [frac(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial")
    if len(coeffs) == 1:
        return [], 0
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]
    roots = []
    while len(ints) > 1 and ints[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        ints = ints[1:]
    if len(ints) > 1:
        a0, an = ints[0], ints[-1]
        candidates = set()
        for p in _integer_divisors(a0):
            for q in _integer_divisors(an):
                g = gcd(p, q)
                candidates.add(Fraction(p // g, q // g))
                candidates.add(Fraction(-(p // g), q // g))
        for r in sorted(candidates):
            while True:
                # synthetic division; keep dividing to strip multiplicity
                acc = F0
                quotient = []
                for c in reversed(ints):
                    acc = acc * r + c
                    quotient.append(acc)
                if acc != 0:
                    break
                ints = [int(x) for x in reversed(quotient[:-1])]
                if r not in roots:
                    roots.append(r)
                if len(ints) == 1:
                    break
            if len(ints) == 1:
                break
    leftover = len(ints) - 1
    return sorted(roots), leftover


def _solve_recursive(gens, variables, fixed, budget_kw):
    gens = [g for g in gens if not g.is_zero()]
    if any(g.is_constant() for g in gens):
        return [], []
    remaining = [v for v in variables if v not in dict(fixed)]
    if not gens:
        if remaining:
            return [], [
                UnresolvedComponent(
                    "positive-dimensional",
                    tuple(fixed),
                    f"free variables: {', '.join(remaining)}",
                )
            ]
        return [dict(fixed)], []
    if not remaining:
        return [dict(fixed)], []
    gb = buchberger(gens, **budget_kw)
    gens = [g for g in gb if not g.is_zero()]
    if any(g.is_constant() for g in gens):
        return [], []
    # eliminate from the lex-smallest variable upward
    target = None
    for v in reversed(remaining):
        univ = [g for g in gens if g.support_variables() <= {v}]
        if univ:
            target = (v, univ)
            break
    if target is None:
        return [], [
            UnresolvedComponent(
                "positive-dimensional",
                tuple(fixed),
                "no univariate eliminant; generators: "
                + "; ".join(str(g) for g in gens),
            )
        ]
    v, univ = target
    vi = gb.variables.index(v) if v in gb.variables else None
    # reduced GB has a single univariate generator per variable, but stay
    # defensive and intersect root sets if several appear
    root_sets = []
    leftover_descriptor = None
    for g in univ:
        i = g.variables.index(v)
        deg = g.degree_in(v)
        coeffs = [F0] * (deg + 1)
        for e, c in g.terms.items():
            coeffs[e[i]] += c
        roots, leftover = univariate_rational_roots(coeffs)
        root_sets.append(set(roots))
        if leftover:
            leftover_descriptor = UnresolvedComponent(
                "irrational-factor",
                tuple(fixed),
                f"{g} has a degree-{leftover} factor with no rational root",
            )
    roots = sorted(set.intersection(*root_sets))
    points, unresolved = [], []
    if leftover_descriptor is not None:
        unresolved.append(leftover_descriptor)
    for r in roots:
        sub = [g.substitute(v, Poly.const(r, g.variables)) for g in gens]
        p, u = _solve_recursive(sub, variables, fixed + ((v, r),), budget_kw)
        points.extend(p)
        unresolved.extend(u)
    return points, unresolved


def solve_rational(gb: GroebnerBasis, max_reductions=MAX_REDUCTIONS, max_degree=MAX_TOTAL_DEGREE) -> SolutionSet:
    """All rational points of a (lex) Groebner basis.

    Zero-dimensional triangular systems resolve completely; positive-
    dimensional or irrational components come back as unresolved
    descriptors, never guessed.
    """
    budget_kw = {"max_reductions": max_reductions, "max_degree": max_degree}
    points, unresolved = _solve_recursive(list(gb.generators), gb.variables, (), budget_kw)
    pts = tuple(
        tuple(p.get(v, F0) for v in gb.variables)
        for p in points
    )
    return SolutionSet(gb.variables, tuple(sorted(set(pts))), tuple(unresolved))
