"""The two-parameter family of ideals at the heart of the package.

For n >= 3 variables and t >= 1, the ideal is generated by the n
monomials that carry exponent t on every variable but one.  Its integral
closure has the closed-form generating set delta_set: the vectors with
entries in [1..t] of total degree t(n-1), together with the n defining
generators.  reduce_to_delta realizes the constructive containment proof
as an algorithm.
"""

import itertools
from dataclasses import dataclass

from .closure import InsideCertificate, np_membership
from .core import MonomialIdeal, divides
from .errors import DimensionError, DomainError


@dataclass(frozen=True)
class FamilyParams:
    n: int
    t: int

    def __post_init__(self):
        if self.n < 3 or self.t < 1:
            raise ValueError("family requires n >= 3 and t >= 1")


def _vars(n):
    return tuple("x%d" % (i + 1) for i in range(n))


def vertex(p, i):
    """Generator i: exponent t everywhere except 0 in coordinate i."""
    return tuple(0 if j == i else p.t for j in range(p.n))


def family_ideal(p):
    return MonomialIdeal.make(_vars(p.n), [vertex(p, i) for i in range(p.n)])


def delta_set(p):
    """Closed-form generators of the family's integral closure: the
    interior part {a in [1..t]^n : sum a = t(n-1)} plus the n vertices."""
    n, t = p.n, p.t
    out = {vertex(p, i) for i in range(n)}
    total = t * (n - 1)
    for a in itertools.product(range(1, t + 1), repeat=n):
        if sum(a) == total:
            out.add(a)
    return out


def thm1_check(a, p):
    """Every non-empty subset S of coordinates satisfies
    sum_{i in S} a_i >= t(|S| - 1); necessary for Newton-polyhedron
    membership."""
    a = tuple(a)
    if len(a) != p.n:
        raise DimensionError(
            "point of length %d, expected %d" % (len(a), p.n))
    for s in range(1, p.n + 1):
        bound = p.t * (s - 1)
        for subset in itertools.combinations(range(p.n), s):
            if sum(a[i] for i in subset) < bound:
                return False
    return True


def reduce_to_delta(b, p):
    """A delta_set element dividing the lattice point b of the Newton
    polyhedron.

    If some vertex generator divides b, the lowest one is returned.
    Otherwise let S be the coordinates below t (at least two of them);
    keep b there, give the next coordinate t*|S| - sum_S b_i, and fill
    the rest with t.
    """
    b = tuple(b)
    if len(b) != p.n:
        raise DimensionError(
            "point of length %d, expected %d" % (len(b), p.n))
    if not isinstance(np_membership(family_ideal(p), b), InsideCertificate):
        raise DomainError("point %r is outside the Newton polyhedron" % (b,))
    for i in range(p.n):
        if divides(vertex(p, i), b):
            return vertex(p, i)
    low = [i for i in range(p.n) if b[i] < p.t]
    if len(low) == p.n:
        # every coordinate is already in [1..t-1]; trim the excess total
        # degree greedily, from the last coordinate down, staying >= 1
        d = list(b)
        excess = sum(d) - p.t * (p.n - 1)
        for i in reversed(range(p.n)):
            drop = min(excess, d[i] - 1)
            d[i] -= drop
            excess -= drop
        return tuple(d)
    fill = p.t * len(low) - sum(b[i] for i in low)
    d = [p.t] * p.n
    for i in low:
        d[i] = b[i]
    d[next(i for i in range(p.n) if i not in low)] = fill
    return tuple(d)


@dataclass(frozen=True)
class ResolutionPair:
    """The generator row and first-syzygy matrix of the family's minimal
    free resolution; entries of the syzygy matrix are signed monomials
    (sign, exponent vector), sign 0 meaning a zero entry."""

    gen_row: tuple
    syzygy_matrix: tuple  # n rows, n-1 columns

    def column_products(self):
        """Per column, the signed sum of gen_row[i] * entry(i, col) as a
        dict exponent -> coefficient; all-zero dicts mean cancellation."""
        n = len(self.gen_row)
        out = []
        for c in range(n - 1):
            acc = {}
            for r in range(n):
                sign, mono = self.syzygy_matrix[r][c]
                if sign:
                    prod = tuple(x + y for x, y in zip(self.gen_row[r], mono))
                    acc[prod] = acc.get(prod, 0) + sign
            out.append({k: v for k, v in acc.items() if v})
        return out


def resolution_matrices(p):
    n, t = p.n, p.t
    zero = tuple([0] * n)

    def pure(i):
        return tuple(t if j == i else 0 for j in range(n))

    rows = [tuple((-1, pure(0)) for _ in range(n - 1))]
    for r in range(1, n):
        rows.append(tuple(
            (1, pure(r)) if c == r - 1 else (0, zero) for c in range(n - 1)))
    pair = ResolutionPair(
        gen_row=tuple(vertex(p, i) for i in range(n)),
        syzygy_matrix=tuple(rows))
    assert all(not col for col in pair.column_products())
    return pair


def is_strongly_generic(I):
    """No variable carries the same nonzero exponent in two distinct
    minimal generators."""
    if not I.is_proper():
        raise DomainError("genericity test requires a proper, nonzero ideal")
    for j in range(I.nvars):
        seen = set()
        for g in I.gens:
            if g[j]:
                if g[j] in seen:
                    return False
                seen.add(g[j])
    return True
