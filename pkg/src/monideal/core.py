"""Exponent-vector arithmetic and canonical monomial-ideal operations.

A monomial x_1^{a_1}...x_n^{a_n} is identified with its exponent vector,
a tuple of non-negative ints.  A monomial ideal is stored by its unique
minimal generating set (an antichain under componentwise <=), sorted
lexicographically, so ideal equality is representation equality.
"""

from dataclasses import dataclass

from .errors import AmbientMismatchError, DimensionError


def _check_dims(a, b):
    if len(a) != len(b):
        raise DimensionError(
            "exponent vectors of lengths %d and %d" % (len(a), len(b)))


def divides(a, b):
    """True iff a <= b componentwise, i.e. x^a divides x^b."""
    _check_dims(a, b)
    return all(x <= y for x, y in zip(a, b))


def lcm(a, b):
    """Componentwise max: exponent of lcm(x^a, x^b)."""
    _check_dims(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a, b):
    """Componentwise min: exponent of gcd(x^a, x^b)."""
    _check_dims(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def minimalize(gens):
    """The unique antichain generating the same ideal, sorted canonically.

    A vector is dropped when another (distinct, or an earlier duplicate)
    generator divides it.  The all-zeros vector, if present, absorbs
    everything (unit ideal).
    """
    vecs = sorted(set(map(tuple, gens)))
    keep = []
    for v in vecs:
        if not any(divides(u, v) for u in keep):
            # earlier-sorted vectors can never be divided by later ones,
            # so a single pass over `keep` suffices
            keep.append(v)
    return keep


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in k[vars], stored in canonical minimal form.

    `gens` is always an antichain sorted lexicographically; the empty
    tuple is the zero ideal and ((0,...,0),) is the unit ideal.
    """

    vars: tuple
    gens: tuple

    @classmethod
    def make(cls, variables, gens):
        variables = tuple(variables)
        n = len(variables)
        cleaned = []
        for g in gens:
            g = tuple(int(e) for e in g)
            if len(g) != n:
                raise DimensionError(
                    "generator of length %d in a %d-variable ring" % (len(g), n))
            if any(e < 0 for e in g):
                raise ValueError("negative exponent in generator %r" % (g,))
            cleaned.append(g)
        return cls(variables, tuple(minimalize(cleaned)))

    @property
    def nvars(self):
        return len(self.vars)

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_proper(self):
        return not self.is_zero() and not self.is_unit()

    def contains(self, m):
        """Monomial membership: some minimal generator divides m."""
        m = tuple(m)
        if len(m) != self.nvars:
            raise DimensionError(
                "point of length %d in a %d-variable ring" % (len(m), self.nvars))
        return any(divides(g, m) for g in self.gens)


def _check_ambient(I, J):
    if I.vars != J.vars:
        raise AmbientMismatchError(
            "ideals in different rings: %r vs %r" % (I.vars, J.vars))


def ideal_sum(I, J):
    _check_ambient(I, J)
    return MonomialIdeal.make(I.vars, I.gens + J.gens)


def intersect(I, J):
    """Intersection via pairwise lcms of minimal generators."""
    _check_ambient(I, J)
    return MonomialIdeal.make(I.vars, [lcm(g, h) for g in I.gens for h in J.gens])


def colon_mon(I, m):
    """(I : x^m), computed generator by generator."""
    m = tuple(m)
    if len(m) != I.nvars:
        raise DimensionError(
            "monomial of length %d in a %d-variable ring" % (len(m), I.nvars))
    return MonomialIdeal.make(
        I.vars, [tuple(max(e - f, 0) for e, f in zip(g, m)) for g in I.gens])


def colon_ideal(I, J):
    """(I : J) = intersection of (I : m) over the generators of J."""
    from .errors import DomainError
    _check_ambient(I, J)
    if J.is_zero():
        raise DomainError("colon by the zero ideal")
    out = None
    for m in J.gens:
        q = colon_mon(I, m)
        out = q if out is None else intersect(out, q)
    return out


def radical(I):
    """Replace every exponent by its 0/1 support indicator, minimalize."""
    return MonomialIdeal.make(
        I.vars, [tuple(1 if e else 0 for e in g) for g in I.gens])


def ideal_contains(I, J):
    """I >= J as ideals: every generator of J lies in I."""
    _check_ambient(I, J)
    return all(I.contains(g) for g in J.gens)
