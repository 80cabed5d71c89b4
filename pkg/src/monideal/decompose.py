"""Irreducible and primary decomposition of monomial ideals by splitting.

The splitting rule: take the first generator (canonical order) that is
not a pure power, write it as u*v with u the pure-power part of its
lowest-index variable and v the coprime remainder; then
I = (I + <u>) cap (I + <v>), and both branches are strictly simpler.
Leaves of the recursion are ideals generated by pure powers, i.e.
irreducible monomial ideals.
"""

from dataclasses import dataclass

from .core import MonomialIdeal, intersect
from .errors import BudgetError, DomainError


@dataclass(frozen=True)
class IrreducibleComponent:
    """<x_i^{a_i} : i in support>, stored as a sorted (index, exponent) map."""

    nvars: int
    entries: tuple  # sorted tuple of (variable index, exponent >= 1)

    @property
    def support(self):
        return frozenset(i for i, _ in self.entries)

    def to_ideal(self, variables):
        gens = []
        for i, e in self.entries:
            g = [0] * self.nvars
            g[i] = e
            gens.append(tuple(g))
        return MonomialIdeal.make(variables, gens)

    def contains_monomial(self, m):
        return any(m[i] >= e for i, e in self.entries)


def _require_proper(I):
    if not I.is_proper():
        raise DomainError("decomposition requires a proper, nonzero ideal")


def _as_irreducible(I):
    """The ideal as an IrreducibleComponent, or None if some generator
    involves more than one variable."""
    entries = []
    for g in I.gens:
        support = [i for i, e in enumerate(g) if e]
        if len(support) != 1:
            return None
        entries.append((support[0], g[support[0]]))
    return IrreducibleComponent(I.nvars, tuple(sorted(entries)))


def _split_once(I):
    """The two branch ideals for the first non-pure-power generator."""
    for g in I.gens:
        support = [i for i, e in enumerate(g) if e]
        if len(support) <= 1:
            continue
        i = support[0]
        u = tuple(g[i] if j == i else 0 for j in range(len(g)))
        v = tuple(0 if j == i else g[j] for j in range(len(g)))
        return (MonomialIdeal.make(I.vars, I.gens + (u,)),
                MonomialIdeal.make(I.vars, I.gens + (v,)))
    return None


def _all_components(I, budget):
    """Every irreducible leaf of the splitting tree (with duplicates merged).

    Memoized on the canonical generator tuple: distinct subproblems are
    ideals of the form I + <pieces of generators>, of which there are few.
    """
    memo = {}

    def rec(J):
        got = memo.get(J.gens)
        if got is not None:
            return got
        irr = _as_irreducible(J)
        if irr is not None:
            out = frozenset([irr])
        else:
            left, right = _split_once(J)
            out = rec(left) | rec(right)
        if len(memo) > budget:
            raise BudgetError("splitting budget of %d subproblems exceeded" % budget)
        memo[J.gens] = out
        return out

    return rec(I)


def _witness(comp, cap):
    """The largest monomial outside comp, exponents capped at `cap`.

    For any monomial ideal J spanned by components with exponents <= cap:
    J is contained in comp iff this witness is not in J.
    """
    w = [cap] * comp.nvars
    for i, e in comp.entries:
        w[i] = e - 1
    return tuple(w)


def irreducible_decomposition(I, budget=100000):
    """Irredundant irreducible components of a proper nonzero ideal,
    in canonical order; their intersection equals I."""
    _require_proper(I)
    comps = sorted(_all_components(I, budget), key=lambda c: c.entries)
    cap = max((e for c in comps for _, e in c.entries), default=1)
    kept = list(comps)
    # comp is redundant iff the intersection of the others sits inside
    # it, i.e. iff comp's witness monomial misses some other component
    changed = True
    while changed:
        changed = False
        for c in list(kept):
            if len(kept) == 1:
                break
            w = _witness(c, cap)
            if not all(d.contains_monomial(w) for d in kept if d is not c):
                kept.remove(c)
                changed = True
    return kept


def primary_decomposition(I, budget=100000):
    """Group irredundant irreducible components by radical and intersect
    each group; the minimal primary decomposition this algorithm yields."""
    comps = irreducible_decomposition(I, budget)
    groups = {}
    for c in comps:
        groups.setdefault(tuple(sorted(c.support)), []).append(c)
    out = []
    for supp in sorted(groups):
        ideal = None
        for c in groups[supp]:
            J = c.to_ideal(I.vars)
            ideal = J if ideal is None else intersect(ideal, J)
        out.append(ideal)
    return out


def associated_primes(I, budget=100000):
    """Ass(R/I): the supports of the irredundant irreducible components."""
    return {frozenset(c.support) for c in irreducible_decomposition(I, budget)}


def minimal_primes(I, budget=100000):
    ass = associated_primes(I, budget)
    return {p for p in ass if not any(q < p for q in ass)}


def embedded_primes(I, budget=100000):
    ass = associated_primes(I, budget)
    return ass - {p for p in ass if not any(q < p for q in ass)}


def codim(I, budget=100000):
    """Height of I: smallest cardinality of a minimal prime."""
    return min(len(p) for p in minimal_primes(I, budget))


def is_primary(I, budget=100000):
    return len(associated_primes(I, budget)) == 1


def is_unmixed(I, budget=100000):
    ass = associated_primes(I, budget)
    mins = {p for p in ass if not any(q < p for q in ass)}
    if ass != mins:
        return False
    return len({len(p) for p in mins}) == 1


def reconstruct(I, components):
    """Intersection of irreducible components, for cross-checking."""
    out = None
    for c in components:
        J = c.to_ideal(I.vars)
        out = J if out is None else intersect(out, J)
    return out


def decomposition_is_irredundant(I, components):
    """True iff dropping any single component enlarges the intersection."""
    full = reconstruct(I, components)
    for k in range(len(components)):
        rest = components[:k] + components[k + 1:]
        if not rest:
            return len(components) == 1
        if reconstruct(I, rest) == full:
            return False
    return True
