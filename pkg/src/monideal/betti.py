"""Multigraded Betti numbers of R/I from upper Koszul complexes.

At each multidegree a of the lcm lattice, beta_{i,a}(R/I) for i >= 1 is
the rank of reduced homology H~_{i-2} of the complex of squarefree
vectors b <= a with x^{a-b} in I.  Projective dimension and the
Cohen-Macaulay verdict (pd = codim) follow.
"""

from dataclasses import dataclass, field

from .decompose import codim
from .errors import BudgetError, DomainError
from .homology import SimplicialComplex, homology_ranks


def lcm_degrees(I, max_generators=20):
    """All lcms of non-empty generator subsets, via join closure.

    Closing the generator set under pairwise componentwise max yields
    exactly the subset lcms without walking 2^m subsets.
    """
    if not I.is_proper():
        raise DomainError("lcm lattice requires a proper, nonzero ideal")
    if len(I.gens) > max_generators:
        raise BudgetError(
            "%d generators exceeds the lcm-lattice budget of %d"
            % (len(I.gens), max_generators))
    lattice = set(I.gens)
    frontier = set(I.gens)
    while frontier:
        new = set()
        for u in frontier:
            for g in I.gens:
                j = tuple(max(x, y) for x, y in zip(u, g))
                if j not in lattice:
                    new.add(j)
        lattice |= new
        frontier = new
    return lattice


def upper_koszul(I, a):
    """The upper Koszul complex of I at multidegree a."""
    a = tuple(a)
    if len(a) != I.nvars:
        from .errors import DimensionError
        raise DimensionError(
            "degree of length %d in a %d-variable ring" % (len(a), I.nvars))
    support = [i for i, e in enumerate(a) if e]
    faces = set()
    # grow subsets; a set whose shifted degree leaves I cannot gain
    # membership back by shrinking, but can by growing, so test each
    def member(b):
        return I.contains(tuple(x - (1 if i in b else 0) for i, x in enumerate(a)))

    import itertools
    for k in range(len(support) + 1):
        for b in itertools.combinations(support, k):
            if member(frozenset(b)):
                faces.add(frozenset(b))
    verts = frozenset(v for f in faces for v in f)
    return SimplicialComplex(verts, frozenset(faces))


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers of R/I."""

    nvars: int
    entries: dict = field(default_factory=dict)  # (i, multidegree) -> rank

    def totals(self):
        """Total Betti numbers as a tuple indexed by homological degree."""
        if not self.entries:
            return ()
        top = max(i for i, _ in self.entries)
        out = [0] * (top + 1)
        for (i, _), r in self.entries.items():
            out[i] += r
        return tuple(out)

    def projective_dimension(self):
        return max(i for i, _ in self.entries)


def betti_table(I, max_generators=20):
    """All multigraded Betti numbers of R/I (characteristic zero)."""
    if not I.is_proper():
        raise DomainError("Betti table requires a proper, nonzero ideal")
    entries = {(0, tuple([0] * I.nvars)): 1}
    for a in lcm_degrees(I, max_generators):
        ranks = homology_ranks(upper_koszul(I, a))
        for k, r in enumerate(ranks):
            # ranks[k] is H~_{k-1}; contributes to beta_{k+1, a}(R/I)
            if r:
                entries[(k + 1, a)] = r
    return BettiTable(I.nvars, entries)


def projective_dimension(I, max_generators=20):
    return betti_table(I, max_generators).projective_dimension()


def is_cohen_macaulay(I, max_generators=20, split_budget=100000):
    return projective_dimension(I, max_generators) == codim(I, split_budget)


def taylor_alternating_sum(I, a):
    """Inclusion-exclusion over generator subsets with lcm a; equals the
    alternating sum of beta_{i,a}(R/I).  Exponential in the generator
    count; meant for small cross-checks only."""
    import itertools
    total = 1 if not any(a) else 0  # empty subset has lcm 0
    gens = I.gens
    for k in range(1, len(gens) + 1):
        for sub in itertools.combinations(gens, k):
            j = [0] * I.nvars
            for g in sub:
                for i, e in enumerate(g):
                    j[i] = max(j[i], e)
            if tuple(j) == tuple(a):
                total += (-1) ** k
    return total
