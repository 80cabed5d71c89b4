"""The verify-paper harness: every desk-scale claim, re-computed.

Each check records its parameters, the expected value and where it came
from, the computed value, and pass/fail.  One check is *flagged*: the
stated colon value for the four-variable example disagrees with direct
computation on the example's own closure generators, so it is reported
as a discrepancy instead of failing the run.
"""

import itertools
from dataclasses import dataclass, field

from . import betti as betti_mod
from . import closure as closure_mod
from . import decompose as decompose_mod
from . import family as family_mod
from .core import MonomialIdeal, colon_mon, radical
from .figures import figure_points
from .ioformats import ideal_to_obj

SPLIT_BUDGET = 200000
BETTI_BUDGET = 64

FINAL_EXAMPLE = MonomialIdeal.make(
    ("x", "y", "z", "w"),
    [(3, 1, 1, 0), (2, 0, 0, 2), (0, 2, 0, 3)])

FINAL_EXAMPLE_CLOSURE_GENS = (
    (0, 2, 0, 3), (1, 1, 0, 3), (1, 2, 1, 2),
    (2, 0, 0, 2), (2, 2, 1, 1), (3, 1, 1, 0))


@dataclass
class Check:
    id: str
    params: dict
    source: str
    expected: object
    computed: object
    passed: bool
    flagged: bool = False

    def to_obj(self):
        return {
            "id": self.id, "params": self.params, "source": self.source,
            "expected": self.expected, "computed": self.computed,
            "pass": self.passed, "flagged": self.flagged,
        }


@dataclass
class VerifyReport:
    checks: list = field(default_factory=list)

    def add(self, id, params, source, expected, computed, flagged=False):
        self.checks.append(Check(
            id, params, source, expected, computed,
            passed=(expected == computed), flagged=flagged))

    @property
    def overall_pass(self):
        return all(c.passed for c in self.checks if not c.flagged)

    @property
    def flagged_discrepancies(self):
        return [c.id for c in self.checks if c.flagged and not c.passed]

    def to_obj(self):
        return {
            "overall_pass": self.overall_pass,
            "flagged_discrepancies": self.flagged_discrepancies,
            "checks": [c.to_obj() for c in self.checks],
        }


def _primes_obj(primes):
    return sorted(sorted(p) for p in primes)


def _grid(n_max, t_max):
    return itertools.product(range(3, n_max + 1), range(1, t_max + 1))


def run_verify(n_max=5, t_max=3):
    """Run every check over the (n, t) grid and fixed examples."""
    if n_max < 3 or t_max < 1:
        raise ValueError("grid requires n_max >= 3 and t_max >= 1")
    report = VerifyReport()
    closures = {}

    for n, t in _grid(n_max, t_max):
        p = family_mod.FamilyParams(n, t)
        I = family_mod.family_ideal(p)
        closure = closure_mod.closure_generators(I)
        closures[(n, t)] = closure

        # closed form for the closure
        delta = MonomialIdeal.make(I.vars, family_mod.delta_set(p))
        report.add("family-closure", {"n": n, "t": t},
                   "closed-form generator set",
                   ideal_to_obj(delta), ideal_to_obj(closure))

        # subset-sum inequalities on every closure generator
        report.add("subset-inequalities", {"n": n, "t": t},
                   "membership necessary condition", True,
                   all(family_mod.thm1_check(a, p) for a in closure.gens))

        # resolution shape and Cohen-Macaulayness of the family member
        table = betti_mod.betti_table(I)
        report.add("family-betti-totals", {"n": n, "t": t},
                   "explicit free resolution", (1, n, n - 1), table.totals())
        report.add("family-cm", {"n": n, "t": t},
                   "pd = codim = 2",
                   {"pd": 2, "codim": 2, "cm": True},
                   {"pd": table.projective_dimension(),
                    "codim": decompose_mod.codim(I),
                    "cm": betti_mod.is_cohen_macaulay(I)})

        if t == 1:
            report.add("closure-trivial-t1", {"n": n, "t": t},
                       "squarefree case", True,
                       closure == I
                       and not decompose_mod.embedded_primes(I, SPLIT_BUDGET))
            continue

        # colon witnesses for the embedded triple prime and a pair prime
        m3 = tuple([1, t - 1, t - 1] + [t] * (n - 3))
        m2 = tuple([0, t - 1] + [t] * (n - 2))
        p3 = MonomialIdeal.make(I.vars, [tuple(1 if j == i else 0 for j in range(n))
                                         for i in range(3)])
        p2 = MonomialIdeal.make(I.vars, [tuple(1 if j == i else 0 for j in range(n))
                                         for i in range(2)])
        report.add("colon-triple-prime", {"n": n, "t": t},
                   "colon witness for <x1,x2,x3>",
                   ideal_to_obj(p3), ideal_to_obj(colon_mon(closure, m3)))
        report.add("colon-pair-prime", {"n": n, "t": t},
                   "colon witness for <x1,x2>",
                   ideal_to_obj(p2), ideal_to_obj(colon_mon(closure, m2)))

        ass = decompose_mod.associated_primes(closure, SPLIT_BUDGET)
        mins = {q for q in ass if not any(r < q for r in ass)}
        pairs = {frozenset(c) for c in itertools.combinations(range(n), 2)}
        triples = {frozenset(c) for c in itertools.combinations(range(n), 3)}
        report.add("pair-primes-minimal", {"n": n, "t": t},
                   "minimal decomposition of the family ideal", True,
                   pairs <= mins)
        report.add("triple-primes-embedded", {"n": n, "t": t},
                   "one embedded prime per variable triple", True,
                   triples <= (ass - mins))
        report.add("closure-not-cm", {"n": n, "t": t},
                   "embedded primes obstruct Cohen-Macaulayness", False,
                   betti_mod.is_cohen_macaulay(closure, BETTI_BUDGET,
                                               SPLIT_BUDGET))

    # the fully worked n = 3, t = 2 example
    if t_max >= 2:
        I32 = family_mod.family_ideal(family_mod.FamilyParams(3, 2))
        closure32 = closures[(3, 2)]
        report.add("i32-generators", {}, "worked example",
                   [[0, 2, 2], [2, 0, 2], [2, 2, 0]],
                   [list(g) for g in I32.gens])
        report.add("i32-closure-size", {}, "worked example", 6,
                   len(closure32.gens))
        comps = decompose_mod.primary_decomposition(closure32)
        comp_radicals = [sorted({i for g in radical(c).gens
                                 for i, e in enumerate(g) if e})
                         for c in comps]
        report.add("i32-primary-radicals", {}, "worked example",
                   [[0, 1], [0, 2], [1, 2], [0, 1, 2]],
                   sorted(comp_radicals, key=lambda s: (len(s), s)))
        pair_comps = [MonomialIdeal.make(I32.vars, gs) for gs in [
            [(0, 2, 0), (0, 1, 1), (0, 0, 2)],   # <x2^2, x2*x3, x3^2>
            [(2, 0, 0), (1, 0, 1), (0, 0, 2)],   # <x1^2, x1*x3, x3^2>
            [(2, 0, 0), (1, 1, 0), (0, 2, 0)]]]  # <x1^2, x1*x2, x2^2>
        minimal_comps = [c for c in comps
                         if len({i for g in c.gens for i, e in enumerate(g) if e}) == 2]
        report.add("i32-minimal-components", {}, "worked example",
                   sorted(ideal_to_obj(c)["gens"] for c in pair_comps),
                   sorted(ideal_to_obj(c)["gens"] for c in minimal_comps))

    # the four-variable example outside the family
    _final_example_checks(report)

    # figure point counts
    for t, want in ((2, 6), (4, 15)):
        pts = figure_points(t)
        report.add("figure-points", {"t": t},
                   "triangle picture", want, len(pts))
    pts4 = figure_points(4)
    report.add("figure-tags", {"t": 4}, "triangle picture",
               {"vertex": 3, "interior": 12},
               {"vertex": sum(1 for _, k in pts4 if k == "vertex"),
                "interior": sum(1 for _, k in pts4 if k == "interior")})
    return report


def _final_example_checks(report):
    I = FINAL_EXAMPLE
    comps = decompose_mod.irreducible_decomposition(I)
    radicals = {tuple(sorted(c.support)) for c in comps}
    report.add("final-irreducible-radicals", {}, "stated decomposition",
               [[0, 1], [0, 3], [1, 3], [2, 3]],
               [list(r) for r in sorted(radicals)])
    report.add("final-strongly-generic", {}, "genericity claim", True,
               family_mod.is_strongly_generic(I))
    report.add("final-cm", {}, "pd = codim = 2",
               {"pd": 2, "codim": 2, "cm": True},
               {"pd": betti_mod.projective_dimension(I),
                "codim": decompose_mod.codim(I),
                "cm": betti_mod.is_cohen_macaulay(I)})

    closure = closure_mod.closure_generators(I)
    report.add("final-closure", {}, "stated closure generators",
               [list(g) for g in FINAL_EXAMPLE_CLOSURE_GENS],
               [list(g) for g in closure.gens])

    # (closure : x*y^2*w^2) = <x, z, w>, so <x,z,w> is associated
    q = colon_mon(closure, (1, 2, 0, 2))
    xzw = MonomialIdeal.make(I.vars, [(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    report.add("final-colon-xzw", {}, "embedded-prime witness",
               ideal_to_obj(xzw), ideal_to_obj(q))
    embedded = decompose_mod.embedded_primes(closure, SPLIT_BUDGET)
    report.add("final-xzw-embedded", {}, "embedded-prime conclusion", True,
               frozenset({0, 2, 3}) in embedded)
    report.add("final-closure-not-cm", {}, "embedded prime obstruction",
               False, betti_mod.is_cohen_macaulay(closure, BETTI_BUDGET,
                                                  SPLIT_BUDGET))

    # FLAGGED: the stated value <x, w> for (closure : x*y*w^2) disagrees
    # with direct computation on the closure generators, which yields
    # <x, w, y*z>; reported as a discrepancy, not a failure.
    q2 = colon_mon(closure, (1, 1, 0, 2))
    xw = MonomialIdeal.make(I.vars, [(1, 0, 0, 0), (0, 0, 0, 1)])
    report.add("final-colon-xw-flagged", {}, "stated colon value",
               ideal_to_obj(xw), ideal_to_obj(q2), flagged=True)
    xw_yz = MonomialIdeal.make(
        I.vars, [(1, 0, 0, 0), (0, 0, 0, 1), (0, 1, 1, 0)])
    report.add("final-colon-xw-recomputed", {}, "direct computation",
               ideal_to_obj(xw_yz), ideal_to_obj(q2))
