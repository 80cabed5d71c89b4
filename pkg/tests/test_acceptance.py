"""Acceptance suite: every criterion at zero tolerance (exact equality).

Each test prints one [criterion N] PASS/FAIL line (visible with -s or on
failure).  Budgets are raised only where an input is known to be larger
than the library defaults (the 35-generator closure at n=5, t=3).
"""

import itertools
import random

from monideal import (InsideCertificate, MonomialIdeal, betti_table,
                      closure_generators, codim, colon_mon, delta_set,
                      embedded_primes, family_ideal, ideal_contains,
                      is_cohen_macaulay, is_primary, is_strongly_generic,
                      minimal_primes, np_membership, power_witness,
                      primary_decomposition, projective_dimension, radical,
                      thm1_check, verify_certificate)
from monideal.betti import lcm_degrees, taylor_alternating_sum
from monideal.closure import bounding_box, certificate_denominator
from monideal.decompose import irreducible_decomposition, reconstruct
from monideal.family import FamilyParams
from monideal.figures import figure_points
from monideal.verify import run_verify

from conftest import random_ideal

GRID = list(itertools.product((3, 4, 5), (1, 2, 3)))
SPLIT_BUDGET = 200000
BETTI_BUDGET = 64

FINAL = MonomialIdeal.make(("x", "y", "z", "w"),
                           [(3, 1, 1, 0), (2, 0, 0, 2), (0, 2, 0, 3)])

_closures = {}


def family_closure(n, t):
    if (n, t) not in _closures:
        _closures[(n, t)] = closure_generators(family_ideal(FamilyParams(n, t)))
    return _closures[(n, t)]


def report(num, label, ok):
    print("[criterion %d] %s: %s" % (num, "PASS" if ok else "FAIL", label))
    assert ok, "criterion %d failed: %s" % (num, label)


def test_criterion_1_family_closure_closed_form():
    ok = True
    for n, t in GRID:
        p = FamilyParams(n, t)
        delta = MonomialIdeal.make(family_ideal(p).vars, delta_set(p))
        ok = ok and family_closure(n, t) == delta
    report(1, "closure of the family equals the closed-form set on the "
              "{3,4,5}x{1,2,3} grid", ok)


def test_criterion_2_i32_goldens():
    I = family_ideal(FamilyParams(3, 2))
    c = family_closure(3, 2)
    ok = I.gens == ((0, 2, 2), (2, 0, 2), (2, 2, 0))
    ok = ok and c.gens == ((0, 2, 2), (1, 1, 2), (1, 2, 1),
                           (2, 0, 2), (2, 1, 1), (2, 2, 0))
    comps = primary_decomposition(c)
    rads = {frozenset(i for g in radical(j).gens
                      for i, e in enumerate(g) if e) for j in comps}
    ok = ok and rads == {frozenset(s) for s in
                         [(0, 1), (0, 2), (1, 2), (0, 1, 2)]}
    pair_components = [MonomialIdeal.make(I.vars, gs) for gs in [
        [(0, 2, 0), (0, 1, 1), (0, 0, 2)],
        [(2, 0, 0), (1, 0, 1), (0, 0, 2)],
        [(2, 0, 0), (1, 1, 0), (0, 2, 0)]]]
    minimal_components = [
        j for j in comps
        if len({i for g in j.gens for i, e in enumerate(g) if e}) == 2]
    ok = ok and sorted(j.gens for j in minimal_components) == \
        sorted(j.gens for j in pair_components)
    report(2, "worked-example goldens for n=3, t=2", ok)


def test_criterion_3_subset_inequalities():
    ok = True
    for n, t in GRID:
        p = FamilyParams(n, t)
        ok = ok and all(thm1_check(a, p) for a in family_closure(n, t).gens)
    report(3, "every closure generator passes all 2^n - 1 subset "
              "inequalities", ok)


def test_criterion_4_embedded_triple_primes():
    ok = True
    for n, t in itertools.product((3, 4, 5), (2, 3)):
        c = family_closure(n, t)
        m3 = tuple([1, t - 1, t - 1] + [t] * (n - 3))
        m2 = tuple([0, t - 1] + [t] * (n - 2))
        unit_vec = lambda i: tuple(1 if j == i else 0 for j in range(n))
        ok = ok and colon_mon(c, m3) == MonomialIdeal.make(
            c.vars, [unit_vec(i) for i in range(3)])
        ok = ok and colon_mon(c, m2) == MonomialIdeal.make(
            c.vars, [unit_vec(i) for i in range(2)])
        mins = minimal_primes(c, SPLIT_BUDGET)
        emb = embedded_primes(c, SPLIT_BUDGET)
        pairs = {frozenset(s) for s in itertools.combinations(range(n), 2)}
        triples = {frozenset(s) for s in itertools.combinations(range(n), 3)}
        ok = ok and pairs <= mins
        ok = ok and triples <= emb
    report(4, "colon goldens, pair primes minimal, all triples embedded "
              "(t in {2,3})", ok)


def test_criterion_5_cohen_macaulayness():
    ok = True
    for n, t in GRID:
        I = family_ideal(FamilyParams(n, t))
        table = betti_table(I)
        ok = ok and table.totals() == (1, n, n - 1)
        ok = ok and table.projective_dimension() == 2 == codim(I)
        ok = ok and is_cohen_macaulay(I)
        c = family_closure(n, t)
        if t >= 2:
            ok = ok and not is_cohen_macaulay(c, BETTI_BUDGET, SPLIT_BUDGET)
        else:
            ok = ok and c == I and not embedded_primes(I)
    report(5, "family is CM with pd = codim = 2; closure is not CM for "
              "t >= 2", ok)


def test_criterion_6_final_example():
    comps = irreducible_decomposition(FINAL)
    ok = {tuple(sorted(j.support)) for j in comps} == \
        {(0, 1), (0, 3), (1, 3), (2, 3)}
    ok = ok and reconstruct(FINAL, comps) == FINAL
    ok = ok and is_strongly_generic(FINAL)
    ok = ok and projective_dimension(FINAL) == 2 == codim(FINAL)
    ok = ok and is_cohen_macaulay(FINAL)
    c = closure_generators(FINAL)
    ok = ok and c.gens == ((0, 2, 0, 3), (1, 1, 0, 3), (1, 2, 1, 2),
                           (2, 0, 0, 2), (2, 2, 1, 1), (3, 1, 1, 0))
    xzw = MonomialIdeal.make(FINAL.vars,
                             [(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    ok = ok and colon_mon(c, (1, 2, 0, 2)) == xzw
    ok = ok and frozenset([0, 2, 3]) in embedded_primes(c, SPLIT_BUDGET)
    ok = ok and not is_cohen_macaulay(c, BETTI_BUDGET, SPLIT_BUDGET)
    # the stated value <x, w> for (closure : x*y*w^2) is re-computed: we
    # get <x, w, y*z>, reported as a flagged discrepancy, not a failure
    xw_yz = MonomialIdeal.make(
        FINAL.vars, [(1, 0, 0, 0), (0, 0, 0, 1), (0, 1, 1, 0)])
    ok = ok and colon_mon(c, (1, 1, 0, 2)) == xw_yz
    rep = run_verify(3, 1)
    ok = ok and rep.flagged_discrepancies == ["final-colon-xw-flagged"] \
        and rep.overall_pass
    report(6, "four-variable example: decomposition, genericity, CM, "
              "closure, embedded prime, flagged colon discrepancy", ok)


class TestCriterion7Properties:
    """Seeded randomized suites, 200 cases each (n <= 4, exponents <= 4,
    <= 4 generators)."""

    CASES = 200

    def ideals(self, seed):
        rng = random.Random(seed)
        for _ in range(self.CASES):
            yield rng, random_ideal(rng)

    def test_closure_idempotent(self):
        ok = all(closure_generators(closure_generators(I))
                 == closure_generators(I) for _, I in self.ideals(101))
        report(7, "closure is idempotent (200 cases)", ok)

    def test_closure_contains_ideal(self):
        ok = all(ideal_contains(closure_generators(I), I)
                 for _, I in self.ideals(102))
        report(7, "I is contained in its closure (200 cases)", ok)

    def test_radical_preserved(self):
        ok = all(radical(closure_generators(I)) == radical(I)
                 for _, I in self.ideals(103))
        report(7, "radical unchanged by closure (200 cases)", ok)

    def test_primary_preserved(self):
        # random primary ideals: random generators plus a pure power of
        # every variable, which pins the radical to the maximal ideal
        rng = random.Random(104)
        ok = True
        for _ in range(self.CASES):
            I = random_ideal(rng)
            gens = list(I.gens) + [
                tuple(rng.randint(1, 4) if j == i else 0 for j in range(I.nvars))
                for i in range(I.nvars)]
            P = MonomialIdeal.make(I.vars, gens)
            assert is_primary(P)
            c = closure_generators(P)
            ok = ok and is_primary(c) and radical(c) == radical(P)
        report(7, "closure of a primary ideal is primary with the same "
                  "radical (200 cases)", ok)

    def test_decomposition_reconstructs(self):
        ok = all(reconstruct(I, irreducible_decomposition(I)) == I
                 for _, I in self.ideals(105))
        report(7, "irreducible decomposition reconstructs the ideal "
                  "(200 cases)", ok)

    def test_certificates_verify(self):
        ok = True
        for rng, I in self.ideals(106):
            box = bounding_box(I)
            for _ in range(3):
                a = tuple(rng.randint(0, b + 1) for b in box)
                ok = ok and verify_certificate(I, a, np_membership(I, a))
        report(7, "membership certificates verify arithmetically "
                  "(200 cases)", ok)

    def test_power_witness_agrees_with_lp(self):
        ok = True
        for rng, I in self.ideals(107):
            box = bounding_box(I)
            for _ in range(2):
                a = tuple(rng.randint(0, b) for b in box)
                cert = np_membership(I, a)
                if isinstance(cert, InsideCertificate):
                    k = certificate_denominator(cert)
                    ok = ok and power_witness(I, a, k) is not None
                else:
                    ok = ok and power_witness(I, a, 6) is None
        report(7, "power witness agrees with LP membership (200 cases)", ok)

    def test_euler_characteristic_identity(self):
        ok = True
        for _, I in self.ideals(108):
            table = betti_table(I)
            by_degree = {}
            for (i, a), r in table.entries.items():
                by_degree[a] = by_degree.get(a, 0) + (-1) ** i * r
            for a in lcm_degrees(I):
                ok = ok and by_degree.get(a, 0) == taylor_alternating_sum(I, a)
        report(7, "Euler characteristic matches inclusion-exclusion per "
                  "multidegree (200 cases)", ok)


def test_criterion_8_figure_points(tmp_path):
    pts4 = figure_points(4)
    pts2 = figure_points(2)
    ok = len(pts4) == 15
    ok = ok and sum(1 for _, k in pts4 if k == "vertex") == 3
    ok = ok and sum(1 for _, k in pts4 if k == "interior") == 12
    ok = ok and len(pts2) == 6
    from monideal.figures import render_figure, write_csv
    svg = tmp_path / "triangle.svg"
    csv_path = tmp_path / "triangle.csv"
    ok = ok and len(render_figure(4, str(svg))) == 15
    ok = ok and len(write_csv(2, str(csv_path))) == 6
    ok = ok and svg.exists() and csv_path.exists()
    report(8, "figure emits 15 points at t=4 (3 vertices, 12 interior) "
              "and 6 at t=2", ok)
