"""Newton-polyhedron membership with certificates and integral closure.

The Newton polyhedron of a monomial ideal is the convex hull of its
generators' exponent vectors plus the non-negative orthant; its lattice
points generate the integral closure.  Membership is decided by exact
rational phase-1 simplex and always returns a verifiable certificate.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import MonomialIdeal, divides, minimalize
from .errors import BudgetError, DimensionError, DomainError
from .simplex import feasibility


@dataclass(frozen=True)
class InsideCertificate:
    """a = sum weights_i * g_i + slack with weights convex, slack >= 0."""

    weights: tuple
    slack: tuple


@dataclass(frozen=True)
class OutsideCertificate:
    """Non-negative functional w with w.a < min over generators of w.g."""

    functional: tuple


def _normalize_functional(y):
    """Scale a rational functional to coprime non-negative integers."""
    den = math.lcm(*(f.denominator for f in y)) if y else 1
    ints = [int(f * den) for f in y]
    g = math.gcd(*ints) if any(ints) else 1
    return tuple(Fraction(v, g) for v in ints)


def np_membership(I, a):
    """Certificate for a ∈/∉ Newton polyhedron of I.

    Cheap paths first: a dividing generator gives an immediate inside
    certificate, and a total degree below every generator's gives the
    all-ones separating functional.  Everything else goes to the simplex.
    """
    if I.is_zero():
        raise DomainError("Newton polyhedron of the zero ideal")
    a = tuple(a)
    if len(a) != I.nvars:
        raise DimensionError(
            "point of length %d in a %d-variable ring" % (len(a), I.nvars))

    for k, g in enumerate(I.gens):
        if divides(g, a):
            weights = tuple(Fraction(1 if i == k else 0) for i in range(len(I.gens)))
            slack = tuple(Fraction(x - y) for x, y in zip(a, g))
            return InsideCertificate(weights, slack)
    if sum(a) < min(sum(g) for g in I.gens):
        return OutsideCertificate(tuple(Fraction(1) for _ in a))

    kind, *rest = feasibility(I.gens, a)
    if kind == "inside":
        weights, slack = rest
        return InsideCertificate(weights, slack)
    return OutsideCertificate(_normalize_functional(rest[0]))


def verify_certificate(I, a, cert):
    """Arithmetic re-check of a certificate; malformed input is False."""
    try:
        a = tuple(Fraction(x) for x in a)
        if len(a) != I.nvars or I.is_zero():
            return False
        if isinstance(cert, InsideCertificate):
            w = [Fraction(x) for x in cert.weights]
            s = [Fraction(x) for x in cert.slack]
            if len(w) != len(I.gens) or len(s) != len(a):
                return False
            if any(x < 0 for x in w) or any(x < 0 for x in s):
                return False
            if sum(w) != 1:
                return False
            for j in range(len(a)):
                if sum(wi * g[j] for wi, g in zip(w, I.gens)) + s[j] != a[j]:
                    return False
            return True
        if isinstance(cert, OutsideCertificate):
            f = [Fraction(x) for x in cert.functional]
            if len(f) != len(a) or any(x < 0 for x in f):
                return False
            val = sum(x * y for x, y in zip(f, a))
            return all(sum(x * gy for x, gy in zip(f, g)) > val for g in I.gens)
        return False
    except (TypeError, ValueError, ZeroDivisionError):
        return False


def is_inside(I, a):
    return isinstance(np_membership(I, a), InsideCertificate)


def bounding_box(I):
    """Componentwise max of the generators; minimal closure generators
    lie inside this box (a coordinate above it could be decremented
    while staying in the polyhedron)."""
    if I.is_zero():
        raise DomainError("bounding box of the zero ideal")
    box = [0] * I.nvars
    for g in I.gens:
        for i, e in enumerate(g):
            box[i] = max(box[i], e)
    return tuple(box)


def closure_generators(I, max_points=10 ** 7):
    """The integral closure of I, by streaming the bounding-box lattice
    points through the membership test and keeping the antichain.

    Row-major (lexicographic) order visits every divisor of a point
    before the point itself, so points under an accepted generator are
    skipped without an LP call.
    """
    if not I.is_proper():
        raise DomainError("integral closure requires a proper, nonzero ideal")
    box = bounding_box(I)
    volume = 1
    for b in box:
        volume *= b + 1
    if volume > max_points:
        raise BudgetError(
            "bounding box has %d lattice points (budget %d)" % (volume, max_points))
    accepted = []
    for a in itertools.product(*(range(b + 1) for b in box)):
        if any(divides(g, a) for g in accepted):
            continue
        if isinstance(np_membership(I, a), InsideCertificate):
            accepted.append(a)
    return MonomialIdeal.make(I.vars, minimalize(accepted))


def is_integrally_closed(I, max_points=10 ** 7):
    return closure_generators(I, max_points) == I


def certificate_denominator(cert, cap=64):
    """lcm of an inside certificate's weight denominators, capped."""
    den = math.lcm(*(w.denominator for w in cert.weights))
    return min(den, cap)


def power_witness(I, a, k_max):
    """Smallest k <= k_max with k*a >= a sum of k generators (with
    repetition), i.e. (x^a)^k ∈ I^k; None if no such k.

    Runs a frontier of componentwise-minimal k-fold generator sums; any
    returned k certifies x^a is integral over I.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    a = tuple(a)
    if len(a) != I.nvars:
        raise DimensionError(
            "point of length %d in a %d-variable ring" % (len(a), I.nvars))
    if not I.gens:
        return None
    cap = tuple(k_max * x for x in a)  # sums above this can never divide
    sums = [tuple([0] * I.nvars)]
    for k in range(1, k_max + 1):
        target = tuple(k * x for x in a)
        nxt = set()
        for s in sums:
            for g in I.gens:
                v = tuple(x + y for x, y in zip(s, g))
                if divides(v, cap):
                    nxt.add(v)
        sums = minimalize(nxt)
        if not sums:
            return None
        if any(divides(s, target) for s in sums):
            return k
    return None
