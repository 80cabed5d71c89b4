"""Phase-1 simplex over exact rationals, Bland's rule.

Decides whether a point lies in conv(generators) + R_{>=0}^n.  Feasible:
returns convex weights and the non-negative slack.  Infeasible: returns
a Farkas dual, which downstream becomes a non-negative separating
functional.  No tolerances anywhere; Bland's rule guarantees termination.
"""

from fractions import Fraction


def feasibility(gens, point):
    """Solve { w >= 0, s >= 0 : sum w_i g_i + s = a, sum w_i = 1 }.

    Returns ('inside', weights, slack) or ('outside', y) where y is the
    dual vector with y_j >= 0, and  y.a < min_i y.g_i.
    """
    m = len(gens)
    n = len(point)
    # columns: w_0..w_{m-1}, s_0..s_{n-1}, artificial r; rows: n
    # coordinate equations then the convexity row.  Initial basis: the
    # slacks on coordinate rows, r on the convexity row.
    ncols = m + n + 1
    rows = []
    for j in range(n):
        row = [Fraction(g[j]) for g in gens]
        row += [Fraction(1) if k == j else Fraction(0) for k in range(n)]
        row.append(Fraction(0))
        row.append(Fraction(point[j]))  # rhs
        rows.append(row)
    conv = [Fraction(1)] * m + [Fraction(0)] * n + [Fraction(1), Fraction(1)]
    rows.append(conv)
    basis = list(range(m, m + n)) + [m + n]

    # reduced costs for minimizing r: c - c_B B^{-1} A, with c_B picking
    # out the convexity row initially
    zrow = [Fraction(0)] * ncols + [Fraction(0)]
    for k in range(ncols):
        c = Fraction(1) if k == m + n else Fraction(0)
        zrow[k] = c - rows[n][k]
    zval = rows[n][ncols]  # current objective value

    while True:
        enter = next((k for k in range(ncols) if zrow[k] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r in range(n + 1):
            coef = rows[r][enter]
            if coef > 0:
                ratio = rows[r][ncols] / coef
                if best is None or ratio < best or (
                        ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:
            # cannot happen: phase-1 objective is bounded below by 0
            raise ArithmeticError("unbounded phase-1 simplex")
        piv = rows[leave][enter]
        rows[leave] = [x / piv for x in rows[leave]]
        for r in range(n + 1):
            if r != leave and rows[r][enter]:
                f = rows[r][enter]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[leave])]
        if zrow[enter]:
            f = zrow[enter]
            zval += f * rows[leave][ncols]
            zrow = [x - f * y for x, y in zip(zrow, rows[leave])]
        basis[leave] = enter

    if zval == 0:
        sol = [Fraction(0)] * ncols
        for r, b in enumerate(basis):
            sol[b] = rows[r][ncols]
        weights = tuple(sol[:m])
        slack = tuple(sol[m:m + n])
        return ("inside", weights, slack)

    # infeasible; dual y from the slack columns' reduced costs.  At
    # optimality y_j = zrow[m + j] >= 0, y.g_i >= zval + y.a for every i,
    # hence y separates the point from the polyhedron.
    y = tuple(max(zrow[m + j], Fraction(0)) for j in range(n))
    return ("outside", y)
