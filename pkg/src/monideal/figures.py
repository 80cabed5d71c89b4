"""Triangle figure for n = 3: closure generators in the degree plane.

The closure generators of the three-variable family ideal all live on
the plane a1 + a2 + a3 = 2t; projecting barycentrically gives the
classic triangle picture with the 3 ideal generators at the vertices
and the extra closure generators inside.  Renders with matplotlib and
also writes the point set as CSV.
"""

import csv
import math

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "monideal"

import matplotlib.pyplot as plt

from .family import FamilyParams, delta_set, vertex


def figure_points(t):
    """(vector, tag) pairs for the n = 3 family at parameter t, sorted;
    tag is 'vertex' for the 3 ideal generators, 'interior' otherwise."""
    p = FamilyParams(3, t)
    verts = {vertex(p, i) for i in range(3)}
    return [(a, "vertex" if a in verts else "interior")
            for a in sorted(delta_set(p))]


def _project(a):
    """Barycentric projection of a point on the plane sum(a) = const."""
    total = sum(a)
    return (a[1] + a[2] / 2.0, a[2] * math.sqrt(3) / 2.0) if total else (0.0, 0.0)


def write_csv(t, path):
    points = figure_points(t)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x1", "x2", "x3", "tag"])
        for a, tag in points:
            writer.writerow([a[0], a[1], a[2], tag])
    return points


def render_figure(t, path):
    """Draw the triangle and its lattice points to an image file (format
    chosen by extension, e.g. .svg or .png)."""
    points = figure_points(t)
    p = FamilyParams(3, t)
    corners = [_project(vertex(p, i)) for i in range(3)]

    fig, ax = plt.subplots(figsize=(5, 4.6))
    tri = corners + [corners[0]]
    ax.plot([c[0] for c in tri], [c[1] for c in tri],
            color="0.3", linewidth=1.0, zorder=1)
    for tag, marker, color, size in (("interior", "o", "tab:blue", 40),
                                     ("vertex", "s", "tab:red", 60)):
        xs = [_project(a)[0] for a, k in points if k == tag]
        ys = [_project(a)[1] for a, k in points if k == tag]
        if xs:
            ax.scatter(xs, ys, marker=marker, color=color, s=size,
                       zorder=2, label=tag)
    for a, _ in points:
        x, y = _project(a)
        ax.annotate("(%d,%d,%d)" % a, (x, y), textcoords="offset points",
                    xytext=(4, 4), fontsize=7)
    ax.set_aspect("equal")
    ax.set_axis_off()
    ax.legend(loc="upper left", fontsize=8, frameon=False)
    ax.set_title("closure generators, n=3, t=%d" % t, fontsize=10)
    fig.savefig(path, bbox_inches="tight", metadata=_metadata(path))
    plt.close(fig)
    return points


def _metadata(path):
    # strip the timestamp so identical inputs give identical bytes
    if path.endswith(".svg"):
        return {"Date": None}
    if path.endswith(".png"):
        return {"Software": None}
    return None
