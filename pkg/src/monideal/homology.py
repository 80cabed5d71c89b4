"""Simplicial complexes and exact reduced homology ranks.

Boundary matrices are integer; ranks come from fraction-free Bareiss
elimination, so the ranks are the characteristic-zero Betti ranks with
no numerical error.
"""

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed face set on a vertex subset of 0..n-1.

    The void complex (no faces) and the irrelevant complex (only the
    empty face) are distinct values.
    """

    vertices: frozenset
    faces: frozenset  # frozensets of vertex indices; includes frozenset()

    @classmethod
    def from_faces(cls, faces):
        closed = set()
        for f in faces:
            f = frozenset(f)
            for k in range(len(f) + 1):
                closed.update(map(frozenset, itertools.combinations(f, k)))
        verts = frozenset(v for f in closed for v in f)
        return cls(verts, frozenset(closed))

    def is_void(self):
        return not self.faces

    def dim(self):
        """Dimension, or None for the void complex."""
        if self.is_void():
            return None
        return max(len(f) for f in self.faces) - 1


def bareiss_rank(matrix):
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(row) for row in matrix]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        rank += 1
        r += 1
        if r == rows:
            break
    return rank


def _boundary_matrix(lower, upper):
    """Integer matrix of the boundary map from `upper` (d-faces) to
    `lower` ((d-1)-faces), both given as sorted lists of sorted tuples."""
    index = {f: i for i, f in enumerate(lower)}
    mat = [[0] * len(upper) for _ in lower]
    for j, face in enumerate(upper):
        for k in range(len(face)):
            sub = face[:k] + face[k + 1:]
            mat[index[sub]][j] = (-1) ** k
    return mat


def homology_ranks(complex_):
    """Reduced homology ranks, indices -1 .. dim, as a list starting at
    index -1.  The void complex has no homology at all (empty list)."""
    if complex_.is_void():
        return []
    by_dim = {}
    for f in complex_.faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    top = max(by_dim)
    chains = [sorted(by_dim.get(d, [])) for d in range(-1, top + 1)]
    # boundary[k] maps chains[k] -> chains[k-1]; boundary[0] is into 0
    ranks_of_boundaries = [0]
    for k in range(1, len(chains)):
        ranks_of_boundaries.append(bareiss_rank(
            _boundary_matrix(chains[k - 1], chains[k])))
    ranks_of_boundaries.append(0)
    out = []
    for k in range(len(chains)):
        out.append(len(chains[k])
                   - ranks_of_boundaries[k]
                   - ranks_of_boundaries[k + 1])
    return out
