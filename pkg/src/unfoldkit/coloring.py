"""Foldability: proper vertex colorings with dim+1 colors and colored skeleta."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .complex import SimplicialComplex, from_facets, induced_faces, is_strongly_connected
from .errors import ImproperColoringError, NotStronglyConnectedError


@dataclass(frozen=True)
class VertexColoring:
    colors: dict[int, int] = field(hash=False)

    @property
    def num_colors(self) -> int:
        return len(set(self.colors.values()))

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def vertices_colored(self, color_set) -> set[int]:
        wanted = set(color_set)
        return {v for v, c in self.colors.items() if c in wanted}

    def permuted(self, perm: dict[int, int]) -> "VertexColoring":
        return VertexColoring({v: perm[c] for v, c in self.colors.items()})


def _as_map(coloring) -> dict[int, int]:
    return coloring.colors if isinstance(coloring, VertexColoring) else dict(coloring)


def is_proper(K: SimplicialComplex, coloring) -> bool:
    """True if the coloring is total on V(K) and no facet repeats a color."""
    colors = _as_map(coloring)
    if any(v not in colors for v in K.vertices):
        return False
    # every edge lies in a facet, so checking facets checks the 1-skeleton
    return all(len({colors[v] for v in f}) == len(f) for f in K.facets if f)


def find_foldable_coloring(K: SimplicialComplex) -> VertexColoring | None:
    """Propagate the colors 0..d of the first facet along the dual graph.

    On a strongly connected complex a (d+1)-coloring is unique up to
    renaming, so a conflict during propagation proves none exists.
    """
    if not is_strongly_connected(K):
        raise NotStronglyConnectedError("foldability test needs a strongly connected complex")
    colors = {v: c for c, v in enumerate(K.facets[0])}
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in K.neighbors[i]:
            if j in seen:
                continue
            seen.add(j)
            queue.append(j)
            (old,) = set(K.facets[i]) - set(K.facets[j])
            (new,) = set(K.facets[j]) - set(K.facets[i])
            if colors.setdefault(new, colors[old]) != colors[old]:
                return None
    coloring = VertexColoring(colors)
    return coloring if is_proper(K, coloring) else None


def colored_skeleton(K: SimplicialComplex, coloring, color_set) -> SimplicialComplex:
    """Subcomplex induced by the vertices whose color lies in ``color_set``.

    Raises ``NonPureError`` if the induced subcomplex is not pure, which
    cannot happen for a foldable coloring.
    """
    if not is_proper(K, coloring):
        raise ImproperColoringError("coloring is not proper")
    colors = _as_map(coloring)
    wanted = set(color_set)
    if not wanted:
        raise ValueError("color set must be nonempty")
    keep = {v for v in K.vertices if colors[v] in wanted}
    return from_facets(induced_faces(K, keep))
