"""Prescribing the odd subcomplex and extending colored triangulations.

``prescribe_odd`` realizes the boundary of a colored co-dimension 1
surface as the odd subcomplex by stellar subdivision of edges in a
two-colored skeleton.  ``extend_coloring_ball`` fills a colored sphere
with a colored ball, and ``extend_cw`` does so cell by cell over a
regular CW complex of dimension at most 4.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from .coloring import VertexColoring, is_proper
from .complex import (
    EMPTY,
    Face,
    SimplicialComplex,
    _components,
    boundary,
    cone,
    from_facets,
    is_closed_pseudomanifold,
    is_strongly_connected,
    odd_subcomplex,
)
from .errors import (
    BoundaryNotSphereLikeError,
    ImproperColoringError,
    NotRegularError,
    NotSeparatingError,
    NotSphereLikeError,
    TargetMismatchError,
)
from .homology import classify_sphere_ball, is_manifold_heuristic
from .projectivities import is_transposition, odd_face_generators
from .subdivision import SubdivisionRecord, stellar_subdivide


def _colors(coloring) -> dict[int, int]:
    return coloring.colors if isinstance(coloring, VertexColoring) else dict(coloring)


# --- prescribing the odd subcomplex ---------------------------------------

@dataclass(frozen=True)
class PrescriptionInput:
    complex: SimplicialComplex
    coloring: dict[int, int] = field(hash=False)
    surface: SimplicialComplex
    pair: tuple[int, int]  # (i_{d-1}, i_d)

    @property
    def lower_colors(self) -> set[int]:
        return set(self.coloring.values()) - set(self.pair)


class PrescriptionResult(NamedTuple):
    complex: SimplicialComplex
    coloring: VertexColoring
    records: list[SubdivisionRecord]


def prescription_target(inp: PrescriptionInput) -> list[Face]:
    """The co-dimension 2 faces of cl(∂F \\ ∂K)."""
    bd_K = boundary(inp.complex)
    bd_F = boundary(inp.surface)
    if bd_F.is_empty:
        return []
    return sorted(g for g in bd_F.facets if bd_K.is_empty or not bd_K.has_face(g))


def validate_input(inp: PrescriptionInput) -> None:
    K, F, col = inp.complex, inp.surface, inp.coloring
    d = K.dim
    hi, top = inp.pair
    if d < 2:
        raise ValueError("prescription needs dimension >= 2")
    if not is_strongly_connected(K) or not is_manifold_heuristic(K).passes:
        raise ValueError("base must be a strongly connected manifold")
    if not is_proper(K, col) or len(set(col.values())) != d + 1:
        raise ImproperColoringError("base needs a proper (d+1)-coloring")
    if hi == top or {hi, top} - set(col.values()):
        raise ValueError(f"color pair {inp.pair} must be two distinct colors of the base")
    if F.dim != d - 1:
        raise ValueError("surface must have co-dimension 1")
    for g in F.facets:
        if not K.has_face(g):
            raise ValueError(f"surface facet {g} is not a face of the base")
        if any(col[v] == top for v in g):
            raise ValueError(f"surface facet {g} leaves the skeleton avoiding color {top}")
    if not is_manifold_heuristic(F).passes:
        raise ValueError("surface fails the manifold check")
    for g in prescription_target(inp):
        if any(col[v] == hi for v in g):
            raise ValueError(f"boundary face {g} is not in the lower-colored skeleton")


def sides_of(K: SimplicialComplex, v: int, F: SimplicialComplex) -> tuple[list[Face], list[Face]]:
    """Split st_K(v) along st_F(v); side A holds the smallest facet."""
    cut = {g for g in F.facets if v in g} if not F.is_empty else set()
    members = list(K.facets_containing((v,)))
    inside = set(members)
    adj = {
        i: [j for j in K.neighbors[i] if j in inside and K.shared_ridge(i, j) not in cut]
        for i in members
    }
    parts = _components(members, adj)
    if len(parts) != 2:
        raise NotSeparatingError(f"st_F({v}) splits the vertex star into {len(parts)} parts")
    a, b = sorted(parts)
    return [K.facets[i] for i in a], [K.facets[i] for i in b]


def selected_edges(inp: PrescriptionInput) -> list[Face]:
    """Two-colored edges to subdivide, one side per vertex, reduced mod 2."""
    K, F, col = inp.complex, inp.surface, inp.coloring
    hi, top = inp.pair
    picked: Counter[Face] = Counter()
    for v in sorted(u for u in F.vertices if col[u] == hi):
        side, _ = sides_of(K, v, F)
        ends = {w for sigma in side for w in sigma if col[w] == top}
        for w in ends:
            picked[tuple(sorted((v, w)))] += 1
    return sorted(e for e, n in picked.items() if n % 2)


def prescribe_odd(inp: PrescriptionInput) -> PrescriptionResult:
    validate_input(inp)
    target = prescription_target(inp)
    K = inp.complex
    colors = dict(inp.coloring)
    new_color = max(colors.values()) + 1
    records = []
    for e in selected_edges(inp):
        K, rec = stellar_subdivide(K, e)
        (m,) = rec.fresh_vertices
        colors[m] = new_color
        records.append(rec)
    odd = odd_subcomplex(K)
    if odd != target:
        raise TargetMismatchError(f"odd subcomplex {odd} differs from target {target}")
    if not is_proper(K, colors):
        raise TargetMismatchError("extended coloring is not proper")
    return PrescriptionResult(K, VertexColoring(colors), records)


def exchange_failures(K: SimplicialComplex, coloring, pair: tuple[int, int]) -> list[str]:
    """Odd-face loops at an unsubdivided base facet that are not the swap of
    its ``pair``-colored vertices."""
    col = _colors(coloring)
    palette = set(pair)
    base = next(i for i, s in enumerate(K.facets) if palette <= {col[v] for v in s})
    sigma = K.facets[base]
    want = tuple(sorted(sigma.index(v) for v in sigma if col[v] in palette))
    bad = []
    for g in odd_face_generators(K, base):
        moved = tuple(i for i, j in enumerate(g.perm) if i != j)
        if not is_transposition(g.perm) or moved != want:
            bad.append(f"loop around {g.origin} moves positions {moved}")
    return bad


# --- extending colorings over balls and cells -----------------------------

def extend_coloring_ball(
    S: SimplicialComplex, coloring, fresh_start: int | None = None
) -> tuple[SimplicialComplex, VertexColoring]:
    """Cone over ``S`` then subdivide monochromatic edges color by color."""
    col = {v: c for v, c in _colors(coloring).items() if v in set(S.vertices)}
    if not is_proper(S, col):
        raise ImproperColoringError("sphere coloring is not proper")
    kind, verdict = classify_sphere_ball(S)
    if not is_closed_pseudomanifold(S) or kind != "sphere" or not verdict.passes:
        raise NotSphereLikeError("boundary complex is not sphere-like")
    d = S.dim + 1
    used = sorted(set(col.values()))
    nxt = max(S.vertices) + 1 if fresh_start is None else fresh_start
    apex = nxt
    B = cone(S, apex)
    nxt += 1
    if len(used) <= d:
        col[apex] = next(c for c in range(len(used) + 1) if c not in used)
        return B, VertexColoring(col)
    order = used[: d + 1]
    col[apex] = order[0]
    for i in range(1, d + 1):
        mono = [e for e in B.faces(2) if col[e[0]] == col[e[1]] == order[i - 1]]
        for e in mono:
            B, _ = stellar_subdivide(B, e, apex=nxt)
            col[nxt] = order[i]
            nxt += 1
    if not is_proper(B, col) or boundary(B) != S:
        raise ImproperColoringError("filled ball is not properly colored")  # pragma: no cover
    return B, VertexColoring(col)


@dataclass(frozen=True)
class CellComplex:
    """Regular CW complex: ``cells[l][a]`` lists the (l-1)-cells bounding cell a."""

    cells: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.cells) - 1

    def validate(self) -> None:
        if self.dim > 4:
            raise NotRegularError("cell complexes above dimension 4 are not supported")
        for l, layer in enumerate(self.cells):
            for a, bd in enumerate(layer):
                if l == 0 and bd:
                    raise NotRegularError(f"0-cell {a} has a boundary")
                if l > 0:
                    if len(set(bd)) != len(bd) or not bd:
                        raise NotRegularError(f"cell {l}:{a} has a repeated or empty boundary")
                    if any(not 0 <= b < len(self.cells[l - 1]) for b in bd):
                        raise NotRegularError(f"cell {l}:{a} references a missing cell")
                if l == 1 and len(bd) != 2:
                    raise NotRegularError(f"1-cell {a} must have two distinct endpoints")


@dataclass
class CellTriangulation:
    cells: dict[tuple[int, int], SimplicialComplex]
    coloring: dict[int, int]

    def skeleton(self, dim: int) -> SimplicialComplex:
        facets = {f for (l, _), T in self.cells.items() if l == dim for f in T.facets}
        return from_facets(sorted(facets)) if facets else EMPTY


def _cell_boundary(X: CellComplex, tri: dict, l: int, a: int) -> SimplicialComplex:
    facets = set()
    for b in X.cells[l][a]:
        facets.update(tri[(l - 1, b)].facets)
    return from_facets(sorted(facets))


def extend_cw(
    X: CellComplex, cells: dict[tuple[int, int], SimplicialComplex], coloring
) -> CellTriangulation:
    """Extend a colored triangulation of a subcomplex to all of ``X``.

    Cells are filled skeleton by skeleton; each missing l-cell gets a
    colored ball over its already triangulated boundary sphere.
    """
    X.validate()
    tri = dict(cells)
    col = dict(_colors(coloring))
    for key, T in tri.items():
        l, a = key
        if l > 0:
            if any((l - 1, b) not in tri for b in X.cells[l][a]):
                raise NotRegularError(f"triangulated cell {l}:{a} has an untriangulated boundary cell")
            if boundary(T) != _cell_boundary(X, tri, l, a):
                raise NotRegularError(f"triangulation of cell {l}:{a} does not match its boundary cells")
    verts = {v for T in tri.values() for v in T.vertices}
    nxt = max(verts) + 1 if verts else 0
    for l, layer in enumerate(X.cells):
        for a in range(len(layer)):
            if (l, a) in tri:
                continue
            if l == 0:
                tri[(0, a)] = from_facets([[nxt]])
                col[nxt] = 0
                nxt += 1
                continue
            S = _cell_boundary(X, tri, l, a)
            kind, verdict = classify_sphere_ball(S)
            if kind != "sphere" or not verdict.passes:
                raise BoundaryNotSphereLikeError(f"boundary of cell {l}:{a} is not a sphere")
            B, bcol = extend_coloring_ball(S, col, fresh_start=nxt)
            tri[(l, a)] = B
            col.update(bcol.colors)
            nxt = max(B.vertices) + 1
    return CellTriangulation(tri, col)
