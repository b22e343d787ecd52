"""Pure abstract simplicial complexes and the structural queries built on them.

A complex is stored as its canonical facet list: vertices are non-negative
integers, every facet is a sorted tuple, and the facet tuple is sorted
lexicographically.  Two complexes are equal iff their canonical forms agree.
"""

from __future__ import annotations

import enum
import itertools
from collections import defaultdict, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DuplicateFacetError,
    EmptyInputError,
    NonPureError,
    NotAFaceError,
    NotLocallyStronglyConnectedError,
    NotPseudomanifoldError,
    VertexClashError,
)

Face = tuple[int, ...]


class Verdict(enum.Enum):
    """Tri-state answer, with heuristic acceptance kept apart from exact Yes."""

    NO = 0
    UNKNOWN = 1
    YES_HEURISTIC = 2
    YES = 3

    @property
    def passes(self) -> bool:
        return self in (Verdict.YES, Verdict.YES_HEURISTIC)

    def __str__(self) -> str:
        return {
            Verdict.NO: "no",
            Verdict.UNKNOWN: "unknown",
            Verdict.YES_HEURISTIC: "yes (heuristic)",
            Verdict.YES: "yes",
        }[self]


def weakest(verdicts: Iterable[Verdict]) -> Verdict:
    """Combine verdicts conjunctively; an empty input counts as exact Yes."""
    return min(verdicts, key=lambda v: v.value, default=Verdict.YES)


@dataclass(frozen=True)
class SimplicialComplex:
    dim: int
    vertices: tuple[int, ...]
    facets: tuple[Face, ...]

    @property
    def is_empty(self) -> bool:
        return self.dim < 0

    @property
    def n_facets(self) -> int:
        return 0 if self.is_empty else len(self.facets)

    def to_lists(self) -> list[list[int]]:
        return [list(f) for f in self.facets] if not self.is_empty else []

    @cached_property
    def _facet_index(self) -> dict[Face, int]:
        return {f: i for i, f in enumerate(self.facets)}

    def index(self, facet: Iterable[int]) -> int:
        key = tuple(sorted(facet))
        try:
            return self._facet_index[key]
        except KeyError:
            raise NotAFaceError(f"{key} is not a facet") from None

    def incidence(self, size: int) -> dict[Face, tuple[int, ...]]:
        """Map every face with ``size`` vertices to the facets containing it."""
        return self._incidence_tables.setdefault(size, self._build_incidence(size))

    @cached_property
    def _incidence_tables(self) -> dict[int, dict[Face, tuple[int, ...]]]:
        return {}

    def _build_incidence(self, size: int) -> dict[Face, tuple[int, ...]]:
        table: dict[Face, list[int]] = defaultdict(list)
        if self.is_empty or size > self.dim + 1 or size < 0:
            return {}
        for i, sigma in enumerate(self.facets):
            for f in itertools.combinations(sigma, size):
                table[f].append(i)
        return {f: tuple(ix) for f, ix in sorted(table.items())}

    def faces(self, size: int) -> list[Face]:
        return list(self.incidence(size))

    def facets_containing(self, face: Iterable[int]) -> tuple[int, ...]:
        f = tuple(sorted(face))
        hits = self.incidence(len(f)).get(f)
        if not hits:
            raise NotAFaceError(f"{f} is not a face of the complex")
        return hits

    def has_face(self, face: Iterable[int]) -> bool:
        f = tuple(sorted(face))
        return f in self.incidence(len(f))

    @cached_property
    def ridges(self) -> dict[Face, tuple[int, ...]]:
        return self.incidence(self.dim)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Dual-graph adjacency: facet index -> sorted neighbouring facet indices."""
        adj: list[set[int]] = [set() for _ in range(self.n_facets)]
        for hits in self.ridges.values():
            for i, j in itertools.combinations(hits, 2):
                adj[i].add(j)
                adj[j].add(i)
        return tuple(tuple(sorted(a)) for a in adj)

    def shared_ridge(self, i: int, j: int) -> Face | None:
        common = set(self.facets[i]) & set(self.facets[j])
        if i == j or len(common) != self.dim:
            return None
        return tuple(sorted(common))


EMPTY = SimplicialComplex(dim=-1, vertices=(), facets=((),))


def from_facets(facet_lists: Iterable[Iterable[int]]) -> SimplicialComplex:
    facets = []
    for entry in facet_lists:
        verts = [int(v) for v in entry]
        if any(v < 0 for v in verts):
            raise ValueError(f"vertex ids must be non-negative: {verts}")
        if len(set(verts)) != len(verts):
            raise ValueError(f"facet repeats a vertex: {verts}")
        facets.append(tuple(sorted(verts)))
    if not facets or all(len(f) == 0 for f in facets):
        raise EmptyInputError("a complex needs at least one nonempty facet")
    sizes = {len(f) for f in facets}
    if len(sizes) != 1:
        raise NonPureError(f"facets of mixed cardinalities {sorted(sizes)}")
    if len(set(facets)) != len(facets):
        dup = next(f for f in facets if facets.count(f) > 1)
        raise DuplicateFacetError(f"facet {dup} listed twice")
    facets.sort()
    vertices = tuple(sorted({v for f in facets for v in f}))
    return SimplicialComplex(dim=len(facets[0]) - 1, vertices=vertices, facets=tuple(facets))


def _complex_or_empty(facets: Sequence[Iterable[int]]) -> SimplicialComplex:
    facets = [f for f in facets]
    if not facets or all(len(tuple(f)) == 0 for f in facets):
        return EMPTY
    return from_facets(facets)


def star(K: SimplicialComplex, f: Iterable[int]) -> SimplicialComplex:
    return from_facets(K.facets[i] for i in K.facets_containing(f))


def link(K: SimplicialComplex, f: Iterable[int]) -> SimplicialComplex:
    face = set(f)
    return _complex_or_empty(
        [tuple(v for v in K.facets[i] if v not in face) for i in K.facets_containing(face)]
    )


@dataclass(frozen=True)
class DualGraph:
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int, Face], ...]


def dual_graph(K: SimplicialComplex) -> DualGraph:
    edges = []
    for ridge, hits in K.ridges.items():
        for i, j in itertools.combinations(hits, 2):
            edges.append((i, j, ridge))
    edges.sort()
    return DualGraph(nodes=tuple(range(K.n_facets)), edges=tuple(edges))


def _components(nodes: Iterable[int], adjacency) -> list[list[int]]:
    """Connected components of the subgraph induced on ``nodes``."""
    pool = set(nodes)
    comps = []
    for start in sorted(pool):
        if start not in pool:
            continue
        pool.discard(start)
        comp, queue = [start], deque([start])
        while queue:
            x = queue.popleft()
            for y in adjacency[x]:
                if y in pool:
                    pool.discard(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_strongly_connected(K: SimplicialComplex) -> bool:
    if K.is_empty:
        return True
    return len(_components(range(K.n_facets), K.neighbors)) == 1


def is_locally_strongly_connected(K: SimplicialComplex) -> bool:
    return _first_disconnected_star(K) is None


def _first_disconnected_star(K: SimplicialComplex) -> Face | None:
    for size in range(1, K.dim):
        for f, hits in K.incidence(size).items():
            if len(hits) > 1 and len(_components(hits, K.neighbors)) > 1:
                return f
    return None


def is_nice(K: SimplicialComplex) -> Verdict:
    """Yes for connected complexes passing the manifold check, No when
    (locally) strong connectivity fails, Unknown otherwise."""
    from .homology import is_manifold_heuristic

    if not is_strongly_connected(K) or not is_locally_strongly_connected(K):
        return Verdict.NO
    return Verdict.YES if is_manifold_heuristic(K).passes else Verdict.UNKNOWN


def is_bipartite(edges: Iterable[tuple[int, int]]) -> bool:
    adj: dict[int, list[int]] = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    side: dict[int, int] = {}
    for root in adj:
        if root in side:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def link_graph_edges(K: SimplicialComplex, f: Face) -> list[tuple[int, int]]:
    """Edges of the link of a co-dimension 2 face ``f``."""
    fs = set(f)
    return [
        tuple(v for v in K.facets[i] if v not in fs)  # type: ignore[misc]
        for i in K.facets_containing(f)
    ]


def odd_subcomplex(K: SimplicialComplex) -> list[Face]:
    """Co-dimension 2 faces whose link graph is not bipartite."""
    if not is_locally_strongly_connected(K):
        raise NotLocallyStronglyConnectedError("odd subcomplex needs a locally strongly connected complex")
    if K.dim < 1:
        return []
    return [f for f in K.faces(K.dim - 1) if not is_bipartite(link_graph_edges(K, f))]


def boundary(K: SimplicialComplex) -> SimplicialComplex:
    if K.dim < 1:
        return EMPTY
    return _complex_or_empty([r for r, hits in K.ridges.items() if len(hits) == 1])


def is_pseudomanifold(K: SimplicialComplex) -> bool:
    """Every ridge lies in at most two facets."""
    return all(len(h) <= 2 for h in K.ridges.values())


def is_closed_pseudomanifold(K: SimplicialComplex) -> bool:
    if K.is_empty:
        return False
    return all(len(h) == 2 for h in K.ridges.values())


def is_orientable(K: SimplicialComplex) -> Verdict:
    """Coherent orientation search by propagation over the dual graph."""
    if not is_pseudomanifold(K):
        raise NotPseudomanifoldError("a ridge lies in three or more facets")
    if K.dim < 1:
        return Verdict.YES
    # sign of the ridge orientation induced by facet i with orientation s
    def induced(i: int, ridge: Face, s: int) -> int:
        (missing,) = set(K.facets[i]) - set(ridge)
        return s * (-1) ** K.facets[i].index(missing)

    orient: dict[int, int] = {}
    for root in range(K.n_facets):
        if root in orient:
            continue
        orient[root] = 1
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in K.neighbors[i]:
                ridge = K.shared_ridge(i, j)
                want = -induced(i, ridge, orient[i]) * induced(j, ridge, 1)
                if j not in orient:
                    orient[j] = want
                    queue.append(j)
                elif orient[j] != want:
                    return Verdict.NO
    return Verdict.YES


def f_vector(K: SimplicialComplex) -> list[int]:
    if K.is_empty:
        return []
    return [len(K.incidence(size)) for size in range(1, K.dim + 2)]


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** i * n for i, n in enumerate(f_vector(K)))


def _fresh(K: SimplicialComplex, count: int = 1) -> list[int]:
    start = (max(K.vertices) + 1) if K.vertices else 0
    return list(range(start, start + count))


def cone(K: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    if apex is None:
        (apex,) = _fresh(K)
    if apex in K.vertices:
        raise VertexClashError(f"apex {apex} already a vertex")
    return from_facets(f + (apex,) for f in K.facets)


def suspension(
    K: SimplicialComplex, north: int | None = None, south: int | None = None
) -> SimplicialComplex:
    if north is None or south is None:
        north, south = _fresh(K, 2)
    if north == south or {north, south} & set(K.vertices):
        raise VertexClashError("suspension points must be distinct fresh vertices")
    return from_facets([f + (p,) for p in (north, south) for f in K.facets])


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    if set(K.vertices) & set(L.vertices):
        raise VertexClashError("joined complexes must have disjoint vertex sets")
    if K.is_empty and L.is_empty:
        return EMPTY
    return from_facets(f + g for f in K.facets for g in L.facets)


def induced_faces(K: SimplicialComplex, keep: Iterable[int]) -> list[Face]:
    """Inclusion-maximal faces of the subcomplex induced on ``keep``."""
    keep = set(keep)
    traces = {tuple(v for v in f if v in keep) for f in K.facets}
    traces.discard(())
    maximal = [t for t in traces if not any(set(t) < set(u) for u in traces)]
    return sorted(maximal)


def relabel(K: SimplicialComplex, mapping: dict[int, int]) -> SimplicialComplex:
    return from_facets([mapping[v] for v in f] for f in K.facets)
