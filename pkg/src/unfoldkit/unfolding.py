"""The partial unfolding: labeled facet copies glued along matching ridges.

Every facet ``sigma`` of the base contributes one copy per vertex ``v``;
the copies ``(sigma, v)`` and ``(tau, w)`` of neighbouring facets are glued
along their common ridge whenever the perspectivity from ``sigma`` to
``tau`` sends ``v`` to ``w``.  The quotient is kept as glued labeled facets
plus a vertex-class union-find, so non-simplicial (pseudo-simplicial)
results stay representable.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property

from .complex import (
    Face,
    SimplicialComplex,
    Verdict,
    _components,
    from_facets,
    is_locally_strongly_connected,
    is_nice,
    odd_subcomplex,
)
from .errors import (
    NotLocallyStronglyConnectedError,
    NotSimplicialError,
    PathMismatchError,
    PseudoSimplicialViolationError,
)
from .projectivities import FacetPath, perspectivity

LabeledFacet = tuple[int, int]  # (facet index, label vertex)


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        parent = self.parent
        root = parent.setdefault(x, x)
        while root != parent[root]:
            root = parent[root]
        while x != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller key as representative for determinism
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass(frozen=True)
class Component:
    id: int
    members: tuple[int, ...]  # labeled-facet indices
    facet_count: int
    sheets: int
    orbit: tuple[int, ...]  # labels over the component's first base facet


@dataclass(frozen=True, eq=False)
class PartialUnfolding:
    base: SimplicialComplex
    labeled: tuple[LabeledFacet, ...]
    gluings: tuple[tuple[int, int, Face], ...]
    vertex_class: dict[tuple[int, int], int] = field(repr=False)
    component: tuple[int, ...] = field(repr=False)
    components: tuple[Component, ...] = ()
    _glue: dict[tuple[int, int], int] = field(default_factory=dict, repr=False)

    def lf_index(self, facet, label: int) -> int:
        i = facet if isinstance(facet, int) else self.base.index(facet)
        return i * (self.base.dim + 1) + self.base.facets[i].index(label)

    def projection(self, lf: int) -> int:
        return self.labeled[lf][0]

    def classes_of(self, lf: int) -> tuple[int, ...]:
        i = self.labeled[lf][0]
        return tuple(self.vertex_class[(lf, v)] for v in self.base.facets[i])

    @cached_property
    def face_class(self) -> dict[tuple[int, Face], int]:
        """Class id of every (labeled facet, nonempty sub-face) pair."""
        uf = _UnionFind()
        for a, b, ridge in self.gluings:
            for size in range(1, len(ridge) + 1):
                for s in itertools.combinations(ridge, size):
                    uf.union((a, s), (b, s))
        ids: dict = {}
        out = {}
        for lf, (i, _) in enumerate(self.labeled):
            sigma = self.base.facets[i]
            for size in range(1, len(sigma) + 1):
                for s in itertools.combinations(sigma, size):
                    out[(lf, s)] = ids.setdefault(uf.find((lf, s)), len(ids))
        return out


def partial_unfolding(K: SimplicialComplex) -> PartialUnfolding:
    if not is_locally_strongly_connected(K):
        raise NotLocallyStronglyConnectedError("partial unfolding needs a locally strongly connected complex")
    d1 = K.dim + 1
    labeled = tuple((i, v) for i, sigma in enumerate(K.facets) for v in sigma)
    verts_uf = _UnionFind()
    comp_uf = _UnionFind()
    gluings = []
    glue: dict[tuple[int, int], int] = {}
    for i in range(K.n_facets):
        for j in K.neighbors[i]:
            if j < i:
                continue
            persp = perspectivity(K, i, j)
            ridge = K.shared_ridge(i, j)
            for pos, v in enumerate(K.facets[i]):
                a = i * d1 + pos
                b = j * d1 + K.facets[j].index(persp(v))
                gluings.append((a, b, ridge))
                glue[(a, j)] = b
                glue[(b, i)] = a
                comp_uf.union(a, b)
                for x in ridge:
                    verts_uf.union((a, x), (b, x))

    vertex_class: dict[tuple[int, int], int] = {}
    ids: dict = {}
    for lf, (i, _) in enumerate(labeled):
        for v in K.facets[i]:
            vertex_class[(lf, v)] = ids.setdefault(verts_uf.find((lf, v)), len(ids))
        classes = [vertex_class[(lf, v)] for v in K.facets[i]]
        if len(set(classes)) != len(classes):
            raise PseudoSimplicialViolationError(
                f"labeled facet {K.facets[i]}/{labeled[lf][1]} has two vertices identified"
            )

    by_root: dict = defaultdict(list)
    for lf in range(len(labeled)):
        by_root[comp_uf.find(lf)].append(lf)
    groups = sorted(by_root.values())  # ordered by smallest member
    component = [0] * len(labeled)
    comps = []
    for cid, members in enumerate(groups):
        for lf in members:
            component[lf] = cid
        first = labeled[members[0]][0]
        orbit = tuple(v for (i, v) in (labeled[m] for m in members) if i == first)
        comps.append(Component(cid, tuple(members), len(members), len(orbit), orbit))
    return PartialUnfolding(
        base=K,
        labeled=labeled,
        gluings=tuple(gluings),
        vertex_class=vertex_class,
        component=tuple(component),
        components=tuple(comps),
        _glue=glue,
    )


def components(U: PartialUnfolding) -> tuple[Component, ...]:
    return U.components


def component_of(U: PartialUnfolding, sigma, v: int) -> int:
    return U.component[U.lf_index(sigma, v)]


def lift_path(U: PartialUnfolding, path: FacetPath, start: LabeledFacet) -> LabeledFacet:
    """Follow the gluings along ``path`` starting from the labeled facet ``start``."""
    K = U.base
    ids = [p if isinstance(p, int) else K.index(p) for p in path]
    facet, label = start
    facet = facet if isinstance(facet, int) else K.index(facet)
    if not ids or ids[0] != facet:
        raise PathMismatchError("path does not start at the starting facet")
    if label not in K.facets[facet]:
        raise PathMismatchError(f"label {label} is not a vertex of {K.facets[facet]}")
    lf = U.lf_index(facet, label)
    for nxt in ids[1:]:
        try:
            lf = U._glue[(lf, nxt)]
        except KeyError:
            raise PathMismatchError(f"no gluing from {U.labeled[lf]} into facet {nxt}") from None
    return U.labeled[lf]


def _component_face_classes(U: PartialUnfolding, cid: int) -> dict[int, tuple[Face, int]]:
    """face class id -> (base vertex set, a labeled facet containing it)."""
    out: dict[int, tuple[Face, int]] = {}
    for lf in U.components[cid].members:
        i = U.labeled[lf][0]
        sigma = U.base.facets[i]
        for size in range(1, len(sigma) + 1):
            for s in itertools.combinations(sigma, size):
                out.setdefault(U.face_class[(lf, s)], (s, lf))
    return out


def as_simplicial_complex(U: PartialUnfolding, cid: int) -> SimplicialComplex:
    """The component as a simplicial complex on vertex-class ids.

    Raises ``NotSimplicialError`` when two distinct faces of the component
    span the same vertex classes.
    """
    if not 0 <= cid < len(U.components):
        raise IndexError(f"no component {cid}")
    seen: dict[frozenset[int], tuple[int, int]] = {}
    for fc, (s, lf) in sorted(_component_face_classes(U, cid).items()):
        key = frozenset(U.vertex_class[(lf, v)] for v in s)
        if key in seen and seen[key][0] != fc:
            other = U.labeled[seen[key][1]]
            raise NotSimplicialError(
                f"faces over {s} in {other} and {U.labeled[lf]} share vertices but are distinct",
                witness=(other, U.labeled[lf]),
            )
        seen.setdefault(key, (fc, lf))
    return from_facets(U.classes_of(lf) for lf in U.components[cid].members)


def barycentric_of_component(U: PartialUnfolding, cid: int) -> SimplicialComplex:
    """Order complex of the component's face poset; always simplicial."""
    members = U.components[cid].members
    local: dict[int, int] = {}
    for fc, (s, _) in sorted(_component_face_classes(U, cid).items(), key=lambda kv: (len(kv[1][0]), kv[0])):
        local[fc] = len(local)
    facets = []
    for lf in members:
        sigma = U.base.facets[U.labeled[lf][0]]
        for order in itertools.permutations(sigma):
            facets.append([local[U.face_class[(lf, tuple(sorted(order[:k])))]] for k in range(1, len(order) + 1)])
    return from_facets(facets)


def component_euler_characteristic(U: PartialUnfolding, cid: int) -> int:
    return sum((-1) ** (len(s) - 1) for s, _ in _component_face_classes(U, cid).values())


def projection_vertex_map(U: PartialUnfolding, cid: int) -> dict[int, int]:
    """Vertex class id -> base vertex it projects to."""
    out = {}
    for lf in U.components[cid].members:
        for v in U.base.facets[U.labeled[lf][0]]:
            out[U.vertex_class[(lf, v)]] = v
    return out


@dataclass
class ComponentCover:
    id: int
    sheets: int
    facet_preimages_ok: bool
    branch: dict[Face, int]  # odd face -> number of preimage stars (< sheets)
    failures: list[str]


@dataclass
class CoverReport:
    components: list[ComponentCover]
    odd_faces: list[Face]
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures and all(not c.failures for c in self.components)


def _star_copies(U: PartialUnfolding, members: set[int], star: tuple[int, ...]) -> list[list[int]]:
    K = U.base
    in_star = set(star)
    nodes = [lf for lf in members if U.labeled[lf][0] in in_star]
    adj: dict[int, list[int]] = {}
    for lf in nodes:
        i = U.labeled[lf][0]
        adj[lf] = [U._glue[(lf, j)] for j in K.neighbors[i] if j in in_star and (lf, j) in U._glue]
    return _components(nodes, adj)


def verify_cover(U: PartialUnfolding) -> CoverReport:
    """Check the sheet structure of every component away from the odd faces.

    Per component with ``s`` sheets: every base facet has ``s`` preimages,
    and above every even co-dimension 2 face the preimage of its star splits
    into ``s`` copies each mapping bijectively onto the star.  Odd faces
    with fewer copies are recorded as branching.  Every odd face must
    branch in some component.
    """
    K = U.base
    failures: list[str] = []
    if is_nice(K) is Verdict.NO:
        failures.append("base complex is not nice")
        return CoverReport([], [], failures)
    odd = set(odd_subcomplex(K))
    codim2 = K.faces(K.dim - 1) if K.dim >= 1 else []
    reports = []
    for comp in U.components:
        s = comp.sheets
        members = set(comp.members)
        errs: list[str] = []
        counts = Counter(U.labeled[lf][0] for lf in members)
        facets_ok = all(counts.get(i, 0) == s for i in range(K.n_facets))
        if not facets_ok:
            errs.append("some base facet does not have exactly `sheets` preimages")
        branch: dict[Face, int] = {}
        for f in codim2:
            star = K.facets_containing(f)
            copies = _star_copies(U, members, star)
            bijective = all(sorted(U.labeled[lf][0] for lf in c) == sorted(star) for c in copies)
            if len(copies) == s and bijective:
                continue
            if f in odd and len(copies) < s:
                branch[f] = len(copies)
            else:
                errs.append(f"face {f}: {len(copies)} preimage stars for {s} sheets")
        reports.append(ComponentCover(comp.id, s, facets_ok, branch, errs))
    branched = set().union(*(r.branch for r in reports)) if reports else set()
    for f in sorted(odd - branched):
        failures.append(f"odd face {f} branches in no component")
    return CoverReport(reports, sorted(odd), failures)
