"""Perspectivities, projectivities along facet paths and groups of projectivities."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complex import (
    Face,
    SimplicialComplex,
    Verdict,
    _components,
    is_nice,
    is_strongly_connected,
    odd_subcomplex,
)
from .errors import (
    DisconnectedLinkError,
    InvalidPathError,
    NotNeighborsError,
    NotNiceError,
    NotStronglyConnectedError,
)

FacetPath = Sequence[int]
# a permutation of the base facet's vertices, by position: p[i] is the
# position of the image of base_vertices[i]
Perm = tuple[int, ...]


def _facet_id(K: SimplicialComplex, sigma) -> int:
    return sigma if isinstance(sigma, int) else K.index(sigma)


@dataclass(frozen=True)
class Projectivity:
    source: int
    target: int
    mapping: dict[int, int] = field(hash=False)

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def then(self, other: "Projectivity") -> "Projectivity":
        """``other ∘ self``."""
        if other.source != self.target:
            raise InvalidPathError("projectivities do not compose")
        return Projectivity(self.source, other.target, {v: other.mapping[w] for v, w in self.mapping.items()})

    def inverse(self) -> "Projectivity":
        return Projectivity(self.target, self.source, {w: v for v, w in self.mapping.items()})

    def is_identity(self) -> bool:
        return self.source == self.target and all(v == w for v, w in self.mapping.items())


def perspectivity(K: SimplicialComplex, sigma, tau) -> Projectivity:
    i, j = _facet_id(K, sigma), _facet_id(K, tau)
    if K.shared_ridge(i, j) is None:
        raise NotNeighborsError(f"facets {K.facets[i]} and {K.facets[j]} do not share a ridge")
    s, t = set(K.facets[i]), set(K.facets[j])
    (old,) = s - t
    (new,) = t - s
    return Projectivity(i, j, {v: (new if v == old else v) for v in K.facets[i]})


def identity(K: SimplicialComplex, sigma) -> Projectivity:
    i = _facet_id(K, sigma)
    return Projectivity(i, i, {v: v for v in K.facets[i]})


def projectivity_along(K: SimplicialComplex, path: FacetPath) -> Projectivity:
    """Composition of the perspectivities along ``path``."""
    if len(path) == 0:
        raise InvalidPathError("a facet path has at least one facet")
    ids = [_facet_id(K, s) for s in path]
    proj = identity(K, ids[0])
    for a, b in zip(ids, ids[1:]):
        try:
            proj = proj.then(perspectivity(K, a, b))
        except NotNeighborsError as exc:
            raise InvalidPathError(str(exc)) from None
    return proj


def _star_graph(K: SimplicialComplex, f: Iterable[int]) -> tuple[list[int], dict[int, list[int]]]:
    members = list(K.facets_containing(f))
    inside = set(members)
    adj = {i: [j for j in K.neighbors[i] if j in inside] for i in members}
    return members, adj


def link_is_cycle(K: SimplicialComplex, f: Iterable[int]) -> bool:
    members, adj = _star_graph(K, f)
    return (
        len(members) >= 3
        and all(len(n) == 2 for n in adj.values())
        and len(_components(members, adj)) == 1
    )


def loop_around_face(K: SimplicialComplex, f: Iterable[int], sigma) -> list[int]:
    """Closed facet path in st(f) based at ``sigma``.

    When lk(f) is a cycle the path runs once around it, stepping first to
    the smaller neighbour.  Otherwise a closed walk traversing every dual
    edge of the star is returned; its projectivity is not canonical.
    """
    f = tuple(sorted(f))
    start = _facet_id(K, sigma)
    members, adj = _star_graph(K, f)
    if start not in adj:
        raise NotNeighborsError(f"facet {K.facets[start]} does not contain {f}")
    if len(_components(members, adj)) != 1:
        raise DisconnectedLinkError(f"link of {f} is disconnected")
    if link_is_cycle(K, f):
        path, prev, cur = [start], None, start
        while True:
            nxt = min(j for j in adj[cur] if j != prev) if prev is None else next(j for j in adj[cur] if j != prev)
            path.append(nxt)
            if nxt == start:
                return path
            prev, cur = cur, nxt
    walk = [start]
    visited = {start}
    used: set[frozenset[int]] = set()

    def dfs(x: int) -> None:
        for y in adj[x]:
            e = frozenset((x, y))
            if e in used:
                continue
            used.add(e)
            walk.append(y)
            if y not in visited:
                visited.add(y)
                dfs(y)
            walk.append(x)

    dfs(start)
    return walk


def star_loops(K: SimplicialComplex, f: Iterable[int], sigma) -> list[list[int]]:
    """Closed paths based at ``sigma`` through the fundamental cycles of st(f)."""
    start = _facet_id(K, sigma)
    members, adj = _star_graph(K, f)
    if len(_components(members, adj)) != 1:
        raise DisconnectedLinkError(f"link of {tuple(f)} is disconnected")
    parent = _bfs_parents(start, adj)
    loops = []
    for x in sorted(adj):
        for y in adj[x]:
            if x < y and parent.get(y) != x and parent.get(x) != y:
                loops.append(_tree_path(parent, x) + _tree_path(parent, y)[::-1])
    return loops


def _bfs_parents(root: int, adj) -> dict[int, int | None]:
    parent: dict[int, int | None] = {root: None}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    return parent


def _tree_path(parent: dict[int, int | None], x: int) -> list[int]:
    path = [x]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


# --- permutations on positions ---------------------------------------------

def compose(p: Perm, q: Perm) -> Perm:
    """``p`` followed by ``q``."""
    return tuple(q[i] for i in p)


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def closure(generators: Iterable[Perm], degree: int) -> frozenset[Perm]:
    ident = tuple(range(degree))
    gens = [g for g in set(generators) if g != ident]
    seen = {ident}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = compose(p, g)
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return frozenset(seen)


def _orbits(generators: Iterable[Perm], degree: int) -> list[list[int]]:
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for i, j in enumerate(g):
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks: dict[int, list[int]] = {}
    for i in range(degree):
        blocks.setdefault(find(i), []).append(i)
    return sorted(blocks.values())


@dataclass(frozen=True)
class Generator:
    perm: Perm
    kind: str  # "tree_loop" or "odd_face_loop"
    origin: tuple  # dual edge (i, j) or the odd face
    path: tuple[int, ...]


@dataclass(frozen=True)
class ProjectivityGroup:
    base: int
    base_vertices: Face
    elements: frozenset[Perm]
    generators: tuple[Generator, ...]
    orbits: tuple[tuple[int, ...], ...]
    label: str = "full"

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def perm_of(self, proj: Projectivity) -> Perm:
        if proj.source != self.base or proj.target != self.base:
            raise InvalidPathError("projectivity is not a loop at the base facet")
        pos = {v: i for i, v in enumerate(self.base_vertices)}
        return tuple(pos[proj(v)] for v in self.base_vertices)

    def as_mapping(self, perm: Perm) -> dict[int, int]:
        b = self.base_vertices
        return {b[i]: b[j] for i, j in enumerate(perm)}

    def cycle_notation(self, perm: Perm) -> str:
        b = self.base_vertices
        seen, parts = set(), []
        for i in range(len(perm)):
            if i in seen or perm[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(str(b[j]))
                j = perm[j]
            parts.append("(" + " ".join(cyc) + ")")
        return "".join(parts) or "()"

    def is_subgroup_of(self, other: "ProjectivityGroup") -> bool:
        return self.base_vertices == other.base_vertices and self.elements <= other.elements


@dataclass
class _Tree:
    parent: dict[int, int | None]
    to_facet: dict[int, Projectivity]  # projectivity from the base along the tree

    def path(self, x: int) -> list[int]:
        return _tree_path(self.parent, x)


def spanning_tree(K: SimplicialComplex, base: int) -> _Tree:
    """BFS tree of the dual graph rooted at ``base``, neighbours by index."""
    parent = _bfs_parents(base, K.neighbors)
    to_facet = {base: identity(K, base)}
    for x, p in parent.items():  # BFS insertion order
        if p is not None:
            to_facet[x] = to_facet[p].then(perspectivity(K, p, x))
    return _Tree(parent, to_facet)


def _loop_perm(base_vertices: Face, proj: Projectivity) -> Perm:
    pos = {v: i for i, v in enumerate(base_vertices)}
    return tuple(pos[proj(v)] for v in base_vertices)


def _dedup(gens: list[Generator], degree: int) -> tuple[Generator, ...]:
    ident = tuple(range(degree))
    out, seen = [], set()
    for g in gens:
        if g.perm != ident and g.perm not in seen:
            seen.add(g.perm)
            out.append(g)
    return tuple(out)


def group_of_projectivities(K: SimplicialComplex, base=0) -> ProjectivityGroup:
    """Generated by one tree-conjugated loop per non-tree dual edge.

    Only non-identity generators are listed, first occurrence kept.
    """
    if not is_strongly_connected(K):
        raise NotStronglyConnectedError("group of projectivities needs a strongly connected complex")
    base = _facet_id(K, base)
    verts = K.facets[base]
    tree = spanning_tree(K, base)
    gens = []
    for i in range(K.n_facets):
        for j in K.neighbors[i]:
            if i < j and tree.parent.get(j) != i and tree.parent.get(i) != j:
                loop = tree.to_facet[i].then(perspectivity(K, i, j)).then(tree.to_facet[j].inverse())
                path = tuple(tree.path(i) + tree.path(j)[::-1])
                gens.append(Generator(_loop_perm(verts, loop), "tree_loop", (i, j), path))
    gens = _dedup(gens, len(verts))
    return _make_group(base, verts, gens, closure((g.perm for g in gens), len(verts)), "full")


def _make_group(base, verts, gens, elements, label) -> ProjectivityGroup:
    blocks = _orbits(elements, len(verts))
    orbits = tuple(tuple(verts[i] for i in blk) for blk in blocks)
    return ProjectivityGroup(base, verts, elements, gens, orbits, label)


def odd_face_generators(K: SimplicialComplex, base=0) -> list[Generator]:
    """Tree-conjugated loops around every odd co-dimension 2 face."""
    base = _facet_id(K, base)
    verts = K.facets[base]
    tree = spanning_tree(K, base)
    gens = []
    for f in odd_subcomplex(K):
        sigma = min(K.facets_containing(f))
        for loop in star_loops(K, f, sigma):
            around = tree.to_facet[sigma].then(projectivity_along(K, loop)).then(tree.to_facet[sigma].inverse())
            to_sigma = tree.path(sigma)
            path = tuple(to_sigma + loop[1:] + to_sigma[::-1][1:])
            gens.append(Generator(_loop_perm(verts, around), "odd_face_loop", f, path))
    return gens


def reduced_group(K: SimplicialComplex, base=0) -> ProjectivityGroup:
    """Subgroup generated by projectivities around the odd faces.

    The connecting path to a face may be any path, which amounts to
    conjugating by the full group; elements are therefore the normal
    closure of the listed generators.  Labeled ``"reduced"`` when the
    complex is nice and ``"generated-by-odd-loops"`` when niceness is
    unknown.
    """
    nice = is_nice(K)
    if nice is Verdict.NO:
        raise NotNiceError("reduced group needs a complex that is not known to be non-nice")
    base = _facet_id(K, base)
    verts = K.facets[base]
    gens = _dedup(odd_face_generators(K, base), len(verts))
    full = group_of_projectivities(K, base)
    conj = {compose(compose(invert(g), x.perm), g) for g in full.elements for x in gens}
    elements = closure(conj, len(verts))
    label = "reduced" if nice is Verdict.YES else "generated-by-odd-loops"
    return _make_group(base, verts, gens, elements, label)


def orbits(group: ProjectivityGroup) -> tuple[tuple[int, ...], ...]:
    return group.orbits


def is_transposition(p: Perm) -> bool:
    return sum(1 for i, j in enumerate(p) if i != j) == 2
