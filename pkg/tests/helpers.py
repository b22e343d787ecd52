"""Independent oracles and shared fixtures for the test suite.

The oracles deliberately avoid the library's own algorithms: faces come from
raw subset enumeration, bipartiteness and components from networkx, ranks
from dense GF(2) elimination, and groups from exhaustive state search.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx

from unfoldkit.complex import SimplicialComplex, from_facets
from unfoldkit.subdivision import barycentric

# --- fixtures --------------------------------------------------------------

STARRED_TRIANGLE = [[0, 1, 2], [0, 2, 3], [0, 1, 3]]  # apex v0 = 0
TETRA_BOUNDARY = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]
MOEBIUS = [[1, 2, 4], [2, 4, 5], [2, 3, 5], [3, 5, 6], [3, 4, 6], [1, 4, 6]]
ANNULUS = [[1, 2, 4], [2, 4, 5], [2, 3, 5], [3, 5, 6], [1, 3, 6], [1, 4, 6]]  # boundary 1-2-3 and 4-5-6
OCTAHEDRON = [[a, b, c] for a in (0, 3) for b in (1, 4) for c in (2, 5)]
OCTAHEDRON_4COLORING = {0: 0, 3: 3, 1: 1, 4: 1, 2: 2, 5: 2}


def lattice_disk(n: int = 6):
    """Triangulated n x n square, vertex (i, j) -> i*(n+1)+j, 3-colored by (i-j) mod 3."""
    vid = lambda i, j: i * (n + 1) + j  # noqa: E731
    tris = []
    for i in range(n):
        for j in range(n):
            tris.append([vid(i, j), vid(i + 1, j), vid(i, j + 1)])
            tris.append([vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1)])
    col = {vid(i, j): (i - j) % 3 for i in range(n + 1) for j in range(n + 1)}
    return from_facets(tris), col, vid


def disk_arc_fixture():
    """Foldable disk plus a staircase arc avoiding color 2, pair (1, 2)."""
    K, col, vid = lattice_disk(6)
    path = [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3), (4, 4)]
    F = from_facets([vid(*a), vid(*b)] for a, b in zip(path, path[1:]))
    return K, col, F, (1, 2), sorted((vid(*p),) for p in (path[0], path[-1]))


def sphere_disk_fixture():
    """Barycentric subdivision of the boundary of the 4-simplex, with the
    subdivided triangle {0,1,2} as surface; pair (2, 3)."""
    S = from_facets(itertools.combinations(range(5), 4))
    B, rec = barycentric(S)
    ident = {(v,): v for v in range(5)}
    nxt = 5
    for size in range(2, 5):
        for f in S.faces(size):
            ident[f] = nxt
            nxt += 1
    t = (0, 1, 2)
    F = from_facets(
        [ident[tuple(sorted(o[:k]))] for k in range(1, 4)] for o in itertools.permutations(t)
    )
    # boundary circle of F: flags (vertex, edge) inside the triangle boundary
    circle = sorted(
        tuple(sorted((ident[(v,)], ident[e]))) for e in itertools.combinations(t, 2) for v in e
    )
    return B, rec.coloring, F, (2, 3), circle


# --- oracles ---------------------------------------------------------------

def all_faces(facets) -> set[tuple[int, ...]]:
    out = set()
    for f in facets:
        f = sorted(f)
        for r in range(1, len(f) + 1):
            out.update(itertools.combinations(f, r))
    return out


def brute_f_vector(facets) -> list[int]:
    faces = all_faces(facets)
    top = max(len(f) for f in faces)
    return [sum(1 for f in faces if len(f) == r) for r in range(1, top + 1)]


def gf2_rank_dense(matrix: list[list[int]]) -> int:
    m = [row[:] for row in matrix]
    rank, cols = 0, len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c] % 2), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] % 2:
                m[r] = [(a + b) % 2 for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def brute_betti(facets) -> tuple[int, ...]:
    faces = all_faces(facets)
    top = max(len(f) for f in faces)
    by = {r: sorted(f for f in faces if len(f) == r) for r in range(1, top + 1)}
    ranks = {}
    for r in range(2, top + 1):
        index = {g: i for i, g in enumerate(by[r - 1])}
        rows = []
        for f in by[r]:
            row = [0] * len(by[r - 1])
            for g in itertools.combinations(f, r - 1):
                row[index[g]] = 1
            rows.append(row)
        ranks[r] = gf2_rank_dense(rows)
    out = []
    for r in range(1, top + 1):
        n = len(by[r])
        out.append(n - ranks.get(r, 0) - ranks.get(r + 1, 0))
    return tuple(out)


def brute_odd(facets) -> list[tuple[int, ...]]:
    facets = [tuple(sorted(f)) for f in facets]
    d1 = len(facets[0])
    candidates = {g for f in facets for g in itertools.combinations(f, d1 - 2)}
    odd = []
    for g in candidates:
        G = nx.Graph()
        for f in facets:
            if set(g) <= set(f):
                u, v = sorted(set(f) - set(g))
                G.add_edge(u, v)
        if not nx.is_bipartite(G):
            odd.append(g)
    return sorted(odd)


def _persp(sigma, tau):
    (out,) = set(sigma) - set(tau)
    (inn,) = set(tau) - set(sigma)
    return lambda v: inn if v == out else v


def _neighbors(facets):
    facets = [tuple(sorted(f)) for f in facets]
    adj = {i: [] for i in range(len(facets))}
    for i, j in itertools.combinations(range(len(facets)), 2):
        if len(set(facets[i]) & set(facets[j])) == len(facets[i]) - 1:
            adj[i].append(j)
            adj[j].append(i)
    return facets, adj


def brute_group(facets, base: int = 0) -> set[tuple[int, ...]]:
    """All projectivities base -> base, as tuples of images of the sorted
    base vertices, by exhaustive search over (facet, bijection) states."""
    facets, adj = _neighbors(facets)
    start = (base, facets[base])
    seen = {start}
    stack = [start]
    while stack:
        i, images = stack.pop()
        for j in adj[i]:
            p = _persp(facets[i], facets[j])
            state = (j, tuple(p(v) for v in images))
            if state not in seen:
                seen.add(state)
                stack.append(state)
    return {images for i, images in seen if i == base}


def brute_unfolding_components(facets) -> list[list[tuple[int, int]]]:
    """Connected components of labeled facets glued by matching perspectivities."""
    facets, adj = _neighbors(facets)
    G = nx.Graph()
    for i, f in enumerate(facets):
        for v in f:
            G.add_node((i, v))
        for j in adj[i]:
            p = _persp(f, facets[j])
            for v in f:
                G.add_edge((i, v), (j, p(v)))
    return sorted(sorted(c) for c in nx.connected_components(G))


def random_closed_path(K: SimplicialComplex, rng: random.Random, base: int = 0, max_len: int = 40) -> list[int]:
    """A random walk from ``base`` closed by a random walk biased back home."""
    dist = nx.single_source_shortest_path_length(
        nx.Graph([(i, j) for i in range(K.n_facets) for j in K.neighbors[i]]), base
    )
    path = [base]
    for _ in range(rng.randint(0, max_len)):
        path.append(rng.choice(K.neighbors[path[-1]]))
    while path[-1] != base or len(path) == 1:
        here = path[-1]
        closer = [j for j in K.neighbors[here] if dist[j] < dist[here]]
        path.append(rng.choice(closer) if closer and rng.random() < 0.8 else rng.choice(K.neighbors[here]))
    return path
