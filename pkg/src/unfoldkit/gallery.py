"""Named example complexes with their expected properties."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from .complex import SimplicialComplex, Face, cone, f_vector, from_facets, join, odd_subcomplex
from .errors import BadParamsError, UnknownNameError
from .subdivision import build_ck


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex on vertices 0..n."""
    if n < 1:
        raise BadParamsError("simplex_boundary needs n >= 1")
    return from_facets(itertools.combinations(range(n + 1), n))


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-dimensional cross-polytope; +v_i = i, -v_i = i + d."""
    if d < 1:
        raise BadParamsError("cross_polytope_boundary needs d >= 1")
    return from_facets(
        [i + d * s for i, s in enumerate(signs)] for signs in itertools.product((0, 1), repeat=d)
    )


def cross_polytope_coloring(d: int) -> dict[int, int]:
    return {i + d * s: i for i in range(d) for s in (0, 1)}


def ck(k: int) -> SimplicialComplex:
    if k < 1:
        raise BadParamsError("c_k needs k >= 1")
    return build_ck(k)


def starred_polygon(n: int) -> SimplicialComplex:
    """Cone with apex 0 over the n-cycle on 1..n."""
    if n < 3:
        raise BadParamsError("starred_polygon needs n >= 3")
    cycle = from_facets([i, i % n + 1] for i in range(1, n + 1))
    return cone(cycle, 0)


def hopf_sphere() -> SimplicialComplex:
    """Join of two triangle boundaries, on {0,1,2} and {3,4,5}."""
    return join(simplex_boundary(2), from_facets(itertools.combinations((3, 4, 5), 2)))


def moebius6() -> SimplicialComplex:
    """Six-triangle Moebius strip: a strip with top 1,2,3,4 and bottom 4,5,6,1."""
    return from_facets([[1, 2, 4], [2, 4, 5], [2, 3, 5], [3, 5, 6], [3, 4, 6], [1, 4, 6]])


def torus7() -> SimplicialComplex:
    """Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    tri = [sorted({i, (i + 1) % 7, (i + 3) % 7}) for i in range(7)]
    tri += [sorted({i, (i + 2) % 7, (i + 3) % 7}) for i in range(7)]
    return from_facets(tri)


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    params: tuple[int, ...]
    expected: dict = field(hash=False)

    def build(self) -> SimplicialComplex:
        return BUILDERS[self.name][0](*self.params)


# name -> (builder, number of integer parameters)
BUILDERS: dict[str, tuple[Callable[..., SimplicialComplex], int]] = {
    "simplex_boundary": (simplex_boundary, 1),
    "cross_polytope_boundary": (cross_polytope_boundary, 1),
    "c_k": (ck, 1),
    "starred_polygon": (starred_polygon, 1),
    "hopf_sphere": (hopf_sphere, 0),
    "moebius6": (moebius6, 0),
    "torus7": (torus7, 0),
}


def gallery(name: str, *params: int) -> SimplicialComplex:
    try:
        builder, arity = BUILDERS[name]
    except KeyError:
        raise UnknownNameError(f"unknown gallery complex {name!r}") from None
    if len(params) != arity:
        raise BadParamsError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


# Expected properties, checked by `gallery --verify-all` and the test suite.
# "odd" is the number of odd co-dimension 2 faces; orbit sizes are sorted.
ENTRIES: tuple[GalleryEntry, ...] = (
    GalleryEntry("simplex_boundary", (2,), {"f_vector": [3, 3], "odd": 1, "order": 2, "orbits": [2]}),
    GalleryEntry("simplex_boundary", (3,), {"f_vector": [4, 6, 4], "odd": 4, "order": 6, "orbits": [3]}),
    GalleryEntry("simplex_boundary", (4,), {"f_vector": [5, 10, 10, 5], "odd": 10, "order": 24, "orbits": [4]}),
    GalleryEntry("cross_polytope_boundary", (2,), {"f_vector": [4, 4], "odd": 0, "order": 1, "orbits": [1, 1]}),
    GalleryEntry("cross_polytope_boundary", (3,), {"f_vector": [6, 12, 8], "odd": 0, "order": 1, "orbits": [1, 1, 1]}),
    GalleryEntry("cross_polytope_boundary", (4,), {"f_vector": [8, 24, 32, 16], "odd": 0, "order": 1, "orbits": [1, 1, 1, 1]}),
    GalleryEntry("c_k", (2,), {"f_vector": [6, 12, 7], "odd": 0, "order": 1, "orbits": [1, 1, 1]}),
    GalleryEntry("starred_polygon", (3,), {"f_vector": [4, 6, 3], "odd": 1, "order": 2, "orbits": [1, 2]}),
    GalleryEntry("starred_polygon", (4,), {"f_vector": [5, 8, 4], "odd": 0, "order": 1, "orbits": [1, 1, 1]}),
    GalleryEntry("starred_polygon", (5,), {"f_vector": [6, 10, 5], "odd": 1, "order": 2, "orbits": [1, 2]}),
    GalleryEntry("hopf_sphere", (), {"f_vector": [6, 15, 18, 9], "odd": 6, "order": 4, "orbits": [2, 2]}),
    GalleryEntry("moebius6", (), {"f_vector": [6, 12, 6], "odd": 0, "order": 2, "orbits": [1, 2]}),
    GalleryEntry("torus7", (), {"f_vector": [7, 21, 14], "odd": 0, "order": 3, "orbits": [3]}),
)


def verify_entry(entry: GalleryEntry) -> list[str]:
    """Mismatches between an entry's expected record and the live modules."""
    from .projectivities import group_of_projectivities

    K = entry.build()
    G = group_of_projectivities(K)
    seen = {
        "f_vector": f_vector(K),
        "odd": len(odd_subcomplex(K)),
        "order": G.order,
        "orbits": sorted(len(o) for o in G.orbits),
    }
    return [f"{key}: expected {entry.expected[key]}, got {seen[key]}" for key in seen if seen[key] != entry.expected[key]]


def odd_faces_of(K: SimplicialComplex) -> list[Face]:
    return odd_subcomplex(K)
