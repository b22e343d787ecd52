"""Stellar, barycentric and anti-prismatic subdivisions with provenance records."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .complex import Face, SimplicialComplex, from_facets
from .errors import NotAFaceError


@dataclass(frozen=True)
class SubdivisionStep:
    face: Face
    fresh: tuple[int, ...]  # stellar: (v_f,); anti-prismatic: the -v_i in face order


@dataclass(frozen=True)
class SubdivisionRecord:
    kind: str  # stellar | barycentric | antiprismatic_face | antiprismatic_full
    face: Face | None
    fresh_vertices: tuple[int, ...]
    facet_map: dict[Face, list[Face]] = field(hash=False)
    steps: tuple[SubdivisionStep, ...] = ()
    coloring: dict[int, int] | None = field(default=None, hash=False)


def _fresh_start(K: SimplicialComplex) -> int:
    return max(K.vertices) + 1


def _check_face(K: SimplicialComplex, f) -> Face:
    f = tuple(sorted(f))
    if not f or not K.has_face(f):
        raise NotAFaceError(f"{f} is not a face of the complex")
    return f


def _stellar_facets(K: SimplicialComplex, f: Face, apex: int) -> tuple[list[Face], dict[Face, list[Face]]]:
    fs = set(f)
    hit = set(K.facets_containing(f))
    out, fmap = [], {}
    for i, sigma in enumerate(K.facets):
        if i in hit:
            new = [tuple(sorted([v for v in sigma if v != u] + [apex])) for u in f]
            fmap[sigma] = new
            out.extend(new)
        else:
            out.append(sigma)
    return out, fmap


def stellar_subdivide(K: SimplicialComplex, f, apex: int | None = None):
    """Replace st(f) by v_f * ∂f * lk(f) for a fresh vertex v_f."""
    f = _check_face(K, f)
    if len(f) < 2:
        raise NotAFaceError("stellar subdivision needs a face with at least two vertices")
    apex = _fresh_start(K) if apex is None else apex
    facets, fmap = _stellar_facets(K, f, apex)
    record = SubdivisionRecord("stellar", f, (apex,), fmap, (SubdivisionStep(f, (apex,)),))
    return from_facets(facets), record


def barycentric(K: SimplicialComplex):
    """Order complex of the face poset.

    Original vertices keep their ids; higher faces get fresh ids by
    dimension, then lexicographically.  The record carries the coloring of
    each new vertex by the dimension of the face it subdivides.
    """
    ident: dict[Face, int] = {(v,): v for v in K.vertices}
    nxt = _fresh_start(K)
    for size in range(2, K.dim + 2):
        for f in K.faces(size):
            ident[f] = nxt
            nxt += 1
    fmap = {}
    facets = []
    for sigma in K.facets:
        flags = [
            tuple(sorted(ident[tuple(sorted(order[:k]))] for k in range(1, len(order) + 1)))
            for order in itertools.permutations(sigma)
        ]
        fmap[sigma] = flags
        facets.extend(flags)
    coloring = {ident[f]: len(f) - 1 for f in ident}
    fresh = tuple(sorted(v for f, v in ident.items() if len(f) > 1))
    return from_facets(facets), SubdivisionRecord("barycentric", None, fresh, fmap, (), coloring)


def build_ck(k: int, plus: tuple[int, ...] | None = None, minus: tuple[int, ...] | None = None) -> SimplicialComplex:
    """Cross-polytope boundary of dimension k minus the all-plus facet.

    ``plus``/``minus`` name the vertices +v_i and -v_i; by default +v_i = i
    and -v_i = k + 1 + i.
    """
    if k < 1:
        raise ValueError("c_k needs k >= 1")
    plus = tuple(range(k + 1)) if plus is None else tuple(plus)
    minus = tuple(range(k + 1, 2 * k + 2)) if minus is None else tuple(minus)
    facets = [
        [minus[i] if s else plus[i] for i, s in enumerate(signs)]
        for signs in itertools.product((0, 1), repeat=k + 1)
        if any(signs)
    ]
    return from_facets(facets)


def _antiprismatic_step(K: SimplicialComplex, f: Face, start: int):
    minus = tuple(range(start, start + len(f)))
    ck = build_ck(len(f) - 1, plus=f, minus=minus)
    hit = set(K.facets_containing(f))
    facets = [sigma for i, sigma in enumerate(K.facets) if i not in hit]
    fmap: dict[Face, list[Face]] = {}
    fs = set(f)
    for i in sorted(hit):
        sigma = K.facets[i]
        rest = tuple(v for v in sigma if v not in fs)
        new = [tuple(sorted(c + rest)) for c in ck.facets]
        fmap[sigma] = new
        facets.extend(new)
    return facets, fmap, minus


def antiprismatic_face(K: SimplicialComplex, f, start: int | None = None):
    """a_f(K) = (K \\ st(f)) ∪ (c_k * lk(f)); +v_i are the vertices of f."""
    f = _check_face(K, f)
    if len(f) < 2:
        raise NotAFaceError("anti-prismatic subdivision needs a face of dimension >= 1")
    start = _fresh_start(K) if start is None else start
    facets, fmap, minus = _antiprismatic_step(K, f, start)
    record = SubdivisionRecord("antiprismatic_face", f, minus, fmap, (SubdivisionStep(f, minus),))
    return from_facets(facets), record


def antiprismatic(K: SimplicialComplex):
    """Anti-prismatically subdivide every original face, facets down to edges.

    Within one dimension faces are processed in lexicographic order.  The
    facet map sends each original facet to the final facets descending
    from it.
    """
    current = K
    origin = {sigma: sigma for sigma in K.facets}
    steps = []
    fresh: list[int] = []
    for size in range(K.dim + 1, 1, -1):
        for f in K.faces(size):
            facets, fmap, minus = _antiprismatic_step(current, f, _fresh_start(current))
            for old, new in fmap.items():
                src = origin.pop(old)
                for g in new:
                    origin[g] = src
            current = from_facets(facets)
            steps.append(SubdivisionStep(f, minus))
            fresh.extend(minus)
    final_map: dict[Face, list[Face]] = {sigma: [] for sigma in K.facets}
    for g, src in sorted(origin.items()):
        final_map[src].append(g)
    return current, SubdivisionRecord("antiprismatic_full", None, tuple(fresh), final_map, tuple(steps))


def map_face(record: SubdivisionRecord, g) -> list[Face]:
    """Top-dimensional pieces of the image of the face ``g``."""
    pieces = [tuple(sorted(g))]
    if record.kind == "barycentric":
        raise ValueError("face images are not tracked for barycentric subdivision")
    for step in record.steps:
        out = []
        f = step.face
        for h in pieces:
            if not set(f) <= set(h):
                out.append(h)
                continue
            rest = tuple(v for v in h if v not in f)
            if record.kind == "stellar":
                (apex,) = step.fresh
                out.extend(tuple(sorted([v for v in f if v != u] + [apex] + list(rest))) for u in f)
            else:
                ck = build_ck(len(f) - 1, plus=f, minus=step.fresh)
                out.extend(tuple(sorted(c + rest)) for c in ck.facets)
        pieces = out
    return sorted(pieces)
