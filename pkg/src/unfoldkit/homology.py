"""Z/2 homology and link-recursive manifold / sphere recognition."""

from __future__ import annotations

from .complex import (
    SimplicialComplex,
    Verdict,
    boundary,
    euler_characteristic,
    is_pseudomanifold,
    is_strongly_connected,
    link,
    weakest,
)

BettiVector = tuple[int, ...]


def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of a matrix given as integer bit-rows."""
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = r
                rank += 1
                break
            r ^= p
    return rank


def boundary_rows(K: SimplicialComplex, size: int) -> list[int]:
    """Boundary map from faces with ``size`` vertices, one bitmask per face."""
    lower = {f: i for i, f in enumerate(K.faces(size - 1))}
    rows = []
    for f in K.faces(size):
        mask = 0
        for k in range(size):
            mask |= 1 << lower[f[:k] + f[k + 1:]]
        rows.append(mask)
    return rows


def z2_betti(K: SimplicialComplex) -> BettiVector:
    if K.is_empty:
        return ()
    counts = [len(K.faces(s)) for s in range(1, K.dim + 2)]
    ranks = [0] + [gf2_rank(boundary_rows(K, s)) for s in range(2, K.dim + 2)] + [0]
    betti = tuple(counts[i] - ranks[i] - ranks[i + 1] for i in range(K.dim + 1))
    assert sum((-1) ** i * b for i, b in enumerate(betti)) == euler_characteristic(K)
    return betti


def classify_sphere_ball(L: SimplicialComplex) -> tuple[str | None, Verdict]:
    """Decide whether ``L`` is a sphere or a ball.

    Exact up to dimension 2.  From dimension 3 on the answer rests on
    pseudomanifold structure, Z/2 Betti numbers and recursively checked
    vertex links, and is reported as ``YES_HEURISTIC``.
    """
    if L.is_empty:
        return "sphere", Verdict.YES
    if L.dim == 0:
        n = len(L.vertices)
        if n in (1, 2):
            return ("ball" if n == 1 else "sphere"), Verdict.YES
        return None, Verdict.NO
    if not is_strongly_connected(L) or not is_pseudomanifold(L):
        return None, Verdict.NO

    bd = boundary(L)
    kind = "sphere" if bd.is_empty else "ball"
    verdicts = []
    if kind == "ball":
        bkind, bverdict = classify_sphere_ball(bd)
        if bkind != "sphere" or bverdict is Verdict.NO:
            return None, Verdict.NO
        verdicts.append(bverdict)
    on_boundary = set(bd.vertices)
    for v in L.vertices:
        lkind, lverdict = classify_sphere_ball(link(L, (v,)))
        expected = "ball" if v in on_boundary else "sphere"
        if lverdict is Verdict.NO or lkind != expected:
            return None, Verdict.NO
        verdicts.append(lverdict)

    if L.dim == 1:
        return kind, weakest(verdicts)
    if L.dim == 2:
        chi = euler_characteristic(L)
        if chi != (2 if kind == "sphere" else 1):
            return None, Verdict.NO
        return kind, weakest(verdicts)

    betti = z2_betti(L)
    pattern = (1,) + (0,) * (L.dim - 1) + ((1,) if kind == "sphere" else (0,))
    if betti != pattern:
        return None, Verdict.NO
    return kind, weakest(verdicts + [Verdict.YES_HEURISTIC])


def is_manifold_heuristic(K: SimplicialComplex) -> Verdict:
    """Every vertex link is a sphere or a ball (exact for links up to dim 2)."""
    if K.is_empty:
        return Verdict.NO
    if K.dim == 0:
        return Verdict.YES
    on_boundary = set(boundary(K).vertices)
    verdicts = []
    for v in K.vertices:
        kind, verdict = classify_sphere_ball(link(K, (v,)))
        if verdict is Verdict.NO:
            return Verdict.NO
        if kind != ("ball" if v in on_boundary else "sphere"):
            return Verdict.NO
        verdicts.append(verdict)
    return weakest(verdicts)


def is_sphere_like(K: SimplicialComplex) -> Verdict:
    kind, verdict = classify_sphere_ball(K)
    return verdict if kind == "sphere" else Verdict.NO


def is_ball_like(K: SimplicialComplex) -> Verdict:
    kind, verdict = classify_sphere_ball(K)
    return verdict if kind == "ball" else Verdict.NO
