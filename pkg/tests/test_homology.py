import itertools

import pytest
from helpers import MOEBIUS, STARRED_TRIANGLE, TETRA_BOUNDARY, brute_betti

from unfoldkit.complex import Verdict, euler_characteristic, from_facets
from unfoldkit.gallery import ENTRIES, hopf_sphere, torus7
from unfoldkit.homology import (
    classify_sphere_ball,
    gf2_rank,
    is_ball_like,
    is_manifold_heuristic,
    is_sphere_like,
    z2_betti,
)


def cycle(n):
    return from_facets([i, (i + 1) % n] for i in range(n))


@pytest.mark.parametrize(
    "facets,betti",
    [(TETRA_BOUNDARY, (1, 0, 1)), (MOEBIUS, (1, 1, 0)), (STARRED_TRIANGLE, (1, 0, 0))],
)
def test_betti_examples(facets, betti):
    assert z2_betti(from_facets(facets)) == betti


def test_betti_hopf_and_torus():
    assert z2_betti(hopf_sphere()) == (1, 0, 0, 1)
    assert z2_betti(torus7()) == (1, 2, 1)


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: f"{e.name}{e.params}")
def test_betti_matches_dense_elimination(entry):
    K = entry.build()
    b = z2_betti(K)
    assert b == brute_betti(K.facets)
    assert sum((-1) ** i * x for i, x in enumerate(b)) == euler_characteristic(K)


def test_gf2_rank():
    assert gf2_rank([0b011, 0b110, 0b101]) == 2
    assert gf2_rank([]) == 0
    assert gf2_rank([0b1, 0b10, 0b100]) == 3


class TestManifold:
    def test_hopf(self):
        assert is_manifold_heuristic(hopf_sphere()).passes

    def test_starred_disk(self):
        assert is_manifold_heuristic(from_facets(STARRED_TRIANGLE)) is Verdict.YES

    def test_wedge_of_spheres_is_not(self):
        a = list(itertools.combinations((0, 1, 2, 3), 3))
        b = list(itertools.combinations((0, 4, 5, 6), 3))
        assert is_manifold_heuristic(from_facets(a + b)) is Verdict.NO

    def test_branching_edge_is_not(self):
        assert is_manifold_heuristic(from_facets([[1, 2, 3], [1, 2, 4], [1, 2, 5]])) is Verdict.NO


class TestSphereBall:
    def test_cycle(self):
        assert is_sphere_like(cycle(6)) is Verdict.YES

    def test_hopf(self):
        assert is_sphere_like(hopf_sphere()) is Verdict.YES_HEURISTIC

    def test_torus(self):
        assert is_sphere_like(torus7()) is Verdict.NO

    def test_tetra(self):
        assert is_sphere_like(from_facets(TETRA_BOUNDARY)) is Verdict.YES

    def test_disks(self):
        assert is_ball_like(from_facets(STARRED_TRIANGLE)) is Verdict.YES
        assert is_ball_like(from_facets(MOEBIUS)) is Verdict.NO

    def test_path_is_ball(self):
        assert classify_sphere_ball(from_facets([[0, 1], [1, 2]])) == ("ball", Verdict.YES)

    def test_two_cycles_not_sphere(self):
        two = from_facets([[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]])
        assert is_sphere_like(two) is Verdict.NO
