import pytest
from helpers import STARRED_TRIANGLE, TETRA_BOUNDARY, brute_unfolding_components

from unfoldkit.complex import boundary, euler_characteristic, f_vector, from_facets
from unfoldkit.errors import NotLocallyStronglyConnectedError, NotSimplicialError, PathMismatchError
from unfoldkit.gallery import ENTRIES, cross_polytope_boundary, hopf_sphere
from unfoldkit.homology import z2_betti
from unfoldkit.projectivities import group_of_projectivities
from unfoldkit.unfolding import (
    as_simplicial_complex,
    barycentric_of_component,
    component_euler_characteristic,
    component_of,
    components,
    lift_path,
    partial_unfolding,
    projection_vertex_map,
    verify_cover,
)


@pytest.fixture
def starred():
    return partial_unfolding(from_facets(STARRED_TRIANGLE))


class TestStarred:
    def test_sizes(self, starred):
        assert len(starred.labeled) == 9
        assert sorted(c.facet_count for c in components(starred)) == [3, 6]

    def test_apex_component(self, starred):
        cid = component_of(starred, (0, 1, 2), 0)
        c = starred.components[cid]
        assert c.facet_count == 3 and c.sheets == 1
        assert all(starred.labeled[m][1] == 0 for m in c.members)

    def test_v1_v2_together(self, starred):
        assert component_of(starred, (0, 1, 2), 1) == component_of(starred, (0, 1, 2), 2)

    def test_lift_transposition(self, starred):
        K = starred.base
        loop = [K.index((0, 1, 2)), K.index((0, 2, 3)), K.index((0, 1, 3)), K.index((0, 1, 2))]
        assert lift_path(starred, loop, (loop[0], 1)) == (loop[0], 2)

    def test_lift_fixed_label(self, starred):
        assert lift_path(starred, [0, 1, 2, 0], (0, 0)) == (0, 0)

    def test_lift_back_and_forth(self, starred):
        assert lift_path(starred, [0, 1, 0], (0, 2)) == (0, 2)

    def test_lift_mismatch(self, starred):
        with pytest.raises(PathMismatchError):
            lift_path(starred, [1, 0], (0, 0))
        with pytest.raises(PathMismatchError):
            lift_path(starred, [0, 1], (0, 3))

    def test_nontrivial_component_is_disk(self, starred):
        cid = component_of(starred, (0, 1, 2), 1)
        C = as_simplicial_complex(starred, cid)
        assert C.n_facets == 6 and euler_characteristic(C) == 1
        bd = boundary(C)
        assert bd.n_facets == 6 and z2_betti(bd) == (1, 1)

    def test_trivial_component_is_base(self, starred):
        cid = component_of(starred, (0, 1, 2), 0)
        C = as_simplicial_complex(starred, cid)
        vmap = projection_vertex_map(starred, cid)
        assert sorted(tuple(sorted(vmap[v] for v in f)) for f in C.facets) == list(starred.base.facets)

    def test_barycentric_counts(self, starred):
        trivial = component_of(starred, (0, 1, 2), 0)
        other = 1 - trivial
        assert barycentric_of_component(starred, trivial).n_facets == 18
        B = barycentric_of_component(starred, other)
        assert B.n_facets == 36 and euler_characteristic(B) == 1
        assert component_euler_characteristic(starred, other) == 1

    def test_cover(self, starred):
        R = verify_cover(starred)
        assert R.ok
        big = next(c for c in R.components if c.sheets == 2)
        assert big.facet_preimages_ok and big.branch == {(0,): 1}


class TestFoldable:
    def test_cross_polytope_components(self):
        K = cross_polytope_boundary(3)
        U = partial_unfolding(K)
        assert len(U.components) == 3
        for c in U.components:
            C = as_simplicial_complex(U, c.id)
            vmap = projection_vertex_map(U, c.id)
            assert sorted(tuple(sorted(vmap[v] for v in f)) for f in C.facets) == list(K.facets)

    def test_cover_single_sheets(self):
        R = verify_cover(partial_unfolding(cross_polytope_boundary(3)))
        assert R.ok and all(c.sheets == 1 and not c.branch for c in R.components)


class TestHopf:
    def test_components(self):
        U = partial_unfolding(hopf_sphere())
        assert len(U.labeled) == 36
        assert [c.facet_count for c in U.components] == [18, 18]

    def test_components_are_simplicial_spheres(self):
        U = partial_unfolding(hopf_sphere())
        for c in U.components:
            assert z2_betti(as_simplicial_complex(U, c.id)) == (1, 0, 0, 1)
            assert z2_betti(barycentric_of_component(U, c.id)) == (1, 0, 0, 1)
        assert f_vector(as_simplicial_complex(U, 0)) == [9, 27, 36, 18]

    def test_cover_branches_over_one_triangle_each(self):
        K = hopf_sphere()
        R = verify_cover(partial_unfolding(K))
        assert R.ok
        a_edges = {(0, 1), (0, 2), (1, 2)}
        b_edges = {(3, 4), (3, 5), (4, 5)}
        branches = sorted(set(c.branch) for c in R.components)
        assert sorted(map(sorted, branches)) == sorted([sorted(a_edges), sorted(b_edges)])
        assert all(c.sheets == 2 for c in R.components)


class TestTetra:
    def test_single_component(self):
        U = partial_unfolding(from_facets(TETRA_BOUNDARY))
        assert [c.facet_count for c in U.components] == [12]
        assert U.components[0].sheets == 3


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: f"{e.name}{e.params}")
def test_components_match_networkx(entry):
    K = entry.build()
    U = partial_unfolding(K)
    ours = sorted(sorted(U.labeled[m] for m in c.members) for c in U.components)
    assert ours == brute_unfolding_components(K.facets)
    # component count equals number of orbits on the base facet
    assert len(U.components) == len(group_of_projectivities(K).orbits)


def test_requires_lsc():
    with pytest.raises(NotLocallyStronglyConnectedError):
        partial_unfolding(from_facets([[1, 2, 3], [3, 4, 5]]))


def test_barycentric_flag_count():
    U = partial_unfolding(hopf_sphere())
    for c in U.components:
        assert barycentric_of_component(U, c.id).n_facets == 24 * c.facet_count


PSEUDO_SIMPLICIAL = [
    (0, 2, 3, 5), (0, 2, 4, 5), (0, 2, 4, 6), (0, 3, 4, 5), (1, 2, 4, 5), (1, 2, 4, 6),
    (1, 2, 5, 6), (1, 3, 5, 6), (2, 3, 4, 6), (2, 3, 5, 6), (2, 4, 5, 6), (3, 4, 5, 6),
]


def _quotient_collision(facets):
    """networkx quotient: is there a pair of distinct glued faces with equal vertex classes?"""
    import itertools

    import networkx as nx

    from helpers import _neighbors, _persp

    facets, adj = _neighbors(facets)
    verts, faces = nx.Graph(), nx.Graph()
    for i, f in enumerate(facets):
        for v in f:
            lf = (i, v)
            for r in range(1, len(f) + 1):
                for s in itertools.combinations(f, r):
                    faces.add_node((lf, s))
            for u in f:
                verts.add_node((lf, u))
        for j in adj[i]:
            ridge = tuple(sorted(set(f) & set(facets[j])))
            p = _persp(f, facets[j])
            for v in f:
                a, b = (i, v), (j, p(v))
                for u in ridge:
                    verts.add_edge((a, u), (b, u))
                for r in range(1, len(ridge) + 1):
                    for s in itertools.combinations(ridge, r):
                        faces.add_edge((a, s), (b, s))
    vclass = {n: k for k, comp in enumerate(nx.connected_components(verts)) for n in comp}
    seen = {}
    for k, comp in enumerate(nx.connected_components(faces)):
        lf, s = next(iter(comp))
        key = frozenset(vclass[(lf, u)] for u in s)
        if key in seen and seen[key] != k:
            return True
        seen[key] = k
    return False


def test_pseudo_simplicial_component_is_detected():
    K = from_facets(PSEUDO_SIMPLICIAL)
    U = partial_unfolding(K)
    with pytest.raises(NotSimplicialError) as exc:
        for c in U.components:
            as_simplicial_complex(U, c.id)
    a, b = exc.value.witness
    assert a[0] == b[0] and a != b
    assert _quotient_collision(K.facets)
    # the barycentric subdivision is always a simplicial complex
    for c in U.components:
        B = barycentric_of_component(U, c.id)
        assert B.n_facets == 24 * c.facet_count


def test_simplicial_gallery_has_no_collision():
    for e in ENTRIES:
        assert not _quotient_collision(e.build().facets)
