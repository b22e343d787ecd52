import io as stdio
import json

import pytest
from helpers import MOEBIUS, STARRED_TRIANGLE

from unfoldkit import io
from unfoldkit.cli import main
from unfoldkit.coloring import find_foldable_coloring
from unfoldkit.complex import f_vector, from_facets, odd_subcomplex
from unfoldkit.errors import BadParamsError, ParseError, UnknownNameError
from unfoldkit.gallery import (
    ENTRIES,
    cross_polytope_boundary,
    cross_polytope_coloring,
    gallery,
    hopf_sphere,
    verify_entry,
)


def run(*argv):
    out, err = stdio.StringIO(), stdio.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestGallery:
    @pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: f"{e.name}{e.params}")
    def test_expected_records(self, entry):
        assert verify_entry(entry) == []

    def test_hopf(self):
        K = gallery("hopf_sphere")
        assert f_vector(K) == [6, 15, 18, 9]
        odd = odd_subcomplex(K)
        assert {v for e in odd for v in e} == set(range(6)) and len(odd) == 6

    def test_starred(self):
        K = gallery("starred_polygon", 3)
        assert K.n_facets == 3 and odd_subcomplex(K) == [(0,)]
        assert K == from_facets(STARRED_TRIANGLE)

    def test_cross_polytope(self):
        K = gallery("cross_polytope_boundary", 3)
        assert K.n_facets == 8 and find_foldable_coloring(K) is not None

    def test_moebius(self):
        assert gallery("moebius6") == from_facets(MOEBIUS)

    def test_errors(self):
        with pytest.raises(UnknownNameError):
            gallery("klein_bottle")
        with pytest.raises(BadParamsError):
            gallery("hopf_sphere", 3)
        with pytest.raises(BadParamsError):
            gallery("starred_polygon", 2)


class TestIO:
    @pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: f"{e.name}{e.params}")
    def test_round_trip(self, entry, tmp_path):
        K = entry.build()
        path = tmp_path / "k.json"
        io.write(path, K, name=entry.name)
        text = path.read_bytes()
        doc = io.read(path)
        assert doc.complex == K and doc.name == entry.name
        io.write(path, doc.complex, doc.coloring, doc.name)
        assert path.read_bytes() == text

    def test_round_trip_with_coloring(self, tmp_path):
        K = cross_polytope_boundary(3)
        path = tmp_path / "c.json"
        io.write(path, K, cross_polytope_coloring(3))
        doc = io.read(path)
        assert doc.coloring.colors == cross_polytope_coloring(3)
        assert io.dumps(doc.complex, doc.coloring) == path.read_text()

    def test_non_pure_is_parse_error(self):
        text = '{\n  "dim": 2,\n  "facets": [[1, 2, 3], [1, 2]]\n}\n'
        with pytest.raises(ParseError) as exc:
            io.loads(text)
        assert exc.value.field == "facets" and exc.value.line == 3
        assert "NonPureError" in str(exc.value)

    def test_improper_coloring_rejected(self):
        text = io.dumps(from_facets([[1, 2, 3]]), {1: 0, 2: 0, 3: 1})
        with pytest.raises(ParseError) as exc:
            io.loads(text)
        assert exc.value.field == "coloring"

    @pytest.mark.parametrize(
        "text,field",
        [
            ('{"dim": 1, "facets": [[1, 2]], "extra": 1}', "extra"),
            ('{"dim": 2, "facets": [[1, 2]]}', "dim"),
            ('{"facets": [[1, "a"]]}', "facets"),
            ('{"dim": 1}', "facets"),
            ('{"facets": [[1, 2]], "coloring": {"x": 1}}', "coloring"),
            ('{"facets": [[1, 2]], "name": 3}', "name"),
        ],
    )
    def test_field_diagnostics(self, text, field):
        with pytest.raises(ParseError) as exc:
            io.loads(text)
        assert exc.value.field == field

    def test_bad_json_has_line(self):
        with pytest.raises(ParseError) as exc:
            io.loads('{\n  "dim": 1,\n  "facets": [[1, 2],\n}')
        assert exc.value.line is not None


class TestCLI:
    def test_unfold_starred_file(self, tmp_path):
        path = tmp_path / "s.json"
        io.write(path, from_facets(STARRED_TRIANGLE))
        code, out, _ = run("--json", "unfold", str(path))
        assert code == 0
        comps = json.loads(out)["components"]
        assert sorted((c["facets"], c["sheets"]) for c in comps) == [(3, 1), (6, 2)]

    def test_group_hopf(self):
        code, out, _ = run("group", "gallery:hopf_sphere", "--json")
        rep = json.loads(out)
        assert code == 0 and rep["order"] == 4 and rep["orbit_sizes"] == [2, 2]

    def test_odd_cross_polytope(self):
        code, out, _ = run("odd", "gallery:cross_polytope_boundary:3")
        assert code == 0 and out.strip() == "empty"

    def test_color_not_foldable(self):
        assert run("color", "gallery:simplex_boundary:3")[1].strip() == "not foldable"

    def test_all_subcommands_succeed(self, tmp_path):
        for argv in (
            ["info", "gallery:torus7"],
            ["homology", "gallery:hopf_sphere"],
            ["verify-cover", "gallery:starred_polygon:5"],
            ["subdivide", "gallery:starred_polygon:3", "--op", "barycentric", "--out", str(tmp_path / "b.json")],
            ["subdivide", "gallery:starred_polygon:3", "--op", "antiprismatic", "--face", "0,1"],
            ["gallery", "--verify-all"],
            ["gallery", "c_k", "2"],
            ["unfold", "gallery:hopf_sphere", "--check-paths", "10", "--out", str(tmp_path / "u")],
        ):
            assert run(*argv)[0] == 0, argv
        assert io.read(tmp_path / "b.json").coloring is not None
        assert (tmp_path / "u" / "component_1.json").exists()

    def test_prescribe_and_fillball(self, tmp_path):
        from helpers import OCTAHEDRON, OCTAHEDRON_4COLORING, disk_arc_fixture

        K, col, F, pair, ends = disk_arc_fixture()
        io.write(tmp_path / "k.json", K, col)
        io.write(tmp_path / "f.json", F)
        code, out, _ = run("--json", "prescribe", "--complex", str(tmp_path / "k.json"),
                           "--surface", str(tmp_path / "f.json"), "--pair", f"{pair[0]},{pair[1]}")
        assert code == 0 and json.loads(out)["odd_faces"] == [list(e) for e in ends]
        io.write(tmp_path / "s.json", from_facets(OCTAHEDRON), OCTAHEDRON_4COLORING)
        code, out, _ = run("--json", "fillball", "--sphere", str(tmp_path / "s.json"))
        assert code == 0 and json.loads(out)["euler_characteristic"] == 1

    def test_fillball_cells(self, tmp_path):
        doc = {
            "cells": [[{"boundary": []}] * 3, [{"boundary": [0, 1]}, {"boundary": [1, 2]}, {"boundary": [0, 2]}],
                      [{"boundary": [0, 1, 2]}, {"boundary": [0, 1, 2]}]],
            "triangulations": {"0:0": [[0]], "0:1": [[1]], "0:2": [[2]]},
            "coloring": {"0": 0, "1": 1, "2": 2},
        }
        (tmp_path / "x.json").write_text(json.dumps(doc))
        code, out, _ = run("fillball", "--cells", str(tmp_path / "x.json"))
        assert code == 0 and "top skeleton chi: 2" in out

    def test_exit_codes(self, tmp_path):
        assert run()[0] == 2
        assert run("bogus")[0] == 2
        assert run("info", str(tmp_path / "missing.json"))[0] == 2
        assert run("subdivide", "gallery:hopf_sphere", "--op", "stellar")[0] == 2
        assert run("group", "gallery:nope")[0] == 1
        bad = tmp_path / "bad.json"
        bad.write_text('{"facets": [[1, 2], [1, 2, 3]]}')
        code, _, err = run("info", str(bad))
        assert code == 1 and "facets" in err
        code, out, _ = run("--json", "group", "gallery:nope")
        assert code == 1 and json.loads(out)["error"] == "UnknownNameError"

    def test_flags_before_and_after_subcommand(self):
        a = run("--json", "--seed", "5", "unfold", "gallery:starred_polygon:3", "--check-paths", "5")[1]
        b = run("unfold", "gallery:starred_polygon:3", "--check-paths", "5", "--json", "--seed", "5")[1]
        assert a == b and json.loads(a)["path_checks"]["seed"] == 5

    def test_output_stable(self):
        argv = ("unfold", "gallery:hopf_sphere", "--check-paths", "25")
        assert run(*argv) == run(*argv)
