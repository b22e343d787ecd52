"""Command-line interface.

Complex arguments are JSON files or ``gallery:NAME[:P1,P2,...]`` specs,
e.g. ``gallery:starred_polygon:3``.  Exit codes: 0 success, 1 domain error,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import io
from .coloring import find_foldable_coloring
from .complex import (
    Face,
    SimplicialComplex,
    euler_characteristic,
    f_vector,
    is_closed_pseudomanifold,
    is_locally_strongly_connected,
    is_nice,
    is_orientable,
    is_pseudomanifold,
    is_strongly_connected,
    odd_subcomplex,
)
from .errors import NotSimplicialError, UnfoldkitError
from .gallery import BUILDERS, ENTRIES, gallery, verify_entry
from .homology import is_manifold_heuristic, is_sphere_like, z2_betti
from .prescription import PrescriptionInput, extend_coloring_ball, extend_cw, prescribe_odd
from .projectivities import group_of_projectivities, projectivity_along, reduced_group
from .subdivision import antiprismatic, antiprismatic_face, barycentric, stellar_subdivide
from .unfolding import (
    as_simplicial_complex,
    barycentric_of_component,
    component_euler_characteristic,
    lift_path,
    partial_unfolding,
    verify_cover,
)

DEFAULT_SEED = 20240611


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse's exit code 2 but route through main
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _load(source: str) -> io.Document:
    if source.startswith("gallery:"):
        parts = source.split(":")
        name = parts[1]
        try:
            params = tuple(int(p) for p in parts[2].split(",")) if len(parts) > 2 and parts[2] else ()
        except ValueError:
            raise UsageError(f"bad gallery parameters in {source!r}") from None
        return io.Document(gallery(name, *params), None, source[len("gallery:"):])
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"no such file: {source}")
    return io.read(path)


def _faces(fs) -> list[list[int]]:
    return [list(f) for f in fs]


def _fmt_face(f: Face) -> str:
    return "{" + ",".join(map(str, f)) + "}" if f else "{}"


def _coloring_of(doc: io.Document) -> dict[int, int]:
    if doc.coloring is not None:
        return dict(doc.coloring.colors)
    found = find_foldable_coloring(doc.complex)
    if found is None:
        raise UnfoldkitError("input has no coloring and is not foldable")
    return dict(found.colors)


# --- subcommands: each returns (report dict, text lines) -------------------

def cmd_info(args):
    doc = _load(args.complex)
    K = doc.complex
    pm = is_pseudomanifold(K)
    rep = {
        "name": doc.name,
        "dim": K.dim,
        "f_vector": f_vector(K),
        "euler_characteristic": euler_characteristic(K),
        "strongly_connected": is_strongly_connected(K),
        "locally_strongly_connected": is_locally_strongly_connected(K),
        "nice": str(is_nice(K)),
        "pseudomanifold": pm,
        "closed": is_closed_pseudomanifold(K),
        "orientable": str(is_orientable(K)) if pm else None,
    }
    lines = [f"{k}: {'-' if v is None else v}" for k, v in rep.items()]
    return rep, lines


def cmd_color(args):
    doc = _load(args.complex)
    col = doc.coloring or find_foldable_coloring(doc.complex)
    if col is None:
        return {"foldable": False, "coloring": None}, ["not foldable"]
    cmap = {str(v): c for v, c in sorted(col.colors.items())}
    return {"foldable": True, "coloring": cmap}, [f"{v}: {c}" for v, c in sorted(col.colors.items())]


def cmd_odd(args):
    K = _load(args.complex).complex
    odd = odd_subcomplex(K)
    return {"odd_faces": _faces(odd)}, ([_fmt_face(f) for f in odd] or ["empty"])


def cmd_group(args):
    K = _load(args.complex).complex
    G = group_of_projectivities(K, args.base)
    R = reduced_group(K, args.base)
    gens = [G.cycle_notation(g.perm) for g in G.generators]
    rep = {
        "base_facet": list(G.base_vertices),
        "order": G.order,
        "generators": gens,
        "orbits": [list(o) for o in G.orbits],
        "orbit_sizes": sorted(len(o) for o in G.orbits),
        "reduced_order": R.order,
        "reduced_is_full": R.order == G.order,
    }
    lines = [
        f"base facet: {_fmt_face(G.base_vertices)}",
        f"order: {G.order}",
        "generators: " + (" ".join(gens) if gens else "none"),
        "orbits: " + " ".join(_fmt_face(o) for o in G.orbits),
        f"reduced group order: {R.order} ({'= full' if R.order == G.order else 'proper subgroup'})",
    ]
    return rep, lines


def _random_loop(K: SimplicialComplex, rng: random.Random, base: int, steps: int) -> list[int]:
    path = [base]
    for _ in range(steps):
        path.append(rng.choice(K.neighbors[path[-1]]))
    # walk back along a BFS tree path to close the loop
    parent = {path[-1]: None}
    queue = [path[-1]]
    for x in queue:
        for y in K.neighbors[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    x = base
    back = []
    while x is not None:
        back.append(x)
        x = parent[x]
    return path + back[::-1][1:]


def cmd_unfold(args):
    doc = _load(args.complex)
    K = doc.complex
    U = partial_unfolding(K)
    rows = []
    lines = ["id  sheets  facets  simplicial  chi  betti"]
    for c in U.components:
        try:
            C = as_simplicial_complex(U, c.id)
            simplicial = True
        except NotSimplicialError:
            C, simplicial = None, False
        B = C if simplicial else barycentric_of_component(U, c.id)
        betti = list(z2_betti(B))
        chi = component_euler_characteristic(U, c.id)
        rows.append({"id": c.id, "sheets": c.sheets, "facets": c.facet_count, "simplicial": simplicial,
                     "euler_characteristic": chi, "betti": betti, "orbit": list(c.orbit)})
        lines.append(f"{c.id:<3} {c.sheets:<7} {c.facet_count:<7} {'yes' if simplicial else 'no':<11} {chi:<4} {tuple(betti)}")
        if args.out:
            out = Path(args.out)
            out.mkdir(parents=True, exist_ok=True)
            W = barycentric_of_component(U, c.id) if args.barycentric or not simplicial else C
            io.write(out / f"component_{c.id}.json", W, name=f"component {c.id}")
    rep = {"components": rows}
    if args.check_paths:
        rng = random.Random(args.seed)
        G = group_of_projectivities(K)
        mismatches = 0
        for _ in range(args.check_paths):
            loop = _random_loop(K, rng, 0, rng.randint(1, 3 * K.n_facets))
            proj = projectivity_along(K, loop)
            for v in K.facets[0]:
                if lift_path(U, loop, (0, v))[1] != proj(v):
                    mismatches += 1
        rep["path_checks"] = {"loops": args.check_paths, "seed": args.seed, "mismatches": mismatches,
                              "group_order": G.order}
        lines.append(f"lifted {args.check_paths} random loops (seed {args.seed}): {mismatches} mismatches")
        if mismatches:
            raise UnfoldkitError(f"{mismatches} lifted loops disagree with their projectivities")
    return rep, lines


def _emit_complex(args, K, coloring=None, name=None):
    if args.out:
        io.write(args.out, K, coloring, name)
        return [f"wrote {args.out}: f-vector {f_vector(K)}"]
    return io.dumps(K, coloring, name).rstrip("\n").splitlines()


def cmd_subdivide(args):
    K = _load(args.complex).complex
    face = None
    if args.face:
        try:
            face = tuple(int(x) for x in args.face.split(","))
        except ValueError:
            raise UsageError(f"bad --face {args.face!r}") from None
    coloring = None
    if args.op == "stellar":
        if face is None:
            raise UsageError("stellar subdivision needs --face")
        L, rec = stellar_subdivide(K, face)
    elif args.op == "barycentric":
        L, rec = barycentric(K)
        coloring = rec.coloring
    else:
        L, rec = antiprismatic_face(K, face) if face else antiprismatic(K)
    rep = {"op": args.op, "face": list(face) if face else None, "fresh_vertices": list(rec.fresh_vertices),
           "f_vector": f_vector(L), "facets": _faces(L.facets)}
    if coloring is not None:
        rep["coloring"] = {str(v): c for v, c in sorted(coloring.items())}
    return rep, _emit_complex(args, L, coloring, f"{args.op} subdivision")


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--pair expects two colors 'i,j', got {text!r}") from None
    return a, b


def cmd_prescribe(args):
    doc = _load(args.complex)
    F = _load(args.surface).complex
    inp = PrescriptionInput(doc.complex, _coloring_of(doc), F, _pair(args.pair))
    res = prescribe_odd(inp)
    odd = odd_subcomplex(res.complex)
    rep = {"subdivided_edges": [list(r.face) for r in res.records], "odd_faces": _faces(odd),
           "f_vector": f_vector(res.complex), "num_colors": res.coloring.num_colors,
           "facets": _faces(res.complex.facets),
           "coloring": {str(v): c for v, c in sorted(res.coloring.colors.items())}}
    lines = [f"subdivided edges: {' '.join(_fmt_face(r.face) for r in res.records) or 'none'}",
             f"odd subcomplex: {' '.join(_fmt_face(f) for f in odd) or 'empty'}",
             f"colors: {res.coloring.num_colors}"]
    if args.out:
        io.write(args.out, res.complex, res.coloring, "prescribed")
        lines.append(f"wrote {args.out}")
    return rep, lines


def cmd_fillball(args):
    if bool(args.sphere) == bool(args.cells):
        raise UsageError("fillball needs exactly one of --sphere or --cells")
    if args.sphere:
        doc = _load(args.sphere)
        B, col = extend_coloring_ball(doc.complex, _coloring_of(doc))
        rep = {"f_vector": f_vector(B), "euler_characteristic": euler_characteristic(B),
               "facets": _faces(B.facets), "coloring": {str(v): c for v, c in sorted(col.colors.items())}}
        lines = [f"ball f-vector: {f_vector(B)}", f"chi: {euler_characteristic(B)}", f"colors: {col.num_colors}"]
        if args.out:
            io.write(args.out, B, col, "filled ball")
            lines.append(f"wrote {args.out}")
        return rep, lines
    X, cells, col = io.read_cell_complex(args.cells)
    T = extend_cw(X, cells, col)
    rep = {"cells": {f"{l}:{a}": _faces(C.facets) for (l, a), C in sorted(T.cells.items())},
           "coloring": {str(v): c for v, c in sorted(T.coloring.items())}}
    top = T.skeleton(X.dim)
    lines = [f"cells triangulated: {len(T.cells)}", f"top skeleton f-vector: {f_vector(top)}",
             f"top skeleton chi: {euler_characteristic(top)}"]
    return rep, lines


def cmd_homology(args):
    K = _load(args.complex).complex
    rep = {"f_vector": f_vector(K), "euler_characteristic": euler_characteristic(K),
           "betti": list(z2_betti(K)), "manifold": str(is_manifold_heuristic(K)),
           "sphere_like": str(is_sphere_like(K))}
    lines = [f"f-vector: {rep['f_vector']}", f"chi: {rep['euler_characteristic']}",
             f"Z/2 betti: {tuple(rep['betti'])}", f"manifold: {rep['manifold']}",
             f"sphere-like: {rep['sphere_like']}"]
    return rep, lines


def cmd_verify_cover(args):
    K = _load(args.complex).complex
    R = verify_cover(partial_unfolding(K))
    rep = {"ok": R.ok, "odd_faces": _faces(R.odd_faces), "failures": R.failures,
           "components": [{"id": c.id, "sheets": c.sheets, "facet_preimages_ok": c.facet_preimages_ok,
                           "branch": [[list(f), n] for f, n in sorted(c.branch.items())],
                           "failures": c.failures} for c in R.components]}
    lines = [f"component {c.id}: {c.sheets} sheet(s), branched over "
             + (", ".join(f"{_fmt_face(f)} ({n} preimage stars)" for f, n in sorted(c.branch.items())) or "nothing")
             for c in R.components]
    lines += [f"failure: {m}" for m in R.failures + [m for c in R.components for m in c.failures]]
    lines.append("cover ok" if R.ok else "cover check FAILED")
    if not R.ok:
        raise _ReportedFailure(rep, lines)
    return rep, lines


def cmd_gallery(args):
    if args.verify_all:
        results = []
        for e in ENTRIES:
            bad = verify_entry(e)
            results.append({"name": e.name, "params": list(e.params), "ok": not bad, "mismatches": bad})
        lines = [f"{'ok  ' if r['ok'] else 'FAIL'} {r['name']}{tuple(r['params']) if r['params'] else ''}"
                 + ("".join(f"\n     {m}" for m in r["mismatches"])) for r in results]
        rep = {"entries": results}
        if not all(r["ok"] for r in results):
            raise _ReportedFailure(rep, lines)
        return rep, lines
    if not args.name:
        rep = {"names": {n: arity for n, (_, arity) in BUILDERS.items()}}
        return rep, [f"{n} ({arity} parameter{'s' if arity != 1 else ''})" for n, (_, arity) in BUILDERS.items()]
    K = gallery(args.name, *args.params)
    name = args.name + (":" + ",".join(map(str, args.params)) if args.params else "")
    rep = {"name": name, "dim": K.dim, "facets": _faces(K.facets)}
    return rep, _emit_complex(args, K, None, name)


class _ReportedFailure(Exception):
    def __init__(self, rep, lines):
        super().__init__("check failed")
        self.rep, self.lines = rep, lines


def build_parser() -> argparse.ArgumentParser:
    def flags(suppress: bool) -> argparse.ArgumentParser:
        # subcommand copies must not reset values given before the subcommand
        q = argparse.ArgumentParser(add_help=False)
        q.add_argument("--json", action="store_true", help="machine-readable output",
                       default=argparse.SUPPRESS if suppress else False)
        q.add_argument("--seed", type=int, help="seed for randomized checks",
                       default=argparse.SUPPRESS if suppress else DEFAULT_SEED)
        return q

    common = flags(True)
    p = _Parser(prog="unfoldkit", description="Partial unfoldings of simplicial complexes.", parents=[flags(False)])
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_, complex_arg=True):
        sp = sub.add_parser(name, help=help_, parents=[common])
        if complex_arg:
            sp.add_argument("complex", help="JSON file or gallery:NAME[:PARAMS]")
        sp.set_defaults(fn=fn)
        return sp

    add("info", cmd_info, "basic combinatorial properties")
    add("color", cmd_color, "foldable coloring or 'not foldable'")
    add("odd", cmd_odd, "odd subcomplex")
    g = add("group", cmd_group, "group of projectivities")
    g.add_argument("--base", type=int, default=0, help="index of the base facet")
    u = add("unfold", cmd_unfold, "partial unfolding component table")
    u.add_argument("--out", help="directory for component JSON files")
    u.add_argument("--barycentric", action="store_true", help="write barycentric subdivisions of components")
    u.add_argument("--check-paths", type=int, default=0, metavar="N", help="lift N seeded random loops")
    s = add("subdivide", cmd_subdivide, "stellar, barycentric or anti-prismatic subdivision")
    s.add_argument("--op", required=True, choices=["stellar", "barycentric", "antiprismatic"])
    s.add_argument("--face", help="comma separated vertex ids")
    s.add_argument("--out", help="output JSON file (default: stdout)")
    pr = add("prescribe", cmd_prescribe, "prescribe the odd subcomplex", complex_arg=False)
    pr.add_argument("--complex", required=True, help="colored base complex")
    pr.add_argument("--surface", required=True, help="co-dimension 1 surface")
    pr.add_argument("--pair", required=True, help="colors i_{d-1},i_d")
    pr.add_argument("--out")
    fb = add("fillball", cmd_fillball, "extend a colored sphere (or CW complex) to a colored ball", complex_arg=False)
    fb.add_argument("--sphere", help="colored sphere JSON")
    fb.add_argument("--cells", help="cell complex JSON")
    fb.add_argument("--out")
    add("homology", cmd_homology, "Z/2 Betti numbers and manifold verdicts")
    add("verify-cover", cmd_verify_cover, "check the branched cover structure of the unfolding")
    ga = add("gallery", cmd_gallery, "list, build or self-test named complexes", complex_arg=False)
    ga.add_argument("name", nargs="?")
    ga.add_argument("params", nargs="*", type=int)
    ga.add_argument("--verify-all", action="store_true")
    ga.add_argument("--out")
    return p


def _print(rep, lines, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(rep, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        err.write(f"{e}\n")
        return 2
    except SystemExit as e:  # --help
        return int(e.code or 0)
    try:
        rep, lines = args.fn(args)
    except UsageError as e:
        err.write(f"usage error: {e}\n")
        return 2
    except _ReportedFailure as e:
        _print(e.rep, e.lines, args.json, out)
        return 1
    except UnfoldkitError as e:
        if args.json:
            out.write(json.dumps({"error": type(e).__name__, "message": str(e)}, sort_keys=True) + "\n")
        err.write(f"error: {type(e).__name__}: {e}\n")
        return 1
    _print(rep, lines, args.json, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
