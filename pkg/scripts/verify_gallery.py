"""Recompute every gallery record and compare it with the stored expectation."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from unfoldkit.complex import f_vector, odd_subcomplex
from unfoldkit.gallery import ENTRIES, verify_entry
from unfoldkit.homology import z2_betti
from unfoldkit.projectivities import group_of_projectivities
from unfoldkit.unfolding import partial_unfolding


@dataclass
class Config:
    json: bool = False


def run(cfg: Config) -> int:
    rows, failures = [], 0
    for e in ENTRIES:
        t = time.perf_counter()
        K = e.build()
        G = group_of_projectivities(K)
        U = partial_unfolding(K)
        bad = verify_entry(e)
        failures += bool(bad)
        rows.append({
            "entry": f"{e.name}{list(e.params) if e.params else ''}",
            "f_vector": f_vector(K),
            "betti": list(z2_betti(K)),
            "odd": len(odd_subcomplex(K)),
            "order": G.order,
            "orbits": sorted(len(o) for o in G.orbits),
            "components": sorted(c.facet_count for c in U.components),
            "ok": not bad,
            "secs": round(time.perf_counter() - t, 3),
        })
    if cfg.json:
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            print(f"{'ok ' if r['ok'] else 'BAD'} {r['entry']:<32} f={r['f_vector']} betti={r['betti']} "
                  f"odd={r['odd']} |G|={r['order']} orbits={r['orbits']} comps={r['components']}")
    return 1 if failures else 0


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--json", action="store_true")
    return run(Config(**vars(p.parse_args(argv))))


if __name__ == "__main__":
    sys.exit(main())
