"""Estimate monodromy groups from random loops and compare with the projectivity group.

Random closed walks in the dual graph are lifted to the partial unfolding.
The permutations they induce generate a subgroup of the group of
projectivities. The script reports how many loops were needed before the
sampled subgroup reached the full order.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import asdict, dataclass

from unfoldkit.gallery import ENTRIES
from unfoldkit.projectivities import group_of_projectivities
from unfoldkit.unfolding import lift_path, partial_unfolding


@dataclass
class Config:
    seed: int = 20240611
    loops: int = 500
    max_steps: int = 30
    json: bool = False


def closed_walk(K, rng: random.Random, steps: int) -> list[int]:
    path = [0]
    for _ in range(steps):
        path.append(rng.choice(K.neighbors[path[-1]]))
    parent = {path[-1]: None}
    queue = [path[-1]]
    for x in queue:
        for y in K.neighbors[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    back, x = [], 0
    while x is not None:
        back.append(x)
        x = parent[x]
    return path + back[::-1][1:]


def closure(gens: set[tuple[int, ...]], n: int) -> set[tuple[int, ...]]:
    seen = {tuple(range(n))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = tuple(h[i] for i in g)
                if gh not in seen:
                    seen.add(gh)
                    nxt.append(gh)
        frontier = nxt
    return seen


def run(cfg: Config) -> list[dict]:
    rng = random.Random(cfg.seed)
    rows = []
    for e in ENTRIES:
        K = e.build()
        U = partial_unfolding(K)
        base = K.facets[0]
        order = group_of_projectivities(K).order
        gens: set[tuple[int, ...]] = set()
        sampled, reached_at = 1, None
        for k in range(1, cfg.loops + 1):
            loop = closed_walk(K, rng, rng.randint(1, cfg.max_steps))
            perm = tuple(base.index(lift_path(U, loop, (0, v))[1]) for v in base)
            if perm not in gens and perm != tuple(range(len(base))):
                gens.add(perm)
                sampled = len(closure(gens, len(base)))
            if sampled == order:
                reached_at = k
                break
        rows.append({"entry": f"{e.name}{list(e.params) if e.params else ''}", "order": order,
                     "sampled": sampled, "loops_needed": reached_at})
    return rows


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--loops", type=int, default=Config.loops)
    p.add_argument("--max-steps", type=int, default=Config.max_steps)
    p.add_argument("--json", action="store_true")
    cfg = Config(**vars(p.parse_args(argv)))
    rows = run(cfg)
    if cfg.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
    else:
        for r in rows:
            print(f"{r['entry']:<32} |G|={r['order']:<3} sampled={r['sampled']:<3} loops needed={r['loops_needed']}")
    return 0 if all(r["sampled"] == r["order"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
