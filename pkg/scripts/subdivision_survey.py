"""Track odd subcomplex size and group order along random subdivision sequences."""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass

from unfoldkit.complex import euler_characteristic, odd_subcomplex
from unfoldkit.gallery import gallery
from unfoldkit.projectivities import group_of_projectivities
from unfoldkit.subdivision import antiprismatic_face, stellar_subdivide


@dataclass
class Config:
    name: str = "hopf_sphere"
    params: tuple[int, ...] = ()
    steps: int = 10
    seed: int = 20240611


def run(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    K = gallery(cfg.name, *cfg.params)
    print(f"{'step':>4} {'move':<14} {'face':<18} {'facets':>6} {'chi':>4} {'odd':>4} {'|G|':>4}")
    print(f"{0:>4} {'start':<14} {'':<18} {K.n_facets:>6} {euler_characteristic(K):>4} "
          f"{len(odd_subcomplex(K)):>4} {group_of_projectivities(K).order:>4}")
    for step in range(1, cfg.steps + 1):
        faces = [f for r in range(2, K.dim + 2) for f in K.faces(r)]
        f = rng.choice(faces)
        move = rng.choice(["stellar", "antiprismatic"])
        K = (stellar_subdivide if move == "stellar" else antiprismatic_face)(K, f)[0]
        print(f"{step:>4} {move:<14} {str(f):<18} {K.n_facets:>6} {euler_characteristic(K):>4} "
              f"{len(odd_subcomplex(K)):>4} {group_of_projectivities(K).order:>4}")


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("name", nargs="?", default=Config.name)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--steps", type=int, default=Config.steps)
    p.add_argument("--seed", type=int, default=Config.seed)
    a = p.parse_args(argv)
    run(Config(a.name, tuple(a.params), a.steps, a.seed))
    return 0


if __name__ == "__main__":
    sys.exit(main())
