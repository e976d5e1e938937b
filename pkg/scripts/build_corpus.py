"""Write a manifest of all semigroups up to a given order, plus filtered order 5."""

import argparse
import time
from dataclasses import dataclass, field

from semicomm.corpus import build_manifest, enumerate_semigroups, save_manifest


@dataclass
class Config:
    max_order: int = 4
    order5_filters: list = field(default_factory=list)
    out: str = "corpus.json"


def main(cfg):
    specs = []
    for n in range(1, cfg.max_order + 1):
        t = time.perf_counter()
        found = list(enumerate_semigroups(n))
        specs += [(f"o{n}_{k:04d}", S) for k, S in enumerate(found)]
        print(f"order {n}: {len(found)} classes ({time.perf_counter() - t:.2f} s)")
    for f in cfg.order5_filters:
        found = list(enumerate_semigroups(5, [f]))
        specs += [(f"o5_{f}_{k:04d}", S) for k, S in enumerate(found)]
        print(f"order 5 {f}: {len(found)} classes")
    save_manifest(build_manifest(specs), cfg.out)
    print(f"wrote {len(specs)} entries to {cfg.out}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--order5", action="append", default=[], help="filter for an order-5 family")
    p.add_argument("--out", default="corpus.json")
    a = p.parse_args()
    main(Config(a.max_order, a.order5, a.out))
