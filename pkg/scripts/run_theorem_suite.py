"""Run the implication checks over a generated corpus and print per-check counts."""

import argparse
import json
import time
from dataclasses import dataclass

from semicomm.corpus import enumerate_semigroups
from semicomm.theorems import SuiteBudget, verify_theorem_suite


@dataclass
class Config:
    max_order: int = 4
    workers: int = 1
    max_arity: int = 3
    out: str | None = None


def main(cfg):
    corpus = [(f"o{n}_{k:04d}", S) for n in range(1, cfg.max_order + 1)
              for k, S in enumerate(enumerate_semigroups(n))]
    t = time.perf_counter()
    rep = verify_theorem_suite(corpus, SuiteBudget(max_arity=cfg.max_arity), workers=cfg.workers)
    print(f"{len(corpus)} algebras in {time.perf_counter() - t:.1f} s")
    for name, counts in rep["per_theorem"].items():
        print(f"{name:45s} " + " ".join(f"{k}={v}" for k, v in counts.items()))
    print("total:", rep["summary"])
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(rep, fh, indent=1, sort_keys=True)
    return 1 if rep["counterexamples"] else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-arity", type=int, default=3)
    p.add_argument("--out")
    a = p.parse_args()
    raise SystemExit(main(Config(a.max_order, a.workers, a.max_arity, a.out)))
