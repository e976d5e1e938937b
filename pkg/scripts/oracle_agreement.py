"""Compare the cube-set centralizer test with literal word evaluation on small semigroups."""

import argparse
from dataclasses import dataclass
from itertools import product

from semicomm.commutator import _violations, centralizes, oracle_value_cubes
from semicomm.congruence import all_congruences
from semicomm.corpus import enumerate_semigroups


@dataclass
class Config:
    max_order: int = 3
    max_word_len: int = 6
    max_block_arity: int = 2


def main(cfg):
    checked = bad = 0
    for n in range(2, cfg.max_order + 1):
        for S in enumerate_semigroups(n):
            L = list(all_congruences(S))
            for a, b in product(L, repeat=2):
                cubes = oracle_value_cubes(S, [a, b], cfg.max_word_len, cfg.max_block_arity)
                for d in L:
                    checked += 1
                    if (not _violations(cubes, d, 2).any()) != centralizes(S, [a, b], d).holds:
                        bad += 1
                        print("disagree:", S.rows, a, b, d)
    print(f"checked {checked} (alpha, beta, delta) triples, {bad} disagreements")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--max-word-len", type=int, default=6)
    a = p.parse_args()
    main(Config(a.max_order, a.max_word_len))
