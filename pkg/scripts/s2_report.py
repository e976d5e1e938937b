"""Print the structure of the order-8 Rees matrix example: lattice, commutators, degrees."""

import argparse
import json
from dataclasses import asdict, dataclass

from semicomm import core
from semicomm.congruence import Congruence, all_congruences, linked_triple
from semicomm.constructors import paper_S2, paper_S2_spec
from semicomm.commutator import commutator
from semicomm.series import degrees


@dataclass
class Config:
    max_arity: int = 3
    max_terms: int = 8


def main(cfg):
    S, spec = paper_S2(), paper_S2_spec()
    one = Congruence.one(S.order)
    lattice = all_congruences(S)
    out = {
        "config": asdict(cfg),
        "properties": core.classify(S),
        "congruences": [
            {"partition": str(m), "triple": [str(t.rho_I), list(t.N), str(t.rho_Lambda)]}
            for m in lattice
            for t in [linked_triple(spec, m, S)]
        ],
        "binary_table": {
            f"[{a},{b}]": str(commutator(S, [lattice.members[a], lattice.members[b]]))
            for a in range(len(lattice)) for b in range(len(lattice))
        },
        "ternary_full": str(commutator(S, [one] * 3)),
        "degrees": {k: v.to_dict() for k, v in degrees(S, cfg.max_terms, cfg.max_arity).items()},
    }
    print(json.dumps(out, indent=2, sort_keys=True))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-arity", type=int, default=Config.max_arity)
    p.add_argument("--max-terms", type=int, default=Config.max_terms)
    a = p.parse_args()
    main(Config(a.max_arity, a.max_terms))
