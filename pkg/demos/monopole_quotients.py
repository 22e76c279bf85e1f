"""Cyclic quotients of Gibbons-Hawking spaces from the symmetries of their monopole sets."""

import itertools

from instanton_quotients.invariants import corollary_b_bound, corollary_b_minimum
from instanton_quotients.monopole import MonopoleConfig, classify_quotients


CONFIGS = {
    "square": MonopoleConfig([(1, 0, 0), (0, 1, 0), (-1, 0, 0), (0, -1, 0)]),
    "pair": MonopoleConfig([(0, 0, 1), (0, 0, -1)]),
    "line with centre": MonopoleConfig([(0, 0, -1), (0, 0, 0), (0, 0, 1)]),
    "cube": MonopoleConfig(list(itertools.product((-1, 1), repeat=3))),
}


def main():
    for name, config in CONFIGS.items():
        print(f"{name} ({len(config)} monopoles)")
        for q in classify_quotients(config):
            doc = q.to_json()
            print(f"  order {doc['order']} axis {doc['axis']} family {doc['family']}: "
                  f"chi={doc['chi']} b2={doc['b2']} |pi1|={doc['pi1_inf_order']} energy={doc['energy_pi2']} pi^2")

    print("\nsmallest energy (units of pi^2) by second Betti number")
    for b2 in range(6):
        energy, witness = corollary_b_minimum(b2)
        assert energy == corollary_b_bound(b2)
        print(f"  b2={b2}: {energy} from a degree-{witness.degree} quotient of {witness.cover}")


if __name__ == "__main__":
    main()
