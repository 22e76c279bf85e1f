"""Walk through the obstructions that rule out quotients of D- and E-type instantons.

The dihedral part is a Diophantine scan; the tetrahedral part is a Rokhlin invariant.
"""

from instanton_quotients.eta import dihedral_contradiction_scan
from instanton_quotients.groups import extension_candidates, parse_group_spec, space_form_groups_of_order
from instanton_quotients.rokhlin import parse_seifert, rokhlin_mu, tetrahedral_contradiction


def main():
    print("Space form groups of order 96:", [str(s) for s in space_form_groups_of_order(96)])
    for normal, q in [("I*", 3), ("O*", 2), ("T*", 7)]:
        found = [str(s) for s in extension_candidates(parse_group_spec(normal), q)]
        print(f"  groups with a normal {normal} of index {q}: {found or 'none'}")

    scan = dihedral_contradiction_scan(10**5, 10**5)
    print("\nDihedral scan up to 1e5:", scan.to_json())

    y = parse_seifert("0; 3/4, 3/4, -2/3")
    r = rokhlin_mu(y)
    print(f"\nS^3/(Z7 x T*) = {y}: c-values {r.c_values}, mu = {r.mu}")
    report = tetrahedral_contradiction()
    print("a spin filling with chi = 1 and tau = 0 would need mu = 0 mod 2; contradiction:", report.contradiction)


if __name__ == "__main__":
    main()
