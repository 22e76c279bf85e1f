"""Dedekind sums and the eta invariant of binary dihedral space forms.

Run with ``python3 demos/dedekind_and_eta.py``.
"""

from instanton_quotients.dedekind import cotangent_sum, d_sum, rademacher_defect, s_sum
from instanton_quotients.eta import dihedral_representation, eta_dihedral_closed, eta_space_form


def main():
    print("s(1, 3) =", s_sum(1, 3))
    print("s(5, 17) by reciprocity:", s_sum(5, 17), "by the definition:", s_sum(5, 17, method="brute"))
    print("Rademacher defect for (3, 5, 7):", rademacher_defect(3, 5, 7))

    exact = d_sum(2, 3, 11)
    print(f"D(2, 3; 11) = {exact} ~ {float(exact):.12f}, cotangents give {cotangent_sum(2, 3, 11):.12f}")

    print("\nEta of S^3 / (Z_u x D*_4v): averaged cotangents against the closed form")
    for u, v in [(1, 2), (1, 3), (5, 2), (7, 4), (3, 8)]:
        rep = dihedral_representation(u, v)
        value = eta_space_form(rep)
        print(f"  u={u:2d} v={v:2d} |G|={rep.order:4d}  closed {eta_dihedral_closed(u, v)!s:>8}  numeric {value.numeric:+.12f}")


if __name__ == "__main__":
    main()
