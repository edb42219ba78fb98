"""Closed forms versus the exact solver, family by family.

For each graph family with a known formula, prints a small table of the
predicted total domination number of the middle graph next to the value
the branch-and-bound solver finds.  Every row should agree; the point of
the demo is to watch the formulas track the solver across a parameter
sweep rather than at a single size.
"""

from middom import (
    TheoremId,
    closed_form,
    complete,
    complete_bipartite,
    cycle,
    double_star,
    friendship,
    middle_total_domination,
    path,
    star,
    wheel,
)

SWEEPS = [
    ("path", path, TheoremId.PATH_FORMULA, range(3, 11)),
    ("cycle", cycle, TheoremId.FAMILY_COROLLARY, range(3, 10)),
    ("complete", complete, TheoremId.COMPLETE_FORMULA, range(2, 9)),
    ("wheel", wheel, TheoremId.FAMILY_COROLLARY, range(4, 10)),
    ("star", star, TheoremId.STAR_FORMULA, range(2, 9)),
    ("double-star", double_star, TheoremId.DOUBLE_STAR_FORMULA, range(1, 6)),
    ("friendship", friendship, TheoremId.FRIENDSHIP_FORMULA, range(2, 5)),
]


def main() -> None:
    for name, build, theorem, ns in SWEEPS:
        print(f"{name}:")
        print("  n  formula  solver")
        for n in ns:
            want = closed_form(theorem, n=n).value
            got = middle_total_domination(build(n)).value
            flag = "" if got == want else "  <- mismatch"
            print(f"  {n}  {want:>7}  {got:>6}{flag}")
        print()

    print("complete bipartite:")
    print("  n1  n2  formula  solver")
    for n1 in range(2, 6):
        for n2 in range(n1, 6):
            want = closed_form(TheoremId.COMPLETE_BIPARTITE_FORMULA,
                               n1=n1, n2=n2).value
            got = middle_total_domination(complete_bipartite(n1, n2)).value
            flag = "" if got == want else "  <- mismatch"
            print(f"  {n1:>2}  {n2:>2}  {want:>7}  {got:>6}{flag}")


if __name__ == "__main__":
    main()
