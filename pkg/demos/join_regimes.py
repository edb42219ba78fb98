"""How joining an edgeless graph moves the total domination number.

Fixes a base graph and sweeps the number p of added universal vertices.
Three regimes appear: for tiny p only an interval is known, in the middle
band the value follows ceil(2(n + p)/3), and once p reaches twice the
base order it locks to p exactly.  The demo prints the sweep with the
applicable prediction next to the solver's answer.
"""

from middom import (
    TheoremId,
    closed_form,
    edgeless,
    join,
    join_small_p_bounds,
    middle_total_domination,
    path,
)


def main() -> None:
    n = 6
    base = path(n)
    print(f"base: path on {n} vertices; join with p isolated vertices")
    print()
    print("   p  prediction      solver")
    for p in range(1, 2 * n + 3):
        got = middle_total_domination(join(base, edgeless(p))).value
        if p <= n // 2 - 1:
            interval = join_small_p_bounds(base, p)
            shown = f"[{interval.lower}, {interval.upper}]"
            ok = interval.contains(got)
        else:
            value = closed_form(TheoremId.JOIN_EMPTY_FORMULA, n=n, p=p).value
            shown = str(value)
            ok = got == value
        flag = "" if ok else "  <- off"
        print(f"  {p:>2}  {shown:<12}  {got:>6}{flag}")
    print()
    print("the interval rows come from a subset relaxation; everything from")
    print(f"p = {-(-n // 2)} on is an exact formula, and from p = {2 * n} on"
          " the value is p itself.")


if __name__ == "__main__":
    main()
