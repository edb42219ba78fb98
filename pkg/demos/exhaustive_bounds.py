"""Where connected graphs land between the two-thirds floor and n - 1.

Solves every connected graph on 3 to 6 vertices, then prints, for each
order, how the total domination numbers of the middle graphs are
distributed across the interval from ceil(2n/3) to n - 1.  Through order
5 the interval is a single point, so every graph is forced to the same
value; order 6 is the first time the interval widens, and both endpoints
are achieved there, which is why neither bound can be tightened without
extra hypotheses.
"""

from collections import Counter
from itertools import combinations

from middom import Graph, general_bounds, middle_total_domination


def connected_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])
        if g.is_connected():
            yield g


def main() -> None:
    for n in range(3, 7):
        bounds = general_bounds(n)
        spread = Counter()
        total = 0
        for g in connected_graphs(n):
            spread[middle_total_domination(g).value] += 1
            total += 1
        print(f"order {n}: {total} connected graphs, "
              f"bounds [{bounds.lower}, {bounds.upper}]")
        for value in sorted(spread):
            bar = "#" * max(1, round(40 * spread[value] / total))
            print(f"  value {value}: {spread[value]:>4}  {bar}")
        print()


if __name__ == "__main__":
    main()
