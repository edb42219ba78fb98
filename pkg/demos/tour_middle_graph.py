"""A guided tour of the middle graph construction.

Builds the middle graph of a small path, prints its vertices with their
labels, and shows how edge nodes interleave between the originals.  Ends
with the text serialization so the on-disk format is visible too.
"""

from middom import middle_graph, path, write_graph


def main() -> None:
    base = path(5)
    mg = middle_graph(base)
    print(f"base: path on {base.order} vertices, {base.size} edges")
    print(f"middle graph: {mg.graph.order} vertices, {mg.graph.size} edges")
    print()

    print("vertex  label            neighbors")
    for v in range(mg.graph.order):
        neighbors = " ".join(str(w) for w in mg.graph.neighbor_tuple(v))
        print(f"{v:>6}  {str(mg.graph.label(v)):<15}  {neighbors}")
    print()

    print("edge nodes carry their base edge as a label, so the inverse")
    print("map needs no bookkeeping:")
    for u, v in base.edges:
        print(f"  base edge ({u}, {v}) -> middle vertex {mg.edge_node(u, v)}")
    print()

    print("serialized form:")
    print(write_graph(mg.graph), end="")


if __name__ == "__main__":
    main()
