"""Explicit optimal sets, and how to push any optimum onto edge nodes.

The closed forms come with constructions: for each supported family the
package can hand back an actual total dominating set of the right size,
not just a number.  This demo prints a few of those sets, then shows the
conversion that rewrites an arbitrary total dominating set so it uses
edge nodes only, never growing it along the way.
"""

from middom import (
    EdgeNode,
    TheoremId,
    construct_witness,
    double_star,
    edgeify,
    is_total_dominating,
    middle_graph,
    path,
    total_domination_number,
)


def names(mg, vertices) -> str:
    parts = []
    for v in sorted(vertices):
        label = mg.graph.label(v)
        if isinstance(label, EdgeNode):
            parts.append(f"edge({label.i},{label.j})")
        else:
            parts.append(f"orig({label.index})")
    return "{" + ", ".join(parts) + "}"


def show(title, witness) -> None:
    ok = is_total_dominating(witness.middle.graph, witness.vertices)
    print(title)
    print(f"  base order {witness.middle.base_order}, middle order "
          f"{witness.middle.graph.order}")
    print(f"  witness size {len(witness.vertices)}: "
          f"{names(witness.middle, witness.vertices)}")
    print(f"  total dominating: {ok}")
    print()


def main() -> None:
    show("star with 5 leaves",
         construct_witness(TheoremId.STAR_FORMULA, n=5))
    show("friendship graph, 3 triangles",
         construct_witness(TheoremId.FRIENDSHIP_FORMULA, n=3))

    print("a total dominating set may mix originals and edge nodes, and a")
    print("wasteful one can shrink under the rewrite:")
    mg = middle_graph(path(3))
    mixed = [1, mg.edge_node(0, 1), mg.edge_node(1, 2)]
    converted = edgeify(mg, mixed)
    print(f"  input  ({len(mixed)} vertices): {names(mg, mixed)}")
    print(f"  output ({len(converted)} vertices): {names(mg, converted)}")
    print()

    print("on an optimum the rewrite keeps the size, so a minimum set can")
    print("always be taken inside the edge nodes:")
    mg = middle_graph(double_star(2))
    best = total_domination_number(mg.graph)
    converted = edgeify(mg, best.witness)
    print(f"  solver optimum ({best.value} vertices): "
          f"{names(mg, best.witness)}")
    print(f"  edge-node form ({len(converted)} vertices): "
          f"{names(mg, converted)}")
    print(f"  still total dominating: "
          f"{is_total_dominating(mg.graph, converted)}")


if __name__ == "__main__":
    main()
