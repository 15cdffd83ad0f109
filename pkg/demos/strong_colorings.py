"""Strong edge colorings of cycles and trees, and the vertex-to-edge lift."""

from chordal_powers.families import cycle_graph, double_star, path_graph
from chordal_powers.strongcolor import (
    k_strong_chromatic_number,
    lift_vertex_to_edge_coloring,
    sigma_max,
    strong_chromatic_index,
)

if __name__ == "__main__":
    for n in range(3, 11):
        c = strong_chromatic_index(cycle_graph(n))
        print(f"C_{n}: strong chromatic index {c.color_count} (exact={c.exact})")
    t = double_star(3, 4)
    print(f"double star: sigma={sigma_max(t)} index={strong_chromatic_index(t).color_count}")
    p = path_graph(6)
    f = k_strong_chromatic_number(p, 2)
    lifted = lift_vertex_to_edge_coloring(p, f)
    print(f"P_6: 2-strong vertex colors {f.assignment}, lifted edge colors {lifted.assignment}")
