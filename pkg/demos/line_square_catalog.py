"""Decide chordality of L(G)^2 from the forbidden-structure catalog and show
the witness next to the direct computation."""

from chordal_powers.families import complete_graph, cycle_graph, cycle_with_pendants
from chordal_powers.structures import line_square_chordal_direct, line_square_chordal_verdict

if __name__ == "__main__":
    cases = {
        "C_5": cycle_graph(5),
        "C_6": cycle_graph(6),
        "C_5 with pendants at 0 and 1": cycle_with_pendants(5, [0, 1]),
        "C_5 with a pendant at 0": cycle_with_pendants(5, [0]),
        "K_5": complete_graph(5),
    }
    for name, g in cases.items():
        v = line_square_chordal_verdict(g)
        kind = v.witness.kind if v.witness else "-"
        print(f"{name}: chordal={v.chordal} direct={line_square_chordal_direct(g)} witness={kind}")
