"""Walk through the powers of a few small graphs: chordality of each power,
the power of chordality, and a flower certifying why the square is not
chordal."""

from chordal_powers.families import cycle_graph, sun
from chordal_powers.graph import Graph
from chordal_powers.powers import power_masks, power_of_chordality, power_profile
from chordal_powers.structures import find_flower, first_induced_cycle, validate_flower


def show(name: str, g: Graph) -> None:
    prof = power_profile(g)
    print(f"{name}: n={g.n} m={g.m} diameter={prof.diameter} k0={power_of_chordality(g).k0}")
    for r in prof.rows:
        chi = r.chi.value if r.chi.exact else f"[{r.chi.lower}, {r.chi.upper}]"
        print(f"  G^{r.k}: chordal={r.chordal} omega={r.omega.value} chi={chi}")
    cycle = first_induced_cycle(power_masks(g.masks, 2), 4)
    if cycle is None:
        print("  square is chordal")
        return
    f = find_flower(g, len(cycle))
    assert f is not None and validate_flower(g, f).valid
    print(f"  induced C_{len(cycle)} in the square, flower U={f.u_vertices} W={f.w_vertices}")


if __name__ == "__main__":
    show("C_8", cycle_graph(8))
    show("C_6", cycle_graph(6))
    show("sun S_5", sun(5))
