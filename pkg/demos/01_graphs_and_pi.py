"""Which oriented graphs give PI algebras, and what their cyclic cores look like."""
from pathlib import Path

from hkmonoid.graph import components, cyclic_core, is_pi, parse_graph

DATA = Path(__file__).parent / "data"

for name in ["c3.graph", "c3_singleton.graph", "pendant.graph", "joined_cycles.graph"]:
    g = parse_graph((DATA / name).read_text())
    core = cyclic_core(g)
    print(f"{name}: n={g.n}, {len(g.arrows)} arrows, PI={is_pi(g)}")
    for verts, kind in components(core):
        print(f"    core component {verts}: {kind}")

# Arrows that lie on no oriented cycle disappear from the core, so the pendant
# graph has the same core components as the 3-cycle plus three singletons.
# The joined graph has two cycles linked by an oriented path, which breaks PI.
