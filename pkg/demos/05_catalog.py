"""Catalog of maximal ideals for PI graphs, including user-supplied sandwich data."""
from pathlib import Path

from hkmonoid.catalog import catalog, maximal_ideal_descriptors
from hkmonoid.graph import cycle_graph, parse_graph
from hkmonoid.matrix_type import load_data

DATA = Path(__file__).parent / "data"

report = catalog(parse_graph((DATA / "c3_singleton.graph").read_text()))
print(report.to_text())
print("first three one-dimensional choices:")
for choice in list(maximal_ideal_descriptors(report, one_dim_only=True))[:3]:
    print("  ", " ⊗ ".join(str(d) for d in choice))

# longer cycles need sandwich data; this file is illustrative, not computed from C_4
user = load_data(DATA / "user_c4_level1.sandwich", n=4, level=1)
print()
print(catalog(cycle_graph(4), {4: {1: user}}).to_text())
