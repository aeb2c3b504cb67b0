"""Searching cyclic representations for a better norm bound."""
from pathlib import Path

from twtorsion.io import SearchSpec, emit_certificate, format_table, parse_job, run_search

jobs = Path(__file__).resolve().parent.parent / "jobs"

# The trefoil is already detected by the trivial representation.
trefoil = parse_job((jobs / "trefoil.job").read_text())
res = run_search(trefoil, SearchSpec(n_max=3, primes=(5,)))
print(format_table(res))

# A one-relator group whose Alexander polynomial 1 + x - y collapses to a
# constant under theta = (1, 1); a character to Z/2 recovers width 1.
under = parse_job((jobs / "underdetect.job").read_text())
res = run_search(under)
print(format_table(res))
print("best:", res.best_row.label, "bound", res.best_row.bound)
print(emit_certificate(res.best))
