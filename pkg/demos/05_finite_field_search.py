"""
Rediscovering the classification over F3
========================================

Exhaustive search over every operator whose image lies in a subalgebra,
followed by orbit reduction under the generated map group and scaling.
"""

import time

from octorb import GF, SearchSpec, classify_run, enumerate_rb
from octorb.algebra import octo
from octorb.search import OrbitStore, report_table

F3 = GF(3)
store = OrbitStore(F3)

for name in ("N1", "I1"):
    t = time.perf_counter()
    report = classify_run(SearchSpec(F3, name), store=store)
    print(report_table(report))
    print(f"({time.perf_counter() - t:.2f}s)\n")

# kernel constraints cut the search space: 3^9 instead of 3^24
ker = [octo(n, F3) for n in ("e11", "e12", "e22", "ve12", "ve22")]
spec = SearchSpec(F3, "N3", ker)
print("candidates:", spec.candidate_count())
ops = enumerate_rb(spec)
print("RB operators with image inside N3:", len(ops))
print(report_table(classify_run(spec, reduce_orbits=False)))
