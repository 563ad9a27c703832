"""Markov triples, weighted projective planes and a growing family of tori.

Each Markov triple (a, b, c) gives a degeneration of the projective plane
to P(a^2, b^2, c^2).  Distinct triples give lattice-inequivalent dual
triangles, so the number of triples up to a bound is a lower bound for the
number of distinct monotone tori.
"""

import time

from toricdisks.markov import certify_distinct_tori, dual_area

start = time.perf_counter()
cert = certify_distinct_tori(1000)
print(f"{cert.count} triples with c <= 1000, pairwise distinct: {cert.pairwise_distinct}"
      f" ({time.perf_counter() - start:.2f}s)")
for rec in cert.records:
    types = ", ".join(f"1/{r}(1,{q})" for r, q in rec.vertex_types)
    print(f"  {tuple(rec.triple)!s:<18} h = {rec.monotone_level:<6} dual area {dual_area(rec.triple):<8} "
          f"vertex types {types}")
