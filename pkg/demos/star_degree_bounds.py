"""Star degrees, the m_s bound, and two tree families at its extremes.

The Delta^2+1 trees meet the upper bound exactly; the gap trees show that
m_s can overshoot S_b by a growing amount while S stays at 3.
"""

from starb import (
    decompose, exact_star_chromatic, gen_tree_delta_squared, gen_tree_gap, m_s_degree,
    path, star_degree_girth7, star_degrees,
)
from starb.families import verify_witness

g = path(7)
print("P7 star degrees:", star_degrees(g))
d = decompose(g, 3)
print(f"  midpoint: |A1|={len(d.A1)} |A2|={len(d.A2)} |A3|={len(d.A3)} |X|={len(d.X)} |Y|={len(d.Y)}"
      f" -> formula {star_degree_girth7(g, 3)}")

for n in (1, 2, 3):
    t = gen_tree_delta_squared(n)
    print(f"Delta^2+1 tree n={n}: {t.graph.n} vertices, Delta={t.graph.max_degree},"
          f" witness with {t.witness.k} colors ok={verify_witness(t.graph, t.witness, n * n + 1)}")

for n in (1, 2, 3):
    t = gen_tree_gap(n)
    ms = m_s_degree(t.graph)
    s = exact_star_chromatic(t.graph)[0] if t.graph.n <= 20 else t.star3_witness.k
    print(f"gap tree n={n}: {t.graph.n} vertices, m_s={ms}, witness {t.sb_witness.k} colors"
          f" (ok={verify_witness(t.graph, t.sb_witness, t.sb_witness.k)}), S<={s}")
