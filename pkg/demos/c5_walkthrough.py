"""The 5-cycle colored 1-4-2-3-4, vertex by vertex.

Every class of this coloring resists elimination, so it is a minimal star
coloring with 4 colors, and 4 is also the star b-chromatic number of C5.
The two vertices of color 4 are the interesting ones: each has one color
left available, yet neither can actually move.
"""

from starb import (
    blocked_colors, class_eliminable, cycle, exact_sb, is_minimal,
    is_star_b_vertex, is_strong_star_b_vertex, p4_system, star_recoloring_algorithm,
)

g = cycle(5)
c = [1, 4, 2, 3, 4]

print("coloring", "-".join(map(str, c)))
for v in g.vertices():
    rep = blocked_colors(g, c, v)
    kinds = ", ".join(f"{x}:{s.value}" for x, s in sorted(rep.status.items()) if x != c[v])
    print(
        f"  v{v} (color {c[v]}): {kinds}"
        f" | strong={is_strong_star_b_vertex(g, c, v)} star_b={is_star_b_vertex(g, c, v)}"
    )

# the two color-4 vertices form one P4-system
print("P4-system of v1:", sorted(p4_system(g, c, 1).members))

for i in (1, 2, 3, 4):
    res = class_eliminable(g, c, i)
    print(f"class {i}: eliminable={res.feasible}, protected by v{res.witness}")
print("minimal:", is_minimal(g, c))

# the heuristic reaches different minimal colorings depending on the order
ks = sorted({star_recoloring_algorithm(g, "random", seed=s)[0].k for s in range(30)})
print("heuristic outcomes over 30 seeds:", ks)

cert = exact_sb(g)
print(f"S_b(C5) = {cert.value}, certificate {cert.coloring}, star b-vertices {cert.witnesses}")
