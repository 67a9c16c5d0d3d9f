"""Closed forms for paths and cycles against exhaustive search.

Small members are solved exactly; larger ones are checked through their
witness colorings (star, minimal, right number of colors). The one place
where search and table disagree is C8.
"""

from starb import cycle, exact_sb, path, sb_cycle, sb_path, witness_cycle_coloring, witness_path_coloring
from starb.families import verify_witness

print(" n  S_b(P_n) exact | S_b(C_n) exact")
for n in range(2, 12):
    p_exact = exact_sb(path(n)).value
    row = f"{n:2}  {sb_path(n):8} {p_exact:5}"
    if n >= 3:
        c_exact = exact_sb(cycle(n)).value
        flag = "  <- table disagrees" if c_exact != sb_cycle(n) else ""
        row += f" | {sb_cycle(n):8} {c_exact:5}{flag}"
    print(row)

# a 4-color minimal star coloring of C8, checked class by class
print("C8 witness 1-2-1-3-1-4-2-4:", verify_witness(cycle(8), [1, 2, 1, 3, 1, 4, 2, 4], 4))

bad = [n for n in range(1, 61) if not verify_witness(path(n), witness_path_coloring(n), sb_path(n))]
bad += [n for n in range(3, 61) if not verify_witness(cycle(n), witness_cycle_coloring(n), sb_cycle(n))]
print("witness failures up to n = 60:", bad or "none")
print("P23 witness:", witness_path_coloring(23))
