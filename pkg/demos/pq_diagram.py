"""Write the q-p diagram of algebraic gamma to pq_diagram.svg."""

import sys
from collections import Counter

from quasiradial.classifier import enumerate_algebraic
from quasiradial.reports import diagram_svg

q_max = int(sys.argv[1]) if len(sys.argv) > 1 else 30
rows = enumerate_algebraic(q_max)
with open("pq_diagram.svg", "w", encoding="utf-8") as fh:
    fh.write(diagram_svg(rows, q_max))

print(f"{len(rows)} algebraic (gamma, N) pairs with q <= {q_max}, {len({(q, p) for q, p, _ in rows})} distinct gamma")
for tag, count in sorted(Counter(c.series for _, _, c in rows).items()):
    print(f"  {tag:<15} {count}")
print("wrote pq_diagram.svg")
