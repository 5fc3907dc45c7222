"""
Partition triplets and the six bijections
=========================================

Triplets of weight n split into seven classes. Six classes map onto
classes of weight n-3 by explicit bijections; the seventh is compared by
counting.
"""

from collections import Counter

from hookbias.bijections import (
    PAPER_EXAMPLES, classify, enumerate_triplets, phi, s7_count, t7_count, t7_vs_s7,
)

for i, (t, s) in PAPER_EXAMPLES.items():
    print(f"phi_{i}: {t}  ->  {phi(i, t)}   (expected {s})")

n = 40
sizes_t = Counter(classify(x) for x in enumerate_triplets(n, "T"))
sizes_s = Counter(classify(x) for x in enumerate_triplets(n - 3, "S"))
print(f"\nclass sizes at n={n}")
for i in range(1, 8):
    print(f"  {i}: T={sizes_t[i]:>4}  S={sizes_s[i]:>4}")
print("  unclassified S:", sizes_s[None])

for n in (152, 300, 600):
    print(f"#T7({n}) = {t7_count(n)}, #S7({n - 3}) = {s7_count(n)}")
print(t7_vs_s7(152, 600).to_table())
