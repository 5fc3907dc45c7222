"""
Hook lengths of regular partitions
==================================

Enumerate 3-regular partitions, read off hook lengths and compare the
brute-force totals with the generating functions.
"""

from hookbias import Partition, count_hooks_oracle, enumerate_partitions, hook_lengths, regular
from hookbias.hookgf import gf_b_32, gf_b_t1

for p in enumerate_partitions(6, regular(3)):
    print(f"{str(p):<16}", hook_lengths(p))

lam = Partition.of(4, 3, 3, 2, 1)
print("\nhooks of", lam)
for row in hook_lengths(lam):
    print("  ", *row)

# hooks of length 1 and 2 over all 3-regular partitions of n
N = 20
b1, b2 = gf_b_t1(3, N), gf_b_32(N)
print("\n n  b31(gf) b31(brute) b32(gf) b32(brute)")
for n in range(0, N + 1, 4):
    print(f"{n:>2} {b1[n]:>8} {count_hooks_oracle(n, 3, 1):>10} {b2[n]:>7} {count_hooks_oracle(n, 3, 2):>10}")
