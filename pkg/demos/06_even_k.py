"""
Even k
======

For k = 4 and 6 the inequality b_{2,k}(n) >= b_{2,k+1}(n) (n != k+1) is a
theorem; here are the scans, plus what happens for larger even k.
"""

from hookbias import verify_even_k
from hookbias.hookgf import decompose_b24_b25, decompose_b26_b27

print(decompose_b24_b25(200).to_table())
print(decompose_b26_b27(200).to_table())

for k in range(4, 21, 2):
    r = verify_even_k(k, 2000)
    bad = [n for n, _, _ in r.violations]
    print(f"k={k:>2} grade={r.grade:<11} status={r.status:<5} exceptions besides k+1: {bad}")
