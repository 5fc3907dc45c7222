"""
Hooks of length 2 against hooks of length 1
===========================================

In 3-regular partitions, hooks of length 2 eventually outnumber hooks of
length 1. Below 28 the order can go either way.
"""

from hookbias import verify_lemma23, verify_theorem1
from hookbias.hookgf import diff_32_31_direct

d = diff_32_31_direct(40)
print("b32 - b31 for n <= 40:")
print([d[n] for n in range(41)])

report = verify_theorem1(1000)
print()
print(report.to_table())

# the same difference through the triplet factorisation
print()
print(verify_lemma23(300).to_table())
