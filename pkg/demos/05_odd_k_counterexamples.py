"""
Odd k: where b_{2,k} drops below b_{2,k+1}
==========================================

For 2-regular partitions one might expect b_{2,k}(n) >= b_{2,k+1}(n)
except at n = k+1. For odd k this fails; the first failures are listed.
"""

from hookbias import find_counterexamples_odd, gf_b_2i

b3, b4 = gf_b_2i(3, 82), gf_b_2i(4, 82)
print(f"b_2,3(82) = {b3[82]}, b_2,4(82) = {b4[82]}")

for k in (3, 5, 7, 9):
    r = find_counterexamples_odd(k, 2500)
    first = [n for n, _ in r.witnesses][:5]
    print(f"k={k}: minimal n={r.params['minimal']}, first few {first}, total {r.params['count']} up to 2500")
