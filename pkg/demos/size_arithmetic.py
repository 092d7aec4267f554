"""Sampling the size arithmetic that yields the 11/7 guarantee.

The ratio of the smaller size bound over the larger lower bound never
exceeds 11/7; the corner |V(D)| : alpha : |K| : |S_P| = 9 : 4 : 5 : 10
(scaled up, with x = alpha/4) approaches it from below.
"""

from flexconn import check_arithmetic_lemmas
from flexconn.harness import lemma_report_text, size_ratio_plain

report = check_arithmetic_lemmas(50_000, seed=1)
print(lemma_report_text(report))

print("approach to the bound along the tight ray:")
for t in (14, 140, 14_000, 14_000_000):
    s = size_ratio_plain(9 * t / 14, 4 * t / 14, 5 * t / 14, 10 * t / 14)
    print(f"  scale {t:>10}: ratio = {s:.9f}")
print(f"  11/7          = {11 / 7:.9f}")
