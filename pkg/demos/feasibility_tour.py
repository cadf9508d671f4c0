"""
Deciding k-connected realizability from the degree sequence alone
=================================================================

A quick tour of the two feasibility predicates and the exhaustive
ground truth they approximate.
"""

from kconnseq import normalize, oracle_verdict, theorem1_check, theorem2_check

# Four sequences chosen to land in all four claim/truth quadrants.
CASES = [
    ([4, 4, 4, 4, 4], 3),   # feasible and necessarily 3-connected
    ([2, 2, 2, 2, 2], 2),   # the 5-cycle: every realization is 2-connected
    ([3, 3, 1, 1], 1),      # passes the counting conditions, not even graphic
    ([1, 1, 1, 1], 1),      # a perfect matching: never connected
]

for terms, k in CASES:
    s = normalize(terms)
    t1 = theorem1_check(s, k)
    t2 = theorem2_check(s, k)
    truth = oracle_verdict(s, k)

    print(f"sequence {{{s}}}  k={k}")
    print(f"  phi = {t1.pair.phi}, epsilon = {t1.pair.epsilon_str()}")

    # The existence predicate is four counting conditions; print the first
    # one that fails, if any, because the reason strings carry the numbers.
    for check in t1.checks:
        mark = "ok " if check.passed else "FAIL"
        print(f"  [{mark}] {check.name}: {check.reason}")
    print(f"  existence predicate -> {t1.verdict}")
    print(f"  necessity predicate -> {t2.verdict}")

    # Exhaustive enumeration over labeled graphs settles what actually
    # happens.  realization_count is the number of labeled realizations.
    print(
        f"  enumerated: graphic={truth.graphic}, "
        f"realizations={truth.realization_count}, "
        f"exists_k_connected={truth.exists_k_connected}, "
        f"all_k_connected={truth.all_k_connected}"
    )
    print()
