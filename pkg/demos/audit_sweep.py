"""
Auditing the feasibility predicates against exhaustive enumeration
==================================================================

At desk scale we can enumerate every labeled realization of every degree
sequence, so the two predicates and the edge-count corollary can be
checked outright rather than trusted.  This sweep prints where each
claim and the enumerated truth part ways.
"""

from kconnseq import audit_corollary, audit_theorem1, audit_theorem2

N, K_MAX = 5, 2

# The existence predicate: "these four conditions hold iff some
# realization is k-connected".  Disagreements at this size are real —
# the conditions are counting conditions and cannot see structure.
report = audit_theorem1(N, K_MAX)
print(f"existence audit, n={N}, k<=K_MAX={K_MAX}: "
      f"{report.summary['comparisons']} comparisons, "
      f"{report.summary['discrepancies']} discrepancies")
for e in report.entries:
    seq = ",".join(str(t) for t in e["sequence"])
    print(f"  {{{seq}}} k={e['k']}: claimed {e['claimed']}, "
          f"enumerated {e['observed']}")
print()

# The necessity predicate: "epsilon above the bound forces every
# realization to be k-connected".  The bound is tight but one-sided;
# below it, sequences can still be necessarily k-connected.
report = audit_theorem2(N, K_MAX)
print(f"necessity audit, n={N}, k<=K_MAX={K_MAX}: "
      f"{report.summary['comparisons']} comparisons, "
      f"{report.summary['discrepancies']} discrepancies, "
      f"{report.summary['boundary_cases']} sequences exactly on the bound")
for e in report.entries:
    seq = ",".join(str(t) for t in e["sequence"])
    print(f"  {{{seq}}} k={e['k']}: claimed {e['claimed']}, "
          f"enumerated {e['observed']}")
print()

# The five-cycle story in one line: {2,2,2,2,2} sits below the bound yet
# has no realization other than the 5-cycle, which is 2-connected.

# The corollary: "at least (n^2-5n+6+4k)/2 edges and minimum degree k
# force k-connectivity".  Drop the degree floor and dense
# counterexamples appear: a clique plus a pendant vertex.
for enforce in (True, False):
    regime = "minimum degree enforced" if enforce else "any degrees"
    report = audit_corollary(6, 1, enforce)
    print(f"corollary audit, n=6, k=1, {regime}: "
          f"{report.summary['graphs_checked']} graphs checked, "
          f"{report.summary['violations']} violations")
    if report.entries:
        first = report.entries[0]
        seq = ",".join(str(t) for t in first["degree_sequence"])
        print(f"  smallest violation: {first['edge_count']} edges, "
              f"degrees {{{seq}}}, connectivity {first['connectivity']}")
