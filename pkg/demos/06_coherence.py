#!/usr/bin/env python3
"""Unique normal forms for monoidal expressions with unit and duals.

Association, unit absorption, and dual distribution generate all the
structural identifications; an expression's meaning is its normal form, and
any order of applying the rules reaches the same one (confluence, checked by
fuzzing random rewrite orders).
"""

from braidstat import coherence_fuzz, equal_up_to_coherence, normalize, parse_expr
from braidstat.coherence import DEFAULT_RULES

examples = [
    "(A (x) B) (x) C",
    "I (x) (A (x) I)",
    "(A (x) B)^",
    "I (x) A^^",
    "((A (x) B) (x) C^)^",
]
for text in examples:
    print(f"{text:24s} ->  {normalize(parse_expr(text)).render()}")

print("\nreassociation is invisible:",
      equal_up_to_coherence(parse_expr("(A(x)B)(x)C"), parse_expr("A(x)(B(x)C)")))
print("factor order is not:      ",
      equal_up_to_coherence(parse_expr("A(x)B"), parse_expr("B(x)A")))

report = coherence_fuzz(seed=42, size=25, trials=500)
print(f"\nconfluence fuzz ({report.data['trials']} expressions):", report.status)

# Dropping the double-dual rule loses canonicity; the harness catches it.
broken = tuple(r for r in DEFAULT_RULES if r != "dual-dual")
report = coherence_fuzz(seed=42, size=25, trials=500, rules=broken)
print("without the double-dual rule:", report.status,
      f"({int(report.defect)} mismatches)")
print("first witness:", report.witness["expr"], "->", report.witness["random_order"])
