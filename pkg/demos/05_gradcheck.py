"""
Trusting the gradients
======================

Every block of the model is compared against central differences in double
precision. The harness also proves it can fail: one backward pass is negated
and the check has to notice.
"""

from strokelab.gradsuite import TOLERANCE, run_suite

for r in run_suite(seed=0):
    print(f"{'ok  ' if r.passed else 'FAIL'} {r.name:<34} {r.max_rel_error:.1e}")

print()
print("with the activation's backward pass negated:")
bad = [r for r in run_suite(seed=0, inject_bug=True, include_models=False) if not r.passed]
for r in bad:
    print(f"FAIL {r.name:<34} {r.max_rel_error:.1e}  worst: {r.worst[0][0]}")
assert bad, f"the injected bug went unnoticed at tolerance {TOLERANCE}"
