"""
Checking the operator catalog
=============================

A weight-zero Rota-Baxter operator satisfies R(x)R(y) = R(R(x)y + xR(y)).
The check runs over all 64 basis pairs and reports the first failing pair.
"""

from octorb import GF, LinMap, Q, build_case, check_rb, fingerprint
from octorb.catalog import CaseSpec, ConstraintViolation, cases, expected_fingerprint
from octorb.operator import image, kernel

R = build_case(CaseSpec("theorem1", 21, {"a": 2, "b": -1}))
print(R.describe())
print(check_rb(R).describe())
print("image :", image(R))
print("kernel:", kernel(R))

# the identity is not an operator of weight zero
print(check_rb(LinMap.identity(Q)).describe())

# nilpotency over the quadratically closed list
for d in cases("corollary6")[:6]:
    spec = CaseSpec("corollary6", d.case_no, {k: 1 for k in d.params})
    fp = fingerprint(build_case(spec))
    print(f"case {d.case_no:2}: {fp.nilpotency():22} predicted: {expected_fingerprint(spec)}")

# every admissible parameter value over F5
F5 = GF(5)
total = 0
for d in cases("theorem1"):
    for a in range(5):
        params = {k: a for k in d.params}
        try:
            total += bool(check_rb(build_case(CaseSpec("theorem1", d.case_no, params), F5)))
        except ConstraintViolation:
            pass
print("F5 instances passing:", total)
