"""
Replaying normalization chains
==============================

A reduction script is a list of steps, each either a transport
R -> phi R phi^-1 by a catalog map or a rescaling.  Replay checks the
identity after every step and compares the result with the stated normal
form.
"""

import json

from octorb import run_script
from octorb.scripts import script_by_name, shipped_scripts

s = script_by_name("lemma4-case-1aaaa")
print("input :", s.input.describe())
trace = []
out = run_script(s, trace=trace)
for step, R in zip(s.steps, trace):
    print(f"  {step.label():24} {R.describe()}")
print("output matches:", out == s.output)

# scripts are plain JSON
print(json.dumps(s.to_json()["steps"]))

for s in shipped_scripts():
    print(f"{s.source:30} {'ok' if run_script(s) == s.output else 'MISMATCH'}")
