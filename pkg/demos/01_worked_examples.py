"""
Rebuild the five reference families and print every check.

Run with ``python demos/01_worked_examples.py``.
"""

from lazkit.reproduce import EXAMPLES

for eid, build in EXAMPLES.items():
    checks = build()
    status = "PASS" if all(c.passed for c in checks) else "FAIL"
    print(f"example {eid}: {status}  {build.__doc__.strip()}")
    for c in checks:
        print(f"    [{'x' if c.passed else ' '}] {c.name}: measured {c.measured}")
