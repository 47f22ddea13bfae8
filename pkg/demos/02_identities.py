"""Every identity check on one random set, with the evidence printed.

The same machinery backs `circledepth verify`; here the structured results
are unpacked to show what each check actually compares.
"""

from circledepth.checks import run_checks
from circledepth.constructions import random_general_position

ps = random_general_position(9, seed=2024, coord_range=10**6)
print(f"random certified set, n = {len(ps)}\n")

for result in run_checks(ps):
    flag = "pass" if result.passed else "FAIL"
    print(f"[{flag}] {result.name}: {result.claim}")
    for inst in result.instances[:4]:
        print(f"    {inst.label}: {inst.lhs} {inst.relation} {inst.rhs}")
    if len(result.instances) > 4:
        print(f"    ... {len(result.instances) - 4} more instances")
    print()
