"""
Running the law suite
=====================

Every law over small exhaustive spaces plus a seeded random sample.
"""

from gtfspace.laws import POSITIVE_LAWS, ANTI_LAWS, acceptance_spaces, format_table, run_laws

# a lighter budget than the command line default
spaces = list(acceptance_spaces(samples=60, max_size=5, exhaustive=2))
reports = run_laws(spaces, POSITIVE_LAWS, gnet_samples=40)
print(format_table(reports))

print()
reports = run_laws(acceptance_spaces(samples=60, max_size=5, exhaustive=3), ANTI_LAWS, gnet_samples=40)
print(format_table(reports))

# the first witness of a failing law is plain JSON
g1 = run_laws(spaces, ["G1"])[0]
if g1.violations:
    w = g1.violations[0]
    print()
    print("G1 witness:", w["space"], w["params"]["g"]["map"])
