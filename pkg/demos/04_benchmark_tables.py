"""
Accuracy tables: operator method vs eigendecomposition vs interpolation
=======================================================================

Runs the full benchmark sweep — both test functions, all three methods,
M in {2, 3, 0.5}, N in {128, 256, 512}, both index schemes — and prints
the NMSE (percent) tables as markdown.  This is the package's headline
comparison; `opscale bench` produces the same numbers from the command
line.
"""

from opscale import emit_table, run_bench

result = run_bench()
print(f"records: {len(result.records)}")
print(f"settings: {result.metadata}")
print()
print(emit_table(result, fmt="markdown"))
