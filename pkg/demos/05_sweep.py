# Run every check for n = 2..5 and summarize.  The CLI equivalent is
# `gtkl verify --n 2..5`.

from gtkl.verify import run_suite, summarize

reports = run_suite(2, 5, jobs=2)
summary = summarize(reports)
print("reports:", summary["reports"], "all passed:", summary["all_passed"])
for check, outcomes in summary["by_check"].items():
    print(f"  {check:24} {outcomes}")

# Diagonal coefficients of one shape, listed per word in that word's order.

for word, diag in summary["diagonals"]["3,2"].items():
    print("  3,2", word, diag)
