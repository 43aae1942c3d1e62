#!/usr/bin/env python3
"""Run the full verification battery and write CSV reports.

Produces, under the output directory (default ./reports):

    table1.csv, table2.csv   recomputed relative-error tables vs reference
    margins.csv              every (bound, point) margin on the default grid
    asymptotics.csv          the six limiting-form checks

Exits nonzero if any inequality is violated; table deviations are summarized
on stderr (the two known misprinted reference cells show up there).

Usage: python scripts/run_verification.py [outdir]
"""

import pathlib
import sys
import time

from struveint import harness


def main(outdir: str) -> int:
    out = pathlib.Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    status = 0

    for which in (1, 2):
        t0 = time.time()
        report = harness.reproduce_table(which)
        (out / f"table{which}.csv").write_text(harness.tables_csv(report))
        print(
            f"table {which}: max deviation {report.max_table_deviation:.3e}, "
            f"{report.summary['violated']} cells beyond tolerance "
            f"[{time.time() - t0:.1f}s]",
            file=sys.stderr,
        )

    t0 = time.time()
    sweep = harness.verify_all(harness.default_grid())
    (out / "margins.csv").write_text(harness.margins_csv(sweep))
    s = sweep.summary
    print(
        f"sweep: {s['checked']} checks, {s['strict']} strict, "
        f"{s['inconclusive']} inconclusive, {s['violated']} violated "
        f"[{time.time() - t0:.1f}s]",
        file=sys.stderr,
    )
    if s["violated"]:
        status = 1

    limits = harness.asymptotic_check()
    (out / "asymptotics.csv").write_text(harness.limits_csv(limits))
    print(
        f"asymptotics: {limits.summary['violated']} of "
        f"{limits.summary['checked']} failed",
        file=sys.stderr,
    )
    if limits.summary["violated"]:
        status = 1

    return status


if __name__ == "__main__":
    sys.exit(main(sys.argv[1] if len(sys.argv) > 1 else "reports"))
