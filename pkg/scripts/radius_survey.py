#!/usr/bin/env python3
"""Survey the starlikeness radius over a parameter grid and summarize.

Example:

    python3 scripts/radius_survey.py --families g,v --param-range 0.05:0.95:19 \
        --alpha-range 0:0.9:10 --out survey.csv

Writes one CSV row per (family, param, alpha) cell and prints, per
family, the range of radii and where the extremes occur.
"""

from __future__ import annotations

import argparse
import csv
import sys

from starrad import FunctionFamily, SeriesConfig, radius_table


def _values(text: str) -> list[float]:
    if ":" in text:
        start, stop, count = text.split(":")
        start, stop, count = float(start), float(stop), int(count)
        if count == 1:
            return [start]
        step = (stop - start) / (count - 1)
        return [start + i * step for i in range(count)]
    return [float(tok) for tok in text.split(",") if tok.strip()]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--families", default="f,g,h,u,v,w")
    ap.add_argument("--param-range", default="0.05:0.95:10")
    ap.add_argument("--alpha-range", default="0:0.75:4")
    ap.add_argument("--certify", action="store_true",
                    help="boundary-certify every cell (slower)")
    ap.add_argument("--out", default=None, help="CSV output path (default stdout)")
    args = ap.parse_args()

    families = [FunctionFamily.from_string(t) for t in args.families.split(",")]
    params = _values(args.param_range)
    alphas = _values(args.alpha_range)
    rows = radius_table(
        families, params, alphas, SeriesConfig(), certify=args.certify
    )

    sink = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    writer = csv.writer(sink)
    writer.writerow(
        ["family", "param", "alpha", "radius", "equation_root", "regime", "certified", "error"]
    )
    for row in rows:
        writer.writerow(
            [row.family, row.param, row.alpha, row.radius, row.equation_root,
             row.regime, row.certified, row.error or ""]
        )
    if args.out:
        sink.close()

    by_family: dict[str, list] = {}
    for row in rows:
        if row.error is None:
            by_family.setdefault(row.family, []).append(row)
    for family in sorted(by_family):
        ok = by_family[family]
        lo = min(ok, key=lambda r: r.radius)
        hi = max(ok, key=lambda r: r.radius)
        n_err = sum(1 for r in rows if r.family == family and r.error)
        print(
            f"{family}: {len(ok)} cells, radius in [{lo.radius:.6f} "
            f"(param={lo.param}, alpha={lo.alpha}), {hi.radius:.6f} "
            f"(param={hi.param}, alpha={hi.alpha})], {n_err} errors",
            file=sys.stderr,
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
