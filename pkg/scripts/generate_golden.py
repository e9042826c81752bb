#!/usr/bin/env python3
"""Regenerate tests/golden/golden.json from the independent oracles.

Every value in the golden file is produced by the reference machinery
in tests/oracles.py (exact rational sums, sign-exact bisection, graded
Simpson, 50-digit prefactors), never by the package itself.  Run from
the repository root:

    python3 scripts/generate_golden.py
"""

from __future__ import annotations

import json
import pathlib
import sys
import time

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

import oracles  # noqa: E402
from oracles import fnum  # noqa: E402

LOMMEL_PARAMS = (-0.75, -0.25, 0.25, 0.5, 0.75)
STRUVE_PARAMS = (-0.25, 0.0, 0.25)
ALPHAS = (0.0, 0.25, 0.5, 0.75)


def build() -> dict:
    t0 = time.time()
    values: dict[str, float] = {}

    for z in (0.5, 1.0, 2.0, 3.5):
        values[f"hyp1f2|b1=1.5|b2=2.0|z={fnum(z)}"] = float(
            oracles.hyp1f2_exact(1.5, 2.0, oracles.x_from_z(z))
        )
    for mu in (-0.25, 0.25, 0.5, 0.75):
        for z in (0.5, 1.0, 2.0):
            values[f"phi0|mu={fnum(mu)}|z={fnum(z)}"] = float(oracles.phi0_exact(mu, z))
            values[f"phi1|mu={fnum(mu)}|z={fnum(z)}"] = float(oracles.phi1_exact(mu, z))
    for mu_raw in (0.0, 0.25):
        for z in (1.0, 2.0):
            values[f"lommel_s|mu_raw={fnum(mu_raw)}|nu_raw=0.5|z={fnum(z)}"] = (
                oracles.lommel_s_ref(mu_raw, 0.5, z)
            )
    for nu in (-0.25, 0.25):
        for z in (1.0, 2.0):
            values[f"struve_h|nu={fnum(nu)}|z={fnum(z)}"] = oracles.struve_h_ref(nu, z)
    for c in (0.0, 0.25):
        for z in (1.0, 2.0):
            values[f"psi|mu=0.5|c={fnum(c)}|z={fnum(z)}"] = float(
                oracles.psi_exact(0.5, c, z)
            )
    for d in (0.0, 0.5):
        for z in (1.0, 2.0):
            values[f"phinum|nu=0.25|d={fnum(d)}|z={fnum(z)}"] = float(
                oracles.struve_num_exact(0.25, d, z)
            )
    for mu in (-0.75, -0.6):
        for r in (1.0, 2.0):
            values[f"evalimag|phi0|mu={fnum(mu)}|r={fnum(r)}"] = float(
                oracles.imag_sums_exact(mu, r)[0]
            )
            values[f"imagq|mu={fnum(mu)}|r={fnum(r)}"] = float(
                oracles.imag_quotient_exact(mu, r)
            )
    b1, b2 = oracles.kernel_bases(0.5)
    values["quotient|v|nu=0.5|r=1.0"] = float(
        oracles.circle_quotient_exact(b1, b2, 1, 2, 1.0)
    )
    values["tanroot|v|nu=0.5|alpha=0.0"] = oracles.tan_fixed_point()
    print(f"scalar values done ({time.time() - t0:.1f}s)", flush=True)

    cells = [("f", p) for p in LOMMEL_PARAMS] + [("g", p) for p in LOMMEL_PARAMS]
    cells += [("h", p) for p in LOMMEL_PARAMS]
    cells += [(fam, p) for fam in ("u", "v", "w") for p in STRUVE_PARAMS]
    for fam, param in cells:
        for alpha in ALPHAS:
            radius, root = oracles.radius_oracle(fam, param, alpha)
            values[oracles.radius_id(fam, param, alpha)] = float(radius)
            if fam in ("h", "w"):
                values[oracles.eqroot_id(fam, param, alpha)] = float(root)
        print(f"radius cells for {fam} param={param} done "
              f"({time.time() - t0:.1f}s)", flush=True)

    zeros = oracles.stream_zeros(*oracles.phi_bases(0.5), 10)
    for n, xi in enumerate(zeros, start=1):
        values[oracles.zero_id(0.5, n)] = float(xi)
    for n_zeros in (5, 10, 15):
        for z in (1.0, 2.0):
            values[oracles.hadamard_id(0.5, n_zeros, z)] = oracles.hadamard_deviation(
                0.5, n_zeros, z
            )
    print(f"zeros and products done ({time.time() - t0:.1f}s)", flush=True)

    values["integral|phi0|mu=0.5|z=2.0"] = oracles.integral_phi0(0.5, 2.0)
    values["integral|phi1|mu=0.5|z=2.0"] = oracles.integral_phi1(0.5, 2.0)
    values["integral|struve|nu=0.25|z=2.0"] = oracles.integral_struve(0.25, 2.0)

    return {
        "meta": {
            "generator": "scripts/generate_golden.py",
            "abs_tol": 1e-10,
            "series_tail_bits": 120,
            "bisection_steps": 60,
            "entries": len(values),
        },
        "values": values,
    }


def main() -> None:
    golden = build()
    out = ROOT / "tests" / "golden" / "golden.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(golden, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print(f"wrote {golden['meta']['entries']} entries to {out}")


if __name__ == "__main__":
    main()
