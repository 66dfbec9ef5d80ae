#!/usr/bin/env python3
"""Regenerate tests/golden/*.json from the built CLI.

Review every diff by hand: the golden files are expectations, not snapshots.
"""
import json
import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"

LAMBDA_S5 = ("-1 + (133/362*s5 - 333/362)*i - (14/181*s5 + 165/181)*j"
             " - (26/181*s5 + 22/181)*k")

CASES = {
    "fixed_points_quadratic": ["fixed-points", "--algebra", "quat:-1,-1@Q",
                               "--poly", "x^2+(i+1)*x+1+i*j"],
    "fixed_points_cubic_sphere": ["fixed-points", "--poly", "i*x^3+(1+i)*x"],
    "fixed_points_identity": ["fixed-points", "--poly", "x"],
    "compose_ix2": ["compose", "--poly", "i*x^2", "--n", "2"],
    "compose_octonion": ["compose", "--algebra", "oct:-1,-1,-1@Q",
                         "--poly", "l*x^2 + (1 - i*l)*x + l - (i*j)*l", "--n", "2"],
    "compose_cap": ["compose", "--poly", "x^2+i", "--n", "6", "--degree-cap", "32"],
    "orbit_identity": ["orbit", "--poly", "x", "--point", "j", "--n-max", "3"],
    "orbit_both": ["orbit", "--poly", "i*x^2", "--point", "j+1", "--n-max", "2",
                   "--semantics", "both"],
    "companion_golden_ratio": ["companion", "--poly", "x^2+i*x+1"],
    "roots_linear": ["roots", "--poly", "x - i"],
    "roots_sphere": ["roots", "--poly", "x^2 + 1"],
    "roots_irrational_exact": ["roots", "--poly", "x^2+i*x+1"],
    "check_periodic_refuted": ["check-periodic", "--algebra", "quat:-1,-1@Q(s5)",
                               "--poly", "x^2+(i+1)*x+1+i*j", "--point", LAMBDA_S5,
                               "--r", "2", "--n-max", "2"],
    "check_periodic_certified": ["check-periodic", "--poly", "x^2+i", "--point", "-i",
                                 "--r", "2"],
    "check_periodic_fixed": ["check-periodic", "--poly", "x^2+(i+1)*x+1+i*j",
                             "--point", "-j", "--r", "1"],
    "oct_check_counterexample": ["oct-check", "--poly", "l*x^2 + (1 - i*l)*x + l - (i*j)*l",
                                 "--point", "j", "--n-max", "3"],
    "error_parse": ["roots", "--poly", "x + y"],
    "error_point_depends_on_x": ["orbit", "--poly", "x^2", "--point", "x"],
    "error_constant": ["roots", "--poly", "3 + i"],
    "error_exact_over_s5": ["roots", "--algebra", "quat:-1,-1@Q(s5)", "--poly", "x^2 + s5"],
    "roots_split_zero_divisor": ["roots", "--algebra", "quat:1,-1@Q", "--poly", "(1 + i)*x + j"],
}


def main() -> int:
    exe = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "build" / "qdyn"
    GOLDEN.mkdir(exist_ok=True)
    for name, args in CASES.items():
        proc = subprocess.run([str(exe), *args], capture_output=True, text=True)
        doc = {"args": args, "exit_code": proc.returncode,
               "stdout": json.loads(proc.stdout)}
        (GOLDEN / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
