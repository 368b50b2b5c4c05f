#!/usr/bin/env python3
"""The two documented transcription defects, adjudicated by the oracle.

A claim-verification harness is only useful if it can refute as well as
confirm.  Two printed claims are internally inconsistent, and the default
report run documents exactly these:

1. The second |a4| branch (lambda in (1/5, r0]) can drop below lambda/3,
   yet the Schwarz function w = z^3 always yields |a4| = lambda/3.  The
   printed piecewise bound therefore cannot be sharp near lambda = 1/5.

2. The second branch of the starlike |a4 - a3| bound for lambda > 3/5 is
   printed with linear coefficient (48 - 120 lam) p in the theorem
   statement, but the proof derives (120 lam + 48) p.  Only the proof
   version matches the independent p = 2 anchor lam^2 (27 - 17 lam)/36;
   the statement version even goes negative, which no modulus can satisfy.
"""

import json

from coefbound import cli, functional_value, verify_claim
from coefbound.oracle import Functional
from coefbound.schwarz import CaratheodoryParams

print("=" * 72)
print("Finding 1: the |a4| branch-2 defect")
print("=" * 72)
for lam in (0.21, 0.3, 0.5, 0.6):
    (r,) = verify_claim("thm3.1-a4", [lam], budget=50_000, seed=42)
    z3 = functional_value(Functional("abs_a4", "starlike"), lam, CaratheodoryParams(0.0, 0.0, 1.0))
    flag = "VIOLATED" if r.violation else "holds"
    print(f"  lam={lam:4}: printed bound {r.bound:.6f}  oracle max {r.oracle_max:.6f}  "
          f"z^3 witness {z3:.6f}  -> {flag}")
print()
print("  The defect window ends near lam ~ 0.505, where the printed branch")
print("  crosses back above lambda/3; past it the bound holds but the oracle")
print("  shows it is no longer attained (sharpness fails instead).")

print()
print("=" * 72)
print("Finding 2: statement vs proof version of the |a4 - a3| second branch")
print("=" * 72)
(stmt,) = verify_claim("thm3.3-d43-psi2-statement", [1.0], [2.0], budget=50_000, seed=42)
(proof,) = verify_claim("thm3.3-d43", [1.0], [2.0], budget=50_000, seed=42)
print(f"  statement variant at (lam=1, p=2): bound {stmt.bound:.6f}  "
      f"oracle {stmt.oracle_max:.6f}  violated: {stmt.violation}")
print(f"  proof variant     at (lam=1, p=2): bound {proof.bound:.6f}  "
      f"oracle {proof.oracle_max:.6f}  violated: {proof.violation}")
print(f"  p=2 anchor value lam^2(27-17lam)/36 = {1.0 * (27 - 17) / 36:.6f}")

print()
print("=" * 72)
print("The consolidated report")
print("=" * 72)
print("Running the full registered claim suite (this is `coefbound report`):")
import contextlib
import io

buf = io.StringIO()
with contextlib.redirect_stdout(buf):
    code = cli.main(["report", "--budget", "20000"])
doc = json.loads(buf.getvalue())
print(f"  exit code          : {code}")
print(f"  reports            : {doc['total_reports']}")
print(f"  violated grid pts  : {doc['violation_count']}")
print(f"  violated claim ids : {doc['violated_claim_ids']}")
print()
print("Violations are findings, not errors: the run completes, the witnesses")
print("are serialized, and the exit code 1 flags that the document contains")
print("refuted claims.")
