"""
Driving the command-line verifier
=================================

Everything the library checks is also reachable from the shell through
the `elliptic-sl2` entry point, which emits deterministic JSON or CSV
reports and signals pass/fail through its exit code (0 pass, 1 residual
failure, 2 usage error, 3 domain error).  This script drives it the way
a CI job would.
"""

import subprocess
import sys

BASE = [sys.executable, "-m", "elliptic_sl2"]


def run(*args):
    proc = subprocess.run([*BASE, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


# A full verification of one deformed module, as JSON.
code, out, _ = run("deform", "verify", "--j", "1.5", "--h", "0.8", "--k", "0.6")
print("deform verify exit code:", code)
print(out)

# The same command fails loudly under an absurd tolerance -- residuals
# near 1e-16 cannot beat 1e-30, and the exit code says so.
code, out, _ = run("deform", "verify", "--j", "1.5", "--h", "0.8", "--k", "0.6",
                   "--tol", "1e-30")
print("with --tol 1e-30, exit code:", code)

# Parameter sweeps stream one row per case; CSV is handy for spreadsheets.
code, out, _ = run("sweep", "--families", "deform", "--j", "0.5,1.0",
                   "--h", "0.5,1.0", "--k", "0.6,1.0", "--format", "csv")
print("sweep exit code:", code)
print(out)

# Domain errors are structured: a pole argument exits 3 with a JSON
# error object on stderr rather than a traceback.
code, _, err = run("elliptic", "eval", "--u", "1.9953027776647292i", "--k", "0.6")
print("pole probe exit code:", code)
print(err.strip())
