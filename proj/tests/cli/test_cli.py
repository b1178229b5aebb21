#!/usr/bin/env python3
"""Exercises the command-line tool end to end: exit codes, output formats,
and byte-level determinism."""

import json
import subprocess
import sys
import tempfile
import os

CLI = sys.argv[1] if len(sys.argv) > 1 else "qcomb"
FAILURES = []


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        FAILURES.append(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    return proc


def check(cond, message):
    if not cond:
        FAILURES.append(message)


def main():
    # validate: both networks pass, bad domain is a usage error.
    out = run("validate", "--kind", "projective", "--basis", "standard")
    report = json.loads(out.stdout)
    check(report["pass"] is True, "projective validation should pass")
    check(report["chain_residual"] <= 1e-10, "chain residual too large")

    out = run("validate", "--kind", "optimal", "--basis", "muub", "--y", "0.4")
    report = json.loads(out.stdout)
    check(report["pass"] is True, "optimal/muub validation should pass")
    check(abs(report["trace_residual"]) <= 1e-10, "trace residual too large")

    run("validate", "--kind", "optimal", "--y", "1.5", expect=2)
    run("validate", "--kind", "optimal", "--basis", "muub", expect=2)
    run("nonsense", expect=2)
    run("tradeoff", "--samples", "1", expect=2)
    run("tradeoff", "--out", "/nonexistent-dir/curve.csv", expect=1)

    # tradeoff: endpoints and determinism.
    out = run("tradeoff", "--samples", "2")
    lines = out.stdout.strip().split("\n")
    check(lines[0] == "y,x,I,D,residual", f"bad header: {lines[0]}")
    check(lines[1] == "1,0,0,0,0", f"bad first row: {lines[1]}")
    check(lines[2] == "0,1,1,1,0", f"bad last row: {lines[2]}")

    first = run("tradeoff", "--samples", "101").stdout
    second = run("tradeoff", "--samples", "101").stdout
    check(first == second, "tradeoff output must be byte-identical")
    residuals = [abs(float(line.split(",")[4])) for line in first.strip().split("\n")[1:]]
    check(max(residuals) <= 1e-10, "curve residual above tolerance")

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "curve.csv")
        run("tradeoff", "--samples", "11", "--out", path)
        with open(path, "rb") as handle:
            data = handle.read()
        check(b"\r" not in data, "expected LF line endings")
        check(data.decode().startswith("y,x,I,D,residual\n"), "bad file header")

    # qkd analyze at the extremes.
    report = json.loads(run("qkd", "analyze", "--y", "1").stdout)
    check(report["I_AE"] == 0, "passive attack leaks nothing")
    check(report["E_AB"] == 0, "passive attack causes no errors")
    check(report["I_AB"] == 1, "error-free channel has unit information")

    report = json.loads(run("qkd", "analyze", "--y", "0").stdout)
    check(abs(report["E_AB"] - 1 / 3) < 1e-9, "projective attack error is 1/3")
    check(abs(report["conclusive_rate"] - 0.375) < 1e-9, "conclusive rate at y=0")

    report = json.loads(run("qkd", "analyze", "--y", "0.3", "--diagnostics").stdout)
    for key in ("H_AE_uniform_marginals", "h_guess_match", "h_guess_other"):
        check(key in report, f"diagnostics field {key} missing")
    report_proj = json.loads(run("qkd", "analyze", "--y", "0", "--diagnostics").stdout)
    check(abs(report_proj["h_guess_match"] - 0.7219280948873623) < 1e-9,
          "entropy of the matching guess at y=0")
    check(report_proj["h_guess_other"] == 0, "differing-guess entropy at y=0")

    csv_out = run("qkd", "analyze", "--y", "0.3", "--format", "csv").stdout
    check(csv_out.startswith("x,y,H_AE,I_AE,E_AB,I_AB,conclusive_rate\n"),
          "bad analyze csv header")

    # qkd curve dataset.
    out = run("qkd", "analyze", "--curve", "--samples", "5")
    lines = out.stdout.strip().split("\n")
    check(lines[0] == "E_AB,I_AB,I_AE", f"bad curve header: {lines[0]}")
    check(len(lines) == 6, "expected 5 sample rows")
    first_row = [float(v) for v in lines[1].split(",")]
    last_row = [float(v) for v in lines[-1].split(",")]
    check(first_row[0] == 0, "curve starts at zero error")
    check(abs(last_row[0] - 1 / 3) < 1e-9, "curve ends at error 1/3")

    # qkd analyze without required flags is a usage error.
    run("qkd", "analyze", expect=2)

    # qkd simulate: determinism and fields.
    a = run("qkd", "simulate", "--y", "0.3", "--rounds", "20000", "--seed", "7").stdout
    b = run("qkd", "simulate", "--y", "0.3", "--rounds", "20000", "--seed", "7").stdout
    check(a == b, "simulate output must be byte-identical under a fixed seed")
    report = json.loads(a)
    for key in ("E_AB", "E_AB_stderr", "conclusive_rate", "H_AE_stderr", "rounds", "seed"):
        check(key in report, f"simulate output missing {key}")
    check(report["rounds"] == 20000 and report["seed"] == 7, "echoed flags wrong")

    # qkd threshold.
    report = json.loads(run("qkd", "threshold").stdout)
    check(0.192 <= report["E_star"] <= 0.202, f"threshold off: {report['E_star']}")
    check(0 < report["y_star"] < 1, "threshold parameter out of range")

    # check: quick run passes, reruns are byte-identical, and the
    # perturbation hook fails the right way.
    first = run("check", "--rounds", "20000").stdout
    second = run("check", "--rounds", "20000").stdout
    check(first == second, "check output must be byte-identical")
    run("check", "--rounds", "20000", "--perturb", "0", expect=1)

    if FAILURES:
        print("CLI TEST FAILURES:")
        for failure in FAILURES:
            print(" -", failure)
        return 1
    print("cli tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
