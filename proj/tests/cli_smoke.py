"""End-to-end checks of the mfh binary: exit codes, CSV values, SVG well-formedness."""

import csv
import io
import math
import os
import subprocess
import sys
import tempfile
import xml.etree.ElementTree as ET

BIN = sys.argv[1]
failures = []


def run(*args, env=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


r = run("curve", "--n", "3", "--tau-min", "0", "--tau-max", "0", "--steps", "1")
check(r.returncode == 0, "curve n=3 exits 0")
row = rows(r.stdout)[0]
check(float(row["m2"]) == 3.0 and abs(float(row["log_Z"]) - math.log(8)) < 1e-10, "curve n=3 tau=0 anchors")

r = run("curve", "--n", "2", "--tau-min", "2", "--tau-max", "2", "--steps", "1")
check(abs(float(rows(r.stdout)[0]["m2"]) - 8 / (3 + math.exp(-2))) < 1e-10, "curve n=2 tau=2 closed form")

args = ("curve", "--n", "200", "--tau-min", "0.5", "--tau-max", "3", "--steps", "6")
a = run(*args, "--threads", "1").stdout
b = run(*args, "--threads", "1").stdout
check(a == b and len(rows(a)) == 6, "curve is byte-identical across runs")
env = dict(os.environ, MF_THREADS="2")
check(run(*args, env=env).returncode == 0, "MF_THREADS is honoured")
check(run(*args, env=dict(os.environ, MF_THREADS="-1")).returncode == 2, "bad MF_THREADS exits 2")

check(run("curve", "--n", "0", "--tau-min", "0", "--tau-max", "1", "--steps", "2").returncode == 2, "n=0 exits 2")
check(run("curve", "--help").returncode == 0, "help exits 0")
check(run("bogus").returncode == 2, "unknown subcommand exits 2")

r = run("verify", "--max-n", "4")
check(r.returncode == 0 and "anchors" in r.stdout, "verify --max-n 4 passes")
r = run("verify", "--max-n", "9")
check(r.returncode == 2 and "max-n must be ≤ 8" in r.stderr, "verify --max-n 9 rejected")
r = run("verify", "--max-n", "4", "--inject-fault")
check(r.returncode in (1, 2), "inject-fault is either a failure or unknown")

r = run("simulate", "--n", "6", "--tau", "1", "--samples", "20000", "--seed", "3")
sim = rows("\n".join(line for line in r.stdout.splitlines() if not line.startswith("#")))
check(r.returncode == 0 and {s["observable"] for s in sim} >= {"Z", "m2", "fix"}, "simulate report")
check(run("simulate", "--n", "6", "--tau", "1", "--samples", "5").returncode == 2, "too few samples exits 2")

with tempfile.TemporaryDirectory() as d:
    csv_path = os.path.join(d, "scan.csv")
    svg_path = os.path.join(d, "scan.svg")
    r = run("transition", "--n-list", "50,100,200", "--tau-min", "1", "--tau-max", "3", "--steps", "5",
            "--out", csv_path)
    check(r.returncode == 0 and "tau_hat," in r.stdout, "transition summary")
    r = run("svg", "--in", csv_path, "--out", svg_path)
    check(r.returncode == 0, "svg exits 0")
    root = ET.parse(svg_path).getroot()
    ns = "{http://www.w3.org/2000/svg}"
    check(root.tag == ns + "svg", "svg root element")
    check(len(root.findall(f".//{ns}polyline")) == 3, "one polyline per n")

    bad = os.path.join(d, "bad.csv")
    with open(bad, "w") as f:
        f.write("n,t\n1,2\n")
    check(run("svg", "--in", bad, "--out", svg_path).returncode == 2, "malformed csv exits 2")
    check(run("svg", "--in", os.path.join(d, "missing.csv"), "--out", svg_path).returncode == 2, "missing csv exits 2")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
