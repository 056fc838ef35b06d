# Copyright (C) 2026 The gl2cert Authors
# This program is Licensed under the Apache License, Version 2.0
# (the "License"); you may not use this file except in compliance
# with the License. You may obtain a copy of the License at
#   http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License. See accompanying LICENSE file.
"""End-to-end checks of the gl2 command line tool.

usage: test_cli.py GL2_BINARY SCHEMA_DIR
"""
import json
import os
import re
import subprocess
import sys
import tempfile

import jsonschema
import sympy

BIN, SCHEMAS = sys.argv[1], sys.argv[2]
failures = []


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout


def check(ok, what):
    print(("ok   " if ok else "FAIL ") + what)
    if not ok:
        failures.append(what)


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


def validates(doc, name):
    try:
        jsonschema.validate(doc, schema(name))
        return True
    except jsonschema.ValidationError as e:
        print("   ", e.message)
        return False


t = sympy.symbols("t")


def poly(text, p):
    return sympy.Poly(sympy.sympify(text.replace("^", "**"), locals={"t": t}), t, modulus=p)


# documented examples
code, out = run("frobpoly", "--q", "3", "--phi", "t,1,2*t^2", "--prime", "(t^2+t+2)")
check(code == 0 and out.strip() == "x^2 + (1)*x + (t^2+t+2)", "frobpoly at (t^2+t+2): " + out.strip())
code, out = run("det-index", "--q", "3", "--phi", "t,0,t")
check(code == 0 and out.strip() == "2", "det-index of t,0,t")
code, out = run("certify", "--q", "2", "--phi", "t,t^3,t^2+t+1", "--claim", "adelic")
check(code == 0 and out.startswith("AdelicFull: Proven"), "adelic certificate q=2")
code, out = run("certify", "--q", "3", "--phi", "t,1,t", "--claim", "adelic")
check(code == 2, "negative control exits 2")

# exit codes for usage errors
check(run("frobpoly", "--q", "3", "--nope")[0] == 1, "unknown flag")
check(run()[0] == 1, "missing subcommand")
check(run("frobpoly", "--q", "3", "--phi", "t,1,t")[0] == 1, "missing --prime")
check(run("frobpoly", "--q", "3", "--phi", "t,1,t", "--prime", "(t^2)")[0] == 1, "non-prime --prime")
check(run("density", "--set", "C", "--q", "2", "--d", "2")[0] == 1, "density without mode")

# json outputs against the shipped schemas
docs = [
    (["frobpoly", "--q", "2", "--phi", "t,t^3,t^2+t+1", "--prime", "(t+1)"], "frobpoly"),
    (["det-index", "--q", "5", "--phi", "t,1,4*t^4"], "det_index"),
    (["reduction-type", "--q", "3", "--phi", "t,t,t^2+1"], "reduction_type"),
    (["group-check", "--q", "2", "--level", "(t)^2", "--gens", "[[1,1],[0,1]];[[1,0],[1,1]]"], "group_check"),
    (["group-check", "--q", "3", "--level", "(t)", "--gens", "[[1,1],[0,1]];[[1,0],[1,1]]"], "group_check"),
    (["wild2", "--q", "2", "--phi", "t,t^3,t^2+t+1"], "wild2"),
    (["density", "--set", "C", "--q", "2", "--d", "3", "--exact"], "density"),
    (["density", "--set", "T", "--m", "12", "--q", "2", "--d", "3", "--samples", "50", "--seed", "4"], "density"),
    (["reproduce", "--only", "2", "3"], "reproduce"),
]
for c in ["modl", "lambda-adic", "all-lambda", "adelic"]:
    docs.append((["certify", "--q", "3", "--phi", "t,1,2*t^2", "--claim", c, "--lambda", "(t)"], "certificate"))
for args, name in docs:
    code, out = run(*args, "--json")
    try:
        doc = json.loads(out)
    except json.JSONDecodeError:
        doc = None
    check(doc is not None and validates(doc, name), "schema " + name + ": " + " ".join(args))

# printed polynomials reparse: text and json forms agree and the constant generates the prime
for q, phi, primes in [(3, "t,1,2*t^2", ["(t+1)", "(t^2+1)", "(t^3+2*t+1)"]),
                       (2, "t,t^3,t^2+t+1", ["(t+1)", "(t^3+t+1)", "(t^4+t+1)"])]:
    for pr in primes:
        _, text = run("frobpoly", "--q", str(q), "--phi", phi, "--prime", pr)
        _, js = run("frobpoly", "--q", str(q), "--phi", phi, "--prime", pr, "--json")
        m = re.fullmatch(r"x\^2 \+ \((.*)\)\*x \+ \((.*)\)", text.strip())
        doc = json.loads(js)
        ok = m is not None
        if ok:
            ok = poly(m.group(1), q) == -poly(doc["trace"], q) and poly(m.group(2), q) == poly(doc["constant"], q)
            c = poly(doc["constant"], q)
            ok = ok and c.monic() == poly(pr[1:-1], q)
        check(ok, f"round trip q={q} at {pr}: {text.strip()}")

# csv output
with tempfile.TemporaryDirectory() as d:
    path = os.path.join(d, "scan.csv")
    run("density", "--set", "C", "--q", "2", "--d", "1", "--exact", "--csv", path)
    run("density", "--set", "C", "--q", "2", "--d", "2", "--exact", "--csv", path)
    with open(path) as f:
        lines = f.read().splitlines()
    check(lines == ["set,q,d,mode,count,total,ratio", "C,2,1,exact,2,16,0.125000", "C,2,2,exact,10,64,0.156250"],
          "csv file: " + repr(lines))

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
