#!/usr/bin/env python3
"""Run every km subcommand over the catalog and validate the output against the schemas."""
import argparse
import json
import pathlib
import re
import subprocess
import sys
import tempfile

import jsonschema


def rank_of(path):
    text = path.read_text()
    if text.lstrip().startswith("{"):
        return len(json.loads(text)["matrix"])
    return sum(1 for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#"))


def invocations(path, rank, top):
    f = str(path)
    full = ",".join(str(i) for i in range(1, rank + 1))
    yield ["validate", f]
    yield ["classify", f]
    yield ["coxeter", f]
    yield ["decompose", f, "--set", full]
    yield ["decompose", f, "--set", "1"]
    yield ["poset", f]
    yield ["nerve", f]
    yield ["ends", f]
    for q in ("2", "4", "9"):
        yield ["indec", f, "--q", q]
    yield ["report", f, "--q", "5"]
    yield ["weyl", "word", f, "--word", ",".join(str(1 + i % rank) for i in range(5))]
    yield ["weyl", "straight", f, "--word", full, "--n", "6"]
    yield ["roots", f, "--max-height", "6"]
    yield ["roots", f, "--max-height", "4", "--set", "1"]
    yield ["conj", f, "--from", "1", "--to", str(rank)]
    yield ["closure", f, "--word", full, "--depth", "2"]
    if top:
        yield ["jregular", f, "--set", ",".join(map(str, top)), "--max-len", "2", "--n", "6",
               "--max-height", "6", "--depth", "1"]


DOT_LINE = re.compile(r'^  (rankdir=BT;|n\d+ \[label="[^"]*"\];|n\d+ -> n\d+;)$')


def check_dot(text):
    lines = text.splitlines()
    assert re.fullmatch(r"digraph \w+ \{", lines[0]), lines[0]
    assert lines[-1] == "}", lines[-1]
    nodes = set()
    for line in lines[1:-1]:
        assert DOT_LINE.match(line), line
        m = re.match(r"^  (n\d+) \[", line)
        if m:
            nodes.add(m.group(1))
        m = re.match(r"^  (n\d+) -> (n\d+);", line)
        if m:
            assert m.group(1) in nodes and m.group(2) in nodes, line


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--km", required=True)
    ap.add_argument("--catalog", required=True, type=pathlib.Path)
    ap.add_argument("--schemas", required=True, type=pathlib.Path)
    args = ap.parse_args()

    load = lambda name: json.loads((args.schemas / name).read_text())
    envelope = load("envelope.schema.json")
    failures = 0
    runs = 0

    def run(cmd):
        return subprocess.run([args.km, *cmd], capture_output=True, text=True)

    def fail(cmd, msg):
        nonlocal failures
        failures += 1
        print(f"FAIL {' '.join(cmd)}: {msg}")

    for path in sorted(args.catalog.iterdir()):
        rank = rank_of(path)
        poset = json.loads(run(["poset", str(path)]).stdout)["payload"]
        # J-regular search needs a nonempty essential subset; use the top of the poset
        top = poset["elements"][poset["top"]]["set"]
        if not top:
            res = run(["jregular", str(path), "--set", "1", "--max-len", "1", "--n", "2", "--max-height", "1",
                       "--depth", "1"])
            runs += 1
            if res.returncode != 2 or "NotEssential({1})" not in res.stderr:
                fail(["jregular", str(path)], f"expected NotEssential, got {res.returncode}")
        for cmd in invocations(path, rank, top):
            first, second = run(cmd), run(cmd)
            runs += 1
            if first.returncode != 0:
                fail(cmd, f"exit {first.returncode}: {first.stderr.strip()}")
                continue
            if first.stdout != second.stdout:
                fail(cmd, "output differs between two runs")
            doc = json.loads(first.stdout)
            name = "weyl_" + cmd[1] if cmd[0] == "weyl" else cmd[0]
            try:
                jsonschema.validate(doc, envelope)
                jsonschema.validate(doc["payload"], load(f"{name}.schema.json"))
            except jsonschema.ValidationError as e:
                fail(cmd, e.message)
        for command in ("poset", "nerve"):
            cmd = [command, str(path), "--format", "dot"]
            res = run(cmd)
            runs += 1
            try:
                assert res.returncode == 0, res.stderr
                check_dot(res.stdout)
            except AssertionError as e:
                fail(cmd, f"invalid DOT: {e}")

    with tempfile.TemporaryDirectory() as tmp:
        broken = pathlib.Path(tmp) / "broken.json"
        broken.write_text('{"matrix": [[1, -1], [-1, 2]]}')
        expected = [
            (["validate", str(broken)], 2, "DiagonalNotTwo(1)"),
            (["indec", str(args.catalog / "affine_a2.json"), "--q", "6"], 2, "NotPrimePower(6)"),
            (["--budget", "3", "roots", str(args.catalog / "affine_a2.json"), "--max-height", "30"], 3,
             "BudgetExceeded"),
        ]
        for cmd, code, tag in expected:
            res = run(cmd)
            runs += 1
            if res.returncode != code or tag not in res.stderr or res.stdout:
                fail(cmd, f"expected exit {code} with {tag}, got {res.returncode}: {res.stderr.strip()}")

    print(f"{runs} invocations, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
