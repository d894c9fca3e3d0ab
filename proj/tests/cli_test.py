"""End-to-end checks of the treeqaoa binary: exit codes, outputs, schemas."""

import csv
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

BIN, SCHEMAS = Path(sys.argv[1]), Path(sys.argv[2])

registry = Registry()
schemas = {}
for path in SCHEMAS.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    schemas[path.name.removesuffix(".schema.json")] = doc
    registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))

failures = []


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def validate(doc, name, what):
    try:
        jsonschema.Draft202012Validator(schemas[name], registry=registry).validate(doc)
        check(True, f"{what} matches {name} schema")
    except jsonschema.ValidationError as e:
        check(False, f"{what} matches {name} schema: {e.message}")


def run(*args, code=0):
    r = subprocess.run([str(BIN), "--quiet", *args], capture_output=True, text=True)
    check(r.returncode == code, f"{' '.join(args)} exits {code} (got {r.returncode})")
    return r


def with_manifest(doc, what):
    validate(doc["manifest"], "manifest", what + " manifest")
    check(len(doc["manifest_hash"]) == 64, what + " carries a manifest hash")


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)

    # bound
    out = tmp / "b3.json"
    r = run("bound", "--p", "3", "--out", str(out))
    doc = json.loads(out.read_text())
    validate(doc["certificate"], "bound_certificate", "bound p=3")
    validate(doc["optimization"], "optimization_result", "bound p=3")
    with_manifest(doc, "bound")
    check(doc["certificate"]["c_edge_bound"] == 0.7923, "p=3 cut bound is 0.7923")
    check(doc["certificate"]["girth_requirement"] == 8, "p=3 girth requirement is 8")
    check("girth >= 8 has cut fraction >= 0.7923" in r.stdout, "bound prints the statement")
    again = tmp / "b3b.json"
    run("bound", "--p", "3", "--out", str(again))
    d2 = json.loads(again.read_text())
    check(d2["certificate"] == doc["certificate"], "bound is deterministic")

    out = tmp / "mis.json"
    run("bound", "--p", "1", "--mode", "mis3", "--out", str(out))
    doc = json.loads(out.read_text())
    validate(doc["certificate"], "bound_certificate", "bound mis3")
    validate(doc["optimization"], "optimization_result", "bound mis3")
    check(doc["certificate"]["ir_two_param_bound"] == 0.2693, "p=1 two-angle bound 0.2693")
    check(doc["certificate"]["ir_three_param_bound"] == 0.2852, "p=1 three-angle bound 0.2852")

    out = tmp / "mis2.json"
    run("bound", "--p", "1", "--mode", "mis2", "--out", str(out))
    check(json.loads(out.read_text())["optimization"]["truncated_bound"] == 0.2693, "mis2 row value")

    run("bound", "--p", "0", code=2)
    run("bound", "--p", "-1", code=2)
    run("bound", "--p", "2", "--mode", "nope", code=2)
    r = run("bound", "--p", "13", code=3)
    check("4^13" in r.stderr, "resource error names 4^13")
    run("--max-depth", "2", "bound", "--p", "3", code=3)

    # config file: flags beat the file, the file beats defaults
    cfg = tmp / "run.ini"
    cfg.write_text("seed = 5\n[bound]\np = 2\n")
    out = tmp / "cfg.json"
    run("--config", str(cfg), "bound", "--out", str(out))
    doc = json.loads(out.read_text())
    check(doc["certificate"]["p"] == 2 and doc["manifest"]["seed"] == 5, "config file values apply")
    run("--config", str(cfg), "bound", "--p", "1", "--out", str(out))
    check(json.loads(out.read_text())["certificate"]["p"] == 1, "flags override the config file")

    # table
    table = tmp / "t.csv"
    jout = tmp / "t.json"
    run("table", "--p-max", "2", "--modes", "maxcut,mis2,mis3", "--out", str(table), "--json-out", str(jout))
    rows = list(csv.DictReader(table.open()))
    check([r["mode"] for r in rows] == ["maxcut"] * 2 + ["mis2"] * 2 + ["mis3"] * 2, "table rows and order")
    check(list(rows[0].keys())[:6] == ["p", "mode", "value", "truncated_bound", "seconds", "evaluations"],
          "table columns")
    check(float(rows[4]["value"]) >= float(rows[2]["value"]), "mis3 >= mis2 at p=1")
    check(float(rows[1]["truncated_bound"]) == 0.7559, "p=2 cut row truncates to 0.7559")
    plot = list(csv.DictReader((tmp / "t.csv.plot.csv").open()))
    refs = {float(r["value"]) for r in plot if r["series"] == "reference"}
    check(refs == {0.8918, 0.912, 0.9351, 0.4453}, "plot data carries the reference lines")
    manifest = json.loads((tmp / "t.csv.manifest.json").read_text())
    with_manifest(manifest, "table")
    check(all(r["manifest_hash"] == manifest["manifest_hash"] for r in rows), "csv rows carry the manifest hash")
    for i, res in enumerate(json.loads(jout.read_text())["results"]):
        validate(res, "optimization_result", f"table result {i}")
    run("table", "--p-max", "1", "--modes", "", code=2)
    run("table", "--p-max", "1", "--modes", "maxcut,bogus", code=2)

    # verify
    for suite in ("oracle", "symmetry", "identity"):
        r = run("verify", "--suite", suite, "--cases", "5")
        doc = json.loads(r.stdout)
        check(doc["passed"], f"{suite} suite passes")
        with_manifest(doc, "verify " + suite)
    run("verify", "--suite", "oracle", "--d", "3", "--p", "1")
    run("verify", "--suite", "nothing", code=2)

    # graph
    doc = json.loads(run("graph", "--named", "heawood", "--action", "girth").stdout)
    check(doc["girth"] == 6, "heawood girth 6")
    with_manifest(doc, "graph")
    doc = json.loads(run("graph", "--named", "petersen", "--action", "color").stdout)
    check(doc["proper"] and doc["color_count"] <= 4, "petersen colouring")
    doc = json.loads(run("graph", "--named", "heawood", "--action", "maxdepth").stdout)
    check(doc["max_certified_depth"] == 2, "heawood certifies p=2")
    doc = json.loads(run("graph", "--named", "petersen", "--action", "brute").stdout)
    check(doc["max_cut"] == 12, "petersen max cut 12")
    dup = tmp / "dup.txt"
    dup.write_text("0 1\n0 1\n")
    r = run("graph", "--file", str(dup), "--action", "girth", code=2)
    check("line 2" in r.stderr, "parse error names the line")
    run("graph", "--named", "tutte_coxeter", "--action", "brute", code=3)
    run("graph", "--named", "nosuch", "--action", "girth", code=2)
    run("graph", "--named", "path", "--action", "maxdepth", code=2)

    # sample
    out = tmp / "s.json"
    r = run("sample", "--named", "heawood", "--p", "2", "--repetitions", "21", "--experiments", "3",
            "--out", str(out))
    doc = json.loads(out.read_text())
    check(doc["threshold"] == 15, "heawood p=2 threshold 15")
    for rep in doc["reports"]:
        validate(rep, "sample_report", "sample report")
    with_manifest(doc, "sample")
    params = tmp / "params.json"
    params.write_text(json.dumps(doc["params"]))
    out2 = tmp / "s2.json"
    run("sample", "--named", "heawood", "--params", str(params), "--repetitions", "21",
        "--experiments", "3", "--out", str(out2))
    check(json.loads(out2.read_text())["reports"] == doc["reports"], "params file reproduces the run")
    r = run("sample", "--named", "petersen", "--p", "2", "--repetitions", "5")
    check("warning" in r.stderr, "girth too small prints a warning")
    run("sample", "--named", "heawood", "--p", "1", "--repetitions", "0", code=2)
    bad = tmp / "bad.json"
    bad.write_text("{not json")
    run("sample", "--named", "heawood", "--params", str(bad), "--repetitions", "3", code=2)

    # threads flag and environment variable
    r = subprocess.run([str(BIN), "--quiet", "graph", "--named", "heawood", "--action", "girth"],
                       capture_output=True, text=True, env={"TREEQAOA_THREADS": "2"})
    check(r.returncode == 0, "TREEQAOA_THREADS is accepted")
    run("--threads", "-1", "graph", "--named", "heawood", "--action", "girth", code=2)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
