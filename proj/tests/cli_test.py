#!/usr/bin/env python3
"""End-to-end checks of the tl command line: outputs, formats and exit codes."""
import json
import os
import subprocess
import sys

TL = sys.argv[1]
SCHEMAS = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "docs", "schemas")
failures = []

try:
    import jsonschema
    from referencing import Registry, Resource

    _schemas = {}
    for f in os.listdir(SCHEMAS):
        with open(os.path.join(SCHEMAS, f)) as fh:
            _schemas[f] = json.load(fh)
    _registry = Registry().with_resources((k, Resource.from_contents(v)) for k, v in _schemas.items())
except ImportError:
    jsonschema = None


def conforms(text, schema):
    """True if the output parses and matches docs/schemas/<schema>.schema.json (skipped without jsonschema)."""
    doc = json.loads(text)
    if jsonschema is None:
        return True
    s = _schemas[schema + ".schema.json"]
    jsonschema.Draft202012Validator(s, registry=_registry).validate(doc)
    return True


def run(*args, env=None, stdin=None):
    e = dict(os.environ)
    e.update(env or {})
    p = subprocess.run([TL, *args], capture_output=True, text=True, env=e, input=stdin)
    return p.returncode, p.stdout, p.stderr


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name)
    if not cond:
        failures.append(name)
        if detail:
            print("     " + detail)


rc, out, _ = run("nf", "--n", "6", "--word", "3,2,1,4,3,5,4")
check("nf of a word", rc == 0 and out.strip() == '{"exponent":0,"blocks":[[3,1],[4,3],[5,4]]}', out)

rc, _, err = run("nf", "--format", "table", "--n", "2", "--word", "1,1,1")
check("unsupported format exits 2", rc == 2 and "format" in err, err)

rc, out, _ = run("diagrams", "--n", "3", "--count")
check("diagram count", rc == 0 and out.strip() == "5", out)

rc, out, _ = run("diagrams", "--n", "4")
check("diagram listing", rc == 0 and len(json.loads(out)) == 14, out[:200])

rc, out, _ = run("report", "--n", "4", "--delta", "0")
check("report table", rc == 0 and "Lambda0 = {4,2}" in out and "semisimple = false" in out, out)

rc, out, _ = run("--format", "json", "report", "--n", "5", "--delta", "0")
check("report json", rc == 0 and json.loads(out)["is_semisimple"] is True, out)

rc, out, _ = run("skew", "--perm", "351246798")
j = json.loads(out) if rc == 0 else {}
check("skew example", j.get("compass") == "WWSWSSSWSENNNEEENN"
      and j.get("outline", {}).get("lambda") == [4, 4, 1, 1, 1]
      and j.get("dual_nf") == [[8, 8], [4, 4], [2, 3], [1, 2]], out)

rc, out, _ = run("perm", "--perm", "351246798")
check("permutation to diagram", rc == 0 and json.loads(out)["nf"] == [[2, 1], [4, 2], [8, 8]], out)

rc, out, _ = run("bij", "--from", "half", "--to", "walk", "--value", '{"n":8,"links":[[2,7],[3,4],[5,6]]}')
check("bijection", rc == 0 and json.loads(out) == {"steps": "RRRURUUR"}, out)

rc, out, _ = run("gram", "--n", "6", "--lambda", "0", "--delta", "0")
check("gram at delta=0", rc == 0 and json.loads(out)["rank"] == 0, out[:200])

rc, out, _ = run("trace", "--element", "-", stdin='{"n":2,"pairs":[["T1","T2"],["B1","B2"]]}')
check("trace from stdin", rc == 0 and json.loads(out) == {"var": "delta", "terms": [[-1, 1]]}, out)

rc, out, _ = run("hecke-check", "--n", "4")
check("hecke check", rc == 0 and json.loads(out)["all"] is True, out)

rc, out, _ = run("schurweyl", "--n", "5")
check("schur-weyl audit", rc == 0 and json.loads(out)["audit"]["ok"] is True, out)

rc, out, _ = run("render", "--n", "3", "--word", "1")
check("render", rc == 0 and out.splitlines()[0] == "o o o", out)

# exit codes: 1 for domain errors, 2 for usage errors
rc, _, err = run("nf", "--n", "3", "--word", "7")
check("out-of-range letter exits 1", rc == 1 and err.startswith("tl:"), err)
rc, _, err = run("nf", "--diagram", '{"n":2,"pairs":[["T1","B2"],["T2","B1"]]}')
check("crossing diagram exits 1", rc == 1, err)
rc, _, err = run("nf", "--diagram", "{bad")
check("malformed JSON exits 2", rc == 2, err)
rc, _, err = run("nosuchverb")
check("unknown verb exits 2", rc == 2, err)
rc, _, err = run("diagrams", "--n", "4", "--count", env={"TL_MAX_N": "3"})
check("TL_MAX_N lowers the bound", rc == 1 and "TL_MAX_N" in err, err)
rc, out, _ = run("diagrams", "--n", "13", "--count", env={"TL_MAX_N": "13"})
check("TL_MAX_N raises the bound", rc == 0 and out.strip() == "742900", out)

rc, out, _ = run("--help")
check("help lists verbs", rc == 0 and all(v in out for v in ["nf", "gram", "schurweyl", "hecke-check"]), out)

# outputs feed back in as inputs
D2 = '{"n":2,"pairs":[["T1","T2"],["B1","B2"]]}'
rc, prod, _ = run("mul", "--a", D2, "--b", D2)
rc2, out, _ = run("trace", "--element", "-", stdin=prod)
check("mul output feeds trace", rc == 0 and rc2 == 0 and json.loads(out) == {"var": "delta", "terms": [[0, 1]]}, out)
rc, listing, _ = run("diagrams", "--n", "3")
ok = rc == 0
for d in json.loads(listing):
    rc2, out, _ = run("nf", "--diagram", json.dumps(d))
    ok = ok and rc2 == 0 and json.loads(out)["exponent"] == 0
check("diagrams output feeds nf", ok)
rc, walk, _ = run("bij", "--from", "half", "--to", "walk", "--value", '{"n":8,"links":[[2,7],[3,4],[5,6]]}')
rc2, tab, _ = run("bij", "--from", "walk", "--to", "tableau", "--value", walk)
rc3, back, _ = run("bij", "--from", "tableau", "--to", "half", "--value", tab)
check("bij chain returns to the start", json.loads(tab) == {"row1": [1, 2, 3, 5, 8], "row2": [4, 6, 7]}
      and json.loads(back) == {"n": 8, "links": [[2, 7], [3, 4], [5, 6]]}, back)

# byte-deterministic output
first = run("gram", "--n", "8", "--lambda", "2")[1]
check("output is deterministic", first == run("gram", "--n", "8", "--lambda", "2")[1]
      and run("diagrams", "--n", "6")[1] == run("diagrams", "--n", "6")[1])

# every JSON verb against its schema
schema_cases = [
    ("nf", ["nf", "--n", "4", "--word", "1,2,3,1"]),
    ("nf", ["nf", "--dual", "--diagram", D2]),
    ("eval", ["eval", "--n", "3", "--word", "1,1"]),
    ("element", ["mul", "--a", D2, "--b", D2]),
    ("element", ["expect", "--element", D2]),
    ("laurent", ["trace", "--element", D2]),
    ("diagrams", ["diagrams", "--n", "4"]),
    ("bij", ["bij", "--from", "walk", "--to", "tableau", "--value", '{"steps":"RRU"}']),
    ("bij", ["bij", "--from", "walk", "--to", "onefactor", "--value", '{"steps":"RRU"}']),
    ("bij", ["bij", "--from", "walk", "--to", "bratteli", "--value", '{"steps":"RRU"}']),
    ("bij", ["bij", "--from", "walk", "--to", "half", "--value", '{"steps":"RRU"}']),
    ("skew", ["skew", "--perm", "351246798"]),
    ("perm", ["perm", "--perm", "351246798"]),
    ("perm", ["perm", "--diagram", D2]),
    ("gram", ["gram", "--n", "6", "--lambda", "2"]),
    ("gram", ["gram", "--n", "4", "--lambda", "0", "--v", "1", "--p", "2"]),
    ("report", ["--format", "json", "report", "--n", "3", "--delta", "1"]),
    ("hecke", ["hecke-check", "--n", "3"]),
    ("schurweyl", ["schurweyl", "--n", "4"]),
    ("schurweyl", ["schurweyl", "--n", "3", "--max-vectors", "--lambda", "1"]),
    ("schurweyl", ["schurweyl", "--n", "3", "--check", "--lambda", "1"]),
    ("schurweyl", ["schurweyl", "--n", "3", "--commutation"]),
]
for schema, args in schema_cases:
    rc, out, err = run(*args)
    try:
        ok = rc == 0 and conforms(out, schema)
        detail = err
    except Exception as e:  # parse or validation error
        ok, detail = False, str(e)[:300]
    check(f"schema {schema}: {' '.join(args[:2])}", ok, detail)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
