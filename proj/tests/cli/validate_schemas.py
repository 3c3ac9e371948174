"""Runs every subcommand on small inputs and validates its JSON output."""
import json
import pathlib
import subprocess
import sys

import jsonschema

binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

two_way = {"kind": "2way", "u": [3, 5, 9], "v": [2, 11, 4]}
small = {"kind": "2way", "u": [3, 2, 4], "v": [2, 5, 2]}
axial = {"kind": "axial", "u": [3, 2], "v": [1, 4], "w": [2, 2, 1]}
planar = {
    "kind": "planar",
    "U": [[2, 1, 1], [1, 2, 1]],
    "V": [[1, 2, 1], [2, 1, 1]],
    "W": [[2, 2], [2, 2]],
}
fractional = {"kind": "2way", "u": ["1/2", "3/2"], "v": [1, 1]}
system = {"A": [[1, 2, 3]], "b": [6]}

runs = [
    ("feasible", [], two_way),
    ("feasible", [], axial),
    ("feasible", [], planar),
    ("dimension", [], fractional),
    ("dimension", [], planar),
    ("nw-vertex", [], fractional),
    ("nw-vertex", [], axial),
    ("vertices", [], small),
    ("vertices", [], axial),
    ("vertices", [], planar),
    ("graph", [], two_way),
    ("graph", [], axial),
    ("diameter", [], small),
    ("diameter", [], planar),
    ("facets", [], small),
    ("hurkens", ["--from", "0", "--to", "5"], two_way),
    ("birkhoff", ["--p", "3"], None),
    ("count", [], small),
    ("range", ["--cell", "1,1"], small),
    ("moves", [], small),
    ("connect", [], small),
    ("sample", ["--steps", "50", "--seed", "4"], small),
    ("magic", ["--p", "3", "--t", "2"], None),
    ("volume", ["--p", "3"], None),
    ("reduce-junginger", [], axial),
    ("encode-universality", [], system),
    ("survey-table1", ["--trials", "20"], None),
    ("survey-table2", ["--trials", "5"], None),
    ("survey-table3", ["--trials", "5"], None),
]


def run(command, flags, instance):
    stdin = json.dumps(instance) if instance is not None else ""
    proc = subprocess.run([binary, command, *flags], input=stdin, capture_output=True, text=True)
    if proc.returncode != 0:
        raise SystemExit(f"{command} exited {proc.returncode}: {proc.stderr}")
    return json.loads(proc.stdout)


def check(name, document):
    schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    jsonschema.validate(document, schema, cls=jsonschema.Draft202012Validator)


failures = 0
covered = set()
encoding = None
for command, flags, instance in runs:
    doc = run(command, flags, instance)
    if command == "encode-universality":
        encoding = doc
    if instance is not None:
        check("system" if command == "encode-universality" else "instance", instance)
    try:
        check(command, doc)
        covered.add(command)
    except jsonschema.ValidationError as e:
        failures += 1
        print(f"FAIL {command}: {e.message}")

check("verify-encoding", run("verify-encoding", [], encoding))
covered.add("verify-encoding")

expected = {p.name.removesuffix(".schema.json") for p in schema_dir.glob("*.schema.json")} - {"instance", "system"}
missing = expected - covered
if missing:
    failures += 1
    print("no run for", sorted(missing))
print(f"{len(covered)} subcommands checked, {failures} failures")
sys.exit(1 if failures else 0)
