#!/usr/bin/env python3
# Copyright 2026 The qdepth Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs every JSON-producing qdepth command and validates the output."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    qdepth, root = sys.argv[1], pathlib.Path(sys.argv[2])
    schema = json.loads((root / "schema" / "report.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    example = str(root / "data" / "example1.cnf")
    runs = [
        ["inspect", example],
        ["analyze", example, "--method", "linear"],
        ["analyze", example, "--method", "gvs-ip", "--timing"],
        ["analyze", example, "--method", "gvs-greedy", "--seed", "3"],
        ["analyze", example, "--method", "native3"],
        ["analyze", example, "--method", "linear", "--lambda", "2.5"],
        ["compare", example, "--seeds", "2", "--format", "json"],
        ["compare", example, "--seeds", "1", "--no-ip", "--format", "json", "--timing"],
        ["export", example, "--what", "schedule", "--method", "gvs-ip"],
        ["export", example, "--what", "schedule", "--method", "native3"],
    ]
    satlib = root / "data" / "satlib" / "uf20-01.cnf"
    if satlib.exists():
        runs.append(["inspect", str(satlib)])
        runs.append(["analyze", str(satlib), "--method", "gvs-greedy"])

    failures = 0
    docs = []
    for args in runs:
        proc = subprocess.run([qdepth, *args], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        docs.append(doc)
        errors = list(validator.iter_errors(doc))
        for e in errors:
            print(f"FAIL {' '.join(args)}: {e.json_path}: {e.message}")
        failures += bool(errors)

    # A cover written by analyze replays through --cover.
    cover_doc = next(d for d in docs if d.get("formulation") == "gvs-ip")
    cover_file = pathlib.Path("replay_cover.json")
    cover_file.write_text(json.dumps(cover_doc))
    proc = subprocess.run([qdepth, "analyze", example, "--cover", str(cover_file)],
                          capture_output=True, text=True)
    replay = json.loads(proc.stdout)
    validator.validate(replay)
    if replay["formulation"] != "gvs-cover" or replay["max_degree"] != cover_doc["max_degree"]:
        print("FAIL cover replay changed the report")
        failures += 1

    bad = {"kind": "depth-report", "instance": "x"}
    if validator.is_valid(bad):
        print("FAIL schema accepts an incomplete report")
        failures += 1

    print(f"{len(runs) + 1} outputs checked, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
