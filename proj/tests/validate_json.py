# Copyright 2026 The locality-lab Authors
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

"""Runs every bundled scenario with --json and validates the report."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main(argv):
    if len(argv) != 4:
        print("usage: validate_json.py <locality-lab> <schema> <scenario dir>")
        return 2
    exe, schema_path, scenario_dir = argv[1:]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for scn in sorted(pathlib.Path(scenario_dir).glob("*.scn")):
        run = subprocess.run([exe, "run", str(scn), "--json"],
                             capture_output=True, text=True)
        if run.returncode not in (0, 1):
            print(f"FAIL {scn.name}: exit {run.returncode}: {run.stderr.strip()}")
            failures += 1
            continue
        report = json.loads(run.stdout)
        errors = sorted(validator.iter_errors(report), key=str)
        if errors:
            failures += 1
            print(f"FAIL {scn.name}: {errors[0].message} at {list(errors[0].path)}")
            continue
        # the text report lists the same labels and products
        text = subprocess.run([exe, "run", str(scn)], capture_output=True,
                              text=True).stdout
        for label in report["labels"]:
            if f"== {label['name']} " not in text or label["product"] not in text:
                failures += 1
                print(f"FAIL {scn.name}: label {label['name']} missing from text report")
        print(f"PASS {scn.name}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
