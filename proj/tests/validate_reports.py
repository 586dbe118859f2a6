"""Validates hcs JSON reports against docs/report.schema.json.

usage: validate_reports.py HCS_BINARY SCHEMA FIXTURE_DIR
Runs `verify` on every shipped file, plus the file's own job when it has one,
and one report for each error exit code.
"""
import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    hcs, schema_path, fixture_dir = sys.argv[1:4]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    runs = []
    for f in sorted(pathlib.Path(fixture_dir).glob("*.hcs")):
        runs.append(["verify", str(f)])
        jobs = json.loads(f.read_text()).get("jobs", [])
        if jobs:
            runs.append([jobs[0]["command"], str(f)])
    runs.append(["verify", "/nonexistent.hcs"])
    runs.append(["--budget", "2000", "hc", str(pathlib.Path(fixture_dir) / "B_M2.hcs")])

    failures = 0
    for args in runs:
        proc = subprocess.run([hcs, "--out", "json", *args], capture_output=True, text=True)
        try:
            report = json.loads(proc.stdout)
            validator.validate(report)
            if report["exit_code"] != proc.returncode:
                raise ValueError(f"exit_code {report['exit_code']} != process exit {proc.returncode}")
            print(f"ok    {' '.join(args)} (exit {proc.returncode})")
        except (ValueError, jsonschema.ValidationError) as e:
            failures += 1
            print(f"FAIL  {' '.join(args)}: {e}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
