"""Runs the CLI and validates its JSON output against the published schema."""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    runs = [
        ["--theorem", "all", "--m-max", "2"],
        ["--theorem", "2", "--case", "IV", "--oracle", "exact"],
        ["--theorem", "3", "--m-min", "2", "--m-max", "3", "--oracle", "quadrature"],
    ]
    failures = 0
    for args in runs:
        proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=lambda e: list(e.path))
        for e in errors[:5]:
            print(f"FAIL {' '.join(args)}: {list(e.path)}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
