#!/usr/bin/env python3
"""Run `zmoments poly --format json` for k = 1..3 and validate against the schema."""
import json
import subprocess
import sys
import tempfile

import jsonschema


def main():
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    with tempfile.TemporaryDirectory() as cache:
        for k in (1, 2, 3):
            out = subprocess.run([exe, "poly", "--k", str(k), "--digits", "30", "--format", "json",
                                  "--cache-dir", cache], check=True, capture_output=True, text=True).stdout
            doc = json.loads(out)
            jsonschema.validate(doc, schema, cls=jsonschema.Draft202012Validator)
            if len(doc["coefficients"]) != k * k + 1:
                sys.exit(f"k={k}: expected {k * k + 1} coefficients, got {len(doc['coefficients'])}")
            print(f"k={k}: valid, {len(doc['coefficients'])} coefficients")


if __name__ == "__main__":
    main()
