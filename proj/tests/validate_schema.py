"""Runs every subcommand with --format json and validates the output against docs/report.schema.json."""
import json
import subprocess
import sys

import jsonschema

exe, schema_path = sys.argv[1], sys.argv[2]
schema = json.load(open(schema_path))
runs = [
    ["frobenius-basis", "--operator", "quintic", "-M", "6"],
    ["mirror", "--operator", "simplicial:2"],
    ["mirror", "--operator", "quintic", "-M", "6"],
    ["instantons", "--operator", "quintic", "--primes", "5,7"],
    ["check", "--operator", "quintic", "-M", "12"],
    ["hasse-witt", "--family", "hyperoctahedral", "-n", "2"],
    ["frobenius-structure", "--family", "simplicial", "-n", "2"],
    ["derive-pf", "--family", "hyperoctahedral", "-n", "3"],
    ["verify", "--suite", "smoke"],
]
for args in runs:
    out = subprocess.run([exe, *args, "--format", "json"], capture_output=True, text=True, check=True).stdout
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert doc["command"] == args[0], args
    print("valid:", " ".join(args))
