#!/usr/bin/env python3
"""Runs the CLI on a few fixture pairs and validates each report against the schema."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

cli, solver, schema_path, fixtures = sys.argv[1:5]
schema = json.loads(Path(schema_path).read_text())
fig1 = f"{fixtures}/fig1.json"
pert = f"{fixtures}/fig1_bias_pert.json"
runs = [
    [fig1, fig1, "--relation", "strict"],
    [fig1, pert, "--relation", "strict"],
    [fig1, pert, "--relation", "l1", "--epsilon", "0.5", "--mem-limit", "2048"],
    [fig1, pert, "--relation", "topk", "--k", "2"],
    [fig1, fig1, "--relation", "strict", "--inject-drop-relation"],
]
with tempfile.TemporaryDirectory() as tmp:
    for i, args in enumerate(runs):
        report = Path(tmp) / f"r{i}.json"
        proc = subprocess.run([cli, "check", *args, "--solver", solver, "--report", str(report)],
                              capture_output=True, text=True)
        doc = json.loads(report.read_text())
        jsonschema.validate(doc, schema)
        assert doc["exit_code"] == proc.returncode, (doc["exit_code"], proc.returncode)
        print(f"ok {doc['verdict']:>6} exit {proc.returncode}: {' '.join(args[2:])}")
