"""Runs CLI commands with --json and validates each report against docs/<command>.schema.json."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ["front", "--barrier", "schreier", "--ground", "0..6"],
    ["front", "--barrier", '{"plus":"exact:1"}', "--ground", "1,2,3"],
    ["check", "--barrier", "canonical:w", "--ground", "0..10"],
    ["variant", "--barrier", "schreier", "--seq", "2,4,5", "--k", "3"],
    ["ordertype", "--barrier", '{"plus":"schreier"}'],
    ["ordertype", "--barrier", '{"restrict":{"inner":"schreier","set":{"prefix":[],"tail":{"start":0,"step":2}}}}'],
    ["reduce", "--name", "ts-to-rt", "--barrier", "exact:1", "--coloring", "parity_min", "--ground", "0..4"],
    ["reduce", "--name", "fs-to-rt", "--barrier", "exact:2", "--ground", "0..=6", "--check", "--random", "3",
     "--seed", "1", "--adversarial"],
    ["reduce", "--name", "rrt-to-rt", "--barrier", "schreier", "--ground", "0..=7", "--check", "--random", "3",
     "--k", "3"],
    ["solve", "--property", "mono", "--barrier", "exact:1", "--coloring", "parity_min", "--ground", "0..6",
     "--min-size", "3"],
    ["solve", "--property", "rainbow", "--barrier", "exact:1", "--coloring", "constant", "--ground", "0..6",
     "--min-size", "2"],
    ["diag", "--kind", "thin", "--alpha", "w", "--family", "evens", "--verify", "e=0,i=1", "--bound", "16"],
    ["diag", "--kind", "rainbow", "--alpha", "w", "--family", "evens", "--verify", "e=0", "--check-bounded",
     "--bound", "12"],
    ["diag", "--kind", "rainbow", "--alpha", "2", "--family", "evens", "--bound", "6"],
    ["diag", "--kind", "thin", "--alpha", "1", "--family", "evens", "--verify", "e=3,i=0"],
]


def main() -> int:
    binary, docs = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for args in CASES:
        proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        schema = json.loads((docs / f"{args[0]}.schema.json").read_text())
        try:
            jsonschema.validate(json.loads(proc.stdout), schema)
            print(f"ok   {' '.join(args)}")
        except jsonschema.ValidationError as e:
            print(f"FAIL {' '.join(args)}: {e.message}")
            failures += 1

    # The schemas must reject a report with an unknown field or a wrong type.
    schema = json.loads((docs / "front.schema.json").read_text())
    for bad in ({"barrier": "schreier", "ground": {"prefix": []}, "count": -1, "elements": []},
                {"barrier": "schreier", "ground": {"prefix": []}, "count": 0, "elements": [], "extra": 1}):
        try:
            jsonschema.validate(bad, schema)
            print(f"FAIL schema accepted {bad}")
            failures += 1
        except jsonschema.ValidationError:
            pass
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
