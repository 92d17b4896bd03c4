"""Validate gswf CLI JSON output against schemas/*.schema.json."""
import json
import subprocess
import sys

import jsonschema

CASES = [
    ("rationality", ["rationality", "--preset", "condorcet", "--n", "5", "--uniform", "--method", "all",
                     "--samples", "2000"]),
    ("rationality", ["rationality", "--preset", "threshold_instability", "--n", "7", "--q", "0.2",
                     "--alpha", "0.25", "--beta", "0.125", "--gamma", "0.125"]),
    ("rationality", ["rationality", "--f", "and", "--g", "or", "--h", "maj", "--n", "3",
                     "--triples", "0.3,0.1,0.1,0.2,0.2,0.1", "--method", "both"]),
    ("rationality", ["simulate", "--preset", "split_dictators", "--n", "4", "--uniform", "--samples", "500"]),
    ("verify", ["verify", "--check", "w_prime_small", "--check", "lower_bound_biased_endpoint_demo"]),
    ("search", ["search", "--n", "3", "--class", "balanced,monotone"]),
    ("search", ["search", "--n", "4", "--class", "balanced", "--random", "--trials", "50", "--seed", "3"]),
    ("spectrum", ["spectrum", "--f", "thr:5:4"]),
    ("catalog", ["catalog", "list"]),
]


def main() -> int:
    exe, schema_dir = sys.argv[1], sys.argv[2]
    failures = 0
    for name, args in CASES:
        with open(f"{schema_dir}/{name}.schema.json") as fh:
            schema = json.load(fh)
        proc = subprocess.run([exe, *args], capture_output=True, text=True)
        try:
            if proc.returncode != 0:
                raise RuntimeError(f"exit {proc.returncode}: {proc.stderr.strip()}")
            jsonschema.validate(json.loads(proc.stdout), schema)
            print(f"ok   {name}: {' '.join(args)}")
        except Exception as exc:  # noqa: BLE001
            failures += 1
            print(f"FAIL {name}: {' '.join(args)}\n     {exc}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
