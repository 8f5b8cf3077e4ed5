#!/usr/bin/env python3
"""End-to-end CLI checks: JSON outputs validate against the published schemas,
exit codes follow the documented conventions, and seeded runs are
byte-for-byte deterministic."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

FAILURES = []


def run(cli, args):
    proc = subprocess.run([cli] + args, capture_output=True, text=True, timeout=600)
    return proc


def check(name, cond, extra=""):
    status = "PASS" if cond else "FAIL"
    print(f"[{status}] {name}" + (f" ({extra})" if extra and not cond else ""))
    if not cond:
        FAILURES.append(name)


def expect_json(cli, schemas, name, args, schema_name, exit_code=0):
    proc = run(cli, args)
    check(f"{name}: exit code {exit_code}", proc.returncode == exit_code,
          f"got {proc.returncode}, stderr: {proc.stderr.strip()}")
    try:
        doc = json.loads(proc.stdout)
    except json.JSONDecodeError as e:
        check(f"{name}: output is JSON", False, str(e))
        return None
    schema = json.loads((schemas / f"{schema_name}.json").read_text())
    try:
        jsonschema.validate(doc, schema)
        check(f"{name}: validates against {schema_name}", True)
    except jsonschema.ValidationError as e:
        check(f"{name}: validates against {schema_name}", False, e.message)
    return doc


def main():
    cli = sys.argv[1]
    schemas = Path(sys.argv[2])

    doc = expect_json(cli, schemas, "ksmall verify",
                      ["ksmall", "verify", "--family", "so-sl", "--k", "2", "--json"],
                      "ksmall_verify")
    if doc:
        check("ksmall verify: positive verdict", doc["verdict"] == "positive")
        check("ksmall verify: witness (1,0)", doc["witness"] == ["1", "0"])

    expect_json(cli, schemas, "charring eval",
                ["charring", "eval", "--family", "A", "--rank", "2",
                 "--lambda", "1,1,0", "--x", "1,1,1", "--json"],
                "charring_eval")

    doc = expect_json(cli, schemas, "satake table",
                      ["satake", "table", "--n", "2", "--mu", "2,0", "--q", "sym"],
                      "satake_table")
    doc = expect_json(cli, schemas, "satake oracle",
                      ["satake", "oracle", "--n", "2", "--mu", "2,0", "--p", "3"],
                      "satake_oracle")
    if doc:
        check("satake oracle: sphere size 12", doc["sphere_size"] == 12)

    expect_json(cli, schemas, "buildings delta",
                ["buildings", "delta", "--family", "A", "--rank", "2",
                 "--mu", "2,1,0", "--json"], "buildings_delta")
    doc = expect_json(cli, schemas, "buildings sphere",
                      ["buildings", "sphere", "--n", "2", "--mu", "2,0",
                       "--at-q", "3", "--json"], "buildings_sphere")
    if doc:
        check("buildings sphere: q^2+q at 3", doc.get("at_q") == "12")
    expect_json(cli, schemas, "buildings intersect",
                ["buildings", "intersect", "--config", "torus-gl2", "--mu", "1,0",
                 "--p", "3", "--json"], "buildings_intersect")

    doc = expect_json(cli, schemas, "reproduce (single family)",
                      ["reproduce", "--family", "so-sl", "--k", "2", "--json"],
                      "reproduce")
    if doc:
        check("reproduce: all positive", doc["all_positive"] is True)

    doc = expect_json(cli, schemas, "acceptance (ksmall only)",
                      ["acceptance", "--only", "ksmall", "--seed", "5", "--json"],
                      "acceptance")
    if doc:
        check("acceptance: criteria 1 and 2",
              [c["id"] for c in doc["criteria"]] == [1, 2])

    # Usage and capability failures exit with 2.
    check("unknown option exits 2",
          run(cli, ["ksmall", "verify", "--bogus"]).returncode == 2)
    check("missing required option exits 2",
          run(cli, ["ksmall", "verify"]).returncode == 2)
    check("out-of-range size exits 2",
          run(cli, ["ksmall", "verify", "--family", "so-sl", "--k", "9"]).returncode == 2)
    check("no subcommand exits 2", run(cli, []).returncode == 2)

    # Seeded runs are byte-identical.
    args = ["acceptance", "--only", "ksmall", "--seed", "7", "--json"]
    first = run(cli, args).stdout
    second = run(cli, args).stdout
    check("seeded acceptance is deterministic", first == second)

    if FAILURES:
        print(f"{len(FAILURES)} CLI validation failures")
        return 1
    print("all CLI validations passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
