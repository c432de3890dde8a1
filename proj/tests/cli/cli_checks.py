"""End-to-end exit-code and output checks for the command-line tool.

Usage: python3 cli_checks.py <sparsectl_binary> <fixtures_dir>
"""

import json
import os
import subprocess
import sys
import tempfile

PASS = 0
FAILURES = []


def run(args, **kwargs):
    return subprocess.run(args, capture_output=True, text=True, **kwargs)


def check(label, condition, extra=""):
    global PASS
    if condition:
        PASS += 1
    else:
        FAILURES.append(f"{label} {extra}")
        print(f"FAIL: {label} {extra}")


def main(binary, fixtures):
    fx = lambda name: os.path.join(fixtures, name)

    # analyze: output-controllable fixture exits 0, text mentions the interval
    r = run([binary, "analyze", fx("example1.json")])
    check("analyze example1 exit", r.returncode == 0, str(r.returncode))
    check("analyze example1 interval", "[1, 2]" in r.stdout)
    check("analyze example1 rank", "rank(C W)            : 3" in r.stdout)

    # analyze --format json parses and carries the schema fields
    r = run([binary, "analyze", fx("example1.json"), "--format", "json"])
    doc = json.loads(r.stdout)
    check("analyze json rank_CW", doc["rank_CW"] == 3)
    check("analyze json bounds", doc["min_sparsity_lo"] == 1 and doc["min_sparsity_hi"] == 2)
    check(
        "analyze json verdict arrays",
        doc["necessary_holds"] == [True, True] and doc["sufficient_holds"] == [False, True],
    )

    # deterministic output
    r2 = run([binary, "analyze", fx("example1.json"), "--format", "json"])
    check("analyze json deterministic", r.stdout == r2.stdout)

    # analyze: not output controllable -> 2
    r = run([binary, "analyze", fx("zero_output.json")])
    check("analyze zero_output exit", r.returncode == 2, str(r.returncode))

    # analyze: missing file -> 1 with a message naming the problem
    r = run([binary, "analyze", fx("missing.json")])
    check("analyze missing exit", r.returncode == 1, str(r.returncode))
    check("analyze missing message", "cannot read" in r.stderr)

    # malformed json -> 1
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as tmp:
        tmp.write('{"A": [[1, 0], [0, 1]], "B": [[1], [0], [0]], "C": [[1, 0]]}')
        bad_path = tmp.name
    r = run([binary, "analyze", bad_path])
    check("analyze bad dims exit", r.returncode == 1, str(r.returncode))
    check("analyze bad dims names B", "B" in r.stderr)
    os.unlink(bad_path)

    # check: indeterminate band / sufficient / out-of-range sparsity
    r = run([binary, "check", fx("example1.json"), "-s", "1"])
    check("check s=1 exit", r.returncode == 3, str(r.returncode))
    check("check s=1 lines", "necessary" in r.stdout and "PASS" in r.stdout)
    r = run([binary, "check", fx("example1.json"), "-s", "2"])
    check("check s=2 exit", r.returncode == 0, str(r.returncode))
    r = run([binary, "check", fx("example1.json"), "-s", "0"])
    check("check s=0 exit", r.returncode == 1, str(r.returncode))
    r = run([binary, "check", fx("zero_output.json"), "-s", "1"])
    check("check not-controllable exit", r.returncode == 2, str(r.returncode))

    # oracle verdicts and exit codes
    r = run([binary, "oracle", fx("example1.json"), "-s", "1"])
    check("oracle example1 exit", r.returncode == 2, str(r.returncode))
    check("oracle example1 verdict", "no witness" in r.stdout)
    r = run([binary, "oracle", fx("example2_b2.json"), "-s", "1", "--format", "json"])
    check("oracle b2 exit", r.returncode == 0, str(r.returncode))
    doc = json.loads(r.stdout)
    check("oracle b2 witness", doc["witness_supports"] == [[1], [1]])
    r = run([binary, "oracle", fx("identity2.json"), "-s", "1"])
    check("oracle identity exit", r.returncode == 0, str(r.returncode))
    check("oracle identity witness", "K = 2" in r.stdout)

    # oracle budget cap -> 4
    r = run([binary, "oracle", fx("example1.json"), "-s", "1", "--budget", "1"])
    check("oracle budget exit", r.returncode == 4, str(r.returncode))
    check("oracle budget message", "budget" in r.stderr)

    # design: reachable target, unreachable target, dimension mismatch
    r = run(
        [binary, "design", fx("example2_b2.json"), "-s", "1", "--yf", "[0.5, -1.5]",
         "--format", "json"]
    )
    check("design b2 exit", r.returncode == 0, str(r.returncode))
    sol = json.loads(r.stdout)
    check("design b2 residual", sol["residual"] <= 1e-8)
    check("design b2 sparsity", all(len(s) <= 1 for s in sol["supports"]))

    r = run([binary, "design", fx("zero_output.json"), "-s", "1", "--yf", "[1]"])
    check("design unreachable exit", r.returncode == 5, str(r.returncode))

    r = run([binary, "design", fx("example2_b2.json"), "-s", "1", "--yf", "[1, 2, 3]"])
    check("design bad yf exit", r.returncode == 1, str(r.returncode))

    # greedy miss on a reachable target is reported as unreachable (exit 5),
    # with or without a longer horizon
    r = run([binary, "design", fx("example2.json"), "-s", "1", "--yf", "[1, 1]"])
    check("design greedy miss exit", r.returncode == 5, str(r.returncode))
    r = run(
        [binary, "design", fx("example2.json"), "-s", "1", "--yf", "[1, 1]",
         "--horizon", "4"]
    )
    check("design greedy miss horizon exit", r.returncode == 5, str(r.returncode))

    # trivially attained target: zero inputs
    r = run(
        [binary, "design", fx("identity2.json"), "-s", "1", "--yf", "[0, 0]",
         "--x0", "[0, 0]", "--format", "json"]
    )
    check("design attained exit", r.returncode == 0, str(r.returncode))
    sol = json.loads(r.stdout)
    check("design attained inputs", all(all(v == 0 for v in u) for u in sol["inputs"]))

    # design output feeds simulate
    r = run(
        [binary, "design", fx("example2_b2.json"), "-s", "1", "--yf", "[0.5, -1.5]",
         "--format", "json"]
    )
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as tmp:
        tmp.write(r.stdout)
        sol_path = tmp.name
    r = run(
        [binary, "simulate", fx("example2_b2.json"), "--inputs", sol_path,
         "--format", "json"]
    )
    check("simulate exit", r.returncode == 0, str(r.returncode))
    traj = json.loads(r.stdout)
    final = traj["outputs"][-1]
    check(
        "simulate reaches target",
        abs(final[0] - 0.5) < 1e-8 and abs(final[1] + 1.5) < 1e-8,
        str(final),
    )
    # a nonzero initial state shows up in the first output sample
    r = run(
        [binary, "simulate", fx("example2_b2.json"), "--inputs", sol_path,
         "--x0", "[1, 0, 0, 0]", "--format", "json"]
    )
    check("simulate x0 exit", r.returncode == 0, str(r.returncode))
    traj = json.loads(r.stdout)
    check("simulate x0 start", traj["outputs"][0] == [1.0, 0.0], str(traj["outputs"][0]))
    os.unlink(sol_path)

    # environment variable overrides mirror the tolerance flags: an absurd
    # rank tolerance wipes out every rank
    env = dict(os.environ, SPARSECTL_RANK_TOL="10.0")
    r = run([binary, "analyze", fx("example1.json")], env=env)
    check("env rank tol exit", r.returncode == 2, str(r.returncode))

    # all bundled fixtures load and analyze without error
    for name in sorted(os.listdir(fixtures)):
        if not name.endswith(".json"):
            continue
        r = run([binary, "analyze", fx(name)])
        check(f"analyze fixture {name}", r.returncode in (0, 2), str(r.returncode))

    print(f"cli checks: {PASS} passed, {len(FAILURES)} failed")
    if FAILURES:
        raise SystemExit(1)


if __name__ == "__main__":
    if len(sys.argv) != 3:
        raise SystemExit("usage: cli_checks.py <binary> <fixtures_dir>")
    main(sys.argv[1], sys.argv[2])
