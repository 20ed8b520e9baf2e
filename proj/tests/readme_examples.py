#!/usr/bin/env python3
"""Runs every `$ chaincode ...` example in README.md and diffs the output.

Output is stdout followed by stderr. A final line `[exit N]` states a nonzero exit code.
Usage: readme_examples.py README.md path/to/chaincode
"""
import difflib
import re
import shlex
import subprocess
import sys


def examples(text):
    for block in re.findall(r"```console\n(.*?)```", text, re.S):
        cur = None
        for line in block.splitlines():
            if line.startswith("$ "):
                if cur:
                    yield cur
                cur = [line[2:], []]
            elif cur is not None:
                cur[1].append(line)
        if cur:
            yield cur


def main():
    readme, exe = sys.argv[1], sys.argv[2]
    with open(readme, encoding="utf-8") as f:
        found = list(examples(f.read()))
    if not found:
        print("no examples found")
        return 1
    bad = 0
    for cmd, want in found:
        argv = shlex.split(cmd)
        if argv[0] != "chaincode":
            continue
        r = subprocess.run([exe] + argv[1:], capture_output=True, text=True)
        got = (r.stdout + r.stderr).splitlines()
        if r.returncode != 0:
            got.append(f"[exit {r.returncode}]")
        if got != want:
            bad += 1
            print(f"MISMATCH: {cmd}")
            sys.stdout.writelines(l + "\n" for l in difflib.unified_diff(want, got, "README", "actual", lineterm=""))
        else:
            print(f"ok: {cmd}")
    print(f"{len(found) - bad}/{len(found)} examples match")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
