"""The command line interface end to end: generate, analyse, export DOT, verify.

Run: python3 demos/06_command_line.py
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path


def roughdm(*args):
    proc = subprocess.run([sys.executable, "-m", "roughdm", *args], capture_output=True, text=True)
    print(f"$ roughdm {' '.join(args)}   (exit {proc.returncode})")
    return proc


with tempfile.TemporaryDirectory() as tmp:
    rel = Path(tmp) / "clinker.json"
    roughdm("generate", "--kind", "clinker", "--size", "4", "--seed", "5", "--out", str(rel))
    print(rel.read_text())

    proc = roughdm("analyze", str(rel), "--dot", str(Path(tmp) / "dm.dot"))
    print(proc.stdout)
    print((Path(tmp) / "dm.dot").read_text())

    proc = roughdm("verify", "--theorem", "T3,T4", "--n-max", "4", "--samples", "50", "--seed", "1")
    print("ok:", json.loads(proc.stdout)["ok"], "|", proc.stderr.strip())

    proc = roughdm("verify", "--theorem", "bogus")
    print(proc.stderr.strip())
