import json
import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def run_script(name, *args):
    return subprocess.run([sys.executable, str(SCRIPTS / name), *args],
                          capture_output=True, text=True, timeout=120)


def test_run_examples_json():
    proc = run_script("run_examples.py", "--json")
    assert proc.returncode == 0, proc.stderr
    reps = {r["id"]: r for r in json.loads(proc.stdout)}
    assert reps["fermat-quartic"]["dejonquieres"]["order"] == 4
    assert reps["cusp-a"]["dejonquieres"]["preserves_curve"] is True
    assert reps["non-galois"]["status"] == "not galois"


def test_run_corpus_writes_outputs(tmp_path):
    proc = run_script("run_corpus.py", "--out", str(tmp_path), "--entry", "cusp-b-flex")
    assert proc.returncode == 0, proc.stderr
    rows = json.loads((tmp_path / "corpus.json").read_text(encoding="utf-8"))
    assert rows and all(r["passed"] for r in rows)
    assert "checks passed" in (tmp_path / "corpus.txt").read_text(encoding="utf-8")
