import subprocess
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent


@pytest.mark.parametrize("argv", [
    ["scripts/monogenic_sweep.py", "--max-order", "8"],
    ["scripts/corpus_report.py", "--rees-count", "5"],
    ["scripts/invariant_table.py", "monogenic:5,6", f"rees:{ROOT / 'data' / 'example.rees'}"],
])
def test_script_runs_clean(argv):
    proc = subprocess.run([sys.executable, *argv], cwd=ROOT, capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout
