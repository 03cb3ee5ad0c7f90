import os
import subprocess
import sys
from pathlib import Path

import pytest

SRC = Path(__file__).resolve().parents[1] / "src"


@pytest.fixture
def run_cli(tmp_path):
    """Invoke the CLI in a subprocess, working inside a temp directory."""

    def _run(*args, cwd=None):
        env = dict(os.environ)
        env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
        return subprocess.run(
            [sys.executable, "-m", "polarpoly", *args],
            capture_output=True,
            text=True,
            env=env,
            cwd=cwd or tmp_path,
        )

    return _run
