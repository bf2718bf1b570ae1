import os
import subprocess
import sys

import pytest


@pytest.fixture(scope="session")
def run_cli():
    """Run the CLI in a subprocess; returns (exit_code, stdout_bytes, stderr_text)."""

    def runner(args, env_extra=None):
        env = dict(os.environ)
        if env_extra:
            env.update(env_extra)
        proc = subprocess.run(
            [sys.executable, "-m", "intangle", *args],
            capture_output=True, env=env,
        )
        return proc.returncode, proc.stdout, proc.stderr.decode()

    return runner
