import contextlib
import io

import pytest

from idealcat.cli import main


@pytest.fixture
def run_cli():
    """Invoke the CLI in-process; returns (exit_code, stdout)."""

    def _run(*argv):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(list(argv))
        return code, buf.getvalue()

    return _run
