import pytest

from circol import kernels
from circol.cli import main


@pytest.fixture(params=sorted(kernels.available()))
def backend(request):
    """Every kernel backend that imported in this environment."""
    return kernels.available()[request.param]


@pytest.fixture
def cli(capsys):
    """Run the command line in-process; returns (exit code, stdout, stderr)."""

    def run(*argv):
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err

    return run


@pytest.fixture
def report(capsys):
    """Print a line that survives output capture."""

    def emit(line):
        with capsys.disabled():
            print(f"\n{line}")

    return emit
