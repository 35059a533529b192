from __future__ import annotations

import contextlib
import dataclasses
import io
import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from jahangir_ssc import build_jahangir, emit_graph
from jahangir_ssc.cli import main as cli_main


@dataclasses.dataclass
class CliResult:
    code: int
    stdout: str
    stderr: str

    def json(self) -> dict:
        return json.loads(self.stdout)


@pytest.fixture(scope="session")
def j3():
    return build_jahangir(3)


@pytest.fixture(scope="session")
def j4():
    return build_jahangir(4)


@pytest.fixture(scope="session")
def j5():
    return build_jahangir(5)


@pytest.fixture
def run_cli():
    """In-process CLI runner; returns exit code plus captured streams."""

    def run(*argv: str) -> CliResult:
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            try:
                code = cli_main(list(argv))
            except SystemExit as exc:  # argparse usage failures
                code = exc.code if isinstance(exc.code, int) else 1
        return CliResult(code, out.getvalue(), err.getvalue())

    return run


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.json"
    from jahangir_ssc import Graph

    path.write_text(emit_graph(Graph(3, ((0, 1), (1, 2), (0, 2)))))
    return str(path)
