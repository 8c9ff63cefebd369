import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from spindiv import SymmetryAction, make_curve  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "data"

REAL_G3_LABELS = ["-1", "0", "1", "inf", "xi1", "xi1bar", "xi2", "xi2bar"]

# Degree-2 representatives listed for the genus 3 example, entered as written.
REAL_G3_THETAS = [
    "2*inf",
    "1*inf + 1*1",
    "1*inf + 1*-1",
    "1*inf + 1*0",
    "1*1 + 1*0",
    "1*1 + 1*-1",
    "1*0 + 1*-1",
    "1*xi1 + 1*xi1bar",
    "1*xi2 + 1*xi2bar",
    "-1*inf + 1*0 + 1*1 + 1*-1",
    "-1*inf + 1*0 + 1*xi1 + 1*xi1bar",
    "-1*inf + 1*0 + 1*xi2 + 1*xi2bar",
    "-1*inf + 1*1 + 1*xi1 + 1*xi1bar",
    "-1*inf + 1*1 + 1*xi2 + 1*xi2bar",
    "-1*inf + 1*-1 + 1*xi1 + 1*xi1bar",
    "-1*inf + 1*-1 + 1*xi2 + 1*xi2bar",
]


@pytest.fixture
def g3_real():
    return make_curve(2, REAL_G3_LABELS)


@pytest.fixture
def g3_conj(g3_real):
    return SymmetryAction.from_mapping(
        g3_real, {"xi1": "xi1bar", "xi1bar": "xi1", "xi2": "xi2bar", "xi2bar": "xi2"}, antiholomorphic=True
    )


ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record():
    """Store a pass/fail line for the acceptance summary."""

    def _record(name: str, ok: bool, detail: str = "") -> bool:
        ACCEPTANCE[name] = (ok, detail)
        print(f"{name}: {'PASS' if ok else 'FAIL'} {detail}")
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{name}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
