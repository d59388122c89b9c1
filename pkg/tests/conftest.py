import pytest

# acceptance results, printed once at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record a PASS/FAIL line for an acceptance criterion.

    Usage: ``with criterion(3, "summary") as notes: ...``; an exception inside
    the block records FAIL and propagates.
    """
    class _Recorder:
        def __init__(self, number, title):
            self.number, self.title, self.notes = number, title, []

        def __enter__(self):
            return self.notes

        def __exit__(self, exc_type, exc, tb):
            ok = exc_type is None
            detail = "; ".join(self.notes) if ok else f"{exc_type.__name__}: {exc}"
            ACCEPTANCE[self.number] = (ok, f"{self.title} ({detail})")
            line = f"CRITERION {self.number} {'PASS' if ok else 'FAIL'}: {ACCEPTANCE[self.number][1]}"
            print("\n" + line)
            return False

    return _Recorder


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"CRITERION {n} {'PASS' if ok else 'FAIL'}: {text}")
