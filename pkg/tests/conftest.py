import pytest

ACCEPTANCE = {}


@pytest.fixture
def criterion():
    def record(label, ok, detail=""):
        ACCEPTANCE[label] = (ok, detail)
        print(f"criterion {label}: {'PASS' if ok else 'FAIL'} {detail}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    merged = {}
    for label, (ok, detail) in ACCEPTANCE.items():
        n = int(label.rstrip("ab"))
        prev_ok, prev = merged.get(n, (True, []))
        merged[n] = (prev_ok and ok, prev + [(label, ok, detail)])
    terminalreporter.section("acceptance criteria")
    for n in sorted(merged):
        ok, parts = merged[n]
        if len(parts) == 1:
            detail = parts[0][2]
        else:
            detail = " | ".join(f"{'PASS' if o else 'FAIL'} {d}" for _, o, d in sorted(parts))
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
