import functools

import pytest

from pknuth.verify import OrderData

# criterion id -> list of (label, passed, detail)
ACCEPTANCE: dict = {}


def record(criterion: str, label: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE.setdefault(criterion, []).append((label, passed, detail))
    line = f"criterion {criterion} [{label}]: {'PASS' if passed else 'FAIL'} {detail}".rstrip()
    print(line)


@functools.lru_cache(maxsize=None)
def order_data(order) -> OrderData:
    return OrderData(order)


@pytest.fixture
def data_for():
    return order_data


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE, key=int):
        rows = ACCEPTANCE[crit]
        ok = all(p for _, p, _ in rows)
        tr.write_line(f"criterion {crit}: {'PASS' if ok else 'FAIL'}")
        if len(rows) > 1 or not ok:
            for label, p, detail in rows:
                tr.write_line(f"    {label}: {'PASS' if p else 'FAIL'} {detail}".rstrip())
