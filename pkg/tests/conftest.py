import pytest

from cycgroups import build_from_text


NAMED = {
    "Z6": "Z(6)",
    "S3": "S(3)",
    "Z2xZ4": "Z(2) x Z(4)",
    "D8": "D(8)",
    "Q8": "Q(8)",
    "D12": "D(12)",
    "Z2xD8": "Z(2) x D(8)",
    "M16": "M(16)",
}


@pytest.fixture(scope="session")
def named():
    return {name: build_from_text(spec, label=name) for name, spec in NAMED.items()}


def elements_by_order(g):
    """Element orders by repeated multiplication, ignoring the cached values."""
    out = {}
    for x in range(g.n):
        y, k = x, 1
        while y != 0:
            y = g.mul(y, x)
            k += 1
        out[k] = out.get(k, 0) + 1
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, TITLES
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(TITLES):
        if k not in RESULTS:
            terminalreporter.write_line(f"criterion {k}: NOT RUN  {TITLES[k]}")
            continue
        ok, dt, limit, note = RESULTS[k]
        extra = f"  [{note}]" if note else ""
        terminalreporter.write_line(
            f"criterion {k}: {'PASS' if ok else 'FAIL'}  {TITLES[k]}  ({dt:.2f}s, limit {limit:.0f}s){extra}"
        )
