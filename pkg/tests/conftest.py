import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA = {
    1: "Zsigmondy suite for F over Q, F3, F5, F7 with r in 1..3",
    2: "Lucas/Lehmer primitive parts equal the power-sum cyclotomic values",
    3: "strong divisibility for F, S, L, U, all 1 <= m < n <= 20",
    4: "resultant lemmas RES2, MIX, PMN, ABN are +1 or -1",
    5: "coprimality lemma instances for m, n <= 12",
    6: "valuation stability v(U_mn) = v(U_n) over F5 and F7",
    7: "Frobenius deletion F_pn = F_n^p for pn <= 24",
    8: "factorization ground truth for primitive parts over F7",
    9: "golden values against brute-force oracles",
    10: "kernel health: gcd, factorization, text round-trip",
}

_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion checked by this test")


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.outcome != "passed":
        entry = _outcomes.setdefault(crit, [])
        detail = dict(report.user_properties).get("detail", "")
        entry.append((report.nodeid.split("::")[-1], report.outcome, detail))


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            item.user_properties.append(("criterion", mark.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(_outcomes):
        runs = _outcomes[crit]
        ok = all(outcome == "passed" for _, outcome, _ in runs)
        tr.write_line(f"criterion {crit}: {'PASS' if ok else 'FAIL'} - {CRITERIA.get(crit, '')}")
        for name, outcome, detail in runs:
            tr.write_line(f"    {name}: {outcome}{' - ' + detail if detail else ''}")
