from orbisurf.scenarios import load_table1


def fixture_fiber(case, side):
    """(labels, gram, mults) of a fiber stored in the embedded table."""
    fx = load_table1()[case][side]
    labels = sorted(fx["components"])
    idx = {lab: i for i, lab in enumerate(labels)}
    gram = [[0] * len(labels) for _ in labels]
    for lab, (_, s) in fx["components"].items():
        gram[idx[lab]][idx[lab]] = s
    for a, b in fx["edges"]:
        gram[idx[a]][idx[b]] += 1
        gram[idx[b]][idx[a]] += 1
    mults = tuple(fx["components"][lab][0] for lab in labels)
    return labels, gram, mults


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n:>2}. {title}")
