"""Shared brute-force helpers.  Nothing here uses the package's search code."""

from __future__ import annotations

from itertools import product


def pm(m: int, x: int) -> int:
    return ((m - 2) * x * x - (m - 4) * x) // 2


def gonal_values(m: int, bound: int) -> set[int]:
    """Every P_m(x) <= bound, by walking x outward until both sides exceed it."""
    out = set()
    x = 0
    while pm(m, x) <= bound or pm(m, -x) <= bound:
        for v in (pm(m, x), pm(m, -x)):
            if v <= bound:
                out.add(v)
        x += 1
    return out


def brute_reach(m: int, weights, bound: int) -> set[int]:
    """Represented integers <= bound, by growing plain Python sets slot by slot."""
    reach = {0}
    vals = sorted(gonal_values(m, bound))
    for a in weights:
        reach = {s + a * v for s in reach for v in vals if s + a * v <= bound}
    return reach


def brute_count(m: int, weights, n: int) -> int:
    """Count signed argument vectors by enumerating a box that surely contains them."""
    box = 1
    while min(pm(m, box), pm(m, -box)) <= n:
        box += 1
    rng = range(-box, box + 1)
    return sum(
        1
        for xs in product(rng, repeat=len(weights))
        if sum(a * pm(m, x) for a, x in zip(weights, xs)) == n
    )


# criterion number -> one-line verdict, filled in by test_acceptance
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
