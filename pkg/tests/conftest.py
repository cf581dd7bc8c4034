import itertools
from collections import Counter

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def brute_force_ssyt(content):
    """Every filling of the 2 x (d-1) diagram from the multiset, kept when semistandard."""
    content = tuple(content)
    d = sum(content) // 2 + 1
    letters = [k for k, a in enumerate(content, start=1) for _ in range(a)]
    found = set()
    for perm in set(itertools.permutations(letters)):
        r1, r2 = perm[: d - 1], perm[d - 1:]
        if list(r1) != sorted(r1) or list(r2) != sorted(r2):
            continue
        if all(a < b for a, b in zip(r1, r2)):
            found.add((r1, r2))
    return sorted(found)


def brute_force_nets(content):
    """All perfect matchings on 1..n, filtered by the crossing and same-block conditions."""
    block_of = [j for j, a in enumerate(content, start=1) for _ in range(a)]
    n = len(block_of)

    def matchings(vs):
        if not vs:
            yield []
            return
        v, rest = vs[0], vs[1:]
        for i, w in enumerate(rest):
            for m in matchings(rest[:i] + rest[i + 1:]):
                yield [(v, w)] + m

    out = []
    for m in matchings(list(range(1, n + 1))):
        if any(block_of[a - 1] == block_of[b - 1] for a, b in m):
            continue
        if any(a < c < b < e for a, b in m for c, e in m):
            continue
        out.append(tuple(sorted(m)))
    return sorted(out)


@pytest.fixture
def letter_counts():
    return lambda tab: Counter(tab.row1 + tab.row2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULT_LINES
    except ImportError:
        return
    if RESULT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULT_LINES, key=lambda s: int(s.split()[1].rstrip("."))):
            terminalreporter.write_line(line)
