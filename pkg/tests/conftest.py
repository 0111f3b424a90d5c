import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from gtfspace import GtfSpace, Universe, build_topology, make_space
from gtfspace.io import space_from_dict

sys.path.insert(0, str(Path(__file__).parent))

TP_DICT = {"universe": ["w", "v"], "mu": [[], ["w"]], "assoc": {"v": [["w"]]}}


@pytest.fixture
def tp() -> GtfSpace:
    return space_from_dict(TP_DICT)


@st.composite
def spaces(draw, min_size=1, max_size=5):
    n = draw(st.integers(min_size, max_size))
    universe = Universe.of_size(n)
    gens = draw(st.lists(st.integers(1, (1 << n) - 1), max_size=5))
    topology = build_topology(universe, gens)
    members = sorted(topology.opens)
    orphan_assoc = {}
    for w in range(n):
        if not topology.union >> w & 1:
            picks = draw(st.lists(st.booleans(), min_size=len(members), max_size=len(members)))
            orphan_assoc[w] = [m for m, p in zip(members, picks) if p]
    return make_space(universe, topology, orphan_assoc)


def subsets_of(space):
    return st.integers(0, space.full)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.LINES:
        terminalreporter.write_line(line)
