import pytest

from triadtopos.permgroup import Carrier, Permutation
from triadtopos.zmod import chord


def perm_from_cycles(carrier: Carrier, cycles) -> Permutation:
    """Build a permutation from cycles of point names (chord names here)."""
    mapping = {p: p for p in carrier.points}
    for cyc in cycles:
        pts = [chord(n) if isinstance(n, str) else n for n in cyc]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            mapping[a] = b
    return Permutation.from_function(carrier, lambda p: mapping[p])


@pytest.fixture(scope="session")
def ti():
    from triadtopos.duality import ti_group

    return ti_group()


@pytest.fixture(scope="session")
def plr():
    from triadtopos.duality import plr_group

    return plr_group()
