import pytest

from swapdisc.core import defining_set


@pytest.fixture
def opt2():
    """The optimal t=2 defining set (worst case 4)."""
    return defining_set(2, (({1, 8}, {3, 6}), ({2, 7}, {4, 5})))


@pytest.fixture
def sub2():
    """The suboptimal t=2 defining set (worst case 6)."""
    return defining_set(2, (({1, 4}, {2, 3}), ({5, 8}, {6, 7})))


@pytest.fixture
def t1():
    """The unique balanced t=1 defining set."""
    return defining_set(1, (({1, 4}, {2, 3}),))
