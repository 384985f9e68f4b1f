"""Behavioural parity between the compiled and pure scan kernels.

Every mode (plain scan, pruning, abandonment, chunk prefixes) must return
bit-identical tuples from both implementations.
"""

from random import Random

import pytest

from swapdisc import _kernels
from swapdisc._kernels import pure
from swapdisc.adversary import _arrays, _chunks
from swapdisc.optsearch import random_balanced

try:
    from swapdisc._kernels import _fast
except ImportError:
    _fast = None

needs_compiled = pytest.mark.skipif(_fast is None, reason="compiled kernel not built")


def test_backend_selected():
    assert _kernels.backend_name() in ("pure", "compiled")


@needs_compiled
@pytest.mark.parametrize("t,seed", [(1, 0), (2, 1), (2, 2), (3, 3), (3, 4), (4, 5)])
def test_full_scan_parity(t, seed):
    ds = random_balanced(t, Random(seed))
    n, pair_of, side_of, diff = _arrays(ds)
    for prune in (False, True):
        a = pure.scan_chunk(n, pair_of, side_of, diff, (), 1, prune, -1, -1)
        b = _fast.scan_chunk(n, pair_of, side_of, diff, (), 1, prune, -1, -1)
        assert a == b


@needs_compiled
@pytest.mark.parametrize("seed", [10, 11, 12])
def test_chunked_scan_parity(seed):
    ds = random_balanced(3, Random(seed))
    n, pair_of, side_of, diff = _arrays(ds)
    for prefix, start in _chunks(n):
        a = pure.scan_chunk(n, pair_of, side_of, diff, prefix, start, True, 2, -1)
        b = _fast.scan_chunk(n, pair_of, side_of, diff, prefix, start, True, 2, -1)
        assert a == b


@needs_compiled
@pytest.mark.parametrize("cutoff", [0, 2, 4, 6, 100])
def test_abandon_parity(cutoff):
    ds = random_balanced(3, Random(42))
    n, pair_of, side_of, diff = _arrays(ds)
    a = pure.scan_chunk(n, pair_of, side_of, diff, (), 1, True, -1, cutoff)
    b = _fast.scan_chunk(n, pair_of, side_of, diff, (), 1, True, -1, cutoff)
    assert a == b


@needs_compiled
def test_unbalanced_start_parity():
    # kernels must agree even when the initial configuration is unbalanced
    ds = random_balanced(2, Random(9))
    n, pair_of, side_of, _ = _arrays(ds)
    diff = [3, -2]
    a = pure.scan_chunk(n, pair_of, side_of, diff, (2,), 4, False, -1, -1)
    b = _fast.scan_chunk(n, pair_of, side_of, diff, (2,), 4, False, -1, -1)
    assert a == b
