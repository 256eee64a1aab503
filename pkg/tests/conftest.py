import os
import sys

import numpy as np
import pytest

PROJECT_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
sys.path.insert(0, os.path.join(PROJECT_ROOT, 'src'))

from permucodec.ans import QuantizedDist  # noqa: E402
from permucodec.lvm import DiscreteLvm  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def abc_dist():
    """{a: 2, b: 1, c: 1} over precision 4."""
    return QuantizedDist(('a', 'b', 'c'), (2, 1, 1))


@pytest.fixture
def toy_lvm():
    """Two latents, two observations; the posterior is the exact one."""
    return DiscreteLvm.from_weights(prior=[2, 2], conditional=[[3, 1], [1, 3]],
                                    posterior=[[3, 1], [1, 3]])


def random_dist(rng, max_symbols=16, max_weight=8):
    """Random QuantizedDist over 0..K-1."""
    k = int(rng.integers(1, max_symbols + 1))
    weights = rng.integers(1, max_weight + 1, size=k)
    return QuantizedDist(tuple(range(k)), tuple(int(w) for w in weights))


@pytest.fixture
def visit_counter(monkeypatch):
    """
    Counts node visits of every SworTree and Pólya index the codecs create.

    Returns a callable giving the total so far.
    """
    from permucodec.graph import rec
    from permucodec.graph.polya import PolyaContext
    from permucodec.multiset import roc
    from permucodec.partition import rcc
    from permucodec.swor.tree import SworTree

    created = []

    class CountingTree(SworTree):
        def __init__(self):
            super().__init__()
            created.append(self)

    class CountingContext(PolyaContext):
        def __init__(self, *args, **kwargs):
            super().__init__(*args, **kwargs)
            created.append(self)

    for module in (roc, rcc, rec):
        monkeypatch.setattr(module, 'SworTree', CountingTree)
    monkeypatch.setattr(rec, 'PolyaContext', CountingContext)
    return lambda: sum(obj.visits for obj in created)
