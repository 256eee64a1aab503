"""
Sampling without replacement driven by the ANS state.

`sample` pops an element of the tree's multiset from the state, with the
probability of each symbol proportional to its remaining multiplicity, and
removes it. `unsample` is its exact inverse: it inserts the element back and
pushes its rank, restoring the state bits consumed by the sample.
"""

from typing import List, Optional, Tuple

from permucodec.ans.core import AnsState, RangeTriple, ans_encode, ans_pop
from permucodec.swor.tree import SworTree

# (multiplicity, remaining size) per sampling step.
SamplingTrace = List[Tuple[int, int]]


def sample(s: AnsState, tree: SworTree,
           trace: Optional[SamplingTrace] = None) -> Tuple[AnsState, object]:
    """Pop one element from the state and remove it from the tree."""
    size = len(tree)
    s, t = ans_pop(s, size, tree.reverse_lookup)
    tree.remove(t.symbol)
    if trace is not None:
        trace.append((t.p, size))
    return s, t.symbol


def unsample(s: AnsState, tree: SworTree, symbol) -> AnsState:
    """Insert symbol into the tree and push its rank back onto the state."""
    tree.insert(symbol)
    p, c = tree.forward_lookup(symbol)
    return ans_encode(s, RangeTriple(symbol, p, c), len(tree))
