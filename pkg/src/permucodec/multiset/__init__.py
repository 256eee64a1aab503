from permucodec.multiset.roc import (
    Multiset,
    multiset_info_content,
    roc_decode,
    roc_encode,
    sequence_cost,
    sequential_decode,
    sequential_encode,
)
from permucodec.multiset.nested import (
    DEFAULT_SIZE_BOUND,
    NestedShape,
    nested_decode,
    nested_encode,
    nested_info_savings,
    nested_savings_bound,
)
