from permucodec.partition.rcc import (
    CanonicalPartition,
    Partition,
    foata_canonicalize,
    rcc_decode,
    rcc_encode,
)
from permucodec.partition.roc_schemes import (
    roc1_decode,
    roc1_encode,
    roc2_decode,
    roc2_encode,
)
from permucodec.partition.savings import (
    SchemeComparison,
    bytes_per_element,
    compare_schemes,
    implied_log_prob,
    index_savings_percentage,
    max_savings_sizes,
    min_savings_sizes,
    partition_order_info,
    set_partitions,
    sqrt_cluster_savings,
)
