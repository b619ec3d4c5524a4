"""Character table zeros of symmetric groups.

Exact character evaluation over bit-encoded partition boundaries, exact
zero censuses for small tables, and seeded Monte Carlo density estimation
for large ones.
"""

__version__ = "0.1.0"

from .errors import (
    InvalidMode,
    NonPositivePart,
    NotWeaklyDecreasing,
    ResourceLimit,
    SnZerosError,
    WeightMismatch,
)
from .mn import ZeroClass, character, classify
from .partitions import (
    BoundaryCode,
    Partition,
    decode,
    dimension,
    encode,
    from_parts,
    hook_lengths,
    is_t_core,
    partitions_of,
    rim_hook_removals,
)
from .ptable import PartitionCountTable, build_p_table, load_p_table, save_p_table
from .sampler import RNG_NAME, SampleStream, random_partition

__all__ = [
    "BoundaryCode",
    "InvalidMode",
    "NonPositivePart",
    "NotWeaklyDecreasing",
    "Partition",
    "PartitionCountTable",
    "RNG_NAME",
    "ResourceLimit",
    "SampleStream",
    "SnZerosError",
    "WeightMismatch",
    "ZeroClass",
    "build_p_table",
    "character",
    "classify",
    "decode",
    "dimension",
    "encode",
    "from_parts",
    "hook_lengths",
    "is_t_core",
    "load_p_table",
    "partitions_of",
    "random_partition",
    "rim_hook_removals",
    "save_p_table",
]
