"""Character fields of extensions of unipotent characters to groups extended by graph automorphisms."""

from .classify import ClassificationResult, extension_field
from .fields import FieldDesc, FrobeniusEigenvalue, resolve, serialize_field
from .groups import GroupDescriptor, UnipotentCharRecord, builtin_records, load_table, parse_group
from .partitions import Partition, two_core, two_quotient
from .weyl import BiPartition, chi_hyperoct, chi_sym

__version__ = "0.1.0"

__all__ = [
    "BiPartition", "ClassificationResult", "FieldDesc", "FrobeniusEigenvalue", "GroupDescriptor",
    "Partition", "UnipotentCharRecord", "builtin_records", "chi_hyperoct", "chi_sym",
    "extension_field", "load_table", "parse_group", "resolve", "serialize_field", "two_core",
    "two_quotient",
]
