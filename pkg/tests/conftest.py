from hypothesis import strategies as st

from unipext.partitions import Partition


@st.composite
def partitions_st(draw, max_size=14):
    """Random partitions of size at most max_size."""
    n = draw(st.integers(0, max_size))
    parts = []
    while n:
        p = draw(st.integers(1, min(n, parts[-1] if parts else n)))
        parts.append(p)
        n -= p
    return Partition(tuple(parts))
