"""Process-wide thread-count setting for row-parallel kernels.

0 means auto (one block per CPU). Kernels split work over disjoint output
rows with read-only inputs, so results are identical for any thread count.
"""

import os

_num_threads = 1


def set_num_threads(n: int) -> None:
    global _num_threads
    n = int(n)
    if n < 0:
        raise ValueError("thread count must be >= 0 (0 = auto)")
    _num_threads = n if n > 0 else (os.cpu_count() or 1)


def get_num_threads() -> int:
    return _num_threads
