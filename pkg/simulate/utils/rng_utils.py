"""
Random Stream Utilities

Paths are split into fixed-size chunks; chunk k draws from the stream
seeded by SeedSequence([seed, k]). Results therefore do not depend on how
many workers run the chunks.
"""

from typing import List

import numpy as np


def chunk_sizes(n_paths: int, chunk_size: int) -> List[int]:
    """Split n_paths into chunks of chunk_size (last one may be smaller)"""
    full, rest = divmod(n_paths, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def chunk_rng(seed: int, chunk_index: int) -> np.random.Generator:
    """Independent generator for one chunk"""
    return np.random.default_rng(np.random.SeedSequence([seed, chunk_index]))
