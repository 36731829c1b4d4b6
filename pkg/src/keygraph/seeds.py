"""Deterministic seed derivation for all samplers.

A sub-seed is a pure function of ``(master_seed, stream_label, index)``:
the 64-bit little-endian prefix of ``SHA-256(f"{master_seed}:{stream_label}:{index}")``.
This mapping is frozen: tests pin seeds against it, so it must never change.
Sub-seeds feed ``numpy.random.PCG64``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

__all__ = ["SeedSpec", "derive_subseed"]


def derive_subseed(master_seed: int, stream_label: str, index: int) -> int:
    """Map (master_seed, stream_label, index) to a 64-bit sub-seed.

    Stable across versions and platforms; documented in the module docstring.
    """
    payload = f"{master_seed}:{stream_label}:{index}".encode()
    digest = hashlib.sha256(payload).digest()
    return int.from_bytes(digest[:8], "little")


@dataclass(frozen=True)
class SeedSpec:
    """Addressable random stream: (master seed, stream label, index)."""

    master_seed: int
    stream_label: str = ""
    index: int = 0

    def child(self, label: str, index: int | None = None) -> "SeedSpec":
        """Derive a labelled sub-stream (labels compose with '/').

        Keeps the parent's index unless an explicit one is given, so
        per-trial streams stay distinct across trial indices.
        """
        combined = f"{self.stream_label}/{label}" if self.stream_label else label
        return SeedSpec(self.master_seed, combined, self.index if index is None else index)

    def subseed(self) -> int:
        return derive_subseed(self.master_seed, self.stream_label, self.index)

    def rng(self) -> np.random.Generator:
        """Fresh generator for this stream; independent calls are identical."""
        return np.random.Generator(np.random.PCG64(self.subseed()))
