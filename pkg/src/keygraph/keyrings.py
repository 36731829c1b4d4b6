"""Pairwise key predistribution: key rings and the secure-link predicate.

Each node i installs one key per selected partner j; the key is stored at
both endpoints, so two nodes share a key exactly when at least one of them
selected the other. Keys are opaque (owner, label, endpoint) triples, not
cryptographic material.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .graphs import PairingTable

__all__ = ["KeyToken", "KeyRingTable", "build_key_rings", "secure_link", "rings_to_json"]


class KeyToken(NamedTuple):
    owner: int  # node that generated the key
    label: int  # rank of the endpoint within the owner's selections, 1..K
    endpoint: int  # node the key was assigned to


@dataclass(frozen=True)
class KeyRingTable:
    """Key ring per node: its own K outgoing keys plus one per incoming selection."""

    n: int
    K: int
    rings: tuple[frozenset[KeyToken], ...]  # rings[i-1] is node i's ring

    def ring(self, i: int) -> frozenset[KeyToken]:
        if not 1 <= i <= self.n:
            raise ValueError(f"node {i} out of range 1..{self.n}")
        return self.rings[i - 1]


def build_key_rings(pairing: PairingTable) -> KeyRingTable:
    """Install one key per selection at both endpoints.

    Labels within a node are the ascending-id ranks of its selections
    (fixed here for determinism; any labeling works).
    """
    rings: list[set[KeyToken]] = [set() for _ in range(pairing.n)]
    for i in range(1, pairing.n + 1):
        for label, j in enumerate(sorted(pairing.gamma(i)), start=1):
            token = KeyToken(owner=i, label=label, endpoint=j)
            rings[i - 1].add(token)
            rings[j - 1].add(token)
    return KeyRingTable(pairing.n, pairing.K, tuple(frozenset(r) for r in rings))


def secure_link(rings: KeyRingTable, i: int, j: int) -> bool:
    """Whether nodes i and j share at least one key."""
    if i == j:
        raise ValueError("secure_link needs two distinct nodes")
    return bool(rings.ring(i) & rings.ring(j))


def rings_to_json(rings: KeyRingTable) -> str:
    """JSON dump for inspection: [{node, ring: [{owner, label, endpoint}]}]."""
    out = [
        {
            "node": i,
            "ring": [
                {"owner": t.owner, "label": t.label, "endpoint": t.endpoint}
                for t in sorted(rings.ring(i))
            ],
        }
        for i in range(1, rings.n + 1)
    ]
    return json.dumps(out, indent=2)
