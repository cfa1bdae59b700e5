"""Search tree for sampling-based planners.

Nodes are identified by dense integer ids in insertion order; node 0 is the
root. Coordinates live in capacity-doubling numpy arrays so nearest-neighbour
queries are a single vectorized argmin over squared distances, which keeps the
per-iteration cost flat even for trees of thousands of nodes.
"""

from __future__ import annotations

import math

import numpy as np

from .space import Config, metric

__all__ = ["Tree", "path_length"]


class Tree:
    """Rooted tree of configurations with parent links.

    Ties in :meth:`nearest_neighbour` break to the smallest node id, so tree
    growth is a pure function of the sample sequence.
    """

    __slots__ = ("_xs", "_ys", "_parents", "_size")

    _INITIAL_CAPACITY = 256

    def __init__(self, root: Config) -> None:
        cap = self._INITIAL_CAPACITY
        self._xs = np.empty(cap, dtype=np.float64)
        self._ys = np.empty(cap, dtype=np.float64)
        self._parents = np.empty(cap, dtype=np.int64)
        self._xs[0] = root.x
        self._ys[0] = root.y
        self._parents[0] = -1
        self._size = 1

    def __len__(self) -> int:
        return self._size

    def _grow(self) -> None:
        cap = 2 * self._xs.shape[0]
        for name in ("_xs", "_ys", "_parents"):
            old = getattr(self, name)
            new = np.empty(cap, dtype=old.dtype)
            new[: self._size] = old[: self._size]
            setattr(self, name, new)

    def add_node(self, config: Config, parent: int) -> int:
        """Insert a node and return its id; parent must be an existing node id."""
        if not 0 <= parent < self._size:
            raise ValueError(f"parent id {parent} is not a node of this tree (size {self._size})")
        if self._size == self._xs.shape[0]:
            self._grow()
        i = self._size
        self._xs[i] = config.x
        self._ys[i] = config.y
        self._parents[i] = parent
        self._size = i + 1
        return i

    def node(self, node_id: int) -> Config:
        if not 0 <= node_id < self._size:
            raise ValueError(f"node id {node_id} is not a node of this tree (size {self._size})")
        return Config(float(self._xs[node_id]), float(self._ys[node_id]))

    def parent(self, node_id: int) -> int:
        if not 0 <= node_id < self._size:
            raise ValueError(f"node id {node_id} is not a node of this tree (size {self._size})")
        return int(self._parents[node_id])

    def nearest_neighbour(self, config: Config) -> int:
        """Id of the node closest to ``config`` in the Euclidean metric.

        argmin returns the first minimal entry, i.e. the smallest id on ties.
        """
        n = self._size
        dx = self._xs[:n] - config.x
        dy = self._ys[:n] - config.y
        return int(np.argmin(dx * dx + dy * dy))

    def nearest_distance(self, config: Config) -> float:
        """Distance from ``config`` to its nearest node."""
        n = self._size
        dx = self._xs[:n] - config.x
        dy = self._ys[:n] - config.y
        return math.sqrt(float(np.min(dx * dx + dy * dy)))

    def extract_path(self, node_id: int) -> list[Config]:
        """Path from the root to ``node_id``, inclusive, as configurations."""
        if not 0 <= node_id < self._size:
            raise ValueError(f"node id {node_id} is not a node of this tree (size {self._size})")
        chain: list[int] = []
        i = node_id
        while i >= 0:
            chain.append(i)
            i = int(self._parents[i])
        chain.reverse()
        return [Config(float(self._xs[i]), float(self._ys[i])) for i in chain]

    def as_records(self) -> list[dict]:
        """Tree dump as ``{"id", "x", "y", "parent"}`` rows, root parent null."""
        return [
            {
                "id": i,
                "x": float(self._xs[i]),
                "y": float(self._ys[i]),
                "parent": None if self._parents[i] < 0 else int(self._parents[i]),
            }
            for i in range(self._size)
        ]


def path_length(path: list[Config]) -> float:
    """Total Euclidean length of a polyline; 0.0 for paths of fewer than 2 points."""
    return sum(metric(a, b) for a, b in zip(path, path[1:]))
