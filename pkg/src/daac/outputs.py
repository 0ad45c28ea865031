"""Encodings of the per-state output sets.

Three stores are provided:

* ``SimpleStore`` writes every state's full output set to a flat array,
  flagging the last entry of each set in a parallel bit table.
* ``SharedStore`` has the same layout and extraction procedure, but
  nested sets along failure chains are stored once: a set that is a
  suffix of an already-written region points into that region.
* ``ForestStore`` keeps exactly one node per pattern and encodes
  containment with parent links; a set is read by climbing to a root.

Each builder returns the store plus a per-original-state table of start
positions (``INVALID_OUTPOS`` for states with an empty set).
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .config import Store
from .nfa import ACAutomaton

INVALID_OUTPOS = 0xFFFFFFFF


class SimpleStore:
    kind = Store.SIMPLE
    __slots__ = ("ids", "term")

    def __init__(self, ids: np.ndarray, term: np.ndarray):
        self.ids = ids  # int32 pattern ids
        self.term = term  # uint8, 1 marks the last entry of a set

    def __len__(self) -> int:
        return len(self.ids)

    def memory(self) -> dict[str, int]:
        # TERM is accounted at one bit per entry.
        return {"output_ids": len(self.ids) * 4, "output_term": (len(self.ids) + 7) // 8}


class SharedStore(SimpleStore):
    kind = Store.SHARED
    __slots__ = ()


class ForestStore:
    kind = Store.FOREST
    __slots__ = ("ids", "parent", "lens")

    def __init__(self, ids: np.ndarray, parent: np.ndarray, lens: np.ndarray):
        self.ids = ids  # int32 pattern ids, one node per pattern
        self.parent = parent  # uint32 parent node, == len(ids) at roots
        self.lens = lens  # uint32 pattern byte length, avoids a second lookup

    def __len__(self) -> int:
        return len(self.ids)

    @property
    def sentinel(self) -> int:
        return len(self.ids)

    def memory(self) -> dict[str, int]:
        n = len(self.ids)
        return {"output_ids": n * 4, "output_parent": n * 4, "output_lens": n * 4}


OutputStore = SimpleStore | ForestStore


def _output_chain(ac: ACAutomaton, s: int) -> list[int]:
    """Output states on ``s``'s failure closure, nearest first."""
    chain = []
    while True:
        if ac.pattern_of[s] >= 0:
            chain.append(s)
        if s == 0:
            return chain
        s = ac.fail[s]


def _spread_to_failure_only_states(ac: ACAutomaton, outpos: np.ndarray) -> None:
    # A state with no own pattern but a non-empty set shares the position of
    # its failure target, whose set is identical.  BFS ids sort by depth, so
    # the failure target is always resolved first.
    for s in range(1, ac.n_states):
        if ac.pattern_of[s] < 0 and ac.outset[s]:
            outpos[s] = outpos[ac.fail[s]]


def build_simple(ac: ACAutomaton) -> tuple[SimpleStore, np.ndarray]:
    """Write each output state's full set contiguously."""
    outpos = np.full(ac.n_states, INVALID_OUTPOS, dtype=np.uint32)
    ids: list[int] = []
    term: list[int] = []
    for s in range(ac.n_states):
        if ac.pattern_of[s] < 0:
            continue
        outpos[s] = len(ids)
        ids.extend(ac.outset[s])
        term.extend([0] * (len(ac.outset[s]) - 1))
        term.append(1)
    _spread_to_failure_only_states(ac, outpos)
    return SimpleStore(np.asarray(ids, dtype=np.int32), np.asarray(term, dtype=np.uint8)), outpos


def build_shared(ac: ACAutomaton) -> tuple[SharedStore, np.ndarray]:
    """Write sets largest-first, pointing nested sets into their supersets.

    Along a failure chain the set of a nearer-to-root output state is a
    literal suffix of the farther one, so its position can point inside
    an already-written region.
    """
    outpos = np.full(ac.n_states, INVALID_OUTPOS, dtype=np.uint32)
    ids: list[int] = []
    term: list[int] = []
    order = sorted(
        (s for s in range(ac.n_states) if ac.pattern_of[s] >= 0),
        key=lambda s: (-len(ac.outset[s]), s),
    )
    for s in order:
        if outpos[s] != INVALID_OUTPOS:
            continue
        start = len(ids)
        ids.extend(ac.outset[s])
        term.extend([0] * (len(ac.outset[s]) - 1))
        term.append(1)
        for offset, t in enumerate(_output_chain(ac, s)):
            if outpos[t] == INVALID_OUTPOS:
                outpos[t] = start + offset
    _spread_to_failure_only_states(ac, outpos)
    return SharedStore(np.asarray(ids, dtype=np.int32), np.asarray(term, dtype=np.uint8)), outpos


def build_forest(ac: ACAutomaton) -> tuple[ForestStore, np.ndarray]:
    """One node per pattern, chained by nearest output ancestor."""
    n_patterns = len(ac.dictionary)
    outpos = np.full(ac.n_states, INVALID_OUTPOS, dtype=np.uint32)
    ids = np.empty(n_patterns, dtype=np.int32)
    parent = np.empty(n_patterns, dtype=np.uint32)
    lens = np.empty(n_patterns, dtype=np.uint32)
    node_of_state: dict[int, int] = {}
    node = 0
    for s in range(ac.n_states):
        k = ac.pattern_of[s]
        if k < 0:
            continue
        chain = _output_chain(ac, s)
        ids[node] = k
        lens[node] = ac.dictionary.byte_lens[k]
        parent[node] = node_of_state[chain[1]] if len(chain) > 1 else n_patterns
        node_of_state[s] = node
        outpos[s] = node
        node += 1
    _spread_to_failure_only_states(ac, outpos)
    return ForestStore(ids, parent, lens), outpos


_BUILDERS = {Store.SIMPLE: build_simple, Store.SHARED: build_shared, Store.FOREST: build_forest}


def build_store(ac: ACAutomaton, kind: Store) -> tuple[OutputStore, np.ndarray]:
    return _BUILDERS[kind](ac)


def emit(store: OutputStore, pos: int) -> Iterator[int]:
    """Yield the pattern ids of the set starting at ``pos``.

    ``INVALID_OUTPOS`` yields nothing; any other out-of-range position
    raises ``IndexError``.
    """
    if pos == INVALID_OUTPOS:
        return
    if pos >= len(store) or pos < 0:
        raise IndexError(f"output position {pos} out of range ({len(store)} entries)")
    if isinstance(store, ForestStore):
        node = pos
        while node != store.sentinel:
            yield int(store.ids[node])
            node = int(store.parent[node])
    else:
        while True:
            yield int(store.ids[pos])
            if store.term[pos]:
                return
            pos += 1
