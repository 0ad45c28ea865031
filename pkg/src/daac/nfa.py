"""Explicit trie / Aho-Corasick automaton and the oracle matchers.

This module builds the original automaton that every double-array build
starts from, and provides two reference matchers (an automaton walker
and a brute-force scanner) used to cross-check the packed engine.
"""

from __future__ import annotations

from collections import deque

from .codemap import INVALID_CODE, MappingTable, Scheme, encode, encode_pattern
from .config import MatchStats
from .dictionary import Dictionary, Occurrence


class Trie:
    """Prefix tree over encoded patterns; state 0 is the root."""

    __slots__ = ("dictionary", "scheme", "mapping", "children", "pattern_of", "depth")

    def __init__(self, dictionary: Dictionary, scheme: Scheme, mapping: MappingTable | None):
        self.dictionary = dictionary
        self.scheme = scheme
        self.mapping = mapping
        self.children: list[dict[int, int]] = []  # state -> {label: child state}
        self.pattern_of: list[int] = []  # own pattern id, or -1
        self.depth: list[int] = []

    @property
    def n_states(self) -> int:
        return len(self.children)

    def transitions(self, s: int) -> list[tuple[int, int]]:
        """Outgoing (label, target) pairs of ``s``, sorted by label."""
        return sorted(self.children[s].items())


class ACAutomaton(Trie):
    """Trie plus failure links and per-state output sets.

    ``outset[s]`` lists the ids of all patterns that are suffixes of the
    string spelled by ``s``, ordered own-pattern-first and then by
    increasing failure depth.
    """

    __slots__ = ("fail", "outset")

    def __init__(self, trie: Trie):
        super().__init__(trie.dictionary, trie.scheme, trie.mapping)
        self.children = trie.children
        self.pattern_of = trie.pattern_of
        self.depth = trie.depth
        self.fail: list[int] = [0] * trie.n_states
        self.outset: list[tuple[int, ...]] = [()] * trie.n_states


def build_trie(
    dictionary: Dictionary, scheme: Scheme = Scheme.BYTEWISE, mapping: MappingTable | None = None
) -> Trie:
    """Merge the encoded patterns into a prefix tree.

    States are numbered breadth-first with siblings in label order, so a
    state's id is determined by the dictionary alone, not by insertion
    order.
    """
    root: dict = {}
    terminal: dict[int, int] = {}  # id(node) -> pattern id
    for k, pat in enumerate(dictionary.patterns):
        node = root
        for unit in encode_pattern(scheme, pat, mapping):
            node = node.setdefault(unit, {})
        terminal[id(node)] = k

    trie = Trie(dictionary, scheme, mapping)
    queue = deque([(root, 0)])
    trie.children.append({})
    trie.pattern_of.append(terminal.get(id(root), -1))
    trie.depth.append(0)
    while queue:
        node, sid = queue.popleft()
        for label, child in sorted(node.items()):
            cid = len(trie.children)
            trie.children.append({})
            trie.pattern_of.append(terminal.get(id(child), -1))
            trie.depth.append(trie.depth[sid] + 1)
            trie.children[sid][label] = cid
            queue.append((child, cid))
    return trie


def build_failures(trie: Trie) -> ACAutomaton:
    """Attach failure links and output sets, breadth-first.

    ``fail[s]`` is the state of the longest proper suffix of ``s``'s
    string present in the trie; output sets are inherited along the
    failure link, own pattern first.
    """
    ac = ACAutomaton(trie)
    queue: deque[int] = deque()
    for label, t in ac.transitions(0):
        ac.fail[t] = 0
        queue.append(t)
    while queue:
        s = queue.popleft()
        own = ac.pattern_of[s]
        ac.outset[s] = ((own,) if own >= 0 else ()) + ac.outset[ac.fail[s]]
        for label, t in ac.transitions(s):
            f = ac.fail[s]
            while f != 0 and label not in ac.children[f]:
                f = ac.fail[f]
            ac.fail[t] = ac.children[f].get(label, 0)
            queue.append(t)
    return ac


def build_automaton(
    dictionary: Dictionary, scheme: Scheme = Scheme.BYTEWISE, mapping: MappingTable | None = None
) -> ACAutomaton:
    """Convenience wrapper: trie plus failure links in one call."""
    return build_failures(build_trie(dictionary, scheme, mapping))


def delta_star_nfa(ac: ACAutomaton, s: int, c: int, stats: MatchStats | None = None) -> int:
    """Extended transition: follow failure links until ``c`` matches.

    At the root every unmatched label loops back to the root.
    """
    while True:
        t = ac.children[s].get(c)
        if t is not None:
            if stats is not None:
                stats.forward_transitions += 1
            return t
        if s == 0:
            if stats is not None:
                stats.forward_transitions += 1
            return 0
        if stats is not None:
            stats.failure_links += 1
        s = ac.fail[s]


def find_overlapping_nfa(
    ac: ACAutomaton, text: bytes, stats: MatchStats | None = None
) -> list[Occurrence]:
    """Report all pattern occurrences in ``text`` using the explicit automaton.

    Occurrences are emitted by end byte offset; starts are derived from
    the matched pattern's byte length, so results are identical across
    encoding schemes.
    """
    units, widths = encode(ac.scheme, text, ac.mapping)
    byte_lens = ac.dictionary.byte_lens
    found: list[Occurrence] = []
    s = 0
    pos = 0
    for unit, width in zip(units.tolist(), widths.tolist()):
        for k in ac.outset[s]:
            found.append(Occurrence(k, pos - byte_lens[k], pos))
        s = delta_star_nfa(ac, s, unit, stats)
        pos += width
    for k in ac.outset[s]:
        found.append(Occurrence(k, pos - byte_lens[k], pos))
    if stats is not None:
        stats.units_consumed += len(units)
        stats.occurrences += len(found)
    return found


def naive_find(dictionary: Dictionary, text: bytes) -> list[Occurrence]:
    """Brute-force oracle: test every pattern at every byte position."""
    found: list[Occurrence] = []
    for k, pat in enumerate(dictionary.patterns):
        start = text.find(pat)
        while start != -1:
            found.append(Occurrence(k, start, start + len(pat)))
            start = text.find(pat, start + 1)
    found.sort(key=lambda o: (o.end, o.pattern_id))
    return found
