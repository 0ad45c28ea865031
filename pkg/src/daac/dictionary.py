"""Pattern dictionaries and match occurrences.

A dictionary is an ordered set of unique, non-empty UTF-8 patterns.
Pattern ids are dense 0-based integers in insertion order, and every
occurrence reported by any matcher in this package refers to patterns
by those ids and to text positions by byte offsets.
"""

from __future__ import annotations

import os
from typing import Iterable, NamedTuple

from .errors import DictionaryError


class Occurrence(NamedTuple):
    """One pattern hit: ``text[start:end] == patterns[pattern_id]`` (bytes)."""

    pattern_id: int
    start: int
    end: int


class Dictionary:
    """Ordered set of unique non-empty UTF-8 patterns."""

    __slots__ = ("patterns", "byte_lens", "char_lens")

    def __init__(self, patterns: Iterable[str | bytes]):
        pats: list[bytes] = []
        char_lens: list[int] = []
        seen: set[bytes] = set()
        for k, pat in enumerate(patterns):
            raw = pat.encode("utf-8") if isinstance(pat, str) else bytes(pat)
            if not raw:
                raise DictionaryError(f"pattern {k} is empty")
            try:
                decoded = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise DictionaryError(f"pattern {k} is not valid UTF-8: {exc}") from None
            if raw in seen:
                raise DictionaryError(f"duplicate pattern {raw!r} (id {k})")
            seen.add(raw)
            pats.append(raw)
            char_lens.append(len(decoded))
        if not pats:
            raise DictionaryError("dictionary has no patterns")
        self.patterns: tuple[bytes, ...] = tuple(pats)
        self.byte_lens: tuple[int, ...] = tuple(len(p) for p in pats)
        self.char_lens: tuple[int, ...] = tuple(char_lens)

    def __len__(self) -> int:
        return len(self.patterns)

    def __iter__(self):
        return iter(self.patterns)

    def __eq__(self, other) -> bool:
        return isinstance(other, Dictionary) and self.patterns == other.patterns

    def __repr__(self) -> str:
        return f"Dictionary({len(self.patterns)} patterns)"

    @classmethod
    def from_file(cls, path: str | os.PathLike) -> "Dictionary":
        """Load a dictionary from a UTF-8 text file, one pattern per line.

        The file must use LF line endings and contain no empty lines; a
        byte-order mark is rejected.
        """
        with open(path, "rb") as fh:
            blob = fh.read()
        if blob.startswith(b"\xef\xbb\xbf"):
            raise DictionaryError(f"{path}: byte-order mark not allowed")
        lines = blob.split(b"\n")
        if lines and lines[-1] == b"":
            lines.pop()  # trailing newline on the last pattern
        for i, line in enumerate(lines):
            if line == b"":
                raise DictionaryError(f"{path}: empty line {i + 1}")
            if line.endswith(b"\r"):
                raise DictionaryError(f"{path}: CRLF line ending on line {i + 1}")
        try:
            return cls(lines)
        except DictionaryError as exc:
            raise DictionaryError(f"{path}: {exc}") from None
