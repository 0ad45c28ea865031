"""Text-to-code-unit encoding schemes.

Transition labels can be drawn from text in three ways:

* ``bytewise``  -- one unit per UTF-8 byte (labels in 0..255),
* ``charwise``  -- one unit per Unicode code point,
* ``mapped``    -- code points remapped so that more frequent characters
  in the dictionary get smaller codes; characters absent from the
  dictionary map to -1, a unit that can never match a transition.

Every encoder also reports the byte width of each unit so that match
positions can be expressed as byte offsets whatever the scheme.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum

import numpy as np

from .dictionary import Dictionary
from .errors import EncodingError

INVALID_CODE = -1

# width-class boundaries of UTF-8: 1 byte below 0x80, 2 below 0x800, 3 below 0x10000
_UTF8_BOUNDS = np.array([0x80, 0x800, 0x10000], dtype=np.int64)


class Scheme(str, Enum):
    BYTEWISE = "bytewise"
    CHARWISE = "charwise"
    MAPPED = "mapped"


class MappingTable:
    """Frequency-ranked code-point mapping for the ``mapped`` scheme.

    ``pi[c]`` holds the mapped code of code point ``c``, or -1 when ``c``
    does not occur in the dictionary.  Codes form a permutation of
    ``0..sigma-1`` with smaller codes for more frequent code points.
    """

    __slots__ = ("pi", "sigma")

    def __init__(self, pi: np.ndarray, sigma: int):
        self.pi = pi  # int32, length = max observed code point + 1
        self.sigma = sigma

    def code(self, cp: int) -> int:
        if 0 <= cp < len(self.pi):
            return int(self.pi[cp])
        return INVALID_CODE

    def table_bytes(self) -> int:
        return len(self.pi) * 4


def build_mapping(dictionary: Dictionary) -> MappingTable:
    """Count code-point frequencies over all patterns and rank them.

    Ties between equally frequent code points are broken toward the
    smaller code point so that builds are deterministic.
    """
    counts: Counter[int] = Counter()
    for pat in dictionary.patterns:
        counts.update(map(ord, pat.decode("utf-8")))
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    pi = np.full(max(counts) + 1, INVALID_CODE, dtype=np.int32)
    for rank, (cp, _) in enumerate(ranked):
        pi[cp] = rank
    return MappingTable(pi, len(ranked))


def _decode_codepoints(text: bytes) -> np.ndarray:
    try:
        decoded = text.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"invalid UTF-8 text: {exc}") from None
    return np.frombuffer(decoded.encode("utf-32-le"), dtype=np.uint32).astype(np.int32)


def _utf8_widths(codepoints: np.ndarray) -> np.ndarray:
    return (np.searchsorted(_UTF8_BOUNDS, codepoints.astype(np.int64), side="right") + 1).astype(
        np.int32
    )


def encode(
    scheme: Scheme, text: bytes, mapping: MappingTable | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Encode ``text`` into (units, byte_widths) arrays under ``scheme``.

    Mapped units for code points outside the mapping table are emitted
    as ``INVALID_CODE``; the matcher treats those as guaranteed-failing
    labels.  Charwise and mapped encoding reject invalid UTF-8.
    """
    if scheme is Scheme.BYTEWISE:
        units = np.frombuffer(text, dtype=np.uint8).astype(np.int32)
        return units, np.ones(len(units), dtype=np.int32)
    cps = _decode_codepoints(text)
    widths = _utf8_widths(cps)
    if scheme is Scheme.CHARWISE:
        return cps, widths
    if scheme is Scheme.MAPPED:
        if mapping is None:
            raise EncodingError("mapped scheme requires a mapping table")
        clipped = np.minimum(cps, len(mapping.pi) - 1)
        units = mapping.pi[clipped].astype(np.int32)
        units[cps >= len(mapping.pi)] = INVALID_CODE
        return units, widths
    raise EncodingError(f"unknown scheme {scheme!r}")


def encode_pattern(scheme: Scheme, pattern: bytes, mapping: MappingTable | None = None) -> list[int]:
    """Encode one dictionary pattern as a plain list of unit values."""
    units, _ = encode(scheme, pattern, mapping)
    return units.tolist()


def alphabet_size(
    scheme: Scheme, dictionary: Dictionary, mapping: MappingTable | None = None
) -> int:
    """Size bound of the transition-label alphabet for ``dictionary``.

    Bytewise and charwise use the maximum observed unit value plus one;
    mapped uses the mapped alphabet size sigma.
    """
    if scheme is Scheme.MAPPED:
        if mapping is None:
            mapping = build_mapping(dictionary)
        return mapping.sigma
    top = 0
    for pat in dictionary.patterns:
        units, _ = encode(scheme, pat)
        top = max(top, int(units.max()))
    return top + 1


def label_frequencies(
    scheme: Scheme, dictionary: Dictionary, mapping: MappingTable | None = None
) -> Counter[int]:
    """Occurrence counts of each code unit over all dictionary patterns."""
    counts: Counter[int] = Counter()
    for pat in dictionary.patterns:
        units, _ = encode(scheme, pat, mapping)
        counts.update(units.tolist())
    return counts
