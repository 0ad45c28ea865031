"""Build configuration axes and measurement records."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .codemap import Scheme
from .errors import ConfigError


class Layout(str, Enum):
    INDIVIDUAL = "individual"
    PACKED = "packed"


class Format(str, Enum):
    BASIC = "basic"
    COMPACT = "compact"


class Vacant(str, Enum):
    CHAIN = "chain"
    SKIP_FORWARD = "skip-forward"
    SKIP_DENSE = "skip-dense"


class Order(str, Enum):
    LEX_BFS = "lex-bfs"
    FREQ_BFS = "freq-bfs"
    LEX_DFS = "lex-dfs"
    FREQ_DFS = "freq-dfs"

    @property
    def dfs(self) -> bool:
        return self in (Order.LEX_DFS, Order.FREQ_DFS)

    @property
    def freq(self) -> bool:
        return self in (Order.FREQ_BFS, Order.FREQ_DFS)


class Store(str, Enum):
    SIMPLE = "simple"
    SHARED = "shared"
    FOREST = "forest"


@dataclass(frozen=True)
class BuildConfig:
    """Selection of one implementation technique per axis.

    The compact format stores transition labels in a byte-wide check
    field, so it is only valid together with the bytewise scheme.
    """

    scheme: Scheme = Scheme.BYTEWISE
    layout: Layout = Layout.PACKED
    format: Format = Format.BASIC
    vacant: Vacant = Vacant.SKIP_FORWARD
    order: Order = Order.LEX_DFS
    store: Store = Store.FOREST
    skip_blocks: int = 16  # L: window of trailing blocks searched by skip-forward
    dense_threshold: float = 0.1  # tau: minimum vacant fraction of a searchable block

    def __post_init__(self):
        if self.format is Format.COMPACT and self.scheme is not Scheme.BYTEWISE:
            raise ConfigError("compact format requires the bytewise scheme")
        if self.skip_blocks < 1:
            raise ConfigError("skip-forward window must be a positive block count")
        if not 0.0 <= self.dense_threshold <= 1.0:
            raise ConfigError("skip-dense threshold must lie in [0, 1]")

    def label(self) -> str:
        return "/".join(
            (
                self.scheme.value,
                self.layout.value,
                self.format.value,
                self.vacant.value,
                self.order.value,
                self.store.value,
            )
        )


@dataclass
class BuildStats:
    """Measurements recorded while building one double-array automaton."""

    n_states: int = 0  # states of the original automaton
    array_len: int = 0  # double-array length including vacant ids
    vacant_count: int = 0
    vacant_proportion: float = 0.0
    searches: int = 0  # vacant searches performed
    verifications: int = 0  # candidate base values fully tested
    avg_verifications: float = 0.0  # per vacant search
    avg_out_transitions: float = 0.0  # per internal (non-leaf) state
    memory: dict[str, int] = field(default_factory=dict)
    build_seconds: float = 0.0

    def rows(self) -> list[tuple[str, str]]:
        out = [
            ("n_states", str(self.n_states)),
            ("array_len", str(self.array_len)),
            ("vacant_count", str(self.vacant_count)),
            ("vacant_proportion", f"{self.vacant_proportion:.6f}"),
            ("searches", str(self.searches)),
            ("verifications", str(self.verifications)),
            ("avg_verifications", f"{self.avg_verifications:.4f}"),
            ("avg_out_transitions", f"{self.avg_out_transitions:.4f}"),
        ]
        out.extend((f"mem_{name}", str(size)) for name, size in self.memory.items())
        out.append(("build_seconds", f"{self.build_seconds:.6f}"))
        return out


@dataclass
class MatchStats:
    """Per-run counters collected by the matchers."""

    forward_transitions: int = 0
    failure_links: int = 0
    units_consumed: int = 0
    occurrences: int = 0

    @property
    def visited_states(self) -> int:
        return self.forward_transitions + self.failure_links
