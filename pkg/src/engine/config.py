"""
Engine Configuration
Typed engine settings built from the merged configuration dict
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Dict, Optional

from ..memory.chain_stack import DRAIN_ORDERS
from ..memory.equivalence_tables import MAX_LABEL_BITS, MIN_LABEL_BITS
from ..stream.stream_model import GROUP_SIZE
from ..utils.errors import ConfigError, DimensionError

UHD_WIDTH = 3840
UHD_HEIGHT = 2160


@dataclass(frozen=True)
class EngineConfig:
    width: int = 0
    height: int = 0
    label_bits: int = 10
    clock_hz: int = 133_300_000
    fps: int = 60
    drain_overhead: int = 2
    drain_order: str = "fifo"
    trace: bool = True

    def __post_init__(self):
        if not MIN_LABEL_BITS <= self.label_bits <= MAX_LABEL_BITS:
            raise ConfigError(
                f"label_bits must be in [{MIN_LABEL_BITS}, {MAX_LABEL_BITS}], got {self.label_bits}"
            )
        if self.clock_hz <= 0 or self.fps <= 0:
            raise ConfigError(f"clock_hz and fps must be positive, got {self.clock_hz} and {self.fps}")
        if self.drain_overhead < 0:
            raise ConfigError(f"drain_overhead must be non-negative, got {self.drain_overhead}")
        if self.drain_order not in DRAIN_ORDERS:
            raise ConfigError(f"drain_order must be one of {DRAIN_ORDERS}, got '{self.drain_order}'")
        if self.width and self.width % GROUP_SIZE:
            raise DimensionError(f"Width {self.width} is not a multiple of {GROUP_SIZE}")

    @property
    def table_size(self) -> int:
        return 1 << self.label_bits

    @property
    def budget_cycles(self) -> int:
        """Cycles available per frame"""
        return self.clock_hz // self.fps

    def for_frame(self, width: int, height: int) -> "EngineConfig":
        return replace(self, width=width, height=height)

    @classmethod
    def from_config(cls, config: Dict[str, Any], **overrides: Optional[Any]) -> "EngineConfig":
        """Build from the `engine` section; overrides that are None are ignored"""
        engine = dict(config.get("engine", {}))
        engine.update({k: v for k, v in overrides.items() if v is not None})
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(engine) - known
        if unknown:
            raise ConfigError(f"Unknown engine settings: {', '.join(sorted(unknown))}")
        try:
            return cls(**{k: engine[k] for k in engine})
        except TypeError as e:
            raise ConfigError(f"Invalid engine configuration: {e}") from e
