# Configuration.

from dataclasses import dataclass, field
from typing import Optional

from .errors import ConfigError


@dataclass
class BenchConfig:
    # Throughput measurement settings.

    payload_bytes: int = 1 << 20
    reps: int = 8
    seed: int = 0

    def validate(self) -> "BenchConfig":
        if self.payload_bytes < 1:
            raise ConfigError(f"payload size must be at least 1 byte, got {self.payload_bytes}")
        if self.reps < 1:
            raise ConfigError(f"repetitions must be at least 1, got {self.reps}")
        return self


@dataclass
class AvalancheConfig:
    # Single-bit-flip experiment settings.

    trials: int = 1000
    message_bytes: int = 64
    seed: int = 0

    def validate(self) -> "AvalancheConfig":
        if self.trials < 1:
            raise ConfigError(f"trials must be at least 1, got {self.trials}")
        if self.message_bytes < 1:
            raise ConfigError(f"message must be at least 1 byte, got {self.message_bytes}")
        return self


@dataclass
class ChartTheme:
    # Chart colours.

    background: str = "#131722"
    panel_bg: str = "#1e222d"
    grid_color: str = "#262b3e"
    text_color: str = "#d1d4dc"
    axis_color: str = "#787b86"
    md5_color: str = "#2196F3"
    sha192_color: str = "#FF9800"
    unified_color: str = "#26a69a"


DARK_THEME = ChartTheme()

LIGHT_THEME = ChartTheme(
    background="#ffffff",
    panel_bg="#f5f5f5",
    grid_color="#e0e0e0",
    text_color="#333333",
    axis_color="#666666",
    md5_color="#1565C0",
    sha192_color="#EF6C00",
    unified_color="#00897B",
)


@dataclass
class RenderConfig:
    # Chart render settings.

    width: int = 1280
    height: int = 720
    dpi: int = 100
    theme: ChartTheme = field(default_factory=ChartTheme)
    font_family: str = "monospace"
    show_grid: bool = True
    grid_alpha: float = 0.3
    grid_linewidth: float = 0.5
    bar_width: float = 0.26
    title: Optional[str] = "Functional units per datapath configuration"
