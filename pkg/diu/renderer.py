# Chart renderer

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .config import RenderConfig
from .resources import CONFIGURATIONS, UNIT_KINDS, ResourceReport

logger = logging.getLogger(__name__)


def _hex_to_rgba(hex_color: str) -> tuple:
    h = hex_color.lstrip("#")
    if len(h) == 6:
        return tuple(int(h[i:i+2], 16) / 255 for i in (0, 2, 4)) + (1.0,)
    elif len(h) == 8:
        return tuple(int(h[i:i+2], 16) / 255 for i in (0, 2, 4, 6))
    return (1.0, 1.0, 1.0, 1.0)


class Renderer:
    # Renders the resource model to a PNG using matplotlib.

    def __init__(self, config: Optional[RenderConfig] = None):
        self.config = config or RenderConfig()
        self._fig = None
        self._ax = None

    def setup(self):
        c = self.config
        self._fig = plt.figure(figsize=(c.width / c.dpi, c.height / c.dpi), dpi=c.dpi)
        self._fig.set_facecolor(c.theme.background)
        self._ax = self._fig.add_axes([0.08, 0.2, 0.88, 0.7])
        self._setup_ax(self._ax)

    def _setup_ax(self, ax):
        c = self.config
        ax.set_facecolor(c.theme.panel_bg)
        ax.tick_params(colors=c.theme.axis_color, labelsize=9)
        ax.spines["top"].set_visible(False)
        ax.spines["right"].set_visible(False)
        ax.spines["bottom"].set_color(c.theme.axis_color)
        ax.spines["left"].set_color(c.theme.axis_color)
        if c.show_grid:
            ax.grid(
                True, which="major", axis="y",
                color=c.theme.grid_color,
                alpha=c.grid_alpha, linewidth=c.grid_linewidth,
            )
        ax.set_axisbelow(True)

    def _colors(self) -> dict:
        t = self.config.theme
        return {
            "md5": _hex_to_rgba(t.md5_color),
            "sha192": _hex_to_rgba(t.sha192_color),
            "unified": _hex_to_rgba(t.unified_color),
        }

    def render_resources(self, report: ResourceReport, output_path: Union[str, Path]) -> Path:
        self.setup()
        try:
            self._draw_resources(report)
            output_path = Path(output_path)
            self._fig.savefig(output_path, facecolor=self._fig.get_facecolor())
        finally:
            plt.close(self._fig)
            self._fig = None
            self._ax = None
        logger.info("resource chart saved to %s", output_path)
        return output_path

    def _draw_resources(self, report: ResourceReport):
        c = self.config
        ax = self._ax
        df = report.table().loc[list(UNIT_KINDS)]
        xs = np.arange(len(df.index))
        colors = self._colors()

        for offset, cfg in zip((-1, 0, 1), CONFIGURATIONS):
            values = df[cfg].to_numpy()
            bars = ax.bar(
                xs + offset * c.bar_width, values, width=c.bar_width,
                color=colors[cfg], label=cfg,
            )
            for bar, value in zip(bars, values):
                ax.text(
                    bar.get_x() + bar.get_width() / 2, bar.get_height(), str(int(value)),
                    ha="center", va="bottom", fontsize=8,
                    color=c.theme.text_color, family=c.font_family,
                )

        ax.set_xticks(xs)
        ax.set_xticklabels([k.replace("_", " ") for k in df.index], rotation=20, family=c.font_family)
        ax.set_ylabel("units", color=c.theme.axis_color, family=c.font_family)
        legend = ax.legend(frameon=False)
        for text in legend.get_texts():
            text.set_color(c.theme.text_color)
        if c.title:
            ax.set_title(c.title, color=c.theme.text_color, family=c.font_family)
