# adapters/outbound/files/heatmap_svg.py
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.colors import BoundaryNorm, ListedColormap
from loguru import logger

from domain.shaft.entities import GainGrid
from core.exceptions import OutputWriteError


# boundary (-1), unstable (0), stable (1)
REGION_COLORS = ListedColormap(["#bdbdbd", "#d7301f", "#1a9850"])
REGION_NORM = BoundaryNorm([-1.5, -0.5, 0.5, 1.5], REGION_COLORS.N)


def _extent(axis) -> tuple:
    lo, hi = float(axis[0]), float(axis[-1])
    if lo == hi:
        return lo - 0.5, hi + 0.5
    half = (hi - lo) / (len(axis) - 1) / 2
    return lo - half, hi + half


class MatplotlibHeatmapRenderer:
    """Three-colour stability map of a gain grid, kp across and kI up"""

    def render(self, grid: GainGrid, path: str) -> None:
        kp_lo, kp_hi = _extent(grid.kp_axis)
        ki_lo, ki_hi = _extent(grid.ki_axis)

        with plt.rc_context({"svg.hashsalt": "gain-grid", "svg.fonttype": "none"}):
            fig, ax = plt.subplots(figsize=(6, 5))
            ax.imshow(
                grid.region_codes(),
                origin="lower",
                aspect="auto",
                interpolation="nearest",
                cmap=REGION_COLORS,
                norm=REGION_NORM,
                extent=(kp_lo, kp_hi, ki_lo, ki_hi),
            )
            ax.set_xlabel("k_p")
            ax.set_ylabel("k_I")
            counts = grid.summary()
            ax.set_title(f"stable {counts['stable']} / unstable {counts['unstable']} / boundary {counts['boundary']}")
            fig.tight_layout()

            try:
                Path(path).parent.mkdir(parents=True, exist_ok=True)
                fig.savefig(path, format="svg", metadata={"Date": None})
            except OSError as e:
                raise OutputWriteError(path, str(e))
            finally:
                plt.close(fig)

        logger.info(f"Rendered {grid.shape[0]}x{grid.shape[1]} stability map to {path}")
