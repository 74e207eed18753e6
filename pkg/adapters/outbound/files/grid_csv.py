# adapters/outbound/files/grid_csv.py
from pathlib import Path

import pandas as pd
from loguru import logger

from domain.scalars.services import format_scalar
from domain.shaft.entities import GainGrid
from core.exceptions import OutputWriteError


GRID_COLUMNS = ["ki", "kp", "cond1", "cond2", "cond3", "verdict", "abscissa"]


def grid_frame(grid: GainGrid) -> pd.DataFrame:
    """One row per cell, kp varying fastest; rationals kept as 'num/den' text"""
    rows = [
        {
            "ki": format_scalar(cell.ki),
            "kp": format_scalar(cell.kp),
            "cond1": format_scalar(cell.conditions[0]),
            "cond2": format_scalar(cell.conditions[1]),
            "cond3": format_scalar(cell.conditions[2]),
            "verdict": cell.verdict.outcome.value,
            "abscissa": repr(float(cell.abscissa)),
        }
        for cell in grid
    ]
    return pd.DataFrame(rows, columns=GRID_COLUMNS)


class PandasGridWriter:
    """Gain grid to CSV"""

    def write(self, grid: GainGrid, path: str) -> None:
        frame = grid_frame(grid)
        try:
            Path(path).parent.mkdir(parents=True, exist_ok=True)
            frame.to_csv(path, index=False, lineterminator="\n")
        except OSError as e:
            raise OutputWriteError(path, str(e))
        logger.info(f"Wrote {len(frame)} grid cells to {path}")
