# adapters/outbound/files/trajectory_csv.py
from pathlib import Path

import pandas as pd
from loguru import logger

from domain.shaft.entities import Trajectory
from core.exceptions import OutputWriteError


TRAJECTORY_COLUMNS = ["t", "x1_re", "x1_im", "x2_re", "x2_im", "l_re", "l_im"]


def trajectory_frame(trajectory: Trajectory) -> pd.DataFrame:
    states = trajectory.states
    return pd.DataFrame(
        {
            "t": trajectory.times,
            "x1_re": states[:, 0].real,
            "x1_im": states[:, 0].imag,
            "x2_re": states[:, 1].real,
            "x2_im": states[:, 1].imag,
            "l_re": states[:, 2].real,
            "l_im": states[:, 2].imag,
        },
        columns=TRAJECTORY_COLUMNS,
    )


class PandasTrajectoryWriter:
    """Sampled trajectory to CSV"""

    def write(self, trajectory: Trajectory, path: str) -> None:
        frame = trajectory_frame(trajectory)
        try:
            Path(path).parent.mkdir(parents=True, exist_ok=True)
            frame.to_csv(path, index=False, lineterminator="\n")
        except OSError as e:
            raise OutputWriteError(path, str(e))
        logger.info(f"Wrote {len(frame)} trajectory samples to {path}")
