# tests/adapters/test_files.py
import math

import pytest

from adapters.outbound.files import PandasGridWriter, PandasTrajectoryWriter, MatplotlibHeatmapRenderer
from adapters.outbound.files.grid_csv import grid_frame, GRID_COLUMNS
from adapters.outbound.files.trajectory_csv import trajectory_frame
from core.exceptions import OutputWriteError
from domain.shaft.services import sweep_grid, simulate_closed_loop


@pytest.fixture
def grid(stable_shaft):
    return sweep_grid(stable_shaft, (-2, 0), (-12, -8), (3, 2))


class TestGridCsv:
    def test_frame_order(self, grid):
        frame = grid_frame(grid)
        assert list(frame.columns) == GRID_COLUMNS
        assert len(frame) == 6
        # kp varies fastest
        assert list(frame["kp"][:2]) == ["-12", "-8"]
        assert list(frame["ki"][:2]) == ["-2", "-2"]

    def test_rationals_stay_exact(self, stable_shaft):
        frame = grid_frame(sweep_grid(stable_shaft, (-1, 0), (-10, -10), (3, 2)))
        assert frame["ki"][1] == "-1/2"

    def test_write(self, grid, tmp_path):
        path = tmp_path / "nested" / "grid.csv"
        PandasGridWriter().write(grid, str(path))
        lines = path.read_text().splitlines()
        assert lines[0] == ",".join(GRID_COLUMNS)
        assert len(lines) == 7
        assert math.isfinite(float(lines[1].split(",")[-1]))

    def test_unwritable(self, grid, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("")
        with pytest.raises(OutputWriteError):
            PandasGridWriter().write(grid, str(blocker / "grid.csv"))


class TestTrajectoryCsv:
    def test_frame(self, stable_shaft):
        trajectory = simulate_closed_loop(stable_shaft, horizon=1, dt=0.1, sample_every=5)
        frame = trajectory_frame(trajectory)
        assert len(frame) == len(trajectory.times)
        assert frame["t"].iloc[0] == 0
        assert frame["x1_re"].iloc[0] == 0

    def test_write(self, stable_shaft, tmp_path):
        path = tmp_path / "trajectory.csv"
        PandasTrajectoryWriter().write(simulate_closed_loop(stable_shaft, horizon=1, dt=0.5), str(path))
        lines = path.read_text().splitlines()
        assert lines[0] == "t,x1_re,x1_im,x2_re,x2_im,l_re,l_im"
        # t = 0, 0.5, 1
        assert len(lines) == 4


class TestHeatmap:
    def test_render(self, grid, tmp_path):
        path = tmp_path / "map.svg"
        MatplotlibHeatmapRenderer().render(grid, str(path))
        text = path.read_text()
        assert text.startswith("<?xml")
        assert "<svg" in text

    def test_single_cell(self, stable_shaft, tmp_path):
        path = tmp_path / "cell.svg"
        MatplotlibHeatmapRenderer().render(sweep_grid(stable_shaft, (-1, -1), (-10, -10), (2, 2)), str(path))
        assert path.exists()
