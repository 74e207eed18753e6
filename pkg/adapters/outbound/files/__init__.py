# adapters/outbound/files/__init__.py
from .grid_csv import PandasGridWriter
from .trajectory_csv import PandasTrajectoryWriter
from .heatmap_svg import MatplotlibHeatmapRenderer

__all__ = ["PandasGridWriter", "PandasTrajectoryWriter", "MatplotlibHeatmapRenderer"]
