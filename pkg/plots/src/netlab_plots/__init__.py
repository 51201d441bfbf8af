"""Figure rendering for netlab CSV outputs."""

from .figures import FigureSpec, KINDS, binned_point_size, build_figure, load_spec, render

__version__ = "0.1.0"
