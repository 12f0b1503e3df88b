"""Static plotting of fdjam sweep CSV artifacts."""

from .render import PlotSpec, SchemaError, detect_spec, render_csv, render_many

__all__ = ["PlotSpec", "SchemaError", "detect_spec", "render_csv", "render_many"]
__version__ = "0.1.0"
