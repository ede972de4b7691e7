"""specgraph: exact distance-spectra verification toolkit."""

__version__ = "0.1.0"
