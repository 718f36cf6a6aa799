"""Distance spectra of graphs, distance equitable partitions and the
classification of graphs whose distance spectrum lies in [-3, -1] below the
second eigenvalue."""

__version__ = "0.1.0"
