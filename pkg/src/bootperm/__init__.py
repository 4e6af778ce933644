"""Bootstrap percolation on grids and the non-symmetric operad of permutations."""

__version__ = "0.1.0"
