"""Max k-cut with QAOA on binary-encoded colors."""

__version__ = "0.1.0"
