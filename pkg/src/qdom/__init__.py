"""qdom: exact computer algebra for quantum bounded symmetric domains."""

__version__ = "0.1.0"
