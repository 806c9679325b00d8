"""Solutions of p^3 + q^3 = (x^3 + y^3) r^3 in binary forms over Q(w)."""

__version__ = "0.1.0"
