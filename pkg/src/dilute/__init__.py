"""Dilute Temperley-Lieb algebras, their R-matrix and associated checks."""
