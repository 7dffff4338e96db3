"""
Alcuin: exact arithmetic for integer triangles of a given perimeter.

This package provides tools for:
- Counting T(p), the integer triangles with perimeter p, five independent ways
- Enumerating the triangles directly and through the (c, a) bijection
- Extracting coefficients of x^3 / ((1-x^2)(1-x^3)(1-x^4))
- Finding the maximum-area triangle exactly via Heron's formula
- Cross-verifying and benchmarking every method against a brute-force oracle
"""

__version__ = "0.1.0"
