"""Exact computations for reductive monoids, their toric data, and local zeta integrals."""
from __future__ import annotations

__version__ = "0.1.0"
