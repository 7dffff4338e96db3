"""Verification and benchmarking harnesses."""
