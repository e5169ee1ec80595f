"""Spin quantum invariants from surgery presentations."""
