"""Exact computations around equivariant signature invariants of finite abelian group actions."""

__version__ = "0.1.0"
