"""Exact-arithmetic toolkit for Engel subalgebras and maximal-subalgebra families."""

__version__ = "0.1.0"
