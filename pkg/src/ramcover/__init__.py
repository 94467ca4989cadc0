"""Ramification types of genus-zero covers whose monodromy contains the
alternating group, and the tools to generate, bound and certify them."""

__version__ = "0.1.0"
