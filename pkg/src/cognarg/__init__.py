"""Cognitive argumentation: preference-based structured argumentation for
human conditional reasoning."""

__version__ = "0.1.0"
