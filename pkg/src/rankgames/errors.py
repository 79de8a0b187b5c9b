"""Shared exception types."""


class CapExceededError(RuntimeError):
    """An instance exceeded a size or rank guard meant to stop runaway runs."""


class GameFormatError(ValueError):
    """A game, decomposition, or profile text could not be parsed."""
