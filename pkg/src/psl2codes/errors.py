"""Exception types shared across modules."""


class CapExceeded(RuntimeError):
    """A computation would exceed a configured resource cap."""


class FalsificationError(ArithmeticError):
    """A computed object contradicts a proven statement; never expected to fire."""
