"""Exception types shared across the toolkit."""


class SlimkitError(Exception):
    """Base class for all toolkit errors."""


class InvalidInput(SlimkitError, ValueError):
    """Bad argument values: non-finite data, out-of-range parameters, malformed config."""


class ShapeError(SlimkitError, ValueError):
    """Tensor or layer shapes are incompatible."""


class StateError(SlimkitError, RuntimeError):
    """Operation called with stale or mismatched state (cache, plan, ...)."""


class OverPrunedError(SlimkitError, RuntimeError):
    """A prune plan removes every channel of some layer; the network cannot run."""


class DivergenceError(SlimkitError, RuntimeError):
    """Training produced a non-finite loss or gradient."""
