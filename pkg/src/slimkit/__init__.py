"""Slimkit: train small CNNs with sparsity-inducing penalties on batch-norm
scaling factors, prune channels globally by magnitude, rebuild the compressed
network, retrain, and report compression."""

from .errors import (
    DivergenceError,
    InvalidInput,
    OverPrunedError,
    ShapeError,
    SlimkitError,
    StateError,
)
from .regularizers import RegularizerSpec, SubgradientPolicy, penalty_subgradient, penalty_value

__all__ = [
    "DivergenceError",
    "InvalidInput",
    "OverPrunedError",
    "RegularizerSpec",
    "ShapeError",
    "SlimkitError",
    "StateError",
    "SubgradientPolicy",
    "penalty_subgradient",
    "penalty_value",
]

__version__ = "0.1.0"
