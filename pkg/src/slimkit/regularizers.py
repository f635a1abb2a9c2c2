"""Sparse penalties on scaling-factor vectors and their limiting subgradients.

Five separable penalties are supported, each of the form R(z) = sum_i r(z_i)
with r even, continuous, r(0) = 0, and nondecreasing on [0, inf):

* ``l1``:   r(t) = |t|
* ``lp``:   r(t) = |t|^p, 0 < p < 1
* ``tl1``:  r(t) = (a+1)|t| / (a+|t|), a > 0 (transformed l1)
* ``mcp``:  minimax concave penalty, quadratic taper to a constant cap
* ``scad``: smoothly clipped absolute deviation, linear then quadratic then cap

For ``mcp``/``scad`` the internal breakpoint parameter ``lambda_internal`` is
kept at 1 so that a single global strength multiplies the whole penalty.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput

KINDS = ("l1", "lp", "tl1", "mcp", "scad")


class AtZero(enum.Enum):
    """How to pick a descent direction from the subdifferential at the origin."""

    SELECT_ZERO = "select_zero"


@dataclass(frozen=True)
class SubgradientPolicy:
    at_zero: AtZero = AtZero.SELECT_ZERO


DEFAULT_POLICY = SubgradientPolicy()


@dataclass(frozen=True)
class RegularizerSpec:
    """Which penalty to use and its shape parameters.

    ``p`` is only meaningful for ``lp``; ``a`` for ``tl1``/``mcp``/``scad``;
    ``lambda_internal`` only for ``mcp``/``scad`` (breakpoints at
    ``lambda_internal`` and ``a * lambda_internal``).
    """

    kind: str
    p: float | None = None
    a: float | None = None
    lambda_internal: float = 1.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInput(f"unknown penalty kind {self.kind!r}, expected one of {KINDS}")
        if self.kind == "lp":
            if self.p is None or not (0.0 < self.p < 1.0):
                raise InvalidInput(f"lp penalty needs p in (0, 1), got {self.p!r}")
        if self.kind == "tl1":
            if self.a is None or self.a <= 0.0:
                raise InvalidInput(f"tl1 penalty needs a > 0, got {self.a!r}")
        if self.kind == "mcp":
            if self.a is None or self.a <= 1.0:
                raise InvalidInput(f"mcp penalty needs a > 1, got {self.a!r}")
        if self.kind == "scad":
            if self.a is None or self.a <= 2.0:
                raise InvalidInput(f"scad penalty needs a > 2, got {self.a!r}")
        if not np.isfinite(self.lambda_internal) or self.lambda_internal < 0.0:
            raise InvalidInput(f"lambda_internal must be finite and >= 0, got {self.lambda_internal!r}")

    def to_dict(self) -> dict:
        d = {"kind": self.kind}
        if self.kind == "lp":
            d["p"] = self.p
        if self.kind in ("tl1", "mcp", "scad"):
            d["a"] = self.a
        if self.kind in ("mcp", "scad") and self.lambda_internal != 1.0:
            d["lambda_internal"] = self.lambda_internal
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RegularizerSpec":
        allowed = {"kind", "p", "a", "lambda_internal"}
        unknown = set(d) - allowed
        if unknown:
            raise InvalidInput(f"unknown regularizer keys {sorted(unknown)}")
        return cls(**d)

    def label(self) -> str:
        """Short stable tag, used for file names and report rows."""
        if self.kind == "lp":
            return f"lp_p{self.p:g}"
        if self.kind in ("tl1", "mcp", "scad"):
            return f"{self.kind}_a{self.a:g}"
        return self.kind


def _check_finite(z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=np.float64)
    if not np.all(np.isfinite(z)):
        raise InvalidInput("penalty input contains non-finite values")
    return z


def penalty_value(spec: RegularizerSpec, z: np.ndarray) -> float:
    """Evaluate sum_i r(z_i) for the penalty selected by ``spec``."""
    z = _check_finite(z)
    t = np.abs(z)
    if spec.kind == "l1":
        return float(t.sum())
    if spec.kind == "lp":
        return float(np.power(t, spec.p).sum())
    if spec.kind == "tl1":
        a = spec.a
        return float(((a + 1.0) * t / (a + t)).sum())
    lam = spec.lambda_internal
    a = spec.a
    if spec.kind == "mcp":
        inner = lam * t - t * t / (2.0 * a)
        vals = np.where(t <= a * lam, inner, a * lam * lam / 2.0)
        return float(vals.sum())
    # scad
    mid = (2.0 * a * lam * t - t * t - lam * lam) / (2.0 * (a - 1.0))
    vals = np.where(t <= lam, lam * t, np.where(t <= a * lam, mid, lam * lam * (a + 1.0) / 2.0))
    return float(vals.sum())


def penalty_subgradient(
    spec: RegularizerSpec, z: np.ndarray, policy: SubgradientPolicy = DEFAULT_POLICY
) -> np.ndarray:
    """Componentwise limiting subgradient of the penalty.

    At z_i = 0 the subdifferential is an interval (or all of R for ``lp``);
    the policy picks 0 from it, which is always a member.
    """
    z = _check_finite(z)
    if policy.at_zero is not AtZero.SELECT_ZERO:
        raise InvalidInput(f"unsupported at-zero policy {policy.at_zero!r}")
    t = np.abs(z)
    sgn = np.sign(z)
    if spec.kind == "l1":
        return sgn.astype(np.float64)
    nonzero = t > 0.0
    out = np.zeros_like(z, dtype=np.float64)
    if spec.kind == "lp":
        p = spec.p
        # p * sgn(z) / |z|^(1-p); the masked divide never touches z == 0
        np.divide(p * sgn, np.power(t, 1.0 - p), out=out, where=nonzero)
        return out
    if spec.kind == "tl1":
        a = spec.a
        denom = (a + t) ** 2
        np.divide(a * (a + 1.0) * sgn, denom, out=out, where=nonzero)
        return out
    lam = spec.lambda_internal
    a = spec.a
    if spec.kind == "mcp":
        inner = lam * sgn - z / a
        return np.where(nonzero & (t <= a * lam), inner, 0.0)
    # scad
    mid = (a * lam * sgn - z) / (a - 1.0)
    out = np.where(nonzero & (t <= lam), lam * sgn, 0.0)
    out = np.where((t > lam) & (t <= a * lam), mid, out)
    return out
