"""Generalized-criterion preference functions.

Each function maps a directed score difference d to a preference degree
in [0, 1]: zero for d <= 0 (or below the indifference threshold) and
non-decreasing in d. The step function (`Usual`) is the default; the
other five shapes are configurable per criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from .errors import ConfigurationError, DataError
from .jsonutil import rational_to_json, to_fraction

ZERO = Fraction(0)
ONE = Fraction(1)

# Gaussian degrees are irrational; they are snapped to this fixed
# denominator so the whole pipeline stays in exact rationals.
GAUSSIAN_DENOMINATOR = 10**12


@dataclass(frozen=True)
class Usual:
    """Step function: any positive difference is a full preference."""

    kind = "usual"

    def degree(self, d: Fraction) -> Fraction:
        return ONE if d > 0 else ZERO

    def to_json(self) -> dict:
        return {"kind": self.kind}


@dataclass(frozen=True)
class UShape:
    """Indifferent up to q, full preference beyond."""

    q: Fraction
    kind = "ushape"

    def __post_init__(self):
        object.__setattr__(self, "q", to_fraction(self.q, context="ushape q"))
        if self.q < 0:
            raise ConfigurationError("ushape: indifference threshold q must be >= 0")

    def degree(self, d: Fraction) -> Fraction:
        return ONE if d > self.q else ZERO

    def to_json(self) -> dict:
        return {"kind": self.kind, "q": rational_to_json(self.q)}


@dataclass(frozen=True)
class VShape:
    """Linear ramp from 0 at d=0 to 1 at d=p."""

    p: Fraction
    kind = "vshape"

    def __post_init__(self):
        object.__setattr__(self, "p", to_fraction(self.p, context="vshape p"))
        if self.p <= 0:
            raise ConfigurationError("vshape: preference threshold p must be > 0")

    def degree(self, d: Fraction) -> Fraction:
        if d <= 0:
            return ZERO
        if d >= self.p:
            return ONE
        return d / self.p

    def to_json(self) -> dict:
        return {"kind": self.kind, "p": rational_to_json(self.p)}


@dataclass(frozen=True)
class Level:
    """Half preference between q and p, full beyond p."""

    q: Fraction
    p: Fraction
    kind = "level"

    def __post_init__(self):
        object.__setattr__(self, "q", to_fraction(self.q, context="level q"))
        object.__setattr__(self, "p", to_fraction(self.p, context="level p"))
        if self.q < 0:
            raise ConfigurationError("level: indifference threshold q must be >= 0")
        if self.p <= self.q:
            raise ConfigurationError("level: thresholds must satisfy p > q")

    def degree(self, d: Fraction) -> Fraction:
        if d <= self.q:
            return ZERO
        if d <= self.p:
            return Fraction(1, 2)
        return ONE

    def to_json(self) -> dict:
        return {"kind": self.kind, "p": rational_to_json(self.p), "q": rational_to_json(self.q)}


@dataclass(frozen=True)
class Linear:
    """Indifferent up to q, linear ramp to full preference at p."""

    q: Fraction
    p: Fraction
    kind = "linear"

    def __post_init__(self):
        object.__setattr__(self, "q", to_fraction(self.q, context="linear q"))
        object.__setattr__(self, "p", to_fraction(self.p, context="linear p"))
        if self.q < 0:
            raise ConfigurationError("linear: indifference threshold q must be >= 0")
        if self.p <= self.q:
            raise ConfigurationError("linear: thresholds must satisfy p > q")

    def degree(self, d: Fraction) -> Fraction:
        if d <= self.q:
            return ZERO
        if d >= self.p:
            return ONE
        return (d - self.q) / (self.p - self.q)

    def to_json(self) -> dict:
        return {"kind": self.kind, "p": rational_to_json(self.p), "q": rational_to_json(self.q)}


@dataclass(frozen=True)
class Gaussian:
    """1 - exp(-d^2 / 2s^2) for d > 0, snapped to a fixed-denominator rational."""

    s: Fraction
    kind = "gaussian"

    def __post_init__(self):
        object.__setattr__(self, "s", to_fraction(self.s, context="gaussian s"))
        if self.s <= 0:
            raise ConfigurationError("gaussian: spread s must be > 0")

    def degree(self, d: Fraction) -> Fraction:
        if d <= 0:
            return ZERO
        raw = 1.0 - math.exp(-float(d) ** 2 / (2.0 * float(self.s) ** 2))
        approx = Fraction(round(raw * GAUSSIAN_DENOMINATOR), GAUSSIAN_DENOMINATOR)
        return min(max(approx, ZERO), ONE)

    def to_json(self) -> dict:
        return {"kind": self.kind, "s": rational_to_json(self.s)}


PreferenceFunction = Union[Usual, UShape, VShape, Level, Linear, Gaussian]

_KINDS = {cls.kind: cls for cls in (Usual, UShape, VShape, Level, Linear, Gaussian)}


def function_from_json(payload: Any, *, context: str = "function") -> PreferenceFunction:
    """Build a preference function from its JSON form.

    {"kind": "usual"} | {"kind": "ushape", "q": ...} | {"kind": "vshape",
    "p": ...} | {"kind": "level"|"linear", "q": ..., "p": ...} |
    {"kind": "gaussian", "s": ...}. Threshold values accept any rational
    form understood by ``to_fraction``.
    """
    if not isinstance(payload, dict) or "kind" not in payload:
        raise DataError(f"{context}: expected an object with a 'kind' key", code="BAD_FUNCTION")
    kind = payload["kind"]
    if kind not in _KINDS:
        raise DataError(f"{context}: unknown preference function kind {kind!r}", code="BAD_FUNCTION")
    params = {k: to_fraction(v, context=f"{context}.{k}") for k, v in payload.items() if k != "kind"}
    cls = _KINDS[kind]
    try:
        return cls(**params)
    except TypeError as exc:
        raise DataError(f"{context}: bad parameters for {kind!r}: {exc}", code="BAD_FUNCTION") from exc
