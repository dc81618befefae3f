"""Exact-rational plumbing and canonical JSON.

Every number the ranking pipeline touches is a ``fractions.Fraction`` so
that ties are exact and rankings never depend on float rounding. This
module owns the conversions at the boundaries: parsing user-supplied
numbers into fractions, rendering fractions for display (3 decimals,
presentation only), and the one canonical JSON encoding used everywhere
(sorted keys, 2-space indent, LF, UTF-8) so byte-for-byte comparisons of
serialized output are meaningful.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import DataError

DISPLAY_DENOMINATOR = 1000  # 3 decimal places


def to_fraction(value: Any, *, context: str = "value") -> Fraction:
    """Convert a JSON-ish number into an exact Fraction.

    Accepted forms: int, Fraction, strings like "1/3" or "0.25", floats
    (interpreted through their shortest decimal repr, so 0.1 means 1/10),
    and {"num": int, "den": int} objects.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DataError(f"{context}: expected a number, got a boolean", code="BAD_NUMBER")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DataError(f"{context}: cannot parse {value!r} as a rational", code="BAD_NUMBER") from exc
    if isinstance(value, dict) and set(value) >= {"num", "den"}:
        num, den = value["num"], value["den"]
        if not isinstance(num, int) or not isinstance(den, int) or den <= 0:
            raise DataError(f"{context}: num/den must be integers with den > 0", code="BAD_NUMBER")
        return Fraction(num, den)
    raise DataError(f"{context}: cannot interpret {value!r} as a rational", code="BAD_NUMBER")


def round_display(value: Fraction) -> Fraction:
    """Round to 3 decimals (ties to even). Presentation only."""
    return Fraction(round(value * DISPLAY_DENOMINATOR), DISPLAY_DENOMINATOR)


def display_str(value: Fraction) -> str:
    """Fixed 3-decimal string, e.g. Fraction(74, 1000) -> "0.074"."""
    scaled = round(value * DISPLAY_DENOMINATOR)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return f"{sign}{scaled // DISPLAY_DENOMINATOR}.{scaled % DISPLAY_DENOMINATOR:03d}"


def display_float(value: Fraction) -> float:
    """Display-rounded value as a float for plot series."""
    return round(value * DISPLAY_DENOMINATOR) / DISPLAY_DENOMINATOR


def rational_to_json(value: Fraction) -> dict:
    """{"num", "den"} plus a convenience 3-decimal string (display only)."""
    return {
        "decimal": display_str(value),
        "den": value.denominator,
        "num": value.numerator,
    }


def rational_from_json(value: Any, *, context: str = "value") -> Fraction:
    return to_fraction(value, context=context)


def canonical_dumps(payload: Any) -> str:
    """The one JSON shape used for files, stdout and HTTP bodies."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False, separators=(",", ": ")) + "\n"


def canonical_bytes(payload: Any) -> bytes:
    return canonical_dumps(payload).encode("utf-8")
