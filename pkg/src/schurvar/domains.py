"""Built-in convex image domains, each given by its disk uniformization.

A :class:`DomainMap` packages a conformal bijection ``P`` from the open
unit disk onto a convex domain together with its derivative and inverse.
All three callables accept a complex scalar or a numpy array and return
the matching shape (scalars come back as ``complex``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ContractViolation, DegenerateDenominator

__all__ = ["DomainMap", "half_plane", "disk", "strip", "parse_domain"]

_DENOM_FLOOR = 1e-300


@dataclass(frozen=True)
class DomainMap:
    """A labelled conformal map of the unit disk onto a convex domain."""

    label: str
    map: Callable
    derivative: Callable
    inverse: Callable


def _vectorized(fn: Callable) -> Callable:
    def call(z):
        arr = np.asarray(z, dtype=np.complex128)
        out = fn(arr)
        if arr.ndim == 0:
            return complex(out)
        return out

    return call


def _check_denominator(values: np.ndarray, what: str) -> None:
    if np.min(np.abs(values)) < _DENOM_FLOOR:
        raise DegenerateDenominator(what)


def half_plane() -> DomainMap:
    """Right half-plane: ``P(z) = (1 + z) / (1 - z)``, ``P(0) = 1``."""

    def fwd(z):
        den = 1.0 - z
        _check_denominator(den, "half-plane map at z = 1")
        return (1.0 + z) / den

    def deriv(z):
        den = (1.0 - z) ** 2
        _check_denominator(den, "half-plane derivative at z = 1")
        return 2.0 / den

    def inv(w):
        den = w + 1.0
        _check_denominator(den, "half-plane inverse at w = -1")
        return (w - 1.0) / den

    return DomainMap(
        label="half-plane",
        map=_vectorized(fwd),
        derivative=_vectorized(deriv),
        inverse=_vectorized(inv),
    )


def disk(center: complex = 0.0, radius: float = 1.0) -> DomainMap:
    """Affine disk target: ``P(z) = center + radius * z``."""
    c = complex(center)
    r = float(radius)
    if not (r > 0.0):
        raise ContractViolation("disk radius must be positive")
    label = f"disk:{c.real:g},{c.imag:g},{r:g}"
    return DomainMap(
        label=label,
        map=_vectorized(lambda z: c + r * z),
        derivative=_vectorized(lambda z: np.full_like(z, r)),
        inverse=_vectorized(lambda w: (w - c) / r),
    )


def strip() -> DomainMap:
    """Horizontal strip ``|Im w| < pi/2``: ``P(z) = log((1 + z)/(1 - z))``.

    The ratio has positive real part on the disk, so the principal branch
    is the right one; the inverse is ``tanh(w / 2)``.
    """

    def fwd(z):
        den = 1.0 - z
        _check_denominator(den, "strip map at z = 1")
        return np.log((1.0 + z) / den)

    def deriv(z):
        den = 1.0 - z * z
        _check_denominator(den, "strip derivative at z = +/-1")
        return 2.0 / den

    def inv(w):
        return np.tanh(w / 2.0)

    return DomainMap(
        label="strip",
        map=_vectorized(fwd),
        derivative=_vectorized(deriv),
        inverse=_vectorized(inv),
    )


def parse_domain(label: str) -> DomainMap:
    """Build a domain from its label: ``half-plane``, ``strip``, ``disk:re,im,r``."""
    text = label.strip()
    if text == "half-plane":
        return half_plane()
    if text == "strip":
        return strip()
    if text.startswith("disk:"):
        parts = text[len("disk:") :].split(",")
        if len(parts) != 3:
            raise ValueError(f"disk label needs three fields, got {label!r}")
        try:
            re, im, r = (float(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"malformed disk label {label!r}") from exc
        return disk(complex(re, im), r)
    raise ValueError(f"unknown domain label {label!r}")
