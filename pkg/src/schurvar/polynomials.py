"""The four interpolation polynomials attached to a parameter sequence.

For interior parameters ``gamma = (gamma_0, ..., gamma_n)`` define

    A_0 = conj(gamma_0)   At_0 = 1
    B_0 = 1               Bt_0 = gamma_0

and, for 0 <= k < n,

    A_{k+1}(z)  = z A_k(z)  + conj(gamma_{k+1}) B_k(z)
    At_{k+1}(z) = z At_k(z) + conj(gamma_{k+1}) Bt_k(z)
    B_{k+1}(z)  = gamma_{k+1} z A_k(z)  + B_k(z)
    Bt_{k+1}(z) = gamma_{k+1} z At_k(z) + Bt_k(z).

`At`/`Bt` are coefficient-reversed conjugates of `B`/`A`:

    At_k(z) = z^k conj(B_k(1/conj(z)))      Bt_k(z) = z^k conj(A_k(1/conj(z)))

and the four satisfy, on the closed disk,

    At_k B_k - A_k Bt_k = z^k prod_{l<=k} (1 - |gamma_l|^2)     (determinant)
    |B_k|^2 - |A_k|^2  >= prod_{l<=k} (1 - |gamma_l|^2) > 0     (coercivity)
    |Bt_k(z)| < |B_k(z)|                                        (domination)

so every rational expression below has a denominator bounded away from 0.

The polynomials encode the full solution set of the interpolation problem:
with ``omega_*`` ranging over self-maps of the disk, every interpolant of
the data realized by ``gamma`` is

    omega(z) = (z At(z) omega_*(z) + Bt(z)) / (z A(z) omega_*(z) + B(z)),

and the one-point slice ``{omega(z)}`` is exactly a closed disk whose
center and radius are returned by :func:`variability_disk`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ContractViolation, DegenerateDenominator
from .schur import mobius

__all__ = [
    "Polynomial",
    "SchurPolynomialSet",
    "VariabilityDisk",
    "build_polynomials",
    "eval_poly",
    "omega_nested",
    "omega_rational",
    "schur_lift",
    "variability_disk",
    "identity_residuals",
]

_DENOM_FLOOR = 1e-300


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial, coefficients in ascending degree order."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        return eval_poly(self, z)


def eval_poly(p: Polynomial | Sequence[complex], z):
    """Horner evaluation; ``z`` may be a scalar or a numpy array."""
    coeffs = p.coeffs if isinstance(p, Polynomial) else tuple(p)
    if not coeffs:
        raise ContractViolation("cannot evaluate an empty polynomial")
    acc = np.zeros_like(np.asarray(z, dtype=np.complex128)) + coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    if np.ndim(acc) == 0:
        return complex(acc)
    return acc


@dataclass(frozen=True)
class SchurPolynomialSet:
    """The four polynomials for one parameter sequence, zero-padded to degree n.

    ``b.coeffs[0] == 1`` and ``b_tilde.coeffs[0] == gamma[0]`` exactly, and
    ``a_tilde`` is monic of exact degree n.
    """

    gamma: tuple[complex, ...]
    a: Polynomial
    b: Polynomial
    a_tilde: Polynomial
    b_tilde: Polynomial

    @property
    def order(self) -> int:
        return len(self.gamma) - 1

    @property
    def contraction_product(self) -> float:
        """``prod(1 - |gamma_k|^2)``, the determinant/coercivity constant."""
        return float(np.prod([1.0 - abs(g) ** 2 for g in self.gamma]))


def build_polynomials(gamma: Sequence[complex]) -> SchurPolynomialSet:
    """Run the recurrence for interior parameters (all ``|gamma_k| < 1``)."""
    gams = tuple(complex(g) for g in gamma)
    if not gams:
        raise ContractViolation("parameter sequence must be non-empty")
    for k, g in enumerate(gams):
        if abs(g) >= 1.0:
            raise ContractViolation(
                f"build_polynomials requires |gamma_{k}| < 1, got {abs(g)}"
            )
    n = len(gams) - 1
    a = np.zeros(n + 1, dtype=np.complex128)
    b = np.zeros(n + 1, dtype=np.complex128)
    at = np.zeros(n + 1, dtype=np.complex128)
    bt = np.zeros(n + 1, dtype=np.complex128)
    a[0] = gams[0].conjugate()
    b[0] = 1.0
    at[0] = 1.0
    bt[0] = gams[0]

    def shifted(p: np.ndarray) -> np.ndarray:
        out = np.zeros_like(p)
        out[1:] = p[:-1]
        return out

    for k in range(1, n + 1):
        g = gams[k]
        gbar = g.conjugate()
        za, zat = shifted(a), shifted(at)
        a, at, b, bt = za + gbar * b, zat + gbar * bt, g * za + b, g * zat + bt

    as_poly = lambda arr: Polynomial(tuple(complex(x) for x in arr))
    return SchurPolynomialSet(
        gamma=gams, a=as_poly(a), b=as_poly(b), a_tilde=as_poly(at), b_tilde=as_poly(bt)
    )


def omega_nested(gamma: Sequence[complex], epsilon, z):
    """Interpolant in nested automorphism form.

    Computes ``sigma_{gamma_0}(z sigma_{gamma_1}(... z sigma_{gamma_n}(eps z) ...))``.
    An empty parameter sequence yields ``eps * z`` (no peeling layers); this
    degenerate case is what the unique-interpolant formula for boundary data
    with a unimodular leading coefficient reduces to.  ``z`` may be a scalar
    or a numpy array.
    """
    gams = tuple(complex(g) for g in gamma)
    w = epsilon * z
    for k in range(len(gams) - 1, -1, -1):
        w = mobius(gams[k], w)
        if k > 0:
            w = z * w
    return w


def omega_rational(set_: SchurPolynomialSet, epsilon, z):
    """Interpolant in rational form: ``(eps z At + Bt) / (eps z A + B)``."""
    av = eval_poly(set_.a, z)
    bv = eval_poly(set_.b, z)
    atv = eval_poly(set_.a_tilde, z)
    btv = eval_poly(set_.b_tilde, z)
    ez = epsilon * np.asarray(z, dtype=np.complex128) if np.ndim(z) else epsilon * z
    num = ez * atv + btv
    den = ez * av + bv
    if np.min(np.abs(den)) < _DENOM_FLOOR:
        raise DegenerateDenominator("rational interpolant denominator vanished")
    return num / den


def schur_lift(set_: SchurPolynomialSet, omega_star: Callable, z):
    """Lift a disk self-map ``omega_*`` through the polynomial set.

    Returns ``(z At(z) omega_*(z) + Bt(z)) / (z A(z) omega_*(z) + B(z))``,
    the interpolant whose free parameter is ``omega_*``.
    """
    ws = omega_star(z)
    av = eval_poly(set_.a, z)
    bv = eval_poly(set_.b, z)
    atv = eval_poly(set_.a_tilde, z)
    btv = eval_poly(set_.b_tilde, z)
    zw = z * ws
    num = zw * atv + btv
    den = zw * av + bv
    if np.min(np.abs(den)) < _DENOM_FLOOR:
        raise DegenerateDenominator("lift denominator vanished")
    return num / den


@dataclass(frozen=True)
class VariabilityDisk:
    center: complex
    radius: float


def variability_disk(set_: SchurPolynomialSet, z) -> VariabilityDisk:
    """The exact disk swept by ``omega(z)`` over all interpolants.

    center = (conj(B) Bt - |z|^2 conj(A) At) / (|B|^2 - |z|^2 |A|^2)
    radius = |z|^{n+1} prod(1 - |gamma_k|^2) / (|B|^2 - |z|^2 |A|^2)

    The denominator is positive on the open disk by coercivity, so the
    formula never degenerates.  For ``|eps| = 1`` the rational interpolant
    lands exactly on the boundary circle; for ``|eps| < 1`` it is at
    distance ``|eps| * radius`` from the center, hence strictly inside.
    """
    zc = complex(z)
    if abs(zc) >= 1.0:
        raise ContractViolation("variability_disk requires |z| < 1")
    av = eval_poly(set_.a, zc)
    bv = eval_poly(set_.b, zc)
    atv = eval_poly(set_.a_tilde, zc)
    btv = eval_poly(set_.b_tilde, zc)
    zsq = abs(zc) ** 2
    den = abs(bv) ** 2 - zsq * abs(av) ** 2
    center = (bv.conjugate() * btv - zsq * av.conjugate() * atv) / den
    radius = abs(zc) ** (set_.order + 1) * set_.contraction_product / den
    return VariabilityDisk(center=complex(center), radius=float(radius))


def _polar_grid(radii: Sequence[float], n_angles: int) -> np.ndarray:
    angles = 2.0 * np.pi * np.arange(n_angles) / n_angles
    ring = np.exp(1j * angles)
    return np.concatenate([r * ring for r in radii])


def identity_residuals(
    gamma: Sequence[complex],
    radii: Sequence[float] = (0.3, 0.7, 1.0),
    n_angles: int = 64,
) -> dict[str, float]:
    """Worst-case violations of the four polynomial laws on a polar grid.

    Returns absolute mismatches for the two identities ("mirror",
    "determinant") and constraint violations, clipped at zero, for the two
    inequalities ("coercivity", "domination").  A clean implementation
    reports values at rounding level for all four.
    """
    set_ = build_polynomials(gamma)
    n = set_.order
    z = _polar_grid(radii, n_angles)
    av = eval_poly(set_.a, z)
    bv = eval_poly(set_.b, z)
    atv = eval_poly(set_.a_tilde, z)
    btv = eval_poly(set_.b_tilde, z)

    zinv = 1.0 / np.conjugate(z)
    zn = z**n
    mirror = max(
        float(np.max(np.abs(atv - zn * np.conjugate(eval_poly(set_.b, zinv))))),
        float(np.max(np.abs(btv - zn * np.conjugate(eval_poly(set_.a, zinv))))),
    )
    prod = set_.contraction_product
    determinant = float(np.max(np.abs(atv * bv - av * btv - zn * prod)))
    coercivity = float(max(0.0, np.max(prod - (np.abs(bv) ** 2 - np.abs(av) ** 2))))
    domination = float(max(0.0, np.max(np.abs(btv) - np.abs(bv))))
    return {
        "mirror": mirror,
        "determinant": determinant,
        "coercivity": coercivity,
        "domination": domination,
    }
