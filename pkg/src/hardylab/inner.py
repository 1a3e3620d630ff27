"""Finite Blaschke products with atomic singular factors, and desk-scale
divisibility tests against them.

An inner function here is ``const * B * S`` with ``|const| = 1``, B a finite
Blaschke product given by its zeros with multiplicity, and S an atomic
singular factor ``exp(-sum_k c_k (w_k + z)/(w_k - z))`` supported on finitely
many boundary directions ``w_k = exp(i theta_k)`` with masses ``c_k > 0``.

Blaschke divisibility of a polynomial is decidable (zero multiplicities);
division by a singular factor is probed only by a radial growth heuristic
and is labeled as such everywhere it is reported.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .norms import boundary_scale
from .series import derivative, evaluate

__all__ = [
    "InnerFunction",
    "eval_inner",
    "log_abs_inner",
    "boundary_unimodularity_defect",
    "zero_residuals",
    "blaschke_divisibility",
    "singular_division_heuristic",
    "inner_to_dict",
    "inner_from_dict",
]

_TWO_PI = 2.0 * math.pi
_ATOM_EXCLUSION = 1e-3


@dataclass(frozen=True)
class InnerFunction:
    """``const * Blaschke(zeros) * atomic_singular(atoms)``.

    ``zeros`` holds ``(a, multiplicity)`` pairs with |a| < 1, ``atoms``
    holds ``(theta, mass)`` pairs with mass > 0 (theta is reduced mod 2pi).
    The defaults give the constant inner function 1.
    """

    zeros: tuple = ()
    const: complex = 1.0 + 0j
    atoms: tuple = ()

    def __post_init__(self):
        zs = tuple((complex(a), int(m)) for a, m in self.zeros)
        for a, m in zs:
            if abs(a) >= 1:
                raise ValueError(f"Blaschke zeros must lie inside the disk, got {a}")
            if m < 1:
                raise ValueError(f"zero multiplicity must be >= 1, got {m}")
        object.__setattr__(self, "zeros", zs)
        c = complex(self.const)
        if abs(abs(c) - 1.0) > 1e-12:
            raise ValueError(f"leading constant must be unimodular, got |c| = {abs(c)}")
        object.__setattr__(self, "const", c)
        ats = tuple((float(t) % _TWO_PI, float(mass)) for t, mass in self.atoms)
        for _, mass in ats:
            if mass <= 0:
                raise ValueError(f"atom mass must be positive, got {mass}")
        object.__setattr__(self, "atoms", ats)

    @property
    def has_atoms(self):
        return bool(self.atoms)

    def __call__(self, z):
        return eval_inner(self, z)


def _blaschke_factor(a, z):
    # the a = 0 factor is the plain coordinate by convention
    if a == 0:
        return z
    return (abs(a) / a) * (a - z) / (1.0 - a.conjugate() * z)


def eval_inner(G, z):
    """Evaluate G at z with |z| <= 1; atoms themselves are rejected."""
    z = complex(z)
    if abs(z) > 1 + 1e-12:
        raise ValueError(f"evaluation needs |z| <= 1, got |z| = {abs(z)}")
    for theta, _ in G.atoms:
        if abs(z - cmath.exp(1j * theta)) < 1e-12:
            raise ValueError("evaluation at a singular atom is undefined")
    val = G.const
    for a, m in G.zeros:
        val *= _blaschke_factor(a, z) ** m
    if G.atoms:
        expo = 0j
        for theta, mass in G.atoms:
            w = cmath.exp(1j * theta)
            expo -= mass * (w + z) / (w - z)
        val *= cmath.exp(expo)
    return val


def log_abs_inner(G, z):
    """``log |G(z)|`` computed in the log domain.

    Near an atom the modulus underflows double precision long before the
    geometry gets interesting, so radial growth probes must work with this
    instead of :func:`eval_inner`.
    """
    z = complex(z)
    total = math.log(abs(G.const))
    for a, m in G.zeros:
        mag = abs(_blaschke_factor(a, z))
        total += m * (math.log(mag) if mag > 0 else -math.inf)
    for theta, mass in G.atoms:
        w = cmath.exp(1j * theta)
        total -= mass * ((w + z) / (w - z)).real
    return total


def _angle_gap(a, b):
    return abs((a - b + math.pi) % _TWO_PI - math.pi)


def boundary_unimodularity_defect(G, num_samples=4096):
    """Max deviation of |G| from 1 over uniform boundary samples.

    Samples closer than 1e-3 radians to a singular atom are excluded; the
    modulus is not continuous there.
    """
    if num_samples < 16:
        raise ValueError(f"need at least 16 samples, got {num_samples}")
    worst = 0.0
    for j in range(int(num_samples)):
        theta = _TWO_PI * j / int(num_samples)
        if any(_angle_gap(theta, tk) < _ATOM_EXCLUSION for tk, _ in G.atoms):
            continue
        worst = max(worst, abs(abs(eval_inner(G, cmath.exp(1j * theta))) - 1.0))
    return worst


def zero_residuals(f, G):
    """``(a, i, |f^(i)(a)|)`` for every Blaschke zero a and order i below
    its multiplicity."""
    out = []
    for a, m in G.zeros:
        d = f
        for i in range(m):
            out.append((a, i, abs(complex(evaluate(d, a)))))
            d = derivative(d, 1)
    return out


def blaschke_divisibility(f, G, tol=1e-9):
    """Whether f vanishes at every Blaschke zero of G to its multiplicity.

    For polynomials this is exactly divisibility by the Blaschke part.
    Residuals are compared against ``tol`` times the boundary max of |f|,
    so the verdict is invariant under rescaling f.  The zero series is
    rejected (every divisibility question about it is vacuous).
    """
    if G.has_atoms:
        raise ValueError(
            "Blaschke divisibility is undefined with singular atoms present; "
            "use singular_division_heuristic for those"
        )
    if f.is_zero:
        raise ValueError("divisibility of the zero series is undefined")
    cap = tol * boundary_scale(f)
    return all(res <= cap for _, _, res in zero_residuals(f, G))


def singular_division_heuristic(
    f,
    G,
    radii=(0.9, 0.99, 0.999),
    blow_up=1e3,
    bounded_factor=10.0,
):
    """Radial growth probe for division by the singular factor; a heuristic,
    never a proof, and labeled as such wherever the verdict is reported.

    Along each atom direction the log-ratio ``log|f| - log|G|`` is tracked
    on the radius grid.  Monotone growth by more than ``log(blow_up)``
    reads as ``"not-divisible"``; staying within ``log(bounded_factor)``
    on every atom reads as ``"divisible"``; anything else is
    ``"inconclusive"``.
    """
    if not G.has_atoms:
        raise ValueError("the heuristic needs at least one singular atom")
    if f.is_zero:
        raise ValueError("the zero series is rejected")
    rad = sorted(float(r) for r in radii)
    if len(rad) < 2 or not all(0 < r < 1 for r in rad):
        raise ValueError("need at least two probe radii inside (0, 1)")
    verdicts = []
    for theta, _ in G.atoms:
        ray = cmath.exp(1j * theta)
        log_ratio = []
        for r in rad:
            z = r * ray
            fv = abs(complex(evaluate(f, z)))
            # floor keeps an exact polynomial zero from poisoning the log
            log_ratio.append(math.log(max(fv, 1e-300)) - log_abs_inner(G, z))
        growth = log_ratio[-1] - log_ratio[0]
        monotone = all(b >= a - 1e-9 for a, b in zip(log_ratio, log_ratio[1:]))
        if monotone and growth > math.log(blow_up):
            verdicts.append("not-divisible")
        elif growth <= math.log(bounded_factor):
            verdicts.append("divisible")
        else:
            verdicts.append("inconclusive")
    if "not-divisible" in verdicts:
        return "not-divisible"
    if all(v == "divisible" for v in verdicts):
        return "divisible"
    return "inconclusive"


def inner_to_dict(G):
    """JSON-ready form with zeros as [re, im, mult] and atoms as [theta, mass]."""
    return {
        "zeros": [[a.real, a.imag, m] for a, m in G.zeros],
        "const": [G.const.real, G.const.imag],
        "atoms": [[t, m] for t, m in G.atoms],
    }


def inner_from_dict(data):
    """Inverse of :func:`inner_to_dict`; malformed input raises ValueError."""
    if not isinstance(data, dict):
        raise ValueError("inner-function object must be a JSON object")
    try:
        zeros = tuple(
            (complex(float(e[0]), float(e[1])), int(e[2]))
            for e in data.get("zeros", [])
        )
        cpair = data.get("const", [1.0, 0.0])
        const = complex(float(cpair[0]), float(cpair[1]))
        atoms = tuple((float(e[0]), float(e[1])) for e in data.get("atoms", []))
    except (TypeError, ValueError, IndexError) as exc:
        raise ValueError(f"malformed inner-function object: {exc}") from exc
    return InnerFunction(zeros=zeros, const=const, atoms=atoms)
