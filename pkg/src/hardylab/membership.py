"""Invariant-subspace membership for truncated series.

A subspace spec bundles nested finite boundary sets K_0 ⊇ ... ⊇ K_{n-1} on
the unit circle, an inner divisor, the ambient space parameters (n, p), and
an optional zero-initial-data flag.  Membership of a polynomial means: its
j-th derivative vanishes on K_j for every j < n, the inner function divides
it (decided exactly for the Blaschke part, heuristically for atoms), and in
zero mode the first n Taylor coefficients vanish.  All vanishing thresholds
are relative to the boundary scale of the derivative being tested, so
verdicts are invariant under rescaling the function.

Every verdict is about the truncated coefficient data as given, never about
an idealised infinite expansion.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .inner import (
    InnerFunction,
    inner_from_dict,
    inner_to_dict,
    singular_division_heuristic,
    zero_residuals,
)
from .norms import SpaceParams, boundary_scale
from .operators import nth_antiderivative, nth_derivative, shift, shift_plus_volterra
from .report import ClaimResult, VerificationReport
from .series import TaylorSeries, add, derivative, evaluate, monomial, multiply

__all__ = [
    "SubspaceSpec",
    "ConditionResult",
    "MembershipResult",
    "validate_spec",
    "ensure_valid",
    "membership",
    "sample_element",
    "sampled_members",
    "log_distance_integral",
    "shift_invariance_check",
    "combined_invariance_check",
    "spec_to_dict",
    "spec_from_dict",
]

_POINT_EPS = 1e-9
_CIRCLE_EPS = 1e-12


@dataclass(frozen=True)
class SubspaceSpec:
    """Membership structure: boundary sets, inner divisor, ambient space.

    ``boundary_sets`` is an ordered tuple (K_0, ..., K_{n-1}) of tuples of
    boundary points; ordering is fixed so that downstream reports are
    deterministic.  Construction only enforces shape; the structural
    properties are checked by :func:`validate_spec` and reported, not
    raised.
    """

    boundary_sets: tuple
    inner: InnerFunction
    space: SpaceParams
    zero_mode: bool = False

    def __post_init__(self):
        sets = tuple(tuple(complex(z) for z in ks) for ks in self.boundary_sets)
        object.__setattr__(self, "boundary_sets", sets)
        if self.space.n < 1:
            raise ValueError("a subspace spec needs derivative depth n >= 1")
        if len(sets) != self.space.n:
            raise ValueError(
                f"expected n = {self.space.n} boundary sets, got {len(sets)}"
            )

    @property
    def n(self):
        return self.space.n


def _contains(points, z, eps=_POINT_EPS):
    return any(abs(z - w) <= eps for w in points)


def _fmt_point(z):
    return format(complex(z), "g")


def validate_spec(spec):
    """Check the structural properties of a spec; failures are report
    entries, not exceptions.

    The isolation and zero-clustering constraints of the general theory are
    automatic for the finite sets handled here, and the report says so
    rather than claiming generality.
    """
    report = VerificationReport()
    n = spec.n

    ok, witness = True, None
    for j in range(n - 1):
        for z in spec.boundary_sets[j + 1]:
            if not _contains(spec.boundary_sets[j], z):
                ok = False
                witness = f"K_{j + 1} point {_fmt_point(z)} missing from K_{j}"
                break
        if not ok:
            break
    report.add("properties.nesting", ok, 0.0, f"n={n} eps={_POINT_EPS}", witness)

    report.add(
        "properties.gap-isolated", True, 0.0,
        "finite boundary sets: isolation is automatic, generality not claimed",
    )
    report.add(
        "properties.zero-clustering", True, 0.0,
        "finite Blaschke zero set: clustering constraint is vacuous",
    )

    ok, witness, worst = True, None, 0.0
    for theta, _ in spec.inner.atoms:
        w = cmath.exp(1j * theta)
        dist = min((abs(w - z) for z in spec.boundary_sets[n - 1]), default=math.inf)
        worst = max(worst, dist)
        if dist > _POINT_EPS:
            ok = False
            witness = f"atom direction exp({theta}j) not in K_{n - 1}"
    report.add(
        "properties.atom-support", ok, _POINT_EPS - worst,
        f"atoms={len(spec.inner.atoms)} eps={_POINT_EPS}", witness,
    )

    dev, witness = 0.0, None
    for j, ks in enumerate(spec.boundary_sets):
        for z in ks:
            d = abs(abs(z) - 1.0)
            if d > dev:
                dev = d
                witness = f"K_{j} point {_fmt_point(z)} off the unit circle by {d}"
    ok = dev <= _CIRCLE_EPS
    report.add(
        "properties.unit-modulus", ok, _CIRCLE_EPS - dev,
        f"eps={_CIRCLE_EPS}", None if ok else witness,
    )
    return report


def ensure_valid(spec):
    """Raise ValueError when :func:`validate_spec` reports any failure."""
    rep = validate_spec(spec)
    if not rep.passed:
        reasons = "; ".join(c.witness or c.claim for c in rep.failures)
        raise ValueError(f"invalid subspace spec: {reasons}")
    return spec


@dataclass(frozen=True)
class ConditionResult:
    """One membership condition with its measured residual and threshold."""

    condition: str
    passed: bool
    residual: float
    threshold: float
    note: str = ""


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    conditions: tuple
    truncation_order: int

    def __bool__(self):
        return self.member


def membership(f, spec, tol=1e-9):
    """Decide membership of f in the subspace, one condition at a time.

    Residual thresholds are ``tol`` times the boundary scale of the
    derivative under test (the function itself for the inner-divisor
    conditions), so the verdict does not change when f is rescaled.  The
    zero series is a member of every subspace and short-circuits.
    """
    ensure_valid(spec)
    if f.is_zero:
        cond = ConditionResult(
            "zero-function", True, 0.0, 0.0,
            "the zero series belongs to every subspace",
        )
        return MembershipResult(True, (cond,), f.order)

    derivs = [f]
    for _ in range(spec.n - 1):
        derivs.append(derivative(derivs[-1], 1))
    scales = [boundary_scale(d) for d in derivs]

    conditions = []
    for j, ks in enumerate(spec.boundary_sets):
        for z in ks:
            residual = abs(complex(evaluate(derivs[j], z)))
            cap = tol * scales[j]
            conditions.append(
                ConditionResult(
                    f"derivative-{j}-vanishes-at-{_fmt_point(z)}",
                    residual <= cap, residual, cap,
                )
            )

    cap0 = tol * scales[0]
    for a, i, residual in zero_residuals(f, spec.inner):
        conditions.append(
            ConditionResult(
                f"blaschke-zero-{_fmt_point(a)}-order-{i}",
                residual <= cap0, residual, cap0,
            )
        )
    if spec.inner.has_atoms:
        verdict = singular_division_heuristic(f, spec.inner)
        conditions.append(
            ConditionResult(
                "singular-factor-division", verdict != "not-divisible", 0.0, 0.0,
                f"heuristic verdict: {verdict} (radial growth probe, not a proof)",
            )
        )

    if spec.zero_mode:
        for m in range(spec.n):
            residual = abs(complex(evaluate(derivs[m], 0)))
            cap = tol * scales[m]
            conditions.append(
                ConditionResult(
                    f"vanishing-at-0-order-{m}", residual <= cap, residual, cap,
                )
            )

    member = all(c.passed for c in conditions)
    return MembershipResult(member, tuple(conditions), f.order)


def sample_element(spec, h, tol=1e-9):
    """Constructive member: the Blaschke numerator, boundary-set factors to
    their nesting depth, the z^n head when zero mode is on, all times h.

    The result is self-checked through :func:`membership`; a failure there
    is an implementation bug and raises RuntimeError.  Specs with singular
    atoms cannot be sampled by polynomials and are rejected.
    """
    ensure_valid(spec)
    if spec.inner.has_atoms:
        raise ValueError(
            "no polynomial is divisible by a singular inner factor; "
            "drop the atoms to sample"
        )
    if h.is_zero:
        return TaylorSeries([0j])
    out = TaylorSeries([1.0 + 0j])
    for a, m in spec.inner.zeros:
        for _ in range(m):
            out = multiply(out, TaylorSeries([-a, 1.0]))
    for z in spec.boundary_sets[0]:
        depth = 1 + max(
            j for j in range(spec.n) if _contains(spec.boundary_sets[j], z)
        )
        for _ in range(depth):
            out = multiply(out, TaylorSeries([-z, 1.0]))
    if spec.zero_mode:
        out = multiply(out, monomial(spec.n, 1.0))
    out = multiply(out, h)
    result = membership(out, spec, tol)
    if not result.member:
        failing = [c.condition for c in result.conditions if not c.passed]
        raise RuntimeError(
            f"constructed sample failed its own membership check ({failing}); "
            "this is a bug"
        )
    return out


def _random_polynomial(rng, max_degree):
    deg = int(rng.integers(0, max_degree + 1))
    c = rng.uniform(-1, 1, deg + 1) + 1j * rng.uniform(-1, 1, deg + 1)
    return TaylorSeries(c)


def sampled_members(spec, count, seed=0, tol=1e-9, max_degree=8):
    """Deterministic batch of constructed members; the shared sample pool
    for the invariance harnesses and the scale-invariance checks."""
    rng = np.random.default_rng([int(seed), 77])
    return [
        sample_element(spec, _random_polynomial(rng, max_degree), tol)
        for _ in range(int(count))
    ]


def log_distance_integral(spec, num_points=4096):
    """Boundary integral of ``log dist(z, K_0 ∪ Blaschke zeros)`` by the
    midpoint trapezoid rule; +inf when that union is empty.

    Nodes sit at midpoint-shifted angles so a boundary set point never
    lands on a node (a node on the set would force the integrand to -inf).
    The integrand's log singularities are integrable, so the estimate
    converges as the node count grows, at first order rather than
    spectrally.
    """
    pts = list(spec.boundary_sets[0]) + [a for a, _ in spec.inner.zeros]
    if not pts:
        return math.inf
    pts = np.asarray(pts, dtype=complex)
    m = int(num_points)
    theta = (np.arange(m) + 0.5) * (2.0 * math.pi / m)
    nodes = np.exp(1j * theta)
    dist = np.min(np.abs(nodes[:, None] - pts[None, :]), axis=1)
    return float(np.sum(np.log(dist)) * (2.0 * math.pi / m))


def _coeff_repr(f, head=4):
    parts = [repr(complex(c)) for c in f.coeffs[:head]]
    if f.order + 1 > head:
        parts.append(f"...<order {f.order}>")
    return "[" + ", ".join(parts) + "]"


def _perturbed(f):
    """Adversarial mutation: add a constant big enough to break vanishing."""
    bump = 1e-3 * max(boundary_scale(f), 1.0)
    return add(f, TaylorSeries([bump + 0j]))


def _membership_margin(result):
    return min(
        (c.threshold - c.residual for c in result.conditions),
        default=0.0,
    )


def shift_invariance_check(
    spec,
    samples=100,
    tol=1e-9,
    seed=0,
    negative_control=False,
    claim="shift-invariance",
):
    """Sampled check that members stay members under multiplication by the
    coordinate.

    With ``negative_control`` every sample is mutated by a constant bump
    before testing; the resulting claim is expected to fail, and the report
    records that failure with its witness.
    """
    report = VerificationReport()
    members = sampled_members(spec, samples, seed, tol)
    ok, worst, witness = True, math.inf, None
    for idx, f in enumerate(members):
        probe = _perturbed(f) if negative_control else f
        for stage, g in (("element", probe), ("shifted", shift(probe))):
            res = membership(g, spec, tol)
            worst = min(worst, _membership_margin(res))
            if not res.member and witness is None:
                ok = False
                failing = [c.condition for c in res.conditions if not c.passed]
                witness = (
                    f"sample={idx} stage={stage} failing={failing} "
                    f"coeffs={_coeff_repr(f)}"
                )
            elif not res.member:
                ok = False
    config = (
        f"samples={samples} tol={tol} seed={seed} "
        f"negative-control={'on' if negative_control else 'off'}"
    )
    report.add(claim, ok, worst, config, witness)
    return report


def combined_invariance_check(
    spec,
    samples=100,
    tol=1e-9,
    seed=0,
    negative_control=False,
    claim="combined-invariance",
):
    """Pull each sampled member down by n derivatives, apply the combined
    shift-plus-n-Volterra operator, lift back up, and re-test membership.

    Requires zero mode: the lift only inverts the derivative on series with
    zero initial data.  ``negative_control`` applies the operator with the
    wrong multiple n+1, which must surface as membership failures.
    """
    if not spec.zero_mode:
        raise ValueError(
            "the pullback harness needs the zero-initial-data subspace "
            "(zero_mode=True)"
        )
    report = VerificationReport()
    members = sampled_members(spec, samples, seed, tol)
    multiple = spec.n + (1 if negative_control else 0)
    ok, worst, witness = True, math.inf, None
    for idx, f in enumerate(members):
        downstairs = nth_derivative(f, spec.n)
        pulled = nth_antiderivative(shift_plus_volterra(downstairs, multiple), spec.n)
        res = membership(pulled, spec, tol)
        worst = min(worst, _membership_margin(res))
        if not res.member:
            ok = False
            if witness is None:
                failing = [c.condition for c in res.conditions if not c.passed]
                witness = (
                    f"sample={idx} multiple={multiple} failing={failing} "
                    f"coeffs={_coeff_repr(f)}"
                )
    config = (
        f"samples={samples} tol={tol} seed={seed} multiple={multiple} "
        f"negative-control={'on' if negative_control else 'off'}"
    )
    report.add(claim, ok, worst, config, witness)
    return report


def spec_to_dict(spec):
    """JSON-ready form of a subspace spec."""
    return {
        "n": spec.n,
        "p": spec.space.p,
        "zero_mode": spec.zero_mode,
        "K": [[[z.real, z.imag] for z in ks] for ks in spec.boundary_sets],
        "inner": inner_to_dict(spec.inner),
    }


def spec_from_dict(data):
    """Inverse of :func:`spec_to_dict`; malformed input raises ValueError."""
    if not isinstance(data, dict):
        raise ValueError("subspace spec must be a JSON object")
    try:
        n = int(data["n"])
        p = float(data["p"])
        zero_mode = bool(data["zero_mode"])
        ksets = tuple(
            tuple(complex(float(e[0]), float(e[1])) for e in ks) for ks in data["K"]
        )
        inner = inner_from_dict(data["inner"])
    except (TypeError, KeyError, ValueError, IndexError) as exc:
        raise ValueError(f"malformed subspace spec: {exc}") from exc
    return SubspaceSpec(ksets, inner, SpaceParams(n, p), zero_mode)
