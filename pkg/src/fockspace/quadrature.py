"""Deterministic quadrature engines and the seeded Monte Carlo integrator.

Gauss-Legendre and Gauss-Hermite rules come from numpy, generalized
Gauss-Laguerre from scipy; this module wraps them behind a small immutable
rule type, adds the product rules used for angular and 3-sphere integrals,
the radial Hankel transform that serves as the independent Fourier oracle,
and a Welford-accumulated Gaussian Monte Carlo estimator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.hermite import hermgauss
from numpy.polynomial.legendre import leggauss
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln

from . import specfun

__all__ = [
    "QuadratureRule",
    "gauss_legendre",
    "gauss_laguerre",
    "gauss_hermite",
    "chebyshev_second",
    "angular_rule",
    "s3_rule",
    "radial_hankel",
    "mc_gaussian",
]


@dataclass(frozen=True)
class QuadratureRule:
    """Immutable 1-D nodes/weights with the measure they integrate against.

    ``kind`` is one of "legendre", "laguerre", "hermite", "chebyshev2";
    ``alpha`` is the Laguerre superscript (weight t^alpha e^-t), unused
    otherwise.  ``measure`` is the total weight of the domain, used as a
    construction-time sanity check.
    """

    kind: str
    nodes: np.ndarray
    weights: np.ndarray
    alpha: float = 0.0
    measure: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "nodes", np.asarray(self.nodes, dtype=float))
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=float))
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)
        if not (np.all(np.isfinite(self.nodes)) and np.all(np.isfinite(self.weights))):
            raise ValueError("quadrature rule has non-finite nodes or weights")
        if np.any(np.diff(self.nodes) <= 0.0):
            raise ValueError("quadrature nodes must be strictly increasing")
        total = float(np.sum(self.weights))
        if self.measure and abs(total - self.measure) > 1e-12 * max(1.0, abs(self.measure)):
            raise ValueError(
                f"weights sum to {total!r}, expected measure {self.measure!r}"
            )

    def integrate(self, f) -> float:
        return float(np.sum(self.weights * f(self.nodes)))


def gauss_legendre(npts: int) -> QuadratureRule:
    """Gauss-Legendre rule on [-1, 1], exact through degree 2*npts - 1."""
    if not 2 <= npts <= 4096:
        raise ValueError(f"node count must be in [2, 4096], got {npts}")
    x, w = leggauss(npts)
    return QuadratureRule("legendre", x, w, measure=2.0)


def gauss_laguerre(npts: int, a: float = 0.0) -> QuadratureRule:
    """Generalized Gauss-Laguerre rule for the weight t^a e^-t on (0, inf).

    Built by Golub-Welsch (symmetric tridiagonal Jacobi eigenproblem), which
    stays finite for any node count, unlike recurrence-evaluated weights.
    """
    if not 2 <= npts <= 4096:
        raise ValueError(f"node count must be in [2, 4096], got {npts}")
    if a <= -1.0:
        raise ValueError(f"Laguerre exponent must exceed -1, got {a}")
    k = np.arange(npts, dtype=float)
    diag = 2.0 * k + a + 1.0
    off = np.sqrt(k[1:] * (k[1:] + a))
    nodes = eigh_tridiagonal(diag, off, eigvals_only=True)
    # weights from the Christoffel-Darboux kernel of the orthonormal
    # polynomials: w_i = 1 / sum_k q_k(x_i)^2.  Extreme nodes grow huge
    # kernel terms (their true weights underflow), so rescale per node and
    # carry the log of the scale.
    mass = math.exp(gammaln(a + 1.0))
    q_prev = np.zeros_like(nodes)
    q_cur = np.full_like(nodes, 1.0 / math.sqrt(mass))
    kernel = q_cur ** 2
    log_scale = np.zeros_like(nodes)
    for i in range(npts - 1):
        b_next = math.sqrt((i + 1.0) * (i + 1.0 + a))
        b_cur = math.sqrt(i * (i + a)) if i > 0 else 0.0
        q_prev, q_cur = q_cur, ((nodes - diag[i]) * q_cur - b_cur * q_prev) / b_next
        kernel += q_cur ** 2
        big = np.abs(q_cur) > 1e100
        if np.any(big):
            q_cur[big] *= 1e-100
            q_prev[big] *= 1e-100
            kernel[big] *= 1e-200
            log_scale[big] -= 100.0 * math.log(10.0)
    weights = np.exp(2.0 * log_scale) / kernel
    return QuadratureRule("laguerre", nodes, weights, alpha=a, measure=mass)


def gauss_hermite(npts: int) -> QuadratureRule:
    """Gauss-Hermite rule for the weight e^{-t^2} on the real line."""
    if not 2 <= npts <= 4096:
        raise ValueError(f"node count must be in [2, 4096], got {npts}")
    x, w = hermgauss(npts)
    return QuadratureRule("hermite", x, w, measure=math.sqrt(math.pi))


def chebyshev_second(npts: int) -> QuadratureRule:
    """Gauss-Chebyshev rule of the second kind: weight sqrt(1-t^2) on [-1, 1].

    Closed-form nodes/weights; this is the natural chi-rule on the 3-sphere
    where the measure is sin^2(chi) d(chi).
    """
    if not 2 <= npts <= 4096:
        raise ValueError(f"node count must be in [2, 4096], got {npts}")
    k = np.arange(1, npts + 1, dtype=float)
    ang = k * math.pi / (npts + 1)
    nodes = np.cos(ang)[::-1]
    weights = (math.pi / (npts + 1)) * np.sin(ang) ** 2
    return QuadratureRule("chebyshev2", nodes, weights[::-1], measure=math.pi / 2.0)


@dataclass(frozen=True)
class ProductAngularRule:
    """Product grid over the 2-sphere: Gauss-Legendre in cos(theta), uniform phi."""

    theta: np.ndarray
    theta_weights: np.ndarray
    phi: np.ndarray
    phi_weight: float

    @property
    def total_weight(self) -> float:
        return float(np.sum(self.theta_weights)) * self.phi_weight * len(self.phi)


def angular_rule(n_theta: int = 32, n_phi: int = 33) -> ProductAngularRule:
    """Quadrature over the unit sphere with total weight 4*pi."""
    gl = gauss_legendre(n_theta)
    theta = np.arccos(gl.nodes[::-1])
    phi = 2.0 * math.pi * np.arange(n_phi) / n_phi
    return ProductAngularRule(theta, gl.weights[::-1], phi, 2.0 * math.pi / n_phi)


@dataclass(frozen=True)
class S3Rule:
    """Product grid over the 3-sphere (chi, theta, phi), total weight 2*pi^2."""

    chi: np.ndarray
    chi_weights: np.ndarray
    sphere: ProductAngularRule


def s3_rule(n_chi: int = 32, n_theta: int = 32, n_phi: int = 33) -> S3Rule:
    cheb = chebyshev_second(n_chi)
    chi = np.arccos(cheb.nodes[::-1])
    return S3Rule(chi, cheb.weights[::-1], angular_rule(n_theta, n_phi))


def radial_hankel(n: int, l: int, p, npts: int = 300):
    """l-wave radial Fourier transform of the hydrogen bound state (n, l).

    Returns (-i)^l sqrt(2/pi) * integral of R_nl(r) j_l(p r) r^2 dr, computed
    with a generalized Gauss-Laguerre rule matched to the bound state's
    exponential decay: substituting r = n*t makes the integrand exactly
    t^(l+2) e^-t times a polynomial times j_l, so the rule with weight
    t^(l+2) e^-t integrates the smooth remainder.
    """
    from . import hydrogen  # local import; hydrogen depends on this module too

    specfun.QuantumNumbers(n, l, 0)  # validates (n, l)
    p = np.asarray(p, dtype=float)
    if np.any(p < 0):
        raise ValueError("momentum magnitude must be nonnegative")
    rule = gauss_laguerre(npts, float(l + 2))
    t = rule.nodes
    # R_nl(n t) = N_nl (2t)^l e^-t L_(n-l-1)^(2l+1)(2t); the e^-t and t^l go
    # into the rule's weight, leaving the polynomial part evaluated here.
    poly = hydrogen.normalization(n, l) * 2.0 ** l * specfun.laguerre(
        n - l - 1, 2 * l + 1, 2.0 * t
    )
    pt = np.multiply.outer(p, float(n) * t)
    jl = specfun.spherical_bessel(l, pt)
    integral = np.sum(rule.weights * poly * jl, axis=-1)
    vals = (-1j) ** l * math.sqrt(2.0 / math.pi) * float(n) ** 3 * integral
    return vals if np.ndim(vals) else complex(vals)


def mc_gaussian(dim: int, integrand, samples: int, seed: int = 42,
                chunk: int = 100_000):
    """Monte Carlo mean of ``integrand`` under the normalized e^{-|u|^2} measure.

    Samples are standard normals with variance 1/2 per component (the
    probability density pi^(-dim/2) e^{-|u|^2}).  Uses the counter-based
    Philox generator, so results are bit-reproducible for a fixed
    (seed, samples) pair, and a chunked Welford accumulation for the error.

    Returns (estimate, stderr).
    """
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    if samples < 1:
        raise ValueError(f"sample count must be >= 1, got {samples}")
    rng = np.random.Generator(np.random.Philox(seed))
    count = 0
    mean = 0.0
    m2 = 0.0
    remaining = samples
    while remaining > 0:
        take = min(chunk, remaining)
        u = rng.normal(0.0, math.sqrt(0.5), size=(take, dim))
        vals = np.asarray(integrand(u), dtype=float)
        if vals.shape != (take,):
            raise ValueError("integrand must map (k, dim) samples to (k,) values")
        bmean = float(np.mean(vals))
        bm2 = float(np.sum((vals - bmean) ** 2))
        # Chan et al. pairwise merge of (count, mean, m2) aggregates
        delta = bmean - mean
        tot = count + take
        m2 = m2 + bm2 + delta * delta * count * take / tot
        mean = mean + delta * take / tot
        count = tot
        remaining -= take
    var = m2 / (count - 1) if count > 1 else 0.0
    stderr = math.sqrt(var / count)
    return mean, stderr
