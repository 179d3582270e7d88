"""Verification suites: every module invariant as a reported, tolerated case.

A suite produces a list of cases (id, params, both sides, residual,
tolerance, pass flag) plus the registry of documented discrepancies between
widely printed forms of the identities and the forms that actually close
numerically.  ``run_verify`` assembles suites into a VerificationReport.

Printed-variant failures are documented as *passing* cases that pin the
failure quantitatively (e.g. the duplication formula misses by exactly a
factor 2), so the report's overall pass flag stays equivalent to "every
residual within tolerance".
"""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import clifford, hydrogen, identities, quadmaps, quadrature, specfun

__all__ = ["VerificationReport", "run_verify", "SUITES", "discrepancy_registry"]

DEFAULT_SEED = 42


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------

def _jsonify(value):
    if isinstance(value, complex):
        return [float(value.real), float(value.imag)]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, np.complexfloating):
        return [float(value.real), float(value.imag)]
    return value


def _case(case_id: str, params: dict, lhs, rhs, tolerance: float,
          residual: float | None = None) -> dict:
    lhs_c, rhs_c = complex(lhs), complex(rhs)
    if residual is None:
        residual = abs(lhs_c - rhs_c) / max(1.0, abs(lhs_c))
    return {
        "id": case_id,
        "params": {k: _jsonify(v) for k, v in params.items()},
        "lhs": _jsonify(lhs_c),
        "rhs": _jsonify(rhs_c),
        "residual": float(residual),
        "tolerance": float(tolerance),
        "passed": bool(residual <= tolerance),
    }


def _tol(overrides: dict, key: str, default: float) -> float:
    return float(overrides.get(key, default))


@dataclass
class VerificationReport:
    """Machine-readable outcome of one verification run."""

    suite: str
    cases: list
    seed: int
    elapsed_ms: int
    paper_discrepancies: list = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c["passed"])

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if not c["passed"])

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "passed": self.passed,
            "failed": self.failed,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
            "paper_discrepancies": self.paper_discrepancies,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def discrepancy_registry() -> dict:
    """The documented printed-form discrepancies, one entry per open item.

    Suites fill in the ``measured`` fields; the ids are stable.
    """
    entries = [
        {
            "id": "laguerre-generating-convention",
            "module": "specfun",
            "summary": (
                "The radial-basis generating sum circulates with an extra "
                "factorial weight on the Laguerre polynomials; the standard "
                "convention (no factorial inside the sum) is the one that "
                "reproduces the textbook ground state R_10 = 2 e^-r and unit "
                "norms, so the factorial belongs to the expansion weights."
            ),
        },
        {
            "id": "momentum-phase-il",
            "module": "hydrogen",
            "summary": (
                "The closed-form momentum wavefunction is printed with phase "
                "i^l, while the direct Fourier transform carries (-i)^l. The "
                "library keeps the printed i^l and measures the offset."
            ),
        },
        {
            "id": "expansion-weight-bookkeeping",
            "module": "hydrogen",
            "summary": (
                "The 4/pi measure factor of the lifted Fourier integral must "
                "cancel exactly in the generating-function expansion weights; "
                "resolved empirically by coefficient extraction."
            ),
        },
        {
            "id": "ks-lift-bookkeeping",
            "module": "quadmaps",
            "summary": (
                "The 3-space reduction of the 4-space integral is printed "
                "without the |u|^2 weight its own derivation requires, and "
                "with a 1/(2 pi) fiber normalization that the 4/pi constant "
                "absorbs; the weighted form is what closes the e^-r and "
                "Gaussian closed-form checks. The printed angle assignment of "
                "the fiber parameterization also swaps the azimuth and fiber "
                "roles; implemented with phase difference = azimuth, common "
                "phase = fiber."
            ),
        },
        {
            "id": "gamma-anticommutator-sign",
            "module": "clifford",
            "summary": (
                "The relation 'Gamma_i Gamma_j + Gamma_j Gamma_i = delta_ij' "
                "cannot hold together with Gamma_i^2 = -1; the realized "
                "relation is {Gamma_i, Gamma_j} = -2 delta_ij I for the "
                "non-identity generators, verified exactly."
            ),
        },
        {
            "id": "level3-entrywise-variant",
            "module": "clifford",
            "summary": (
                "The printed 4x4 level-3 matrix is not the block recursion's "
                "matrix entrywise (its inner block's diagonal entries are not "
                "complex conjugates, so no relabeling of the parameters maps "
                "one to the other); both matrices are normal with the same "
                "determinant identity, which is the property in scope."
            ),
        },
        {
            "id": "integral-representation-prefactor",
            "module": "identities",
            "summary": (
                "The integral representation of the generating function "
                "circulates with prefactor (-1)^l/(pi 2^(l+1) l!) and no "
                "(alpha sin chi)^l; the measured calibration constant is "
                "2^l l! (alpha sin chi)^l, chi-independent, closing the l=0 "
                "case exactly."
            ),
        },
        {
            "id": "hyperspherical-radial-exponent",
            "module": "identities",
            "summary": (
                "The printed radial exponent n-l+1 of the 4-D harmonics is "
                "inconsistent with harmonicity; homogeneous degree n-1 with a "
                "sin^l(chi) factor is used and validated by a finite-"
                "difference Laplacian spot check."
            ),
        },
        {
            "id": "passage-formula-m-structure",
            "module": "identities",
            "summary": (
                "The passage expansion of the 4-D harmonics into D-matrix "
                "elements closes for m = 0 as printed but needs third 3j "
                "entry -m and overall phase (-i)^(l+m) for m != 0; with that "
                "form the per-(n, l) global phase is exactly 1 (measured and "
                "reported)."
            ),
        },
        {
            "id": "duplication-formula-power",
            "module": "identities",
            "summary": (
                "The Legendre duplication formula as printed (power 2^(2n)) "
                "fails by exactly a factor 2 at every n, including n = 1; the "
                "corrected power 2^(2n+1) passes at machine precision. Both "
                "variants are evaluated in the identities suite."
            ),
        },
    ]
    return {e["id"]: dict(e, measured={}) for e in entries}


# ---------------------------------------------------------------------------
# hydrogen suite
# ---------------------------------------------------------------------------

def suite_hydrogen(seed: int = DEFAULT_SEED, tols: dict | None = None,
                   nodes: int | None = None) -> tuple:
    tols = tols or {}
    cases = []
    disc = discrepancy_registry()
    hankel_nodes = nodes or 300
    overlap_nodes = max(nodes or 0, 200)

    # ground-state momentum amplitude, closed form and Fourier oracle
    target = 2.0 * math.sqrt(2.0) / math.pi
    closed0 = abs(hydrogen.psi_momentum(specfun.QuantumNumbers(1, 0, 0), (0.0, 0.0, 0.0)))
    y00 = 1.0 / math.sqrt(4.0 * math.pi)
    oracle0 = abs(quadrature.radial_hankel(1, 0, 0.0, npts=hankel_nodes)) * y00
    tol = _tol(tols, "ground_momentum_amplitude", 1e-8)
    cases.append(_case("ground_momentum_amplitude[closed]", {"n": 1}, closed0, target, tol))
    cases.append(_case("ground_momentum_amplitude[hankel]", {"n": 1}, oracle0, target, tol))
    cases.append(_case("ground_momentum_amplitude[cross]", {"n": 1}, closed0, oracle0, tol))

    # Fourier consistency sweep with per-(n, l) phase units
    phase_units = {}
    for n in range(1, 5):
        delta = 1.0 / n
        for l in range(n):
            p = delta * np.linspace(0.1, 4.0, 20)
            f_closed = hydrogen.radial_momentum(n, l, p)
            f_hankel = quadrature.radial_hankel(n, l, p, npts=hankel_nodes)
            mod_resid = float(np.max(
                np.abs(np.abs(f_hankel) - np.abs(f_closed)) / np.abs(f_closed)
            ))
            tol = _tol(tols, "fourier_modulus", 1e-6)
            cases.append(_case(
                f"fourier_modulus[n={n},l={l}]", {"n": n, "l": l},
                mod_resid, 0.0, tol, residual=mod_resid,
            ))
            ratio = f_hankel / f_closed
            unit = complex(np.mean(ratio))
            spread = float(np.max(np.abs(ratio - unit)))
            phase_units[f"(n={n},l={l})"] = _jsonify(unit)
            tol = _tol(tols, "fourier_phase_constancy", 1e-6)
            cases.append(_case(
                f"fourier_phase_constancy[n={n},l={l}]",
                {"n": n, "l": l, "phase_unit": unit},
                spread, 0.0, tol, residual=spread,
            ))
            tol = _tol(tols, "fourier_phase_value", 1e-6)
            cases.append(_case(
                f"fourier_phase_value[n={n},l={l}]", {"n": n, "l": l},
                unit, (-1.0 + 0.0j) ** l, tol,
            ))
    disc["momentum-phase-il"]["measured"] = {
        "offset_per_nl": phase_units,
        "pattern": "(-1)^l",
    }

    # position-space Gram matrices at fixed (l, m)
    for l in range(3):
        ns = list(range(l + 1, 7))
        gram = np.array([
            [hydrogen.radial_overlap(n1, n2, l, npts=overlap_nodes) for n2 in ns]
            for n1 in ns
        ])
        resid = float(np.max(np.abs(gram - np.eye(len(ns)))))
        tol = _tol(tols, "gram_position", 1e-8)
        cases.append(_case(
            f"gram_position[l={l}]", {"l": l, "n_max": 6}, resid, 0.0, tol, residual=resid,
        ))

    # momentum-space norms
    for n in range(1, 6):
        for l in range(n):
            norm = hydrogen.momentum_norm(n, l, npts=overlap_nodes)
            tol = _tol(tols, "momentum_norm", 1e-6)
            cases.append(_case(
                f"momentum_norm[n={n},l={l}]", {"n": n, "l": l}, norm, 1.0, tol,
            ))

    # Gegenbauer-argument identity of the momentum denominator
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(200):
        z = (rng.uniform(-0.8, 0.8) + 1j * rng.uniform(-0.8, 0.8)) * 0.7
        delta = rng.uniform(0.2, 2.0)
        p2 = rng.uniform(0.0, 9.0)
        lhs = (delta * (1 + z)) ** 2 + (1 - z) ** 2 * p2
        x = (p2 - delta ** 2) / (p2 + delta ** 2)
        rhs = (p2 + delta ** 2) * (1 - 2 * z * x + z ** 2)
        worst = max(worst, abs(lhs - rhs) / abs(lhs))
    tol = _tol(tols, "fock_argument_identity", 1e-12)
    cases.append(_case(
        "fock_argument_identity[random]", {"trials": 200}, worst, 0.0, tol, residual=worst,
    ))

    # radial node counts
    for n in range(1, 6):
        for l in range(n):
            grid = np.linspace(1e-6, 60.0 * n, 4000 * n)
            vals = hydrogen.radial_position(n, l, grid)
            signs = np.sign(vals)
            signs = signs[signs != 0]
            changes = int(np.sum(signs[1:] != signs[:-1]))
            tol = _tol(tols, "node_count", 0.0)
            cases.append(_case(
                f"node_count[n={n},l={l}]", {"n": n, "l": l},
                changes, n - l - 1, tol, residual=abs(changes - (n - l - 1)),
            ))

    # generating-function coefficient extraction
    extraction_ratios = {}
    for (n, l, m) in [(1, 0, 0), (2, 1, 0), (3, 1, 1)]:
        rng = np.random.default_rng(seed + 10 * n + l)
        pts_pos = rng.uniform(-2.0, 2.0, size=(5, 3))
        pts_mom = rng.uniform(-1.2, 1.2, size=(5, 3))
        scale = hydrogen.extraction_scale(n, l)
        qn = specfun.QuantumNumbers(n, l, m)

        coeff = hydrogen.extract_coefficient("position", qn, n)
        got = np.array([coeff(pt) / scale for pt in pts_pos])
        want = np.array([hydrogen.psi_position(qn, pt) for pt in pts_pos])
        resid = float(np.max(np.abs(got - want)) / np.max(np.abs(want)))
        tol = _tol(tols, "extraction_position", 1e-6)
        cases.append(_case(
            f"extraction_position[n={n},l={l},m={m}]", {"n": n, "l": l, "m": m},
            resid, 0.0, tol, residual=resid,
        ))

        coeff = hydrogen.extract_coefficient("momentum", qn, n)
        got = np.array([coeff(pt) / scale for pt in pts_mom])
        want = np.array([hydrogen.psi_momentum(qn, pt) for pt in pts_mom])
        big = np.abs(want) > 1e-3 * np.max(np.abs(want))
        unit = complex(np.mean(got[big] / want[big]))
        extraction_ratios[f"(n={n},l={l})"] = _jsonify(unit)
        resid = float(np.max(np.abs(got - unit * want)) / np.max(np.abs(want)))
        tol = _tol(tols, "extraction_momentum", 1e-6)
        cases.append(_case(
            f"extraction_momentum[n={n},l={l},m={m}]",
            {"n": n, "l": l, "m": m, "phase_unit": unit},
            resid, 0.0, tol, residual=resid,
        ))
        tol = _tol(tols, "extraction_momentum_phase", 1e-6)
        cases.append(_case(
            f"extraction_momentum_phase[n={n},l={l},m={m}]", {"n": n, "l": l, "m": m},
            unit, (-1.0 + 0.0j) ** l, tol,
        ))
    disc["expansion-weight-bookkeeping"]["measured"] = {
        "position_ratio": 1.0,
        "momentum_ratio_per_nl": extraction_ratios,
    }

    # regulator-derivative link by central finite difference
    rng = np.random.default_rng(seed + 99)
    worst = 0.0
    for _ in range(10):
        z = rng.uniform(-0.5, 0.5) + 1j * rng.uniform(-0.5, 0.5)
        al = rng.uniform(-0.5, 0.5) + 1j * rng.uniform(-0.5, 0.5)
        xi = rng.uniform(-0.6, 0.6) + 1j * rng.uniform(-0.6, 0.6)
        eta = rng.uniform(-0.6, 0.6) + 1j * rng.uniform(-0.6, 0.6)
        pvec = rng.uniform(-1.5, 1.5, size=3)
        delta = rng.uniform(0.3, 1.5)
        h = 1e-5
        gp = hydrogen._genfunc_momentum_regulated_raw(z, al, xi, eta, +h, pvec, delta)
        gm = hydrogen._genfunc_momentum_regulated_raw(z, al, xi, eta, -h, pvec, delta)
        fd = -(gp - gm) / (2.0 * h)
        exact = hydrogen._genfunc_momentum_raw(z, al, xi, eta, pvec, delta)
        worst = max(worst, abs(fd - exact) / abs(exact))
    tol = _tol(tols, "regulator_derivative_link", 1e-7)
    cases.append(_case(
        "regulator_derivative_link[random]", {"trials": 10}, worst, 0.0, tol, residual=worst,
    ))

    disc["laguerre-generating-convention"]["measured"] = {
        "radial_10_check": abs(hydrogen.radial_position(1, 0, 1.0) - 2.0 * math.exp(-1.0)),
    }
    used = [
        "laguerre-generating-convention", "momentum-phase-il",
        "expansion-weight-bookkeeping",
    ]
    return cases, [disc[k] for k in used]


# ---------------------------------------------------------------------------
# quadratic-maps suite
# ---------------------------------------------------------------------------

def suite_maps(seed: int = DEFAULT_SEED, tols: dict | None = None,
               nodes: int | None = None) -> tuple:
    tols = tols or {}
    cases = []
    disc = discrepancy_registry()
    rng = np.random.default_rng(seed)

    u2 = rng.normal(size=(200, 2))
    xp, yp, rp = quadmaps.levi_civita(u2)
    resid = float(np.max(np.abs(xp ** 2 + yp ** 2 - rp ** 2) / rp ** 2))
    cases.append(_case("levi_civita_norm[random]", {"trials": 200}, resid, 0.0,
                       _tol(tols, "levi_civita_norm", 1e-13), residual=resid))

    u4 = rng.normal(size=(200, 4))
    xyz, r = quadmaps.ks_map(u4)
    resid = float(np.max(np.abs(np.sum(xyz ** 2, axis=-1) - r ** 2) / r ** 2))
    cases.append(_case("ks_norm[random]", {"trials": 200}, resid, 0.0,
                       _tol(tols, "ks_norm", 1e-12), residual=resid))

    u8 = rng.normal(size=(200, 8))
    x5, r8 = quadmaps.hurwitz_map(u8)
    resid = float(np.max(np.abs(np.sum(x5 ** 2, axis=-1) - r8 ** 2) / r8 ** 2))
    cases.append(_case("hurwitz_norm[random]", {"trials": 200}, resid, 0.0,
                       _tol(tols, "hurwitz_norm", 1e-12), residual=resid))

    # Cayley-Klein round trip and fiber invariance
    worst_rt = 0.0
    worst_fiber = 0.0
    for _ in range(25):
        r0 = rng.uniform(0.1, 3.0)
        th = rng.uniform(0.05, math.pi - 0.05)
        ph = rng.uniform(0.0, 2.0 * math.pi)
        target = r0 * np.array([
            math.sin(th) * math.cos(ph), math.sin(th) * math.sin(ph), math.cos(th),
        ])
        base = quadmaps.ks_map(quadmaps.cayley_klein(r0, th, ph, 0.0))[0]
        worst_rt = max(worst_rt, float(np.max(np.abs(base - target))) / r0)
        for psi in np.linspace(0.0, 2.0 * math.pi, 32, endpoint=False):
            img = quadmaps.ks_map(quadmaps.cayley_klein(r0, th, ph, psi))[0]
            worst_fiber = max(worst_fiber, float(np.max(np.abs(img - base))) / r0)
    cases.append(_case("cayley_klein_roundtrip[random]", {"trials": 25}, worst_rt, 0.0,
                       _tol(tols, "cayley_klein_roundtrip", 1e-13), residual=worst_rt))
    cases.append(_case("ks_fiber_invariance[psi-grid]", {"trials": 25, "psi_points": 32},
                       worst_fiber, 0.0,
                       _tol(tols, "ks_fiber_invariance", 1e-13), residual=worst_fiber))

    # Jacobian spot check: det d(x,y,z,psi)/du = 8|u|^2
    worst = 0.0
    for _ in range(5):
        u = rng.normal(size=4)
        while abs(quadmaps.ks_fiber_angle(u)) > 1.2:  # stay off the branch cut
            u = rng.normal(size=4)
        h = 1e-6 * max(1.0, float(np.linalg.norm(u)))
        jac = np.empty((4, 4))
        for k in range(4):
            up, um = u.copy(), u.copy()
            up[k] += h
            um[k] -= h
            fp = np.append(quadmaps.ks_map(up)[0], quadmaps.ks_fiber_angle(up))
            fm = np.append(quadmaps.ks_map(um)[0], quadmaps.ks_fiber_angle(um))
            jac[:, k] = (fp - fm) / (2.0 * h)
        det = abs(np.linalg.det(jac))
        expect = 8.0 * float(u @ u)
        worst = max(worst, abs(det - expect) / expect)
    cases.append(_case("ks_jacobian[fd]", {"trials": 5}, worst, 0.0,
                       _tol(tols, "ks_jacobian", 1e-8), residual=worst))

    # measure identity through the lift
    hrule = quadrature.gauss_hermite(nodes or 28)
    res = quadmaps.ks_integral(lambda p: np.exp(-np.linalg.norm(p, axis=-1)), rule=hrule)
    cases.append(_case("ks_integral_exp[quadrature]", {"f": "exp(-r)"},
                       res.value, 8.0 * math.pi, _tol(tols, "ks_integral", 5e-3)))
    res = quadmaps.ks_integral(lambda p: np.exp(-np.sum(p ** 2, axis=-1)), rule=hrule)
    cases.append(_case("ks_integral_gauss[quadrature]", {"f": "exp(-r^2)"},
                       res.value, math.pi ** 1.5, _tol(tols, "ks_integral", 5e-3)))
    res = quadmaps.ks_integral(
        lambda p: np.exp(-np.linalg.norm(p, axis=-1)), method="mc",
        samples=1_000_000, seed=seed,
    )
    cases.append(_case("ks_integral_exp[mc]", {"f": "exp(-r)", "stderr": res.error},
                       res.value, 8.0 * math.pi, _tol(tols, "ks_integral", 5e-3)))
    res = quadmaps.ks_integral(
        lambda p: (np.sum(p ** 2, axis=-1) < 1.0).astype(float), method="mc",
        samples=1_000_000, seed=seed + 1,
    )
    cases.append(_case("ks_integral_ball[mc]", {"f": "1(r<1)", "stderr": res.error},
                       res.value, 4.0 * math.pi / 3.0, _tol(tols, "ks_integral_mc", 1e-2)))

    entry = disc["ks-lift-bookkeeping"]
    entry["measured"] = {
        "exp_integral_relative_error": abs(cases[-2]["lhs"][0] - 8.0 * math.pi) / (8.0 * math.pi),
    }
    return cases, [entry]


# ---------------------------------------------------------------------------
# clifford suite
# ---------------------------------------------------------------------------

def _printed_level3(x) -> np.ndarray:
    # the widely printed 4x4 level-3 matrix (different gamma labeling than
    # the block recursion; kept for the structural comparison)
    x1, x2, x3, x4, x5, x6 = x
    return np.array([
        [x6 + 1j * x5, 0, -x1 + 1j * x2, -x4 + 1j * x3],
        [0, x6 + 1j * x5, -x4 - 1j * x3, x1 + 1j * x2],
        [x1 + 1j * x2, x4 - 1j * x3, x6 - 1j * x5, 0],
        [x4 + 1j * x3, -x1 + 1j * x2, 0, x6 - 1j * x5],
    ])


def suite_clifford(seed: int = DEFAULT_SEED, tols: dict | None = None,
                   nodes: int | None = None, subset: str = "full") -> tuple:
    tols = tols or {}
    cases = []
    disc = discrepancy_registry()
    rng = np.random.default_rng(seed)

    # determinant identity sweep: 200 trials per level
    for n in range(1, 6):
        npar = 3 if n == 1 else 2 * n
        for trial in range(200):
            x = rng.normal(size=npar)
            alpha = rng.uniform(-1.0, 1.0) * 0.5 / (1.0 + float(np.linalg.norm(x)))
            res = clifford.det_identity(n, x, alpha)
            rel = res.residual / abs(res.closed_form)
            cases.append(_case(
                f"det_identity[n={n},trial={trial}]",
                {"n": n, "alpha": alpha},
                res.value, res.closed_form,
                _tol(tols, "det_identity", 1e-9), residual=rel,
            ))
    if subset == "det":
        return cases, []

    # exact algebraic relations
    for n in range(1, 7):
        gam = clifford.gammas(n)
        eye = np.eye(gam[0].shape[0])
        worst = 0.0
        for i, gi in enumerate(gam[:-1]):
            worst = max(worst, float(np.max(np.abs(gi @ gi + eye))))
            for gj in gam[i + 1:-1]:
                worst = max(worst, float(np.max(np.abs(gi @ gj + gj @ gi))))
        cases.append(_case(
            f"gamma_relations[n={n}]", {"n": n}, worst, 0.0,
            _tol(tols, "gamma_relations", 0.0), residual=worst,
        ))
        ident = float(np.max(np.abs(gam[-1] - eye)))
        cases.append(_case(
            f"gamma_last_identity[n={n}]", {"n": n}, ident, 0.0,
            _tol(tols, "gamma_relations", 0.0), residual=ident,
        ))

        npar = 3 if n == 1 else 2 * n
        x = rng.normal(size=npar)
        y = rng.normal(size=npar)
        ax = clifford.build_A(n, x).entries
        ay = clifford.build_A(n, y).entries
        axy = clifford.build_A(n, x + y).entries
        lin = 0.0 if np.array_equal(axy, ax + ay) else float(np.max(np.abs(axy - (ax + ay))))
        cases.append(_case(
            f"linearity[n={n}]", {"n": n}, lin, 0.0,
            _tol(tols, "linearity", 0.0), residual=lin,
        ))
        normality = float(np.max(np.abs(
            ax @ ax.conj().T - float(x @ x) * np.eye(ax.shape[0])
        ))) / float(x @ x)
        cases.append(_case(
            f"normality[n={n}]", {"n": n}, normality, 0.0,
            _tol(tols, "normality", 1e-12), residual=normality,
        ))

    # printed low-level matrices: level 2 matches entrywise, level 3 only
    # structurally (same normality and determinant identity)
    x4 = rng.normal(size=4)
    a2 = clifford.build_A(2, x4).entries
    printed2 = np.array([
        [x4[3] + 1j * x4[2], x4[1] + 1j * x4[0]],
        [-x4[1] + 1j * x4[0], x4[3] - 1j * x4[2]],
    ])
    resid = float(np.max(np.abs(a2 - printed2)))
    cases.append(_case("level2_entrywise[printed]", {}, resid, 0.0,
                       _tol(tols, "level2_entrywise", 0.0), residual=resid))

    x6 = rng.normal(size=6)
    p3 = _printed_level3(x6)
    norm_resid = float(np.max(np.abs(
        p3 @ p3.conj().T - float(x6 @ x6) * np.eye(4)
    ))) / float(x6 @ x6)
    cases.append(_case("level3_printed_normality[printed]", {}, norm_resid, 0.0,
                       _tol(tols, "normality", 1e-12), residual=norm_resid))
    alpha = 0.11
    detp = complex(np.linalg.det(np.eye(4) - alpha * p3))
    closed = complex(1.0 - 2.0 * alpha * x6[5] + alpha ** 2 * float(x6 @ x6)) ** 2
    cases.append(_case("level3_printed_det[printed]", {"alpha": alpha}, detp, closed,
                       _tol(tols, "det_identity", 1e-9)))
    mismatch = float(np.max(np.abs(clifford.build_A(3, x6).entries - p3)))
    disc["level3-entrywise-variant"]["measured"] = {
        "max_entry_difference": mismatch,
        "printed_det_identity_residual": abs(detp - closed) / abs(closed),
    }
    disc["gamma-anticommutator-sign"]["measured"] = {
        "anticommutator_max_residual": 0.0,
    }

    # Monte Carlo cross-check of the Gaussian closed form
    for (n, x, alpha) in [
        (2, (0.0, 0.0, 0.0, 0.5), 0.3),
        (3, (0.10, 0.05, -0.10, 0.20, 0.10, 0.30), 0.2),
    ]:
        res = clifford.gaussian_mc(n, x, alpha, samples=1_000_000, seed=seed + n)
        cases.append(_case(
            f"gaussian_mc[n={n}]",
            {"n": n, "alpha": alpha, "stderr": res.stderr, "samples": 1_000_000},
            res.value, res.closed_form,
            3.0 * res.stderr, residual=res.residual,
        ))

    # Gegenbauer-series form of the closed result
    chi = 0.8
    resid = clifford.gegenbauer_series_check(
        1, (0.3, 0.2, math.cos(chi)), 0.4, 200
    )
    cases.append(_case("gegenbauer_series[n=1]", {"alpha": 0.4}, resid, 0.0,
                       _tol(tols, "gegenbauer_series", 1e-10), residual=resid))
    resid = clifford.gegenbauer_series_check(2, (0.5, 0.5, 0.5, 0.5), 0.4, 80)
    cases.append(_case("gegenbauer_series[n=2]", {"alpha": 0.4}, resid, 0.0,
                       _tol(tols, "gegenbauer_series", 1e-10), residual=resid))

    return cases, [disc["gamma-anticommutator-sign"], disc["level3-entrywise-variant"]]


# ---------------------------------------------------------------------------
# identities suite
# ---------------------------------------------------------------------------

def _s3_grid_eval(n, l, m, rule):
    """Vectorized hyperspherical harmonic on a product (chi, theta, phi) grid."""
    from scipy.special import gammaln

    chi = rule.chi[:, None, None]
    theta = rule.sphere.theta[None, :, None]
    phi = rule.sphere.phi[None, None, :]
    norm = 2.0 ** (l + 1) * math.exp(
        gammaln(l + 1.0)
        + 0.5 * (math.log(n) + gammaln(n - l) - math.log(2.0 * math.pi) - gammaln(n + l + 1.0))
    )
    gg = specfun.gegenbauer(n - l - 1, l + 1.0, np.cos(chi))
    ylm = specfun.spherical_harmonic(l, m, theta, phi)
    return norm * np.sin(chi) ** l * gg * ylm


def suite_identities(seed: int = DEFAULT_SEED, tols: dict | None = None,
                     nodes: int | None = None) -> tuple:
    tols = tols or {}
    cases = []
    disc = discrepancy_registry()
    rng = np.random.default_rng(seed)

    # generating function of the Gegenbauer family
    for a in (0.5, 1.0, 1.5, 2.0, 3.0):
        worst = 0.0
        for t in (-0.5, -0.25, 0.25, 0.5):
            for x in np.linspace(-1.0, 1.0, 9):
                worst = max(worst, identities.genfunc_gegenbauer(a, t, float(x)).residual)
        cases.append(_case(
            f"genfunc_gegenbauer[a={a}]", {"a": a, "t_max": 0.5}, worst, 0.0,
            _tol(tols, "genfunc_gegenbauer", 1e-10), residual=worst,
        ))

    # order-lowering recurrence
    for a in (1.5, 2.0, 3.0, 4.5, 6.0):
        worst = 0.0
        for n in range(21):
            for x in np.linspace(-1.0, 1.0, 9):
                scale = max(1.0, abs(specfun.gegenbauer(n + 1, a, float(x))))
                worst = max(worst, identities.gegenbauer_recurrence(a, n, float(x)) / scale)
        cases.append(_case(
            f"gegenbauer_recurrence[a={a}]", {"a": a, "n_max": 20}, worst, 0.0,
            _tol(tols, "gegenbauer_recurrence", 1e-10), residual=worst,
        ))

    # Bessel-weighted generating function
    for a in (1.0, 1.5, 2.0, 2.5, 3.0):
        worst = 0.0
        for z in (0.5, 2.0, 5.0):
            for chi in (0.3, 0.5 * math.pi, 2.5):
                worst = max(worst, identities.bessel_genfunc(a, z, chi).residual)
        cases.append(_case(
            f"bessel_genfunc[a={a}]", {"a": a, "z_max": 5.0}, worst, 0.0,
            _tol(tols, "bessel_genfunc", 1e-8), residual=worst,
        ))

    # integral representation: l = 0 closes exactly, kappa is chi-independent
    quad_nodes = nodes or 200
    r0 = identities.integral_rep(0, 0.5, 1.0, quad_nodes)
    cases.append(_case("integral_rep_l0[closed]", {"alpha": 0.5, "chi": 1.0},
                       r0.rhs, r0.lhs, _tol(tols, "integral_rep_l0", 1e-12)))
    kappas = {}
    for l in range(4):
        for alpha in (0.3, 0.6):
            chis = np.linspace(0.2, math.pi - 0.2, 9)
            vals = [identities.integral_rep(l, alpha, float(c), quad_nodes).kappa for c in chis]
            target = 2.0 ** l * math.factorial(l)
            spread = (max(vals) - min(vals)) / target
            cases.append(_case(
                f"integral_rep_kappa_constancy[l={l},alpha={alpha}]",
                {"l": l, "alpha": alpha}, spread, 0.0,
                _tol(tols, "integral_rep_constancy", 1e-7), residual=spread,
            ))
            cases.append(_case(
                f"integral_rep_kappa_value[l={l},alpha={alpha}]",
                {"l": l, "alpha": alpha}, float(np.mean(vals)), target,
                _tol(tols, "integral_rep_value", 1e-7),
            ))
            kappas[f"(l={l},alpha={alpha})"] = float(np.mean(vals))
    disc["integral-representation-prefactor"]["measured"] = {"kappa": kappas}

    # plane-wave expansion
    worst = 0.0
    for _ in range(5):
        rv = rng.normal(size=3)
        rv *= math.sqrt(2.0) / np.linalg.norm(rv)
        rp = rng.normal(size=3)
        rp /= np.linalg.norm(rp)
        worst = max(worst, identities.plane_wave_partial(rv, rp, 25).residual)
    cases.append(_case("plane_wave[rrp=sqrt2,L=25]", {"L": 25}, worst, 0.0,
                       _tol(tols, "plane_wave", 1e-10), residual=worst))
    rv = np.array([5.0, 0.0, 0.0])
    rp = np.array([0.3, 0.8, 0.52])
    rp /= np.linalg.norm(rp)
    tail = [identities.plane_wave_partial(rv, rp, L).residual for L in (10, 15, 20, 25, 30)]
    decreasing = all(b < a for a, b in zip(tail, tail[1:]))
    cases.append(_case("plane_wave_tail_monotone[rrp=5]", {"L_list": [10, 15, 20, 25, 30]},
                       0.0 if decreasing else 1.0, 0.0,
                       _tol(tols, "plane_wave_tail", 0.0),
                       residual=0.0 if decreasing else 1.0))

    # duplication formula, printed and corrected variants
    for n in (0, 1, 5):
        chk = identities.duplication_check(n)
        cases.append(_case(
            f"duplication_printed_factor2[n={n}]", {"n": n},
            chk.printed, 0.5, _tol(tols, "duplication_printed", 1e-12),
        ))
    worst = max(identities.duplication_check(n).corrected for n in range(11))
    cases.append(_case("duplication_corrected[n<=10]", {"n_max": 10}, worst, 0.0,
                       _tol(tols, "duplication_corrected", 1e-13), residual=worst))
    disc["duplication-formula-power"]["measured"] = {
        "printed_residual_at_n1": identities.duplication_check(1).printed,
        "corrected_max_residual": worst,
    }

    # hyperspherical orthonormality on the 3-sphere
    s3 = quadrature.s3_rule(24, 24, 25)
    states = [(n, l, m) for n in range(1, 4) for l in range(n) for m in range(-l, l + 1)]
    w3d = (
        s3.chi_weights[:, None, None]
        * s3.sphere.theta_weights[None, :, None]
        * s3.sphere.phi_weight
    )
    fields = [_s3_grid_eval(n, l, m, s3) for (n, l, m) in states]
    worst = 0.0
    for i, fi in enumerate(fields):
        for j2, fj in enumerate(fields):
            val = complex(np.sum(w3d * np.conj(fi) * fj))
            want = 1.0 if i == j2 else 0.0
            worst = max(worst, abs(val - want))
    cases.append(_case("hyperspherical_orthonormality[n<=3]",
                       {"states": len(states)}, worst, 0.0,
                       _tol(tols, "hyperspherical_orthonormality", 1e-9), residual=worst))

    # harmonicity of the homogeneous extension (4-D five-point Laplacian)
    worst = 0.0
    h = 1e-3
    for (n, l, m) in [(2, 1, 0), (3, 1, 1), (3, 2, -1), (4, 2, 2)]:
        for _ in range(2):
            v = rng.normal(size=4)
            v /= np.linalg.norm(v)
            v = v * rng.uniform(0.8, 1.2)
            lap = 0.0 + 0.0j
            center = identities.hyperspherical_Y(n, l, m, v)
            for k in range(4):
                vp, vm = v.copy(), v.copy()
                vp[k] += h
                vm[k] -= h
                lap += (
                    identities.hyperspherical_Y(n, l, m, vp)
                    + identities.hyperspherical_Y(n, l, m, vm) - 2.0 * center
                )
            lap /= h * h
            worst = max(worst, abs(lap))
    cases.append(_case("hyperspherical_harmonicity[fd]", {"h": h}, worst, 0.0,
                       _tol(tols, "hyperspherical_harmonicity", 1e-4), residual=worst))
    disc["hyperspherical-radial-exponent"]["measured"] = {
        "fd_laplacian_max": worst,
    }

    # triple-D Haar integral against 3j products
    worst_sel = 0.0
    for n in (2, 3, 4):
        j = 0.5 * (n - 1)
        for l in range(1, min(3, n) + 1):
            worst = 0.0
            for tm1 in range(-(n - 1), n, 2):
                for tm2 in range(-(n - 1), n, 2):
                    m1, m2 = 0.5 * tm1, 0.5 * tm2
                    for m in range(-l, l + 1):
                        chk = identities.triple_D_integral(n, m1, m2, l, m)
                        if m1 + m2 + m == 0:
                            worst = max(worst, chk.residual)
                        else:
                            worst_sel = max(worst_sel, chk.residual)
            cases.append(_case(
                f"triple_D[n={n},l={l}]", {"n": n, "l": l}, worst, 0.0,
                _tol(tols, "triple_D", 1e-9), residual=worst,
            ))
    cases.append(_case("triple_D_selection_zero[all]", {}, worst_sel, 0.0,
                       _tol(tols, "triple_D_selection", 1e-12), residual=worst_sel))

    # passage between the 4-D harmonics and D-matrix elements
    phases = {}
    for n in range(1, 5):
        for l in range(n):
            phase = identities.passage_phase(n, l)
            phases[f"(n={n},l={l})"] = _jsonify(phase)
            worst = 0.0
            for m in range(-l, l + 1):
                for _ in range(3):
                    chi = rng.uniform(0.25, math.pi - 0.25)
                    th = rng.uniform(0.25, math.pi - 0.25)
                    ph = rng.uniform(0.0, 2.0 * math.pi)
                    chk = identities.passage_residual(n, l, m, chi, th, ph, phase=phase)
                    worst = max(worst, chk.residual)
            cases.append(_case(
                f"passage[n={n},l={l}]", {"n": n, "l": l, "phase": phase}, worst, 0.0,
                _tol(tols, "passage", 1e-8), residual=worst,
            ))
            cases.append(_case(
                f"passage_phase_unit[n={n},l={l}]", {"n": n, "l": l},
                phase, 1.0 + 0.0j, _tol(tols, "passage_phase", 1e-10),
            ))
    disc["passage-formula-m-structure"]["measured"] = {"phase_per_nl": phases}

    used = [
        "integral-representation-prefactor", "hyperspherical-radial-exponent",
        "passage-formula-m-structure", "duplication-formula-power",
    ]
    return cases, [disc[k] for k in used]


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

SUITES = {
    "hydrogen": suite_hydrogen,
    "maps": suite_maps,
    "clifford": suite_clifford,
    "identities": suite_identities,
}


def _max_workers() -> int:
    env = os.environ.get("FOCKSPACE_THREADS", "0")
    try:
        cap = int(env)
    except ValueError:
        cap = 0
    if cap == 1:
        return 1
    auto = min(4, os.cpu_count() or 1)
    return auto if cap <= 0 else min(cap, auto * 4)


def run_verify(suite: str, seed: int = DEFAULT_SEED, tols: dict | None = None,
               nodes: int | None = None) -> VerificationReport:
    """Run one named suite (or "all") and assemble the report."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)} or 'all'")
    t0 = time.perf_counter()
    names = list(SUITES) if suite == "all" else [suite]
    results = []
    workers = _max_workers()
    if suite == "all" and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(SUITES[name], seed, tols, nodes) for name in names]
            results = [f.result() for f in futures]
    else:
        results = [SUITES[name](seed, tols, nodes) for name in names]
    cases = []
    discrepancies = []
    for cs, ds in results:
        cases.extend(cs)
        discrepancies.extend(ds)
    elapsed = int(round(1000.0 * (time.perf_counter() - t0)))
    return VerificationReport(suite, cases, seed, elapsed, discrepancies)
