"""Self-verification: every closed formula cross-checked against its
independent oracle on random variety samples plus fixed fixtures.

Each check returns a CheckResult with the worst residual seen and the
tolerance it was held to; `run_all` aggregates them deterministically
for a given (samples, seed) pair.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .chain import ChainComplex, torsion, torsion_with_basis_perturbation
from .errors import NotAcyclic
from .linalg import mat2
from .riley import (RileyPoint, longitude_matrix_closed, longitude_matrix_word,
                    longitude_trace, rep_matrices, solve_t, trace_u)
from .surgery import GridSpec, SurgerySlope, solve_surgery, surgery_residual
from .formulas import (full_report, torsion_exterior_closed,
                       torsion_exterior_oracle, torsion_solid_torus_closed,
                       torsion_solid_torus_from_trace, torsion_surgered,
                       torus_torsion_oracle)


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_residual: float
    tol: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return (f"[{status}] {self.name}: max residual {self.max_residual:.3e}"
                f" (tol {self.tol:.1e}){extra}")


def sample_variety_points(n: int, seed: int,
                          exclude_2mu: float = 1e-3) -> list[RileyPoint]:
    """n random variety points: |s| log-uniform in [0.3, 3], uniform
    angle, alternating branches, excluding |2 - u| < exclude_2mu."""
    rng = np.random.default_rng(seed)
    pts: list[RileyPoint] = []
    while len(pts) < n:
        r = math.exp(rng.uniform(math.log(0.3), math.log(3.0)))
        theta = rng.uniform(0.0, 2 * math.pi)
        s = r * cmath.exp(1j * theta)
        if abs(2 - trace_u(s)) < exclude_2mu:
            continue
        plus, minus = solve_t(s)
        pts.append(plus if len(pts) % 2 == 0 else minus)
    return pts


def _relerr(a, b) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def check_geometric_point() -> CheckResult:
    """Fixed-point chain at s = 1, "+" branch: t = (-1 + i sqrt(3))/2,
    tr rho(l) = -2, tau(exterior) = -2, tau(solid) = 1/4 both ways,
    tau(M) = -1/2 by three agreeing routes."""
    plus, _ = solve_t(1.0)
    worst = abs(plus.t - complex(-0.5, math.sqrt(3) / 2))
    worst = max(worst, plus.residual)
    trl = longitude_trace(plus)
    worst = max(worst, abs(trl - (-2)))
    u = trace_u(plus.s)
    worst = max(worst, abs(u - 2))
    worst = max(worst, abs(torsion_exterior_closed(u) - (-2)))
    worst = max(worst, abs(torsion_solid_torus_from_trace(plus) - 0.25))
    worst = max(worst, abs(torsion_solid_torus_closed(u) - 0.25))
    worst = max(worst, abs(torsion_surgered(u) - (-0.5)))
    rep = full_report(plus)
    ok = worst <= 1e-10 and rep.all_pass
    return CheckResult("geometric point s=1 fixed values", ok, worst, 1e-10)


def check_exterior_oracle(points) -> CheckResult:
    """|Fox-calculus torsion| = |-2(u - 1)| on the variety."""
    worst = 0.0
    for pt in points:
        u = trace_u(pt.s)
        oracle = torsion_exterior_oracle(pt)
        worst = max(worst, _relerr(abs(oracle.value),
                                   abs(torsion_exterior_closed(u))))
    return CheckResult("exterior oracle |tau| vs closed form",
                       worst <= 1e-8, worst, 1e-8,
                       detail=f"{len(points)} points")


def check_trace_identity(points) -> CheckResult:
    """2 - tr rho(l) = -u^4 + 5 u^2 on the variety."""
    worst = 0.0
    for pt in points:
        u = trace_u(pt.s)
        lhs = 2 - longitude_trace(pt)
        rhs = -u ** 4 + 5 * u ** 2
        worst = max(worst, _relerr(lhs, rhs))
    return CheckResult("trace identity 2 - tr rho(l) = u^2(5 - u^2)",
                       worst <= 1e-8, worst, 1e-8,
                       detail=f"{len(points)} points")


def check_longitude_lemma(points) -> CheckResult:
    """Closed-form longitude entries match word evaluation; l21 ~ 0."""
    worst_entry, worst_l21 = 0.0, 0.0
    for pt in points:
        closed = longitude_matrix_closed(pt)
        word = longitude_matrix_word(pt)
        scale = max(1.0, float(np.max(np.abs(word))))
        worst_entry = max(worst_entry,
                          float(np.max(np.abs(closed - word))) / scale)
        worst_l21 = max(worst_l21, abs(closed[1, 0]) / scale)
    ok = worst_entry <= 1e-9 and worst_l21 <= 1e-8
    return CheckResult("longitude closed form vs word evaluation",
                       ok, max(worst_entry, worst_l21), 1e-8,
                       detail=f"entry {worst_entry:.2e}, l21 {worst_l21:.2e}")


def random_acyclic_complex(rng) -> ChainComplex:
    """Random exact 3-term complex: split a random invertible change of
    basis of the middle space into an injection and a projection."""
    d2 = int(rng.integers(1, 3))
    d0 = int(rng.integers(1, 3))
    d1 = d0 + d2
    while True:
        pmat = rng.normal(size=(d1, d1)) + 1j * rng.normal(size=(d1, d1))
        if abs(np.linalg.det(pmat)) > 1e-3:
            break
    inj = pmat[:, :d2]                      # boundary C2 -> C1
    proj = np.linalg.inv(pmat)[d2:, :]      # boundary C1 -> C0
    return ChainComplex(dims=(d0, d1, d2), boundaries=(proj, inj))


def check_basis_independence(n_fixtures: int, seed: int) -> CheckResult:
    """Torsion is independent of image-basis and lift choices."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_fixtures):
        cx = random_acyclic_complex(rng)
        ref = torsion(cx).value
        for pert_seed in range(10):
            val = torsion_with_basis_perturbation(cx, pert_seed).value
            worst = max(worst, _relerr(val, ref))
    return CheckResult("chain torsion basis independence",
                       worst <= 1e-8, worst, 1e-8,
                       detail=f"{n_fixtures} fixtures x 10 seeds")


def random_commuting_pair(rng):
    """Commuting unimodular images: conjugated diagonal pair with at
    least one trace away from 2."""
    while True:
        a = complex(rng.normal(), rng.normal())
        b = complex(rng.normal(), rng.normal())
        if abs(a) < 0.2 or abs(b) < 0.2:
            continue
        if abs(a + 1 / a - 2) < 0.1 and abs(b + 1 / b - 2) < 0.1:
            continue
        pmat = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        det = np.linalg.det(pmat)
        if abs(det) < 0.2:
            continue
        pmat /= np.sqrt(det)
        pinv = np.linalg.inv(pmat)
        imga = pmat @ mat2(a, 0, 0, 1 / a) @ pinv
        imgb = pmat @ mat2(b, 0, 0, 1 / b) @ pinv
        return imga, imgb


def check_torus_oracle(n: int, seed: int) -> CheckResult:
    """|tau(T^2)| = 1 for acyclic commuting peripheral images."""
    rng = np.random.default_rng(seed)
    worst, done = 0.0, 0
    while done < n:
        imga, imgb = random_commuting_pair(rng)
        try:
            val = torus_torsion_oracle(imga, imgb)
        except NotAcyclic:
            continue
        worst = max(worst, abs(abs(val.value) - 1.0))
        done += 1
    return CheckResult("torus complex |tau| = 1", worst <= 1e-8, worst, 1e-8,
                       detail=f"{n} commuting pairs")


def check_product_identity(n: int, seed: int) -> CheckResult:
    """tau(M) = tau(exterior) * tau(solid torus) as rational functions
    of u (algebraic identity, checked at random u)."""
    rng = np.random.default_rng(seed)
    worst, done = 0.0, 0
    while done < n:
        u = complex(rng.normal(scale=2), rng.normal(scale=2))
        if abs(u * u * (u * u - 5)) <= 1e-6:
            continue
        lhs = torsion_surgered(u)
        rhs = torsion_exterior_closed(u) * torsion_solid_torus_closed(u)
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
        done += 1
    return CheckResult("theorem product identity", worst <= 1e-12, worst, 1e-12,
                       detail=f"{n} random u")


def check_surgery_solver(slopes=None, grid: GridSpec | None = None) -> CheckResult:
    """Slope (1,0) finds nothing; every solution on other slopes
    satisfies both residuals and the torsion formula."""
    slopes = slopes if slopes is not None else [
        (1, 0), (1, 1), (2, 1), (3, 1), (5, 1), (1, 2), (3, 2), (5, 3),
        (-1, 2), (4, 1)]
    worst = 0.0
    n_sol = 0
    ok = True
    for p, q in slopes:
        slope = SurgerySlope(p, q)
        sols = solve_surgery(slope, grid)
        if (p, q) == (1, 0) and sols:
            ok = False
        for sol in sols:
            n_sol += 1
            _, mat_res = surgery_residual(sol.point, slope)
            worst = max(worst, mat_res, sol.point.residual)
            if mat_res > 1e-9 or sol.point.residual > 1e-9:
                ok = False
            if sol.torsion is not None:
                err = _relerr(sol.torsion, torsion_surgered(sol.u))
                worst = max(worst, err)
                if err > 1e-8:
                    ok = False
            elif "degenerate" not in sol.flags:
                ok = False
    return CheckResult("surgery solver residuals + torsion", ok, worst, 1e-9,
                       detail=f"{len(slopes)} slopes, {n_sol} solutions")


def run_all(samples: int = 200, seed: int = 0,
            grid: GridSpec | None = None) -> list[CheckResult]:
    """The full verification sweep; samples = 0 keeps the fixed
    fixtures only for the sampled checks."""
    points = sample_variety_points(samples, seed) if samples else []
    fixture_pts = [solve_t(1.0)[0], solve_t(2.0)[0], solve_t(2.0)[1]]
    results = [check_geometric_point()]
    results.append(check_exterior_oracle(fixture_pts + points))
    results.append(check_trace_identity(fixture_pts + points))
    results.append(check_longitude_lemma(fixture_pts + points))
    results.append(check_basis_independence(20, seed + 1))
    results.append(check_torus_oracle(100, seed + 2))
    results.append(check_product_identity(1000, seed + 3))
    results.append(check_surgery_solver(grid=grid))
    return results
