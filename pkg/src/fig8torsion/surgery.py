"""Numerical search for representations that extend over a p/q-surgered
manifold, i.e. variety points where rho(x)^p rho(l)^q = E.

Newton's method runs on the square system

    F(s, t) = ( R12(s, t),  s^p * l11(s, t)^q - 1 )

where l11 is the longitude eigenvalue aligned with the eigenvalue s of
rho(x) (the longitude is upper-triangular in rho(x)'s eigenbasis on the
variety).  Every candidate is re-verified against the authoritative
matrix residual ||rho(x)^p rho(l)^q - E|| before being reported.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateU, InvalidSlope, OffVariety
from .linalg import E2, mat2_inverse
from .riley import (RileyPoint, longitude_l11, longitude_l11_ds,
                    longitude_l11_dt, longitude_matrix_closed,
                    longitude_matrix_word, longitude_trace, make_point,
                    rep_matrices, riley_poly, riley_poly_ds, riley_poly_dt,
                    solve_t, trace_u)
from .formulas import DEGENERATE_TOL, torsion_surgered

L21_TOL = 1e-8
PARABOLIC_TOL = 1e-6     # |s^2 - 1| below this: eigenvalue eqn degenerates
DEGENERATE_U2_TOL = 1e-6  # |u^2 - 5| annotation threshold

CSV_HEADER = ("s_re,s_im,t_re,t_im,branch,u_re,u_im,trl_re,trl_im,"
              "lambda_re,lambda_im,tau_re,tau_im,res_variety,res_relation,"
              "flags")


@dataclass(frozen=True)
class SurgerySlope:
    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) == (0, 0):
            raise InvalidSlope("slope (0, 0)")
        if math.gcd(abs(self.p), abs(self.q)) != 1:
            raise InvalidSlope(f"gcd(|{self.p}|, |{self.q}|) != 1")


@dataclass(frozen=True)
class GridSpec:
    """Seed grid: concentric circles of |s| values times equally spaced
    angles, both t-branches per seed."""
    circles: tuple[float, ...] = (0.5, 1.0, 2.0)
    angles: int = 24

    def seeds(self):
        for r in self.circles:
            for k in range(self.angles):
                theta = 2 * math.pi * (k + 0.5) / self.angles
                yield r * complex(math.cos(theta), math.sin(theta))


@dataclass
class SurgerySolution:
    point: RileyPoint
    u: complex
    trace_l: complex
    lam: complex             # aligned longitude eigenvalue l11
    relation_residual: float
    torsion: complex | None
    flags: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        def cx(z):
            return None if z is None else {"re": z.real, "im": z.imag}
        return {"point": self.point.to_json(), "u": cx(self.u),
                "trace_l": cx(self.trace_l), "lambda": cx(self.lam),
                "relation_residual": self.relation_residual,
                "torsion": cx(self.torsion), "flags": list(self.flags)}

    def to_csv_row(self) -> str:
        def f(v):
            return f"{v:.17g}"
        tau_re = f(self.torsion.real) if self.torsion is not None else ""
        tau_im = f(self.torsion.imag) if self.torsion is not None else ""
        cells = [f(self.point.s.real), f(self.point.s.imag),
                 f(self.point.t.real), f(self.point.t.imag),
                 self.point.branch,
                 f(self.u.real), f(self.u.imag),
                 f(self.trace_l.real), f(self.trace_l.imag),
                 f(self.lam.real), f(self.lam.imag),
                 tau_re, tau_im,
                 f(self.point.residual), f(self.relation_residual),
                 ";".join(self.flags)]
        return ",".join(cells)


def aligned_longitude_eigenvalue(p: RileyPoint, l21_tol: float = L21_TOL) -> complex:
    """l11 of the closed-form longitude matrix: on the variety l21
    vanishes, so l11 is the eigenvalue of rho(l) on rho(x)'s
    s-eigenvector.  Raises OffVariety when l21 is not small."""
    ml = longitude_matrix_closed(p)
    scale = max(1.0, float(np.max(np.abs(ml))))
    if abs(ml[1, 0]) > l21_tol * scale:
        raise OffVariety(f"|l21| = {abs(ml[1, 0]):.3e}")
    return complex(ml[0, 0])


def _matrix_power(m: np.ndarray, n: int) -> np.ndarray:
    if n < 0:
        return np.linalg.matrix_power(mat2_inverse(m), -n)
    return np.linalg.matrix_power(m, n)


def surgery_residual(pt: RileyPoint, slope: SurgerySlope) -> tuple[complex, float]:
    """(scalar, matrix) residuals of the surgery relation x^p l^q = 1:
    the scalar form s^p lam^q - 1 and the Frobenius norm
    ||rho(x)^p rho(l)^q - E||.  The matrix norm is authoritative."""
    lam = longitude_l11(pt.s, pt.t)
    scalar = pt.s ** slope.p * lam ** slope.q - 1
    mx, _ = rep_matrices(pt)
    ml = longitude_matrix_word(pt)
    mat = _matrix_power(mx, slope.p) @ _matrix_power(ml, slope.q) - E2
    return complex(scalar), float(np.linalg.norm(mat))


def _newton(s0: complex, t0: complex, slope: SurgerySlope,
            tol: float, max_iter: int = 50) -> tuple[complex, complex] | None:
    p, q = slope.p, slope.q
    s, t = complex(s0), complex(t0)

    def fval(s, t):
        lam = longitude_l11(s, t)
        if abs(lam) < 1e-14 or abs(s) < 1e-14:
            return None
        f2 = s ** p * lam ** q - 1
        return np.array([riley_poly(s, t), f2]), lam

    cur = fval(s, t)
    if cur is None:
        return None
    f, lam = cur
    for _ in range(max_iter):
        res = float(np.max(np.abs(f)))
        if res <= tol:
            return s, t
        sp, lamq = s ** p, lam ** q
        j = np.array([
            [riley_poly_ds(s, t), riley_poly_dt(s, t)],
            [p * sp / s * lamq + q * sp * lamq / lam * longitude_l11_ds(s, t),
             q * sp * lamq / lam * longitude_l11_dt(s, t)],
        ])
        try:
            step = np.linalg.solve(j, f)
        except np.linalg.LinAlgError:
            return None
        # damped update: halve the step while the residual grows
        scale = 1.0
        for _ in range(10):
            s_new, t_new = s - scale * step[0], t - scale * step[1]
            if abs(s_new) > 1e-10:
                nxt = fval(s_new, t_new)
                if nxt is not None and float(np.max(np.abs(nxt[0]))) < res:
                    s, t, (f, lam) = s_new, t_new, nxt
                    break
            scale /= 2
        else:
            return None
    return (s, t) if float(np.max(np.abs(f))) <= tol else None


def solve_surgery(slope: SurgerySlope, grid: GridSpec | None = None,
                  tol: float = 1e-10) -> list[SurgerySolution]:
    """Newton search from the seed grid; deduplicated by character
    (u, tr rho(l)) within 10*tol, sorted by |u| then arg(u)."""
    grid = grid or GridSpec()
    newton_tol = min(tol, 1e-12)
    # (p, q) and (-p, -q) impose the same relation; normalize the sign so
    # both slopes search (and find) identical character sets
    newton_slope = slope
    if slope.p < 0 or (slope.p == 0 and slope.q < 0):
        newton_slope = SurgerySlope(-slope.p, -slope.q)
    raw: list[tuple[complex, complex]] = []
    for s0 in grid.seeds():
        for branch_pt in solve_t(s0):
            got = _newton(s0, branch_pt.t, newton_slope, newton_tol)
            if got is not None:
                raw.append(got)

    solutions: list[SurgerySolution] = []
    for s, t in raw:
        # re-label the branch by matching against solve_t at the root
        branch = "?"
        try:
            plus_pt, minus_pt = solve_t(s)
            if abs(plus_pt.t - t) <= abs(minus_pt.t - t):
                branch = "+"
            else:
                branch = "-"
        except Exception:
            pass
        pt = make_point(s, t, branch)
        if not pt.on_variety(tol):
            continue
        _, mat_res = surgery_residual(pt, slope)
        flags = []
        if abs(s * s - 1) <= PARABOLIC_TOL:
            flags.append("parabolic")
        if mat_res > max(tol, 1e-9):
            continue
        u = trace_u(s)
        if abs(u * u - 5) <= DEGENERATE_U2_TOL:
            flags.append("degenerate")
        try:
            tau = torsion_surgered(u)
        except DegenerateU:
            tau = None
            if "degenerate" not in flags:
                flags.append("degenerate")
        try:
            lam = aligned_longitude_eigenvalue(pt)
        except OffVariety:
            continue
        solutions.append(SurgerySolution(
            point=pt, u=u, trace_l=complex(longitude_trace(pt)), lam=lam,
            relation_residual=mat_res, torsion=tau, flags=flags))

    # character dedup (also merges s <-> 1/s)
    dedup_tol = 10 * tol
    unique: list[SurgerySolution] = []
    for sol in solutions:
        dup = False
        for kept in unique:
            if (abs(sol.u - kept.u) <= dedup_tol * max(1.0, abs(kept.u))
                    and abs(sol.trace_l - kept.trace_l)
                    <= dedup_tol * max(1.0, abs(kept.trace_l))):
                dup = True
                break
        if not dup:
            unique.append(sol)
    unique.sort(key=lambda sol: (abs(sol.u),
                                 math.atan2(sol.u.imag, sol.u.real),
                                 sol.point.branch))
    return unique


def surgery_table(slope: SurgerySlope, grid: GridSpec | None = None,
                  tol: float = 1e-10) -> list[SurgerySolution]:
    """Alias for solve_surgery; rows carry everything the CSV needs."""
    return solve_surgery(slope, grid, tol)


def table_to_csv(solutions: list[SurgerySolution]) -> str:
    lines = [CSV_HEADER] + [sol.to_csv_row() for sol in solutions]
    return "\n".join(lines) + "\n"


def table_to_json(solutions: list[SurgerySolution]) -> str:
    return json.dumps([sol.to_json() for sol in solutions], indent=2)
