import numpy as np
import pytest

from fig8torsion.errors import InvalidSlope, OffVariety
from fig8torsion.linalg import E2
from fig8torsion.riley import (longitude_matrix_word, longitude_trace,
                               make_point, rep_matrices, solve_t)
from fig8torsion.surgery import (CSV_HEADER, GridSpec, SurgerySlope,
                                 aligned_longitude_eigenvalue, solve_surgery,
                                 surgery_residual, surgery_table,
                                 table_to_csv, table_to_json)
from fig8torsion.formulas import torsion_surgered
from fig8torsion.verify import sample_variety_points


def test_slope_validation():
    SurgerySlope(1, 0)
    SurgerySlope(-3, 2)
    with pytest.raises(InvalidSlope):
        SurgerySlope(0, 0)
    with pytest.raises(InvalidSlope):
        SurgerySlope(6, 4)


def test_aligned_eigenvalue_geometric():
    lam = aligned_longitude_eigenvalue(solve_t(1.0)[0])
    assert abs(lam - (-1)) < 1e-10


def test_aligned_eigenvalue_properties_random():
    for pt in sample_variety_points(50, seed=0):
        lam = aligned_longitude_eigenvalue(pt)
        trl = longitude_trace(pt)
        scale = max(1.0, abs(lam), abs(trl))
        assert abs(lam + 1 / lam - trl) <= 1e-8 * scale
        # lam * l22 = det L = 1 with l21 = 0
        from fig8torsion.riley import longitude_matrix_closed
        l22 = longitude_matrix_closed(pt)[1, 1]
        assert abs(lam * l22 - 1) <= 1e-8 * scale


def test_aligned_eigenvalue_off_variety():
    with pytest.raises(OffVariety):
        aligned_longitude_eigenvalue(make_point(2.0, 0.7))


def test_surgery_residual_nonzero_cases():
    pt = solve_t(1.0)[0]
    # slope (1,0): rho(x) != E for every irreducible point
    _, res = surgery_residual(pt, SurgerySlope(1, 0))
    assert res > 0.5
    # slope (0,1) at the geometric point: tr rho(l) = -2 != 2
    _, res = surgery_residual(pt, SurgerySlope(0, 1))
    assert res > 0.5


def test_scalar_vs_matrix_residual():
    # matrix norm small multiple of scalar residual when s^2 away from 1
    slope = SurgerySlope(2, 1)
    for pt in sample_variety_points(30, seed=1):
        if abs(pt.s * pt.s - 1) < 0.1:
            continue
        scalar, mat = surgery_residual(pt, slope)
        if abs(scalar) < 1e-6:
            assert mat <= 1e3 * max(abs(scalar), 1e-12)


def test_trivial_slope_empty():
    assert solve_surgery(SurgerySlope(1, 0)) == []


def test_solutions_satisfy_relation():
    slope = SurgerySlope(1, 1)
    sols = solve_surgery(slope)
    assert sols, "expected at least one solution for slope 1/1"
    for sol in sols:
        mx, _ = rep_matrices(sol.point)
        ml = longitude_matrix_word(sol.point)
        res = np.linalg.norm(mx @ ml - E2)
        assert res <= 1e-9
        assert sol.point.residual <= 1e-9
        if sol.torsion is not None:
            expect = torsion_surgered(sol.u)
            assert abs(sol.torsion - expect) <= 1e-8 * max(1, abs(expect))


def test_solution_torsion_matches_report():
    from fig8torsion.formulas import full_report
    for sol in solve_surgery(SurgerySlope(1, 1)):
        if sol.torsion is None:
            continue
        rep = full_report(sol.point)
        if rep.tau_surgered is not None:
            assert abs(sol.torsion - rep.tau_surgered) \
                <= 1e-8 * max(1, abs(sol.torsion))


def test_slope_sign_symmetry():
    a = solve_surgery(SurgerySlope(2, 1))
    b = solve_surgery(SurgerySlope(-2, -1))
    assert len(a) == len(b)
    for sa, sb in zip(a, b):
        assert abs(sa.u - sb.u) <= 1e-7 * max(1, abs(sa.u))
        assert abs(sa.trace_l - sb.trace_l) <= 1e-7 * max(1, abs(sa.trace_l))


def test_determinism():
    grid = GridSpec(circles=(0.5, 1.0, 2.0), angles=24)
    a = solve_surgery(SurgerySlope(3, 1), grid)
    b = solve_surgery(SurgerySlope(3, 1), grid)
    assert [sol.to_csv_row() for sol in a] == [sol.to_csv_row() for sol in b]


def test_sorted_by_u():
    sols = solve_surgery(SurgerySlope(1, 1))
    keys = [(abs(s.u), np.angle(s.u)) for s in sols]
    assert keys == sorted(keys)


def test_table_formats():
    sols = surgery_table(SurgerySlope(1, 1))
    csv = table_to_csv(sols)
    lines = csv.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == len(sols) + 1
    assert all(len(line.split(",")) == len(CSV_HEADER.split(","))
               for line in lines[1:])
    import json
    data = json.loads(table_to_json(sols))
    assert len(data) == len(sols)
    if data:
        assert set(data[0]) == {"point", "u", "trace_l", "lambda",
                                "relation_residual", "torsion", "flags"}


def test_empty_table_csv():
    assert table_to_csv([]) == CSV_HEADER + "\n"
