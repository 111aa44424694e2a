import cmath
import math

import pytest

import theta_roots as tr


def test_chromatic_polynomial_counts_colorings():
    coeffs = tr.chromatic_polynomial([2, 2, 2])
    value = sum(c * 3**j for j, c in enumerate(coeffs))
    assert value == 30 == tr.brute_force_chromatic([2, 2, 2], 3)


def test_big_coefficients_are_python_ints():
    coeffs = tr.htilde_polynomial([2] * 20)
    assert all(isinstance(c, int) for c in coeffs)
    assert coeffs[-1] == 1


def test_bound_report_row():
    rep = tr.bound_report([2, 2, 3])
    assert rep.paths == [2, 2, 3]
    assert abs(rep.rho - 1.3247179572) < 5e-10
    assert abs(rep.r - 1.4655712319) < 5e-10
    assert abs(rep.rtilde - 1.4655712319) < 5e-10
    assert abs(rep.calR - 2.8235871268) < 5e-10


def test_table_reproduces():
    rows = tr.reproduce_table1()
    assert len(rows) == 35
    assert all(ok for *_, ok in rows)


def test_certificate():
    overall, comparisons = tr.verify_theorem_k(8)
    assert overall
    assert all(holds for *_, holds in comparisons)


def test_lambert_w():
    assert abs(tr.lambert_w(math.e) - 1) < 1e-14
    w = tr.lambert_w(-2 + 1j, 1)
    assert abs(w * cmath.exp(w) - (-2 + 1j)) < 1e-12


def test_k2k_and_asymptotics():
    roots = tr.k2k_chromatic_roots(9)
    assert abs(max(abs(z - 1) for z in roots) - 3.7468849281) < 5e-10
    sol = tr.asymptotic_root(10000, math.pi)
    assert sol["rel_error"] < 1e-12
    assert abs(sol["z_exact"] - 1) < tr.calR_2k(10000)


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        tr.h_polynomial([1, 2, 2])
    with pytest.raises(ValueError):
        tr.brute_force_chromatic([9, 9], 3)
    with pytest.raises(ValueError):
        tr.xi_solve(0.9, 0.1)
