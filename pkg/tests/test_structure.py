import dataclasses

import numpy as np
import pytest

from fcontact import (
    Convention,
    check_contact,
    check_f_axioms,
    check_normality,
    d_deform,
    killing_check,
    structure_at,
)

IDT = 1e-8


def test_axiom_battery_s_structure(s22, s22_points):
    report = check_f_axioms(s22, s22_points)
    assert report.max_residual < IDT
    assert all(report.pass_flags().values())
    assert report.rank_detected == 4


def test_axiom_battery_flat(flat, flat_points):
    report = check_f_axioms(flat, flat_points)
    assert report.max_residual < IDT
    assert report.rank_detected == 2


def test_axiom_battery_plain_fixture(flat_plain, flat_points):
    report = check_f_axioms(flat_plain, flat_points)
    assert report.max_residual < IDT


def test_doubled_f_breaks_the_squared_axiom(flat, flat_points):
    doubled = dataclasses.replace(flat, f_field=lambda x, base=flat.f_field: 2.0 * base(x))
    report = check_f_axioms(doubled, flat_points[:3])
    assert report.r_f_squared > 1.0  # 4 f^2 + I - proj = -3 f^2 = order 3


def test_empty_point_list_rejected(flat):
    with pytest.raises(ValueError):
        check_f_axioms(flat, [])


def test_contact_convention_pinning_s_structure(s22, s22_points):
    assert np.max(check_contact(s22, s22_points, Convention.HALF)) < IDT
    assert np.min(check_contact(s22, s22_points, Convention.PLAIN)) > 0.1


def test_contact_convention_pinning_flat(flat, flat_plain, flat_points):
    assert np.max(check_contact(flat, flat_points, Convention.HALF)) < IDT
    assert np.min(check_contact(flat, flat_points, Convention.PLAIN)) > 0.1
    assert np.max(check_contact(flat_plain, flat_points, Convention.PLAIN)) < IDT
    assert np.min(check_contact(flat_plain, flat_points, Convention.HALF)) > 0.1


def test_contact_uses_declared_convention_by_default(s22, s22_points):
    declared = check_contact(s22, s22_points)
    explicit = check_contact(s22, s22_points, Convention.HALF)
    assert np.allclose(declared, explicit)


def test_normality_s_structure(s22, s22_points):
    assert check_normality(s22, s22_points) < IDT


def test_normality_flat_fails(flat, flat_points):
    assert check_normality(flat, flat_points) > 0.1


def test_normality_preserved_by_deformation(s22, s22_points):
    deformed = d_deform(s22, 3.0)
    assert check_normality(deformed, s22_points) < IDT


def test_structure_tensors_basic_identities(s22, s22_points, flat, flat_points):
    for model, points in ((s22, s22_points), (flat, flat_points)):
        for p in points[:4]:
            st = structure_at(model, p)
            # eta_bar(xi_bar) = s
            assert st.eta_bar @ st.xi_bar == pytest.approx(model.s, abs=IDT)
            # F antisymmetric
            assert np.max(np.abs(st.F_mat + st.F_mat.T)) < IDT
            # eta_bar o f = 0 and f xi_bar = 0
            assert np.max(np.abs(st.eta_bar @ st.f_mat)) < IDT
            assert np.max(np.abs(st.f_mat @ st.xi_bar)) < IDT


def test_h_vanishes_on_s_structure(s22, s22_points):
    for p in s22_points[:4]:
        st = structure_at(s22, p)
        assert np.max(np.abs(st.h_mat)) < IDT


def test_h_eigenvalues_flat(flat, flat_points):
    for p in flat_points[:4]:
        st = structure_at(flat, p)
        eigs = np.sort(np.linalg.eigvals(st.h_mat[0]).real)
        assert np.allclose(eigs, [-1.0, 0.0, 1.0], atol=1e-8)


def test_h_operator_properties(flat, flat_points, deformed):
    # g-symmetric, traceless, anticommutes with f, annihilates xi and eta
    for model in [flat, deformed[2.0], deformed[0.5]]:
        for p in flat_points[:4]:
            st = structure_at(model, p)
            for a in range(model.s):
                h = st.h_mat[a]
                gh = st.g_mat @ h
                assert np.max(np.abs(gh - gh.T)) < IDT
                assert abs(np.trace(h)) < IDT
                assert np.max(np.abs(st.f_mat @ h + h @ st.f_mat)) < IDT
                assert np.max(np.abs(h @ st.xi_mat.T)) < IDT
                assert np.max(np.abs(st.eta_mat @ h)) < IDT


def test_killing_iff_h_zero(flat, s11, s22, flat_points, s11_points, s22_points):
    cases = [(flat, flat_points), (s11, s11_points), (s22, s22_points)]
    for model, points in cases:
        for a in range(model.s):
            k_res = killing_check(model, a, points)
            h_norm = max(
                float(np.max(np.abs(structure_at(model, p).h_mat[a]))) for p in points
            )
            assert (k_res < IDT) == (h_norm < IDT)


def test_killing_values(s22, s22_points, flat, flat_points):
    assert killing_check(s22, 0, s22_points) < IDT
    assert killing_check(s22, 1, s22_points) < IDT
    assert killing_check(flat, 0, flat_points) > 0.1


def test_zero_eta_degenerate_input_reported_not_thrown(flat, flat_points):
    # a broken model is reported through residuals, starting with eta(xi) != 1
    broken = dataclasses.replace(
        flat, eta_fields=(lambda x: np.array([0.0, 0.0, 0.0], dtype=object),)
    )
    report = check_f_axioms(broken, flat_points[:3])
    assert report.r_eta_xi == pytest.approx(1.0)
    assert not report.pass_flags()["eta_xi"]


def test_rank_check_detects_excess_rank(flat, flat_points):
    # replace f by a full-rank matrix: rank residual must trip
    full = dataclasses.replace(flat, f_field=lambda x: np.eye(3))
    report = check_f_axioms(full, flat_points[:2])
    assert report.rank_detected == 3
    assert not report.pass_flags()["rank"]
