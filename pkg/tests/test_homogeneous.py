"""Reductive quotients, Killing-field lengths, Weyl orders, Berger metrics,
and the homogeneous-space catalog."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homoglab.compact_lie import (
    CompactGroupSpec,
    algebra_basis,
    haar_sample,
    random_algebra_element,
)
from homoglab.errors import (
    InvalidCoefficients,
    InvalidParameter,
    NotASubalgebra,
    ParseError,
    UnsupportedType,
    ZeroField,
)
from homoglab.homogeneous import (
    NOT_EQUAL_RANK,
    HomogeneousSpaceSpec,
    berger_right_isometry_algebra,
    bracket,
    catalog_load,
    catalog_verify,
    center_of_gravity,
    check_isotropy_split,
    euler_characteristic,
    group_space,
    hopf_sphere_space,
    killing_length_profile,
    maximal_abelian_dimension,
    principal_so3_in_so5,
    reductive_complement,
    series_of_group,
    so5_so3_space,
    so_block_subalgebra,
    su2_half_pauli_basis,
    su_block_subalgebra,
    u1_centralizer_direction,
    uniform_rotation_2d,
    weyl_group_order,
)

SU3 = CompactGroupSpec("SU", 3)


def test_reductive_complement_dimensions():
    assert len(hopf_sphere_space(1).complement_basis) == 3
    assert len(hopf_sphere_space(2).complement_basis) == 5
    assert len(so5_so3_space().complement_basis) == 7


def test_reductive_complement_rejects_non_subalgebra():
    # two root vectors whose bracket escapes their span
    a = np.zeros((3, 3), dtype=complex)
    a[0, 1], a[1, 0] = 1.0, -1.0
    b = np.zeros((3, 3), dtype=complex)
    b[0, 2], b[2, 0] = 1.0, -1.0
    with pytest.raises(NotASubalgebra):
        reductive_complement(SU3, [a, b])


def test_principal_so3_brackets_close():
    h = principal_so3_in_so5()
    assert len(h) == 3
    span = np.array([X.ravel() for X in h])
    for a in h:
        for b in h:
            c = bracket(a, b).ravel()
            residual = c - span.T @ np.linalg.lstsq(span.T, c, rcond=None)[0]
            assert np.max(np.abs(residual)) < 1e-10


def test_u1_direction_centralizes_block():
    d = u1_centralizer_direction(3, 2)
    for h in su_block_subalgebra(3, 2):
        assert np.max(np.abs(bracket(d, h))) < 1e-12
    assert np.isclose(-np.trace(d @ d).real, 1.0, atol=1e-12)


# ---------------------------------------------------------------------------
# Killing length profiles


def test_group_manifold_fields_have_constant_length(rng):
    for spec in (CompactGroupSpec("SU", 2), CompactGroupSpec("SO", 4)):
        space = group_space(spec)
        xi = random_algebra_element(spec, rng, unit=True)
        prof = killing_length_profile(space, xi, samples=120, rng=rng)
        assert prof.relative_gap <= 1e-10


def test_hopf_right_field_constant_left_field_not(rng):
    space = hopf_sphere_space(2)
    d = u1_centralizer_direction(3, 2)
    right = killing_length_profile(space, None, samples=150, rng=rng, right=d)
    assert right.gap <= 1e-10
    left = killing_length_profile(space, d, samples=150, rng=rng)
    assert left.relative_gap > 0.3


def test_left_profile_is_conjugation_equivariant(rng):
    """The field of Ad(h)xi at the coset of h*g has the same length as the
    field of xi at the coset of g."""
    space = hopf_sphere_space(2)
    xi = random_algebra_element(space.group, rng)
    h = haar_sample(space.group, rng)
    pts = [haar_sample(space.group, rng) for _ in range(8)]
    base = killing_length_profile(space, xi, points=pts)
    moved = killing_length_profile(
        space, h @ xi @ h.conj().T, points=[h @ g for g in pts]
    )
    np.testing.assert_allclose(
        (base.min, base.max, base.mean), (moved.min, moved.max, moved.mean), atol=1e-12
    )


def _round_s5_space():
    """SU(3)/SU(2) with block weights chosen so the quotient metric is the
    round metric induced from C^3 (fiber direction rescaled)."""
    h = su_block_subalgebra(3, 2)
    raw = []
    for (a, b) in [(0, 2), (1, 2)]:
        E = np.zeros((3, 3), dtype=complex)
        E[a, b], E[b, a] = 1.0, -1.0
        raw.append(E / np.sqrt(2.0))
        F = np.zeros((3, 3), dtype=complex)
        F[a, b] = F[b, a] = 1j
        raw.append(F / np.sqrt(2.0))
    u1 = u1_centralizer_direction(3, 2)
    m = tuple(raw) + (u1,)
    blocks = ((0.5, (0, 1, 2, 3)), (2.0 / 3.0, (4,)))
    return HomogeneousSpaceSpec("S5-round", SU3, h, m, blocks)


def test_left_field_length_matches_ambient_sphere_field(rng):
    """Cross-oracle: on the round S^5 = SU(3)/SU(2), the quotient formula for
    the field length must equal |xi x| for the ambient linear field at
    x = g e3."""
    space = _round_s5_space()
    e3 = np.array([0.0, 0.0, 1.0], dtype=complex)
    for _ in range(20):
        xi = random_algebra_element(SU3, rng)
        g = haar_sample(SU3, rng)
        quotient = killing_length_profile(space, xi, points=[g]).mean
        ambient = np.linalg.norm(xi @ (g @ e3))
        assert np.isclose(quotient, ambient, atol=1e-10)


def test_right_field_length_matches_ambient(rng):
    space = _round_s5_space()
    e3 = np.array([0.0, 0.0, 1.0], dtype=complex)
    d = u1_centralizer_direction(3, 2)
    prof = killing_length_profile(space, None, samples=25, rng=rng, right=d)
    assert prof.gap <= 1e-12
    assert np.isclose(prof.mean, np.linalg.norm(d @ e3), atol=1e-12)


def test_so5_so3_has_no_constant_direction(rng):
    space = so5_so3_space()
    worst = np.inf
    for _ in range(25):
        xi = random_algebra_element(space.group, rng, unit=True)
        prof = killing_length_profile(space, xi, samples=150, rng=rng)
        worst = min(worst, prof.relative_gap)
    assert worst > 1e-3


def test_profile_rejects_zero_field():
    space = hopf_sphere_space(2)
    with pytest.raises(ZeroField):
        killing_length_profile(space, np.zeros((3, 3)), samples=10)


def test_right_component_must_normalize_isotropy(rng):
    space = hopf_sphere_space(2)
    bad = np.zeros((3, 3), dtype=complex)
    bad[0, 2], bad[2, 0] = 1.0, -1.0  # moves the su(2) block
    with pytest.raises(InvalidParameter):
        killing_length_profile(space, None, samples=10, rng=rng, right=bad)


# ---------------------------------------------------------------------------
# rank detection and isotropy splitting


@pytest.mark.parametrize(
    "family,n,rank",
    [("SU", 2, 1), ("SU", 3, 2), ("SO", 4, 2), ("SO", 5, 2), ("Sp", 2, 2)],
)
def test_maximal_abelian_dimension_is_rank(family, n, rank, rng):
    spec = CompactGroupSpec(family, n)
    assert maximal_abelian_dimension(algebra_basis(spec), rng) == rank


def test_isotropy_split_so6_example(rng):
    group = CompactGroupSpec("SO", 6)
    h = so_block_subalgebra(6, 3, 0)
    nn = so_block_subalgebra(6, 3, 3)
    rep = check_isotropy_split(group, h, nn, rng)
    assert rep.all_factor_conditions
    assert rep.rank_full == 3 and rep.rank_split == 2
    assert not rep.equal_rank


def test_isotropy_split_equal_rank_case(rng):
    group = CompactGroupSpec("SO", 4)
    h = so_block_subalgebra(4, 2, 0)
    nn = so_block_subalgebra(4, 2, 2)
    rep = check_isotropy_split(group, h, nn, rng)
    assert rep.all_factor_conditions and rep.equal_rank


# ---------------------------------------------------------------------------
# Weyl orders and Euler characteristics

WEYL_CLOSED_FORMS = [
    ("A", 1, 2),
    ("A", 2, 6),
    ("A", 3, 24),
    ("A", 4, 120),
    ("A", 5, 720),
    ("B", 2, 8),
    ("B", 3, 48),
    ("B", 4, 384),
    ("C", 2, 8),
    ("C", 3, 48),
    ("D", 4, 192),
    ("D", 5, 1920),
    ("G2", 2, 12),
]


@pytest.mark.parametrize("series,rank,order", WEYL_CLOSED_FORMS)
def test_weyl_group_orders(series, rank, order):
    assert weyl_group_order(series, rank) == order


def test_weyl_rejects_unknown_series():
    with pytest.raises(UnsupportedType):
        weyl_group_order("E", 8)
    with pytest.raises(UnsupportedType):
        weyl_group_order("G2", 3)


def test_euler_characteristics():
    assert euler_characteristic(("A", 2), [("T", 2)]) == 6  # full flag of SU(3)
    assert euler_characteristic(("A", 2), [("A", 1), ("T", 1)]) == 3  # CP^2
    assert euler_characteristic(("A", 3), [("A", 2), ("T", 1)]) == 4  # CP^3
    assert euler_characteristic(("G2", 2), [("A", 2)]) == 2  # 6-sphere
    assert euler_characteristic(("C", 3), [("C", 1), ("C", 1), ("C", 1)]) == 6
    assert euler_characteristic(("B", 2), [("B", 1)]) == NOT_EQUAL_RANK
    assert euler_characteristic(("B", 2), [("T", 2)]) == 8


def test_euler_characteristic_rank_guard():
    with pytest.raises(InvalidParameter):
        euler_characteristic(("A", 1), [("T", 2)])


def test_series_of_group():
    assert series_of_group(CompactGroupSpec("SU", 4)) == ("A", 3)
    assert series_of_group(CompactGroupSpec("SO", 5)) == ("B", 2)
    assert series_of_group(CompactGroupSpec("SO", 6)) == ("D", 3)
    assert series_of_group(CompactGroupSpec("Sp", 3)) == ("C", 3)


# ---------------------------------------------------------------------------
# squashed 3-sphere isometry algebras


def test_half_pauli_bracket_relations():
    t1, t2, t3 = su2_half_pauli_basis()
    assert np.max(np.abs(bracket(t1, t2) - t3)) < 1e-12
    assert np.max(np.abs(bracket(t2, t3) - t1)) < 1e-12
    assert np.max(np.abs(bracket(t3, t1) - t2)) < 1e-12


def test_berger_dimensions():
    assert berger_right_isometry_algebra(1.0, 1.0).dimension == 3
    assert berger_right_isometry_algebra(0.5, 1.0).dimension == 1
    assert berger_right_isometry_algebra(0.3, 0.7).dimension == 0
    # equal squashed coefficients still leave the single rotation
    assert berger_right_isometry_algebra(0.5, 0.5).dimension == 1


def test_berger_round_case_recovers_full_algebra():
    rep = berger_right_isometry_algebra(1.0, 1.0)
    assert len(rep.matrix_basis) == 3
    for X in rep.matrix_basis:
        assert np.max(np.abs(X + X.conj().T)) < 1e-10


def test_berger_rejects_bad_coefficients():
    with pytest.raises(InvalidCoefficients):
        berger_right_isometry_algebra(0.0, 1.0)
    with pytest.raises(InvalidCoefficients):
        berger_right_isometry_algebra(-1.0, 0.5)


# ---------------------------------------------------------------------------
# averaging


def test_center_of_gravity_finite_rotations():
    # C3 rotation orbit of a point averages to the origin
    thetas = [2 * np.pi * k / 3 for k in range(3)]
    mats = [
        np.array([[np.cos(t), -np.sin(t)], [np.sin(t), np.cos(t)]]) for t in thetas
    ]
    w = np.array([1.0, 0.0])
    cog = center_of_gravity(mats, w)
    assert np.max(np.abs(cog)) < 1e-12


def test_center_of_gravity_haar_circle(rng):
    cog = center_of_gravity(
        lambda r: uniform_rotation_2d(r), np.array([1.0, 0.0]), samples=10_000, rng=rng
    )
    assert np.linalg.norm(cog) <= 0.02


# ---------------------------------------------------------------------------
# catalog


def test_catalog_loads_all_entries():
    entries = catalog_load()
    assert len(entries) == 19
    assert [e.id for e in entries] == list(range(1, 20))
    first = entries[0]
    assert first.G.startswith("SO") and first.H.startswith("SO")
    assert "clifford-rotation" in first.checks


def test_catalog_parse_errors(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("id: 1 | name: x | G: a | H: b | isometry_group: c | fibration: d | checks: y\nnot a record\n")
    with pytest.raises(ParseError) as err:
        catalog_load(bad)
    assert "line 2" in str(err.value)
    dup = tmp_path / "dup.txt"
    row = "id: 1 | name: x | G: a | H: b | isometry_group: c | fibration: d | checks: y\n"
    dup.write_text(row + row)
    with pytest.raises(ParseError):
        catalog_load(dup)


def test_catalog_verify_documented_entries(rng):
    for entry_id, key in [(1, "angle"), (10, "min_relative_gap"), (15, "relative_gap")]:
        rep = catalog_verify(entry_id, rng=rng, samples=100)
        assert rep.status == "passed"
        assert key in rep.evidence
    assert catalog_verify(17, rng=rng).evidence["dimensions"] == [3, 1, 0]
    assert catalog_verify(4, rng=rng).status == "informational"


def test_catalog_verify_unknown_entry(rng):
    with pytest.raises(InvalidParameter):
        catalog_verify(99, rng=rng)


@settings(deadline=None, max_examples=20, derandomize=True)
@given(st.integers(0, 2**32 - 1))
def test_jacobi_identity_su3(seed):
    r = np.random.default_rng(seed)
    X, Y, Z = (random_algebra_element(SU3, r) for _ in range(3))
    total = (
        bracket(X, bracket(Y, Z))
        + bracket(Y, bracket(Z, X))
        + bracket(Z, bracket(X, Y))
    )
    assert np.max(np.abs(total)) < 1e-10
