"""Homogeneity pipeline for space-form quotients: freeness, per-element
constant displacement, and transitivity of the deck group's centralizer.

Two ambient models are supported.  On the round sphere S^{n} the deck group is
a finite set of orthogonal matrices and the ambient isometry algebra is
so(n+1).  On a compact group manifold with its bi-invariant metric the deck
group is a finite set of two-sided translations x -> g1^{-1} x g2 and the
ambient algebra is the sum of the left- and right-translation fields, encoded
as stacked pairs (X, Y) acting through x -> exp(tX) x exp(tY).

A full-rank result certifies transitivity at the sampled points only; reports
say "witness", never "proof".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from ._linalg import gram_schmidt, null_space, rank_rel
from .compact_lie import (
    CompactGroupSpec,
    TwoSidedIsometry,
    algebra_basis,
    center_elements,
    check_in_group,
    compose,
    group_displacement_profile,
    haar_sample,
    is_constant_displacement_translation,
    is_identity_isometry,
    isometry_inverse,
    min_displacement,
)
from .constant_curvature import (
    haar_sphere,
    is_clifford_sphere,
    is_free_on_sphere,
    sphere_displacement_profile,
)
from .errors import EmptyAmbient, InvalidParameter, ModelMismatch, NotClosed
from .finite_groups import FiniteQuaternionGroup, left_translation_matrix

_CLOSURE_TOL = 1e-9

NOT_FREE = "NotFree"
NOT_CONSTANT_DISPLACEMENT = "NotConstantDisplacement"
HOMOGENEOUS_WITNESS_FOUND = "HomogeneousWitnessFound"
NO_WITNESS_IN_AMBIENT = "NoWitnessInAmbient"


@dataclass(frozen=True)
class SphereModel:
    """Round S^{ambient_dim - 1} inside R^{ambient_dim}."""

    ambient_dim: int

    def __post_init__(self):
        if self.ambient_dim < 3:
            raise InvalidParameter("sphere model needs ambient dimension >= 3")

    @property
    def manifold_dim(self) -> int:
        return self.ambient_dim - 1


@dataclass(frozen=True)
class GroupManifoldModel:
    """A compact group with its bi-invariant metric."""

    spec: CompactGroupSpec

    @property
    def manifold_dim(self) -> int:
        return self.spec.algebra_dim


def sphere_ambient_basis(ambient_dim: int) -> tuple[np.ndarray, ...]:
    return algebra_basis(CompactGroupSpec("SO", ambient_dim))


def group_ambient_basis(spec: CompactGroupSpec) -> tuple[np.ndarray, ...]:
    """Basis of left ⊕ right translation generators, as stacked (X, Y) pairs."""
    d = spec.matrix_size
    zero = np.zeros((d, d), dtype=complex)
    out = []
    for X in algebra_basis(spec):
        out.append(np.stack([X.astype(complex), zero]))
    for Y in algebra_basis(spec):
        out.append(np.stack([zero, Y.astype(complex)]))
    return tuple(out)


def left_translation_isometry(spec: CompactGroupSpec, a: np.ndarray) -> TwoSidedIsometry:
    """The map x -> a x as a two-sided translation."""
    a = check_in_group(spec, a)
    return TwoSidedIsometry(np.asarray(a).conj().T, spec.identity())


@dataclass(frozen=True, eq=False)
class DeckGroup:
    """A finite group of isometries in one declared ambient model."""

    model: SphereModel | GroupManifoldModel
    elements: tuple

    def __post_init__(self):
        if isinstance(self.model, SphereModel):
            self._validate_sphere()
        else:
            self._validate_group()

    @property
    def order(self) -> int:
        return len(self.elements)

    # -- validation ---------------------------------------------------------

    def _validate_sphere(self):
        n = self.model.ambient_dim
        mats = []
        for g in self.elements:
            g = np.asarray(g, dtype=float)
            if g.shape != (n, n):
                raise ModelMismatch(f"expected {n}x{n} matrices")
            if np.max(np.abs(g.T @ g - np.eye(n))) > _CLOSURE_TOL:
                raise ModelMismatch("element is not orthogonal")
            mats.append(g)
        if not mats:
            raise InvalidParameter("deck group is empty")
        flat = np.array([m.ravel() for m in mats])
        tree = cKDTree(flat)
        if tree.query(np.eye(n).ravel())[0] > _CLOSURE_TOL:
            raise NotClosed("deck group does not contain the identity")
        k = len(mats)
        prods = np.einsum("aij,bjk->abik", flat.reshape(k, n, n), flat.reshape(k, n, n))
        d, _ = tree.query(prods.reshape(k * k, n * n))
        if np.max(d) > _CLOSURE_TOL:
            raise NotClosed("deck group is not closed under composition")
        dinv, _ = tree.query(np.array([m.T.ravel() for m in mats]))
        if np.max(dinv) > _CLOSURE_TOL:
            raise NotClosed("deck group is not closed under inverse")

    def _validate_group(self):
        spec = self.model.spec
        pairs = []
        for iso in self.elements:
            if not isinstance(iso, TwoSidedIsometry) or iso.inverted:
                raise ModelMismatch("group-manifold decks consist of translation pairs")
            check_in_group(spec, iso.g1)
            check_in_group(spec, iso.g2)
            pairs.append(iso)
        if not pairs:
            raise InvalidParameter("deck group is empty")
        if not any(is_identity_isometry(spec, iso, tol=_CLOSURE_TOL) for iso in pairs):
            raise NotClosed("deck group does not contain the identity")
        center = center_elements(spec)

        def same_map(a: TwoSidedIsometry, b: TwoSidedIsometry) -> bool:
            return any(
                np.max(np.abs(b.g1 - z * a.g1)) <= _CLOSURE_TOL
                and np.max(np.abs(b.g2 - z * a.g2)) <= _CLOSURE_TOL
                for z in [zc[0, 0] for zc in center]
            )

        for a in pairs:
            for b in pairs:
                prod = compose(a, b)
                if not any(same_map(prod, c) for c in pairs):
                    raise NotClosed("deck group is not closed under composition")
            if not any(same_map(isometry_inverse(a), c) for c in pairs):
                raise NotClosed("deck group is not closed under inverse")


def sphere_deck(matrices, ambient_dim: int | None = None) -> DeckGroup:
    mats = [np.asarray(m, dtype=float) for m in matrices]
    if not mats:
        raise InvalidParameter("deck group is empty")
    n = ambient_dim if ambient_dim is not None else mats[0].shape[0]
    return DeckGroup(SphereModel(n), tuple(mats))


def sphere_deck_from_quaternions(group: FiniteQuaternionGroup) -> DeckGroup:
    """Left multiplication action of a finite quaternion group on S^3."""
    mats = tuple(left_translation_matrix(q) for q in group.elements)
    return DeckGroup(SphereModel(4), mats)


def group_deck(spec: CompactGroupSpec, isometries) -> DeckGroup:
    return DeckGroup(GroupManifoldModel(spec), tuple(isometries))


# ---------------------------------------------------------------------------
# centralizer and transitivity


def _ad_isometry(model, gamma, ambient_element):
    if isinstance(model, SphereModel):
        g = np.asarray(gamma)
        return g @ ambient_element @ g.T
    X, Y = ambient_element[0], ambient_element[1]
    g1, g2 = gamma.g1, gamma.g2
    return np.stack([g1.conj().T @ X @ g1, g2.conj().T @ Y @ g2])


def _vec(E: np.ndarray) -> np.ndarray:
    E = np.asarray(E)
    if np.iscomplexobj(E):
        return np.concatenate([E.real.ravel(), E.imag.ravel()])
    return E.ravel()


def centralizer_algebra(deck: DeckGroup, ambient_basis) -> tuple:
    """Orthonormal basis of the ambient directions fixed by Ad of every deck
    element — the common null space of the stacked (Ad(γ) − I) maps."""
    basis = list(ambient_basis)
    if not basis:
        raise EmptyAmbient("ambient basis is empty")
    blocks = []
    for gamma in deck.elements:
        blocks.append(
            np.column_stack(
                [_vec(_ad_isometry(deck.model, gamma, b) - b) for b in basis]
            )
        )
    M = np.vstack(blocks)
    if np.max(np.abs(M)) <= 1e-12:  # identity-only deck: everything commutes
        coeff = np.eye(len(basis))
    else:
        coeff = null_space(M, rel_cutoff=1e-8)
    out = [sum(ck * bk for ck, bk in zip(c, basis)) for c in coeff.T]
    return tuple(gram_schmidt(out, lambda A, B: float(np.dot(_vec(A), _vec(B)))))


def _tangent_rows(model, Z_basis, x):
    if isinstance(model, SphereModel):
        return np.array([_vec(np.asarray(X) @ x) for X in Z_basis])
    xinv = np.asarray(x).conj().T
    return np.array(
        [_vec(xinv @ np.asarray(E[0]) @ x + np.asarray(E[1])) for E in Z_basis]
    )


def transitivity_rank(
    Z_basis,
    model,
    points: int,
    rng: np.random.Generator,
    *,
    include_base: bool = False,
):
    """Minimum over sampled points of the rank of the centralizer fields' span
    in the tangent space.  Returns (min rank, dim M).

    By default the points are random (hence generic); ``include_base`` adds the
    base point (first coordinate vector / group identity), where symmetric
    configurations can drop rank.
    """
    if points < 5:
        raise InvalidParameter("need at least 5 points")
    Z_basis = list(Z_basis)
    if isinstance(model, SphereModel):
        base = np.zeros(model.ambient_dim)
        base[0] = 1.0
        pts = list(haar_sphere(model.ambient_dim, points, rng))
    else:
        base = model.spec.identity()
        pts = [haar_sample(model.spec, rng) for _ in range(points)]
    if include_base:
        pts.insert(0, base)
    dim = model.manifold_dim
    if not Z_basis:
        return 0, dim
    min_rank = dim + 1
    for x in pts:
        rows = _tangent_rows(model, Z_basis, x)
        min_rank = min(min_rank, rank_rel(rows, rel_cutoff=1e-8))
    return min_rank, dim


# ---------------------------------------------------------------------------
# the pipeline


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 0
    samples: int = 200
    points: int = 20
    tol: float = 1e-7
    multistarts: int = 4
    refine_steps: int = 80

    def __post_init__(self):
        if self.samples < 10:
            raise InvalidParameter("samples must be >= 10")
        if self.tol <= 0:
            raise InvalidParameter("tol must be positive")
        if self.points < 5:
            raise InvalidParameter("points must be >= 5")


@dataclass(frozen=True)
class ElementEvidence:
    element_id: int
    constant: bool
    value: float  # displacement angle when constant, sampled gap when not


@dataclass(frozen=True)
class HomogeneityReport:
    free: bool
    free_offender: int | None
    clifford_per_element: tuple[ElementEvidence, ...]
    centralizer_dim: int
    transitivity: tuple[int, int, int]  # (points tested, min rank, dim M)
    verdict: str
    seed: int
    tolerances: dict
    forward_max_gap: float | None
    note: str = "transitivity certified at sampled points only (witness, not proof)"

    def to_json_dict(self) -> dict:
        pts, min_rank, dim = self.transitivity
        return {
            "free": self.free,
            "elements": [
                {"id": e.element_id, "constant": e.constant, "value": e.value}
                for e in self.clifford_per_element
            ],
            "centralizer_dim": self.centralizer_dim,
            "rank_evidence": {
                "points": pts,
                "min_rank": min_rank,
                "dim": dim,
                "forward_max_gap": self.forward_max_gap,
                "scope": self.note,
            },
            "verdict": self.verdict,
            "seed": self.seed,
            "tolerances": self.tolerances,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def verdict_from_evidence(free: bool, all_constant: bool, min_rank: int, dim: int) -> str:
    """The report verdict as a pure function of its evidence fields."""
    if not free:
        return NOT_FREE
    if not all_constant:
        return NOT_CONSTANT_DISPLACEMENT
    if min_rank == dim:
        return HOMOGENEOUS_WITNESS_FOUND
    return NO_WITNESS_IN_AMBIENT


def _sphere_element_evidence(deck, config, rng):
    out = []
    for i, g in enumerate(deck.elements):
        ok, angle = is_clifford_sphere(g, tol=1e-9)
        if ok:
            out.append(ElementEvidence(i, True, float(angle)))
        else:
            prof = sphere_displacement_profile(g, config.samples, rng)
            out.append(ElementEvidence(i, False, prof.gap))
    return tuple(out)


def _group_element_evidence(deck, config, rng):
    spec = deck.model.spec
    out = []
    for i, iso in enumerate(deck.elements):
        res = is_constant_displacement_translation(
            spec, iso, tol=config.tol, samples=config.samples, rng=rng
        )
        value = res.profile.mean if res.constant else res.profile.gap
        out.append(ElementEvidence(i, res.constant, float(value)))
    return tuple(out)


def verify_instance(
    deck: DeckGroup,
    model=None,
    config: VerifyConfig | None = None,
) -> HomogeneityReport:
    """Run the full pipeline: freeness, constant displacement per element,
    centralizer computation, transitivity rank, and the forward re-check."""
    if model is not None and model != deck.model:
        raise ModelMismatch("explicit model disagrees with the deck group's model")
    model = deck.model
    config = config if config is not None else VerifyConfig()
    rng = np.random.default_rng(config.seed)

    free_offender = None
    if isinstance(model, SphereModel):
        freeness = is_free_on_sphere(list(deck.elements), tol=1e-9)
        free = freeness.free
        free_offender = freeness.offender
        elements = _sphere_element_evidence(deck, config, rng)
        ambient = sphere_ambient_basis(model.ambient_dim)
    else:
        spec = model.spec
        free = True
        for i, iso in enumerate(deck.elements):
            if is_identity_isometry(spec, iso, tol=_CLOSURE_TOL):
                continue
            val, _ = min_displacement(
                spec,
                iso,
                multistarts=config.multistarts,
                refine_steps=config.refine_steps,
                rng=rng,
            )
            if val <= config.tol:
                free = False
                free_offender = i
                break
        elements = _group_element_evidence(deck, config, rng)
        ambient = group_ambient_basis(spec)

    Z = centralizer_algebra(deck, ambient)
    min_rank, dim = transitivity_rank(
        Z, model, config.points, rng, include_base=True
    )
    all_constant = all(e.constant for e in elements)
    verdict = verdict_from_evidence(free, all_constant, min_rank, dim)

    forward_max_gap = None
    if verdict == HOMOGENEOUS_WITNESS_FOUND:
        gaps = []
        for iso in deck.elements:
            if isinstance(model, SphereModel):
                prof = sphere_displacement_profile(iso, config.samples, rng)
            else:
                prof = group_displacement_profile(model.spec, iso, config.samples, rng)
            gaps.append(prof.gap)
        forward_max_gap = float(max(gaps))
        if forward_max_gap > config.tol:
            raise RuntimeError(
                "forward consistency violated: full rank but displacement gap "
                f"{forward_max_gap:.3e} exceeds {config.tol:.1e}"
            )

    return HomogeneityReport(
        free=free,
        free_offender=free_offender,
        clifford_per_element=elements,
        centralizer_dim=len(Z),
        transitivity=(config.points + 1, min_rank, dim),
        verdict=verdict,
        seed=config.seed,
        tolerances={"displacement": config.tol, "rank_cutoff": 1e-8},
        forward_max_gap=forward_max_gap,
    )
