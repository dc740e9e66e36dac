"""Finite subgroups of the unit quaternions.

Constructs the cyclic, binary dihedral and binary polyhedral groups by
breadth-first closure of explicit generators, classifies an arbitrary finite
unit-quaternion group by structural invariants, and checks the constraints a
group must satisfy to act freely with constant displacement on a round sphere
(every abelian subgroup cyclic, at most one involution and it is central, odd
Sylow subgroups cyclic).

All generator coefficients are closed forms in sqrt(2) and the golden ratio,
evaluated in double precision; closure deduplication runs at 1e-9.  Orders and
classification are then exact because they are computed on an integer
multiplication table recovered from the floating elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.spatial import cKDTree

from .errors import (
    ClosureExceedsLimit,
    InvalidParameter,
    NonUnitGenerator,
    NonUnitInput,
    NotClosed,
)

_DEDUP_TOL = 1e-9
_UNIT_TOL = 1e-10
_GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0


class Quaternion:
    """Immutable quaternion w + x i + y j + z k."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w: float, x: float = 0.0, y: float = 0.0, z: float = 0.0):
        object.__setattr__(self, "w", float(w))
        object.__setattr__(self, "x", float(x))
        object.__setattr__(self, "y", float(y))
        object.__setattr__(self, "z", float(z))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    def __repr__(self):
        return f"Quaternion({self.w:+.6f}, {self.x:+.6f}, {self.y:+.6f}, {self.z:+.6f})"

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        w1, x1, y1, z1 = self.w, self.x, self.y, self.z
        w2, x2, y2, z2 = other.w, other.x, other.y, other.z
        return Quaternion(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def inverse(self) -> "Quaternion":
        # unit quaternions only; callers validate norm
        return self.conjugate()

    def norm(self) -> float:
        return math.sqrt(self.w**2 + self.x**2 + self.y**2 + self.z**2)

    def to_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def isclose(self, other: "Quaternion", tol: float = _DEDUP_TOL) -> bool:
        return bool(np.max(np.abs(self.to_array() - other.to_array())) <= tol)

    @staticmethod
    def one() -> "Quaternion":
        return Quaternion(1.0)

    @staticmethod
    def i() -> "Quaternion":
        return Quaternion(0.0, 1.0)

    @staticmethod
    def j() -> "Quaternion":
        return Quaternion(0.0, 0.0, 1.0)

    @staticmethod
    def k() -> "Quaternion":
        return Quaternion(0.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True)
class GroupType:
    """Classification tag for a finite unit-quaternion group."""

    kind: str
    param: int | None = None

    CYCLIC = "cyclic"
    BINARY_DIHEDRAL = "binary_dihedral"
    BINARY_TETRAHEDRAL = "binary_tetrahedral"
    BINARY_OCTAHEDRAL = "binary_octahedral"
    BINARY_ICOSAHEDRAL = "binary_icosahedral"
    UNRECOGNIZED = "unrecognized"

    @classmethod
    def cyclic(cls, n: int) -> "GroupType":
        return cls(cls.CYCLIC, n)

    @classmethod
    def binary_dihedral(cls, m: int) -> "GroupType":
        return cls(cls.BINARY_DIHEDRAL, m)

    @classmethod
    def binary_tetrahedral(cls) -> "GroupType":
        return cls(cls.BINARY_TETRAHEDRAL)

    @classmethod
    def binary_octahedral(cls) -> "GroupType":
        return cls(cls.BINARY_OCTAHEDRAL)

    @classmethod
    def binary_icosahedral(cls) -> "GroupType":
        return cls(cls.BINARY_ICOSAHEDRAL)

    @classmethod
    def unrecognized(cls) -> "GroupType":
        return cls(cls.UNRECOGNIZED)

    def expected_order(self) -> int | None:
        if self.kind == self.CYCLIC:
            return self.param
        if self.kind == self.BINARY_DIHEDRAL:
            return 4 * self.param
        return {
            self.BINARY_TETRAHEDRAL: 24,
            self.BINARY_OCTAHEDRAL: 48,
            self.BINARY_ICOSAHEDRAL: 120,
        }.get(self.kind)


def generate_closure(generators, limit: int = 10000) -> list[Quaternion]:
    """Breadth-first closure of unit quaternion generators.

    Elements closer than 1e-9 are identified.  Raises NonUnitGenerator for a
    generator off the unit sphere and ClosureExceedsLimit when the closure
    grows past ``limit``.
    """
    gens = list(generators)
    for g in gens:
        if abs(g.norm() - 1.0) > _UNIT_TOL:
            raise NonUnitGenerator(f"generator has norm {g.norm():.12f}")
    elements = [Quaternion.one()]
    coords = [elements[0].to_array()]

    def find(q: Quaternion) -> int:
        arr = np.asarray(coords)
        d = np.max(np.abs(arr - q.to_array()), axis=1)
        idx = int(np.argmin(d))
        return idx if d[idx] <= _DEDUP_TOL else -1

    frontier = []
    for g in gens:
        if find(g) < 0:
            elements.append(g)
            coords.append(g.to_array())
            frontier.append(g)
    if not frontier:
        frontier = list(elements)
    while frontier:
        new = []
        for q in frontier:
            for g in gens:
                p = q * g
                if find(p) < 0:
                    elements.append(p)
                    coords.append(p.to_array())
                    new.append(p)
                    if len(elements) > limit:
                        raise ClosureExceedsLimit(
                            f"closure exceeded limit {limit}"
                        )
        frontier = new
    return elements


class FiniteQuaternionGroup:
    """A finite group of unit quaternions with its exact multiplication table."""

    def __init__(self, elements, generators=()):
        self.elements: list[Quaternion] = list(elements)
        self.generators: list[Quaternion] = list(generators)
        self._coords = np.array([q.to_array() for q in self.elements])
        self._table: np.ndarray | None = None
        self._identity = self.index_of(Quaternion.one())
        if self._identity < 0:
            raise NotClosed("element list does not contain the identity")

    @classmethod
    def from_generators(cls, generators, limit: int = 10000) -> "FiniteQuaternionGroup":
        return cls(generate_closure(generators, limit=limit), generators)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity_index(self) -> int:
        return self._identity

    def index_of(self, q: Quaternion, tol: float = 1e-6) -> int:
        d = np.max(np.abs(self._coords - q.to_array()), axis=1)
        idx = int(np.argmin(d))
        return idx if d[idx] <= tol else -1

    def multiplication_table(self) -> np.ndarray:
        """table[i, j] = index of elements[i] * elements[j]; exact integers."""
        if self._table is not None:
            return self._table
        n = self.order
        prods = np.empty((n * n, 4))
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                prods[i * n + j] = (a * b).to_array()
        tree = cKDTree(self._coords)
        dist, idx = tree.query(prods, k=1)
        if np.max(dist) > 1e-6:
            raise NotClosed(
                f"products stray {np.max(dist):.2e} from the element set"
            )
        self._table = idx.reshape(n, n).astype(np.int64)
        return self._table


# ---------------------------------------------------------------------------
# exact computations on multiplication tables


def table_inverses(table: np.ndarray, identity: int) -> np.ndarray:
    n = table.shape[0]
    inv = np.full(n, -1, dtype=np.int64)
    rows, cols = np.nonzero(table == identity)
    inv[rows] = cols
    if np.any(inv < 0):
        raise NotClosed("table has an element without inverse")
    return inv

def table_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    for e in range(n):
        if np.array_equal(table[e], np.arange(n)) and np.array_equal(
            table[:, e], np.arange(n)
        ):
            return e
    raise NotClosed("table has no identity element")


def element_orders(table: np.ndarray, identity: int) -> np.ndarray:
    n = table.shape[0]
    orders = np.zeros(n, dtype=np.int64)
    for i in range(n):
        p, k = i, 1
        while p != identity:
            p = table[p, i]
            k += 1
            if k > n:
                raise NotClosed("order computation did not terminate")
        orders[i] = k
    return orders


def subgroup_closure(table: np.ndarray, gen_idx, identity: int) -> list[int]:
    seen = {identity}
    frontier = [g for g in gen_idx if g not in seen]
    seen.update(frontier)
    gens = list(dict.fromkeys(gen_idx))
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                p = int(table[a, g])
                if p not in seen:
                    seen.add(p)
                    new.append(p)
        frontier = new
    return sorted(seen)


def derived_subgroup(table: np.ndarray, identity: int) -> list[int]:
    inv = table_inverses(table, identity)
    n = table.shape[0]
    comms = set()
    for a in range(n):
        for b in range(n):
            ab = table[a, b]
            ba_inv = table[inv[a], inv[b]]
            comms.add(int(table[ab, ba_inv]))
    return subgroup_closure(table, sorted(comms), identity)


def is_perfect(table: np.ndarray, identity: int) -> bool:
    return len(derived_subgroup(table, identity)) == table.shape[0]


def involution_indices(table: np.ndarray, identity: int) -> list[int]:
    orders = element_orders(table, identity)
    return [int(i) for i in np.nonzero(orders == 2)[0]]


def central_indices(table: np.ndarray) -> list[int]:
    n = table.shape[0]
    return [i for i in range(n) if np.array_equal(table[i], table[:, i])]


# ---------------------------------------------------------------------------
# named constructors


def _cyclic_generator(n: int) -> Quaternion:
    return Quaternion(math.cos(2.0 * math.pi / n), math.sin(2.0 * math.pi / n))


def named_binary_group(tag: GroupType, limit: int = 10000) -> FiniteQuaternionGroup:
    """Construct the group named by ``tag`` from explicit unit-quaternion
    generators; the result's order always matches the tag."""
    if tag.kind == GroupType.CYCLIC:
        n = tag.param
        if n is None or n < 1:
            raise InvalidParameter("cyclic groups need n >= 1")
        gens = [_cyclic_generator(n)] if n > 1 else [Quaternion.one()]
        group = FiniteQuaternionGroup.from_generators(gens, limit=limit)
    elif tag.kind == GroupType.BINARY_DIHEDRAL:
        m = tag.param
        if m is None or m < 2:
            raise InvalidParameter("binary dihedral groups need m >= 2")
        a = Quaternion(math.cos(math.pi / m), math.sin(math.pi / m))
        group = FiniteQuaternionGroup.from_generators([a, Quaternion.j()], limit=limit)
    elif tag.kind == GroupType.BINARY_TETRAHEDRAL:
        omega = Quaternion(0.5, 0.5, 0.5, 0.5)
        group = FiniteQuaternionGroup.from_generators([omega, Quaternion.i()], limit=limit)
    elif tag.kind == GroupType.BINARY_OCTAHEDRAL:
        omega = Quaternion(0.5, 0.5, 0.5, 0.5)
        s = Quaternion(1.0 / math.sqrt(2.0), 1.0 / math.sqrt(2.0))
        group = FiniteQuaternionGroup.from_generators(
            [omega, Quaternion.i(), s], limit=limit
        )
    elif tag.kind == GroupType.BINARY_ICOSAHEDRAL:
        sigma = Quaternion(0.5, 0.5, 0.5, 0.5)
        tau = Quaternion(_GOLDEN / 2.0, 1.0 / (2.0 * _GOLDEN), 0.5, 0.0)
        group = FiniteQuaternionGroup.from_generators([sigma, tau], limit=limit)
    else:
        raise InvalidParameter(f"no constructor for tag {tag!r}")
    expected = tag.expected_order()
    if expected is not None and group.order != expected:
        raise NotClosed(
            f"constructed order {group.order} != expected {expected} for {tag!r}"
        )
    return group


# ---------------------------------------------------------------------------
# classification


def _as_table(group) -> tuple[np.ndarray, int]:
    if isinstance(group, FiniteQuaternionGroup):
        return group.multiplication_table(), group.identity_index
    table = np.asarray(group, dtype=np.int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise InvalidParameter("multiplication table must be square")
    return table, table_identity(table)


def _binary_dihedral_param(table: np.ndarray, identity: int) -> int | None:
    """m if the table is the order-4m binary dihedral pattern, else None."""
    n = table.shape[0]
    if n % 4 != 0 or n < 8:
        return None
    m = n // 4
    orders = element_orders(table, identity)
    inv = table_inverses(table, identity)
    candidates = np.nonzero(orders == 2 * m)[0]
    for a in candidates:
        cyc = subgroup_closure(table, [int(a)], identity)
        if len(cyc) != 2 * m:
            continue
        # a^m is the unique involution of the binary pattern
        p = int(a)
        for _ in range(m - 1):
            p = int(table[p, a])
        a_pow_m = p
        cyc_set = set(cyc)
        for t in range(n):
            if t in cyc_set:
                continue
            # t a t^{-1} == a^{-1} and t^2 == a^m
            tat = table[table[t, a], inv[t]]
            if tat == inv[a] and table[t, t] == a_pow_m:
                return m
    return None


def classify(group) -> GroupType:
    """Classify a finite unit-quaternion group by structural invariants.

    Cyclicity first; then the binary dihedral pattern (index-2 cyclic subgroup
    with an inverting element squaring to the central involution); the three
    exceptional orders are separated by their derived subgroups, the order-120
    one being perfect.  Anything else is Unrecognized.
    """
    table, identity = _as_table(group)
    n = table.shape[0]
    if n > 10000:
        raise InvalidParameter("classification supports order <= 10^4")
    orders = element_orders(table, identity)
    if np.max(orders) == n:
        return GroupType.cyclic(n)
    m = _binary_dihedral_param(table, identity)
    if m is not None:
        return GroupType.binary_dihedral(m)
    if n in (24, 48, 120):
        derived = len(derived_subgroup(table, identity))
        if n == 24 and derived == 8:
            return GroupType.binary_tetrahedral()
        if n == 48 and derived == 24:
            return GroupType.binary_octahedral()
        if n == 120 and derived == 120:
            return GroupType.binary_icosahedral()
    return GroupType.unrecognized()


# ---------------------------------------------------------------------------
# space-form constraints


@dataclass(frozen=True)
class SpaceFormConstraintReport:
    abelian_subgroups_cyclic: bool
    involution_count: int
    involution_central: bool
    odd_sylow_cyclic: bool

    @property
    def unique_central_involution(self) -> bool:
        return self.involution_count <= 1 and self.involution_central

    @property
    def all_pass(self) -> bool:
        return (
            self.abelian_subgroups_cyclic
            and self.unique_central_involution
            and self.odd_sylow_cyclic
        )


def _two_generated_abelian_cyclic(table: np.ndarray, identity: int) -> bool:
    n = table.shape[0]
    orders = element_orders(table, identity)
    for a in range(n):
        # powers of a
        pow_a = subgroup_closure(table, [a], identity)
        for b in range(a + 1, n):
            if table[a, b] != table[b, a]:
                continue
            # <a, b> is abelian: enumerate a^s b^t
            elems = set()
            for p in pow_a:
                q = p
                elems.add(q)
                for _ in range(orders[b] - 1):
                    q = int(table[q, b])
                    elems.add(q)
            size = len(elems)
            if max(int(orders[e]) for e in elems) != size:
                return False
    return True


def check_space_form_constraints(group) -> SpaceFormConstraintReport:
    """Check the structural constraints for a fixed-point-free constant
    displacement action on a round sphere.

    Accepts a FiniteQuaternionGroup or a raw integer multiplication table, so
    abstract groups (e.g. Klein four) can be screened as well.
    """
    table, identity = _as_table(group)
    # strip even part for the sylow check
    n = table.shape[0]
    rem = n
    while rem % 2 == 0:
        rem //= 2
    orders = set(int(o) for o in element_orders(table, identity))
    odd_ok = True
    p = 3
    while p <= rem:
        if rem % p == 0:
            pa = 1
            while rem % p == 0:
                rem //= p
                pa *= p
            if pa not in orders:
                odd_ok = False
        p += 2
    invs = involution_indices(table, identity)
    central = set(central_indices(table))
    inv_central = all(i in central for i in invs)
    return SpaceFormConstraintReport(
        abelian_subgroups_cyclic=_two_generated_abelian_cyclic(table, identity),
        involution_count=len(invs),
        involution_central=inv_central,
        odd_sylow_cyclic=odd_ok,
    )


# ---------------------------------------------------------------------------
# order-120 recognition


@lru_cache(maxsize=None)
def special_linear_table(p: int) -> np.ndarray:
    """Multiplication table of SL(2, F_p), built from integer matrices mod p."""
    if p < 2:
        raise InvalidParameter("p must be a prime >= 2")
    elems = []
    index = {}
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p == 1:
                        index[(a, b, c, d)] = len(elems)
                        elems.append((a, b, c, d))
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, (a, b, c, d) in enumerate(elems):
        for j, (e, f, g, h) in enumerate(elems):
            prod = (
                (a * e + b * g) % p,
                (a * f + b * h) % p,
                (c * e + d * g) % p,
                (c * f + d * h) % p,
            )
            table[i, j] = index[prod]
    return table


def is_sl25(group) -> bool:
    """True iff the group is SL(2,5): order 120, perfect, single involution.

    These three invariants characterize SL(2,5) among groups of order 120;
    the test suite cross-validates them against the explicitly built
    multiplication table over the 5-element field.
    """
    table, identity = _as_table(group)
    if table.shape[0] != 120:
        return False
    if len(involution_indices(table, identity)) != 1:
        return False
    return is_perfect(table, identity)


# ---------------------------------------------------------------------------
# orthogonal representations


def left_translation_matrix(q: Quaternion) -> np.ndarray:
    """Matrix of x -> q x on R^4 in the basis (1, i, j, k); lies in SO(4)."""
    if abs(q.norm() - 1.0) > _UNIT_TOL:
        raise NonUnitInput(f"left translation needs a unit quaternion, norm {q.norm():.12f}")
    w, x, y, z = q.w, q.x, q.y, q.z
    return np.array(
        [
            [w, -x, -y, -z],
            [x, w, -z, y],
            [y, z, w, -x],
            [z, -y, x, w],
        ]
    )


def right_translation_matrix(q: Quaternion) -> np.ndarray:
    """Matrix of x -> x q on R^4 in the basis (1, i, j, k); lies in SO(4)."""
    if abs(q.norm() - 1.0) > _UNIT_TOL:
        raise NonUnitInput(f"right translation needs a unit quaternion, norm {q.norm():.12f}")
    w, x, y, z = q.w, q.x, q.y, q.z
    return np.array(
        [
            [w, -x, -y, -z],
            [x, w, z, -y],
            [y, -z, w, x],
            [z, y, -x, w],
        ]
    )


def su2_matrix(q: Quaternion) -> np.ndarray:
    """Standard 2-dimensional unitary embedding of a unit quaternion."""
    return np.array(
        [
            [q.w + 1j * q.x, q.y + 1j * q.z],
            [-q.y + 1j * q.z, q.w - 1j * q.x],
        ]
    )
