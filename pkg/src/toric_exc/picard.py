"""Divisor classes on the centrally symmetric fans and their symmetries.

The Picard group has rank n + 2 with basis H, E_0, ..., E_n. The ray
through e_i has class E_i and the antipodal ray has class H - E + E_i,
where E = E_0 + ... + E_n. Coordinates are stored as (h, d_0, ..., d_n).

The symmetry group is a direct product: S_{n+1} permutes the E_i, and the
antipodal involution acts linearly, fixing each line bundle family
F_{c,J} = c(E - H) - sum_{j in J} E_j up to replacing c by |J| - c.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


class NotInFamily(Exception):
    """The divisor class is not of the form F_{c,J}."""


class InvalidShape(Exception):
    """Family parameters (c, k, l) out of range for this dimension."""


@dataclass(frozen=True)
class DivisorClass:
    """Integer coordinates (h, d_0, ..., d_n) in the basis H, E_0, ..., E_n."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        assert len(self.coeffs) >= 3
        assert all(isinstance(x, int) for x in self.coeffs)

    @property
    def n(self) -> int:
        return len(self.coeffs) - 2

    @property
    def h(self) -> int:
        return self.coeffs[0]

    @property
    def d(self) -> tuple[int, ...]:
        return self.coeffs[1:]

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __rmul__(self, scalar: int) -> "DivisorClass":
        return DivisorClass(tuple(scalar * a for a in self.coeffs))


def divisor(h: int, d) -> DivisorClass:
    return DivisorClass((h,) + tuple(d))


def class_of_ray(n: int, ray_index: int) -> DivisorClass:
    """Divisor class of the ray at the given index (e_0..e_n, then negatives)."""
    assert 0 <= ray_index < 2 * (n + 1)
    if ray_index <= n:
        return DivisorClass((0,) + tuple(1 if i == ray_index else 0 for i in range(n + 1)))
    slot = ray_index - (n + 1)
    return DivisorClass((1,) + tuple(0 if i == slot else -1 for i in range(n + 1)))


def canonical_class(n: int) -> DivisorClass:
    return DivisorClass((-(n + 1),) + tuple(n - 1 for _ in range(n + 1)))


def make_F(n: int, c: int, J) -> DivisorClass:
    """The class c(E - H) - sum_{j in J} E_j."""
    J = frozenset(J)
    assert J <= set(range(n + 1))
    return DivisorClass((-c,) + tuple(c - 1 if j in J else c for j in range(n + 1)))


def parse_F(D: DivisorClass):
    """Recover (c, J) with D = F_{c,J}, or None if D is not of that shape."""
    c = -D.h
    J = set()
    for j, dj in enumerate(D.d):
        if dj == c - 1:
            J.add(j)
        elif dj != c:
            return None
    return c, frozenset(J)


def antipodal_involution(D: DivisorClass) -> DivisorClass:
    n = D.n
    total = sum(D.d)
    h = n * D.h + total
    d = tuple((1 - n) * D.h - total + di for di in D.d)
    return DivisorClass((h,) + d)


def permute(perm, D: DivisorClass) -> DivisorClass:
    """Relabel E-coordinates: E_i maps to E_{perm[i]}."""
    n = D.n
    assert sorted(perm) == list(range(n + 1))
    d = [0] * (n + 1)
    for i, target in enumerate(perm):
        d[target] = D.d[i]
    return DivisorClass((D.h,) + tuple(d))


def act(element, D: DivisorClass) -> DivisorClass:
    """Apply (perm, flip): the involution first when flip is set, then perm.

    The two factors commute, so the order is a convention only.
    """
    perm, flip = element
    if flip:
        D = antipodal_involution(D)
    return permute(perm, D)


def group_generators(n: int) -> list[tuple[tuple[int, ...], bool]]:
    """Adjacent transpositions and the antipodal involution."""
    identity = tuple(range(n + 1))
    gens = [(identity, True)]
    for i in range(n):
        perm = list(identity)
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append((tuple(perm), False))
    return gens


def orbit_Fckl(n: int, c: int, k: int, ell: int) -> list[DivisorClass]:
    """All classes c(E - H) + sum_{i in K} E_i - sum_{j in L} E_j.

    K and L run over disjoint subsets of {0..n} with |K| = k and |L| = ell;
    this is a single S_{n+1}-orbit, and the antipodal involution carries it
    onto the orbit with c replaced by ell - k - c.
    """
    if k < 0 or ell < 0 or k + ell > n + 1:
        raise InvalidShape(f"need k, l >= 0 and k + l <= {n + 1}, got ({k}, {ell})")
    out = []
    slots = range(n + 1)
    for K in combinations(slots, k):
        rest = [i for i in slots if i not in K]
        for L in combinations(rest, ell):
            d = tuple(c + (1 if i in K else 0) - (1 if i in L else 0) for i in slots)
            out.append(DivisorClass((-c,) + d))
    return out


def difference_family(n: int, D1: DivisorClass, D2: DivisorClass) -> tuple[int, int, int]:
    """Parameters (c, k, l) with D1 - D2 in the (c, k, l) family.

    Both arguments must be of the form F_{c,J}; the difference then lies in
    the family with c = c1 - c2, k = |J2 - J1|, l = |J1 - J2|.
    """
    p1 = parse_F(D1)
    p2 = parse_F(D2)
    if p1 is None or p2 is None:
        bad = "first" if p1 is None else "second"
        raise NotInFamily(f"{bad} argument is not an F_(c,J) class")
    (c1, J1), (c2, J2) = p1, p2
    t = len(J1 & J2)
    return c1 - c2, len(J2) - t, len(J1) - t


def ray_coefficients(n: int, D: DivisorClass) -> tuple[int, ...]:
    """A torus-invariant divisor in the class of D, as per-ray coefficients.

    Order matches the fan's rays. The choice puts the whole H-coefficient
    on the first antipodal ray; any other lift differs by a principal
    divisor and gives the same cohomology.
    """
    h = D.h
    plus = (D.d[0],) + tuple(D.d[i] + h for i in range(1, n + 1))
    minus = (h,) + (0,) * n
    return plus + minus
