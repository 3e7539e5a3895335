"""Window bounds and wall-crossing certificates for the collections.

The variety is a torus quotient of an affine space with one coordinate
per ray, so each divisor class is a character and each subset J of slot
labels gives a one-parameter subgroup. Its pairing with a class (h, d)
is (1 - |J|) h - sum_{j in J} d_j, which evaluates on F_{c,L} to
|L inter J| - c.

For each wall J with |J| <= n/2 there is an integer weight window of
width |J^c| in which every member of the collection must sit. Crossing
the wall at weight a removes a projective-space stratum, and the
restriction of the witness twist to that stratum is resolved by a Koszul
complex whose 2^{|J|} terms all lie in the collection again. Chaining
the walls from large J down to the empty set empties the category, so a
clean pass certifies that the collection generates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .collection import Collection, build_Gn
from .fan import build_Vn, circuit_relation, circuits
from .picard import DivisorClass, class_of_ray, make_F, parse_F


class JTooLarge(Exception):
    """The subgroup is not destabilizing: walls need |J| <= n/2."""


class WindowViolation(Exception):
    """A member's weight escapes the window of some wall."""


class BranchGap(Exception):
    """No witness twist is admissible at this wall weight."""


class KoszulEscape(Exception):
    """A Koszul component falls outside the collection."""


class WallMismatch(Exception):
    """A circuit relation disagrees with the subgroup weight pattern."""


def default_gauge(n: int) -> int:
    """The window offset d used throughout, ceil((n + 2) / 4)."""
    return math.ceil((n + 2) / 4)


def weight_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Classes of all rays as columns, minus-block first, then plus-block.

    The matrix has n + 2 rows and 2n + 2 columns and is surjective over
    the integers, which is what makes classes characters of the torus.
    """
    half = n + 1
    columns = [class_of_ray(n, half + i).coeffs for i in range(half)]
    columns += [class_of_ray(n, i).coeffs for i in range(half)]
    return tuple(tuple(col[r] for col in columns) for r in range(n + 2))


def weight(n: int, J, divisor: DivisorClass) -> int:
    """Pairing of the subgroup indexed by J with the divisor class."""
    J = frozenset(J)
    return (1 - len(J)) * divisor.h - sum(divisor.d[j] for j in J)


def koszul_components(J, twist: DivisorClass) -> tuple[DivisorClass, ...]:
    """The 2^|J| Koszul terms twist - sum_{i in L} E_i, L inside J."""
    out = []
    for size in range(len(J) + 1):
        for sub in combinations(sorted(J), size):
            coeffs = list(twist.coeffs)
            for i in sub:
                coeffs[1 + i] -= 1
            out.append(DivisorClass(tuple(coeffs)))
    return tuple(out)


@dataclass(frozen=True)
class WallPiece:
    a: int
    w: int
    branch: str
    components: tuple[DivisorClass, ...]


@dataclass(frozen=True)
class WallRecord:
    J: frozenset
    window: tuple[int, int]
    wall_range: tuple[int, int]
    pieces: tuple[WallPiece, ...]


def wall_record(n: int, J, d: int | None = None) -> WallRecord:
    """Window, wall range, and Koszul pieces of the wall indexed by J.

    Weights in the window above the wall range are handled by the window
    shift alone; each weight a in the wall range gets a witness twist by
    w = -a, low twists plain, high twists corrected along J^c.
    """
    J = frozenset(J)
    if 2 * len(J) - n - 1 > 0:
        raise JTooLarge(f"|J| = {len(J)} exceeds n/2 = {n // 2}")
    if d is None:
        d = default_gauge(n)
    comp = n + 1 - len(J)
    window = (d - comp, d - 1)
    wall_range = (d - comp, d - 1 - len(J))
    pieces = []
    for a in range(wall_range[0], wall_range[1] + 1):
        w = -a
        low = 4 * w <= n
        high = 4 * w >= n + 2
        if low == high:
            raise BranchGap(f"weight {a} admits {'both' if low else 'no'} twists")
        if low:
            twist = make_F(n, w, [])
            branch = "low"
        else:
            twist = make_F(n, w, [j for j in range(n + 1) if j not in J])
            branch = "high"
        components = koszul_components(J, twist)
        pieces.append(WallPiece(a, w, branch, components))
    return WallRecord(J, window, wall_range, tuple(pieces))


@dataclass(frozen=True)
class Certificate:
    n: int
    d: int
    walls: tuple[WallRecord, ...]
    base_case: str = "empty"


def build_certificate(n: int, collection: Collection | None = None) -> Certificate:
    """Chain every wall from large J to the empty set, checking as it goes.

    Raises WindowViolation if any member weight leaves any window and
    KoszulEscape if any resolution term is missing from the collection;
    a returned certificate means every check passed down to the empty
    category.
    """
    if collection is None:
        collection = build_Gn(n)
    members = collection.members
    member_set = set(members)
    d = default_gauge(n)
    walls = []
    for size in range(n // 2, -1, -1):
        for j in combinations(range(n + 1), size):
            record = wall_record(n, frozenset(j), d)
            lo, hi = record.window
            for m in members:
                lam = weight(n, record.J, m)
                if not lo <= lam <= hi:
                    raise WindowViolation(
                        f"weight {lam} of {m.coeffs} outside [{lo}, {hi}] "
                        f"at wall J = {sorted(record.J)}")
            for piece in record.pieces:
                for component in piece.components:
                    if component not in member_set:
                        raise KoszulEscape(
                            f"component {component.coeffs} of the weight "
                            f"{piece.a} piece at wall J = {sorted(record.J)} "
                            f"is not in the collection")
            walls.append(record)
    return Certificate(n, d, tuple(walls))


# -- circuits vs subgroup weights -----------------------------------------------


@dataclass(frozen=True)
class WallCheck:
    n: int
    circuit_count: int
    pair_count: int
    sign_choice_count: int


def verify_walls(n: int) -> WallCheck:
    """Match every circuit of the fan against the wall subgroup weights.

    Antipodal pair circuits must carry the relation (1, 1); every other
    circuit must pick one ray per slot, and its relation must reproduce
    the weights of the subgroup indexed by its plus-side rays, up to an
    overall sign. Any disagreement raises WallMismatch.
    """
    fan = build_Vn(n)
    half = n + 1
    pair_count = sign_count = 0
    for circuit in circuits(fan):
        elements = sorted(circuit)
        relation = circuit_relation(fan, circuit)
        if len(elements) == 2:
            i, j = elements
            if j != i + half or relation != (1, 1):
                raise WallMismatch(f"pair circuit {elements}: {relation}")
            pair_count += 1
            continue
        plus = {i for i in elements if i < half}
        minus = {i - half for i in elements if i >= half}
        if minus != set(range(half)) - plus:
            raise WallMismatch(f"circuit {elements} is not a slot choice")
        expected = tuple(weight(n, plus, class_of_ray(n, r)) for r in elements)
        negated = tuple(-x for x in expected)
        if relation not in (expected, negated):
            raise WallMismatch(
                f"circuit {elements}: relation {relation} vs weights {expected}")
        sign_count += 1
    return WallCheck(n, pair_count + sign_count, pair_count, sign_count)


# -- serialization ----------------------------------------------------------------

CERTIFICATE_SCHEMA = "toric-exc/certificate/1"


def certificate_to_dict(certificate: Certificate) -> dict:
    walls = []
    for record in certificate.walls:
        pieces = []
        for piece in record.pieces:
            components = []
            for component in piece.components:
                parsed = parse_F(component)
                assert parsed is not None
                c, j = parsed
                components.append({"c": c, "J": sorted(j)})
            pieces.append({"a": piece.a, "w": piece.w, "branch": piece.branch,
                           "components": components})
        walls.append({"J": sorted(record.J), "window": list(record.window),
                      "wall_range": list(record.wall_range), "pieces": pieces})
    return {"schema": CERTIFICATE_SCHEMA, "n": certificate.n,
            "d": certificate.d, "walls": walls,
            "base_case": certificate.base_case}


def certificate_from_dict(data: dict) -> Certificate:
    if data.get("schema") != CERTIFICATE_SCHEMA:
        raise ValueError(f"expected schema {CERTIFICATE_SCHEMA}")
    n = int(data["n"])
    walls = []
    for wall in data["walls"]:
        pieces = tuple(
            WallPiece(int(p["a"]), int(p["w"]), p["branch"], tuple(
                make_F(n, int(comp["c"]), comp["J"])
                for comp in p["components"]))
            for p in wall["pieces"])
        walls.append(WallRecord(frozenset(wall["J"]), tuple(wall["window"]),
                                tuple(wall["wall_range"]), pieces))
    return Certificate(n, int(data["d"]), tuple(walls), data["base_case"])
