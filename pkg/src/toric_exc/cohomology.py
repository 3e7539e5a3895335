"""Sheaf cohomology of line bundles on complete toric varieties.

Cohomology is graded by lattice characters: each character m contributes
to H^p exactly the reduced homology in degree p - 1 of the subcomplex of
the fan induced on the rays where <m, u> <= -a - 1. The engine partitions
M by that ray pattern and counts characters per pattern.

On the centrally symmetric fans the pattern factors through slots: with
z_i = <m, u_{e_i}> every slot independently lands in one of at most three
viable states, the induced subcomplex depends only on how many slots hold
a full antipodal pair, a plus ray, or a minus ray, and the character
count is a bounded sum-zero lattice count. That gives an exact engine
polynomial in the number of contributing patterns instead of 2^(#rays).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .fan import Fan, build_Vn, complex_CI
from .picard import DivisorClass, ray_coefficients
from .polyhedra import coordinate_range, lattice_points, polyhedron
from .simplicial import reduced_homology


class TorsionEncountered(UserWarning):
    """Integral homology of a contributing pattern has torsion."""


class UnboundedRegionWithHomology(Exception):
    """A character region is infinite but homologically visible."""


@dataclass(frozen=True)
class GradedCohomology:
    """Ranks (h^0, ..., h^n)."""

    ranks: tuple[int, ...]

    def __getitem__(self, p: int) -> int:
        return self.ranks[p]

    @property
    def total(self) -> int:
        return sum(self.ranks)

    @property
    def euler(self) -> int:
        return sum(r if p % 2 == 0 else -r for p, r in enumerate(self.ranks))

    def is_zero(self) -> bool:
        return not any(self.ranks)


def cohomology(fan: Fan, divisor) -> GradedCohomology:
    """All cohomology ranks of O(divisor).

    The divisor is either a DivisorClass (centrally symmetric fans only)
    or a sequence of per-ray coefficients in the fan's ray order.
    """
    if isinstance(divisor, DivisorClass):
        assert fan.kind == "centrally-symmetric", "divisor classes need the symmetric basis"
        coeffs = ray_coefficients(fan.rank, divisor)
    else:
        coeffs = tuple(int(x) for x in divisor)
    assert len(coeffs) == fan.nrays
    if fan.kind == "centrally-symmetric":
        return _symmetric_engine(fan, coeffs)
    if fan.kind == "projective-space":
        return _projective_engine(fan, coeffs)
    return _generic_engine(fan, coeffs)


def euler_pairing(fan: Fan, first: DivisorClass, second: DivisorClass) -> int:
    """Alternating sum of the Ext ranks from O(first) to O(second)."""
    return cohomology(fan, second - first).euler


# -- centrally symmetric engine ----------------------------------------------

_NEITHER, _PLUS, _MINUS, _PAIR = 0, 1, 2, 3


@lru_cache(maxsize=None)
def _cached_fan(n: int) -> Fan:
    return build_Vn(n)


@lru_cache(maxsize=None)
def _pattern_homology(n: int, pairs: int, nplus: int, nminus: int):
    """Contribution profile of the pattern class: (ranks by degree, torsion).

    Swapping the two sides is a fan automorphism, so the key is normalized
    with nplus <= nminus; slot permutations are automorphisms as well, so
    a single representative subcomplex decides the whole class.
    """
    if nplus > nminus:
        nplus, nminus = nminus, nplus
    fan = _cached_fan(n)
    half = n + 1
    assert pairs + nplus + nminus <= half
    indices = []
    slot = 0
    for _ in range(pairs):
        indices += [slot, slot + half]
        slot += 1
    for _ in range(nplus):
        indices.append(slot)
        slot += 1
    for _ in range(nminus):
        indices.append(slot + half)
        slot += 1
    hom = reduced_homology(complex_CI(fan, indices))
    ranks = [0] * (n + 1)
    torsion = False
    for degree, (rank, tors) in hom.items():
        if 0 <= degree + 1 <= n:
            ranks[degree + 1] = rank
        if tors:
            torsion = True
    return tuple(ranks), torsion


def _slot_states(aplus: int, aminus: int):
    """Viable (state, lo, hi) triples for one slot; None is an open end."""
    states = []
    if -aplus <= aminus:
        states.append((_NEITHER, -aplus, aminus))
    states.append((_PLUS, None, min(-aplus - 1, aminus)))
    states.append((_MINUS, max(-aplus, aminus + 1), None))
    if aminus + 1 <= -aplus - 1:
        states.append((_PAIR, aminus + 1, -aplus - 1))
    return states


def _count_sum_zero(bounds) -> int:
    """Number of integer tuples with given finite bounds summing to zero."""
    target = -sum(lo for lo, _ in bounds)
    if target < 0:
        return 0
    lengths = []
    for lo, hi in bounds:
        if hi < lo:
            return 0
        lengths.append(hi - lo)
    dp = [0] * (target + 1)
    dp[0] = 1
    for length in lengths:
        out = [0] * (target + 1)
        running = 0
        for t in range(target + 1):
            running += dp[t]
            if t - length - 1 >= 0:
                running -= dp[t - length - 1]
            out[t] = running
        dp = out
    return dp[target]


def _symmetric_engine(fan: Fan, coeffs) -> GradedCohomology:
    n = fan.rank
    half = n + 1
    plus, minus = coeffs[:half], coeffs[half:]
    options = [_slot_states(plus[i], minus[i]) for i in range(half)]
    h = [0] * (n + 1)
    for combo in product(*options):
        pairs = nplus = nminus = 0
        for state, _, _ in combo:
            if state == _PAIR:
                pairs += 1
            elif state == _PLUS:
                nplus += 1
            elif state == _MINUS:
                nminus += 1
        ranks, torsion = _pattern_homology(n, pairs, nplus, nminus)
        if not any(ranks):
            continue
        los = [lo for _, lo, _ in combo]
        his = [hi for _, _, hi in combo]
        open_below = any(lo is None for lo in los)
        open_above = any(hi is None for hi in his)
        if open_below and open_above:
            # both ends open and slotwise nonempty: infinitely many characters
            raise UnboundedRegionWithHomology(
                f"pattern with {pairs} pairs, {nplus} plus, {nminus} minus slots"
            )
        if open_below:
            total_hi = sum(his)
            los = [
                hi - total_hi if lo is None else max(lo, hi - total_hi)
                for lo, hi in zip(los, his)
            ]
        elif open_above:
            total_lo = sum(los)
            his = [
                lo - total_lo if hi is None else min(hi, lo - total_lo)
                for lo, hi in zip(los, his)
            ]
        count = _count_sum_zero(list(zip(los, his)))
        if not count:
            continue
        if torsion:
            warnings.warn(
                f"torsion in a contributing pattern on V_{n}", TorsionEncountered
            )
        for p, r in enumerate(ranks):
            if r:
                h[p] += count * r
    return GradedCohomology(tuple(h))


# -- projective space --------------------------------------------------------


def _projective_engine(fan: Fan, coeffs) -> GradedCohomology:
    """Only the empty and the full ray set are homologically visible."""
    n = fan.rank
    h = [0] * (n + 1)
    sections = polyhedron(
        n, [(fan.rays[i], -coeffs[i]) for i in range(fan.nrays)]
    )
    h[0] = len(lattice_points(sections))
    dual = polyhedron(
        n,
        [(tuple(-x for x in fan.rays[i]), coeffs[i] + 1) for i in range(fan.nrays)],
    )
    h[n] = len(lattice_points(dual))
    return GradedCohomology(tuple(h))


# -- generic fans ------------------------------------------------------------


def _generic_engine(fan: Fan, coeffs) -> GradedCohomology:
    assert fan.nrays <= 16, "generic engine enumerates all ray subsets"
    n = fan.rank
    h = [0] * (n + 1)
    for mask in range(1 << fan.nrays):
        inside = [i for i in range(fan.nrays) if mask >> i & 1]
        hom = reduced_homology(complex_CI(fan, inside))
        profile = {
            deg + 1: (rank, tors)
            for deg, (rank, tors) in hom.items()
            if rank or tors
        }
        if not profile:
            continue
        rows = []
        for i in range(fan.nrays):
            if mask >> i & 1:
                rows.append((tuple(-x for x in fan.rays[i]), coeffs[i] + 1))
            else:
                rows.append((fan.rays[i], -coeffs[i]))
        region = polyhedron(n, rows)
        spans = [coordinate_range(region, j) for j in range(n)]
        if "empty" in spans:
            continue
        if any(lo is None or hi is None for lo, hi in spans):
            raise UnboundedRegionWithHomology(f"ray subset {inside}")
        count = len(lattice_points(region))
        if not count:
            continue
        for p, (rank, tors) in profile.items():
            if tors:
                warnings.warn(
                    f"torsion at ray subset {inside}", TorsionEncountered
                )
            if 0 <= p <= n:
                h[p] += count * rank
    return GradedCohomology(tuple(h))
