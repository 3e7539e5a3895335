"""The standard line-bundle collections and their verification.

A collection is a block-ordered list of classes F_{c,J}. Blocks are
group orbits: the symmetric group permutes the J labels inside a block
and the involution pairs the parameter c with |J| - c, so a block is
labeled by |J| and the unordered pair {c, |J| - c}. Blocks are listed
by decreasing |J|, members inside a block by (c, sorted J).

Verification sweeps every ordered pair of distinct member positions.
Writing D for target minus source, a pair with the source in a later
block, or both in one block, must lose all cohomology; a pair with the
source in an earlier block only needs positive degrees to vanish. Three
interchangeable methods grade each pair: closed-form family
inequalities, forbidden-cone certificates, or the cohomology oracle.
Size is checked against the fan's count of maximal cones, so a dropped
member is caught even though every surviving pair still verifies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from itertools import combinations

from .cohomology import cohomology, euler_pairing
from .cones import (
    HypothesisViolated,
    certify_acyclic,
    certify_higher_acyclic,
    higher_acyclic_predicate,
    lemma_acyclic_predicate,
)
from .fan import build_Vn
from .picard import DivisorClass, act, group_generators, make_F, parse_F

METHODS = ("inequalities", "forbidden", "oracle")


class VerificationFailed(Exception):
    def __init__(self, report):
        super().__init__(report.headline())
        self.report = report


@dataclass(frozen=True)
class Block:
    ell: int
    members: tuple[DivisorClass, ...]


@dataclass(frozen=True)
class Collection:
    n: int
    blocks: tuple[Block, ...]

    @property
    def members(self) -> tuple[DivisorClass, ...]:
        return tuple(m for b in self.blocks for m in b.members)

    @property
    def size(self) -> int:
        return sum(len(b.members) for b in self.blocks)

    def positions(self) -> tuple[tuple[int, int], ...]:
        """Flat index -> (block index, index within block)."""
        return tuple((bi, mi) for bi, b in enumerate(self.blocks)
                     for mi in range(len(b.members)))


def expected_size(n: int) -> int:
    """Number of maximal cones, hence the rank of the Grothendieck group."""
    return math.factorial(n + 1) // math.factorial(n // 2) ** 2


def build_Fn(n: int) -> tuple[tuple[int, int], ...]:
    """The admissible (c, l) parameter pairs, sorted by (l, c).

    For l up to n/2 the twist satisfies 4l - n <= 4c <= n, above that
    n + 2 <= 4c <= 4l - n - 2; both ranges are intersected with the
    integers.
    """
    if n < 2 or n % 2:
        raise ValueError("n must be a positive even integer")
    out = []
    for ell in range(n + 2):
        if ell <= n // 2:
            lo, hi = 4 * ell - n, n
        else:
            lo, hi = n + 2, 4 * ell - n - 2
        for c in range(math.ceil(lo / 4), math.floor(hi / 4) + 1):
            out.append((ell, c))
    return tuple((c, ell) for ell, c in sorted(out))


def build_Gn(n: int) -> Collection:
    """The full collection: every F_{c,J} with (c, |J|) admissible."""
    by_orbit = {}
    for c, ell in build_Fn(n):
        key = (ell, frozenset({c, ell - c}))
        by_orbit.setdefault(key, []).append(c)
    blocks = []
    for ell, cs in sorted(by_orbit, key=lambda key: (-key[0], min(key[1]))):
        members = []
        for c in sorted(cs):
            for j in combinations(range(n + 1), ell):
                members.append(make_F(n, c, j))
        blocks.append(Block(ell, tuple(members)))
    return Collection(n, tuple(blocks))


# -- pairwise verification -----------------------------------------------------


@dataclass(frozen=True)
class PairResult:
    source: int
    target: int
    relation: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class Report:
    n: int
    method: str
    size: int
    expected: int
    pairs_checked: int
    violations: tuple[PairResult, ...]
    pair_results: tuple[PairResult, ...] | None = None
    sampled: bool = False

    @property
    def complete(self) -> bool:
        return self.size == self.expected

    @property
    def ok(self) -> bool:
        return self.complete and not self.violations

    def headline(self) -> str:
        if self.ok:
            extra = " (sampled)" if self.sampled else ""
            return (f"ok: {self.size} members, "
                    f"{self.pairs_checked} pairs checked{extra}")
        parts = []
        if not self.complete:
            parts.append(f"size {self.size} != expected {self.expected}")
        if self.violations:
            first = self.violations[0]
            parts.append(f"{len(self.violations)} violating pairs, first "
                         f"{first.source}->{first.target}: {first.detail}")
        return "; ".join(parts)

    def raise_if_failed(self):
        if not self.ok:
            raise VerificationFailed(self)
        return self


def _pair_relation(block_s, block_t):
    if block_s == block_t:
        return "same-block"
    return "forward" if block_s < block_t else "backward"


def verify_exceptional(collection: Collection, method: str = "inequalities",
                       sample=None, full_report: bool = False) -> Report:
    """Grade every ordered pair of distinct positions, plus the size check.

    sample restricts the sweep to the given (source, target) flat index
    pairs; the size check still runs. The report never raises on its own,
    call raise_if_failed for that.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    n = collection.n
    fan = build_Vn(n) if method in ("forbidden", "oracle") else None
    members = collection.members
    block_of = [bi for bi, _ in collection.positions()]
    parsed = [parse_F(m) for m in members]

    if sample is None:
        pairs = ((i, j) for i in range(len(members))
                 for j in range(len(members)) if i != j)
        sampled = False
    else:
        pairs = [(int(i), int(j)) for i, j in sample]
        sampled = True

    results = []
    violations = []
    checked = 0
    for i, j in pairs:
        checked += 1
        relation = _pair_relation(block_of[i], block_of[j])
        need_all = relation != "forward"
        ok, detail = _grade_pair(n, fan, method, members, parsed, i, j, need_all)
        result = PairResult(i, j, relation, ok, detail)
        if not ok:
            violations.append(result)
        if full_report:
            results.append(result)

    return Report(
        n=n, method=method, size=collection.size, expected=expected_size(n),
        pairs_checked=checked, violations=tuple(violations),
        pair_results=tuple(results) if full_report else None, sampled=sampled,
    )


def _grade_pair(n, fan, method, members, parsed, i, j, need_all):
    if method == "oracle":
        ranks = cohomology(fan, members[j] - members[i]).ranks
        bad = any(ranks) if need_all else any(ranks[1:])
        return not bad, f"h = {ranks}"
    if method == "forbidden":
        certify = certify_acyclic if need_all else certify_higher_acyclic
        return certify(fan, members[j] - members[i]), "forbidden-cone sweep"
    ps, pt = parsed[i], parsed[j]
    if ps is None or pt is None:
        return False, "member outside the F_{c,J} family"
    (cs, js), (ct, jt) = ps, pt
    t = len(js & jt)
    c, k, ell = ct - cs, len(js) - t, len(jt) - t
    label = f"(c, k, l) = ({c}, {k}, {ell})"
    if not need_all:
        return higher_acyclic_predicate(n, c, k, ell), label
    try:
        return lemma_acyclic_predicate(n, c, k, ell), label
    except HypothesisViolated as e:
        return False, f"{label}: {e}"


# -- group stability ------------------------------------------------------------


@dataclass(frozen=True)
class StabilityReport:
    n: int
    ok: bool
    failures: tuple[str, ...]

    def raise_if_failed(self):
        if not self.ok:
            raise VerificationFailed(self)
        return self

    def headline(self) -> str:
        if self.ok:
            return "ok: every generator preserves every block"
        return f"{len(self.failures)} stability failures, first: {self.failures[0]}"


def verify_stability(collection: Collection) -> StabilityReport:
    """Check every group generator maps every block onto itself.

    Also pins the involution's closed form on each member: F_{c,J} must
    land on F_{|J|-c,J} exactly.
    """
    n = collection.n
    failures = []
    for gi, g in enumerate(group_generators(n)):
        for bi, block in enumerate(collection.blocks):
            image = {act(g, m) for m in block.members}
            if image != set(block.members):
                failures.append(f"generator {gi} moves block {bi} off itself")
    for m in collection.members:
        parsed = parse_F(m)
        if parsed is None:
            failures.append(f"member {m.coeffs} outside the F_{{c,J}} family")
            continue
        c, j = parsed
        flipped = act((tuple(range(n + 1)), True), m)
        if flipped != make_F(n, len(j) - c, j):
            failures.append(f"involution breaks closed form on {m.coeffs}")
    return StabilityReport(n, not failures, tuple(failures))


# -- numerics -------------------------------------------------------------------


def gram_matrix(collection: Collection) -> tuple[tuple[int, ...], ...]:
    """Euler pairings chi(E_i, E_j) over flat positions, by the oracle."""
    fan = build_Vn(collection.n)
    members = collection.members
    return tuple(
        tuple(euler_pairing(fan, a, b) for b in members) for a in members
    )


# -- mutations -------------------------------------------------------------------


def apply_mutation(collection: Collection, text: str) -> Collection:
    """Deliberately damage a collection: drop:IDX, add:c,J, swap:I,J.

    Indices are flat positions. add parses J as dash-separated labels
    (empty for the twist alone) and appends to the first block.
    """
    kind, _, arg = text.partition(":")
    if kind == "drop":
        idx = int(arg)
        positions = collection.positions()
        if not 0 <= idx < len(positions):
            raise ValueError(f"drop index {idx} out of range")
        bi, mi = positions[idx]
        block = collection.blocks[bi]
        members = block.members[:mi] + block.members[mi + 1:]
        blocks = list(collection.blocks)
        blocks[bi] = replace(block, members=members)
        return Collection(collection.n, tuple(blocks))
    if kind == "add":
        c_text, _, j_text = arg.partition(",")
        c = int(c_text)
        j = [int(x) for x in j_text.split("-") if x != ""]
        member = make_F(collection.n, c, j)
        blocks = list(collection.blocks)
        blocks[0] = replace(blocks[0], members=blocks[0].members + (member,))
        return Collection(collection.n, tuple(blocks))
    if kind == "swap":
        i_text, _, j_text = arg.partition(",")
        i, j = int(i_text), int(j_text)
        positions = collection.positions()
        if not (0 <= i < len(positions) and 0 <= j < len(positions)):
            raise ValueError(f"swap indices {i},{j} out of range")
        (bi, mi), (bj, mj) = positions[i], positions[j]
        blocks = [list(b.members) for b in collection.blocks]
        blocks[bi][mi], blocks[bj][mj] = blocks[bj][mj], blocks[bi][mi]
        return Collection(collection.n, tuple(
            replace(b, members=tuple(ms))
            for b, ms in zip(collection.blocks, blocks)
        ))
    raise ValueError(f"unknown mutation {text!r}")


# -- serialization ----------------------------------------------------------------

COLLECTION_SCHEMA = "toric-exc/collection/1"


def collection_to_dict(collection: Collection) -> dict:
    blocks = []
    for block in collection.blocks:
        members = []
        for m in block.members:
            parsed = parse_F(m)
            assert parsed is not None, "only F_{c,J} members serialize"
            c, j = parsed
            members.append({"c": c, "J": sorted(j)})
        blocks.append({"ell": block.ell, "members": members})
    return {"schema": COLLECTION_SCHEMA, "n": collection.n, "blocks": blocks}


def collection_from_dict(data: dict) -> Collection:
    if data.get("schema") != COLLECTION_SCHEMA:
        raise ValueError(f"expected schema {COLLECTION_SCHEMA}")
    n = int(data["n"])
    blocks = []
    for block in data["blocks"]:
        members = tuple(make_F(n, int(m["c"]), m["J"]) for m in block["members"])
        blocks.append(Block(int(block["ell"]), members))
    return Collection(n, tuple(blocks))
