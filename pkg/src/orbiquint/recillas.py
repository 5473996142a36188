"""Permutation side of the tetragonal-trigonal correspondence.

A degree-4 cover with monodromy in S4 induces a degree-3 cover (the
action on the three pair-partitions of {1,2,3,4}) and a degree-6 double
cover (the action on the six transpositions).  The character identity

    1 + fix6 = fix3 + fix4

holds for every element of S4 and is the finite-set shadow of the
structure-sheaf decomposition behind the correspondence.

Conventions: permutations act on points on the left; the action on
transpositions and pair-partitions is by conjugation, sigma . tau =
sigma tau sigma^{-1} (equivalently, elementwise relabeling).
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class PermError(ValueError):
    pass


@dataclass(frozen=True)
class Perm:
    """A permutation of {1..n}, stored as the image tuple (1-based)."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise PermError(f"not a bijection of 1..{len(images)}: {images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise PermError(f"point {x} out of range 1..{self.n}")
        return self.images[x - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition: (self * other)(x) = self(other(x))."""
        if self.n != other.n:
            raise PermError("composition of permutations of different degree")
        return Perm(tuple(self(other(x)) for x in range(1, self.n + 1)))

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for x in range(1, self.n + 1):
            inv[self(x) - 1] = x
        return Perm(tuple(inv))

    @classmethod
    def identity(cls, n: int = 4) -> "Perm":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int = 4) -> "Perm":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)([cyc[0]])):
                if not 1 <= a <= n:
                    raise PermError(f"point {a} out of range 1..{n}")
                images[a - 1] = b
        p = cls(tuple(images))
        return p

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles()))

    def __str__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "id"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)


def parse_perm(text: str, n: int = 4) -> Perm:
    """Parse cycle notation: "(1 2 3)(4)" and "(1,2,3)" both accepted."""
    text = text.strip()
    if text in ("id", "()", "e", ""):
        return Perm.identity(n)
    if not re.fullmatch(r"(\(\s*\d+(\s*[,\s]\s*\d+)*\s*\))+", text):
        raise PermError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in re.findall(r"\(([^()]*)\)", text):
        cyc = [int(t) for t in re.split(r"[,\s]+", body.strip()) if t]
        if len(cyc) != len(set(cyc)):
            raise PermError(f"repeated point in cycle: {body!r}")
        cycles.append(cyc)
    flat = [x for c in cycles for x in c]
    if len(flat) != len(set(flat)):
        raise PermError(f"overlapping cycles: {text!r}")
    n = max(n, max(flat))
    return Perm.from_cycles(cycles, n)


# ---------------------------------------------------------------------------
# The finite S4-sets of the correspondence

# the 6-set of transpositions, in canonical order
TRANSPOSITIONS: tuple[frozenset[int], ...] = tuple(
    frozenset(p) for p in itertools.combinations(range(1, 5), 2)
)

# the 3-set of pair-partitions {{a,b},{c,d}}, in canonical order
PAIR_PARTITIONS: tuple[frozenset[frozenset[int]], ...] = tuple(
    frozenset({frozenset({1, k}), frozenset({1, 2, 3, 4}) - {1, k}})
    for k in (2, 3, 4)
)


def s4_elements() -> list[Perm]:
    return [Perm(p) for p in itertools.permutations(range(1, 5))]


def _act_on_set(sigma: Perm, s: frozenset) -> frozenset:
    return frozenset(
        _act_on_set(sigma, x) if isinstance(x, frozenset) else sigma(x) for x in s
    )


@dataclass(frozen=True)
class FixCounts:
    fix4: int
    fix3: int
    fix6: int


def fix_counts(sigma: Perm) -> FixCounts:
    """Fixed points of sigma on {1..4}, the pair-partitions, the transpositions."""
    if sigma.n != 4:
        raise PermError("fix_counts needs an element of S4")
    fix4 = sum(1 for x in range(1, 5) if sigma(x) == x)
    fix3 = sum(1 for p in PAIR_PARTITIONS if _act_on_set(sigma, p) == p)
    fix6 = sum(1 for t in TRANSPOSITIONS if _act_on_set(sigma, t) == t)
    return FixCounts(fix4, fix3, fix6)


def recillas_character_check(sigma: Perm) -> bool:
    """The permutation-character identity 1 + fix6 = fix3 + fix4."""
    c = fix_counts(sigma)
    return 1 + c.fix6 == c.fix3 + c.fix4


@dataclass(frozen=True)
class CorrespondenceData:
    trigonal: tuple[Perm, ...]  # induced actions on the 3 pair-partitions
    double: tuple[Perm, ...]  # induced actions on the 6 transpositions


def _induced(sigma: Perm, objects: Sequence[frozenset]) -> Perm:
    index = {obj: k + 1 for k, obj in enumerate(objects)}
    return Perm(tuple(index[_act_on_set(sigma, obj)] for obj in objects))


def induced_on_partitions(sigma: Perm) -> Perm:
    return _induced(sigma, PAIR_PARTITIONS)


def induced_on_transpositions(sigma: Perm) -> Perm:
    return _induced(sigma, TRANSPOSITIONS)


def tetragonal_to_trigonal(mon: Sequence[Perm]) -> CorrespondenceData:
    """Monodromy of the induced trigonal curve and its 6-sheeted double cover."""
    for sigma in mon:
        if sigma.n != 4:
            raise PermError("monodromy must lie in S4")
    return CorrespondenceData(
        tuple(induced_on_partitions(s) for s in mon),
        tuple(induced_on_transpositions(s) for s in mon),
    )


# ---------------------------------------------------------------------------
# Named subgroups and the block-swap criterion

KLEIN_FOUR: tuple[Perm, ...] = tuple(
    sigma for sigma in s4_elements() if sigma.cycle_type() in ((1, 1, 1, 1), (2, 2))
)

_BLOCKS = frozenset({frozenset({1, 2}), frozenset({3, 4})})


def d4_elements() -> list[Perm]:
    """D4 = Stab({{1,2},{3,4}}) inside S4."""
    return [s for s in s4_elements() if _act_on_set(s, _BLOCKS) == _BLOCKS]


def s3_embedding() -> list[Perm]:
    """S3 inside S4 as the permutations moving only the first three points."""
    return [s for s in s4_elements() if s(4) == 4]


# node-type labels of the one-tail degenerations (fixed correspondence data)
NODE_TYPE_LABELS: dict[str, Perm] = {
    "I": parse_perm("(1 3)(2 4)"),
    "II": parse_perm("(1 4)(3 2)"),
    "III": parse_perm("(1 2)(3 4)"),
    "IV": Perm.identity(4),
}


def blocks_swapped(pi: Perm) -> bool:
    """Whether pi in D4 exchanges the blocks {1,2} and {3,4}.

    Equivalent to pi acting nontrivially on the pair {(12),(34)} inside
    the 6-set of transpositions.
    """
    if pi.n != 4 or _act_on_set(pi, _BLOCKS) != _BLOCKS:
        raise PermError("blocks_swapped needs an element of D4 = Stab({{1,2},{3,4}})")
    return _act_on_set(pi, frozenset({1, 2})) == frozenset({3, 4})


# ---------------------------------------------------------------------------
# Local monodromy models at a tail node


class MonodromyCase(enum.Enum):
    PRESERVES = "PreservesComponents"
    SWITCHES = "SwitchesComponents"


@dataclass(frozen=True)
class TwinA:
    """Two A_{k} singularities exchanged by the deck involution."""

    k: int


@dataclass(frozen=True)
class MonodromyLocalModel:
    case: MonodromyCase
    n: int
    sing: object  # (i, j) pair or TwinA(n-1)
    cycle_type: tuple[int, ...] | None  # None where the source leaves it open
    canonical: tuple[int, int] | None = None  # normalize_ij of an (i, j) pair


def normalize_ij(i: int, j: int) -> tuple[int, int]:
    """Canonical representative of the orbit (i, j) -> (i-2, j+2).

    Normal form has j' in {-1, 0}: singularities A_{i+j+1} and A_{-1},
    or A_{i+j} and A_0, depending on the parity of j.
    """
    if i < -1 or j < -1:
        raise PermError("A-singularity indices must be >= -1")
    if i + j < -2:
        raise PermError("i + j must be >= -2")
    jp = -1 if j % 2 else 0
    return (i + j - jp, jp)


def local_model(case: MonodromyCase, n: int) -> list[MonodromyLocalModel]:
    """Local models of the degree-4 cover near a node of local degree n.

    When the monodromy preserves the two branches: an A_i and an A_j
    singularity with i + j = n - 2.  Cycle types as recorded: n odd gives
    (2); n even gives trivial for even i and (2,2) for odd i.  When it
    switches the branches: two A_{n-1} singularities; cycle type (2,2)
    for even n and (4) for odd n.
    """
    if n < 1:
        raise PermError("n must be >= 1")
    if case is MonodromyCase.SWITCHES:
        ct = (2, 2) if n % 2 == 0 else (4,)
        return [MonodromyLocalModel(case, n, TwinA(n - 1), ct)]
    out = []
    for i in range(-1, n):
        j = n - 2 - i
        if j < -1:
            continue
        if n % 2:
            ct: tuple[int, ...] | None = (2, 1, 1)
        else:
            ct = (1, 1, 1, 1) if i % 2 == 0 else (2, 2)
        out.append(
            MonodromyLocalModel(case, n, (i, j), ct, canonical=normalize_ij(i, j))
        )
    return out
