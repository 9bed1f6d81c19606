"""Finite set families over a ground set {1, ..., n}, stored as bit masks.

Element j of the ground set is bit j-1 of a Python int, so set union is
``|`` and membership tests are O(1) against a frozenset of masks.  The
universe is capped at 63 elements: families we materialize must fit in a
machine word per set, and everything larger is handled symbolically by the
generator module.

All closure and frequency statistics returned here are exact
:class:`fractions.Fraction` values.  Downstream inequality checks convert
to float at the last moment, so no rounding error is inherited from this
layer.

The text format (``.uc``) is a header line ``n=<universe size>`` followed
by one bit string per set, leftmost character = element 1.  ``#`` starts a
comment, blank lines are skipped, CRLF is tolerated.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

__all__ = [
    "WORD_CAP",
    "DEFAULT_CLOSURE_CAP",
    "UCFormatError",
    "CapExceededError",
    "SetFamily",
    "FrequencyProfile",
    "parse_family",
    "format_family",
    "load_family",
    "dump_family",
    "is_union_closed",
    "closure_fraction",
    "closure_fraction_unordered",
    "element_frequencies",
    "union_closure",
    "mask_from_elements",
    "elements_of_mask",
]

WORD_CAP = 63
DEFAULT_CLOSURE_CAP = 1_000_000


class UCFormatError(ValueError):
    """Malformed ``.uc`` input; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceededError(RuntimeError):
    """A size guard tripped (closure blow-up, pair count, materialization)."""


def mask_from_elements(elements: Iterable[int]) -> int:
    """Bit mask for a set of 1-based ground elements."""
    mask = 0
    for e in elements:
        if e < 1:
            raise ValueError(f"ground elements are 1-based, got {e}")
        mask |= 1 << (e - 1)
    return mask


def elements_of_mask(mask: int) -> tuple[int, ...]:
    """1-based ground elements of a mask, ascending."""
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


@dataclass(frozen=True)
class SetFamily:
    """Canonical, deduplicated family of subsets of {1, ..., universe_size}.

    ``sets`` is strictly increasing as integers, which fixes one canonical
    order for iteration, serialization, and hashing.  The family may be
    empty; most statistics below then refuse to run.
    """

    universe_size: int
    sets: tuple[int, ...]
    _members: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.universe_size
        if not 1 <= n <= WORD_CAP:
            raise ValueError(f"universe size must be in 1..{WORD_CAP}, got {n}")
        limit = 1 << n
        prev = -1
        for m in self.sets:
            if not 0 <= m < limit:
                raise ValueError(f"mask {m} out of range for universe of size {n}")
            if m <= prev:
                raise ValueError("sets must be strictly increasing (canonical order)")
            prev = m
        object.__setattr__(self, "_members", frozenset(self.sets))

    @classmethod
    def from_masks(cls, universe_size: int, masks: Iterable[int]) -> "SetFamily":
        """Build from arbitrary mask iterable; duplicates are collapsed."""
        return cls(universe_size, tuple(sorted(set(masks))))

    @classmethod
    def from_sets(cls, universe_size: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        """Build from element collections, e.g. ``from_sets(2, [(), (1,), (2,)])``."""
        return cls.from_masks(universe_size, (mask_from_elements(s) for s in sets))

    @property
    def size(self) -> int:
        return len(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sets)

    def __contains__(self, mask: int) -> bool:
        return mask in self._members

    def member_set(self) -> frozenset[int]:
        return self._members


@dataclass(frozen=True)
class FrequencyProfile:
    """Per-element membership frequencies of a family.

    ``freq[i]`` is the fraction of member sets containing ground element
    i+1.  ``argmax`` is the smallest 0-based index attaining ``max_freq``.
    ``p_min_zero`` is 1 - max_freq: the smallest probability, over
    elements, that a uniformly drawn member avoids the element.
    """

    freq: tuple[Fraction, ...]
    max_freq: Fraction
    argmax: int
    p_min_zero: Fraction


def _require_nonempty(family: SetFamily, what: str) -> None:
    if family.size == 0:
        raise ValueError(f"{what} requires a nonempty family")


def parse_family(text: str) -> SetFamily:
    """Parse ``.uc`` text into a :class:`SetFamily`.

    Raises :class:`UCFormatError` with a line number on malformed input:
    missing or bad header, wrong-width or non-binary rows, duplicates,
    universe size outside 1..63.
    """
    n: int | None = None
    masks: list[int] = []
    seen: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if not line.startswith("n="):
                raise UCFormatError("expected header of the form n=<universe size>", lineno)
            body = line[2:].strip()
            if not body.isdigit():
                raise UCFormatError(f"bad universe size {body!r}", lineno)
            n = int(body)
            if not 1 <= n <= WORD_CAP:
                raise UCFormatError(f"universe size must be in 1..{WORD_CAP}, got {n}", lineno)
            continue
        if len(line) != n:
            raise UCFormatError(f"expected {n} characters, got {len(line)}", lineno)
        mask = 0
        for j, ch in enumerate(line):
            if ch == "1":
                mask |= 1 << j
            elif ch != "0":
                raise UCFormatError(f"invalid character {ch!r} in bit string", lineno)
        if mask in seen:
            raise UCFormatError(f"duplicate of the set on line {seen[mask]}", lineno)
        seen[mask] = lineno
        masks.append(mask)
    if n is None:
        raise UCFormatError("empty input: missing n=<universe size> header")
    return SetFamily(n, tuple(sorted(masks)))


def format_family(family: SetFamily) -> str:
    """Serialize to ``.uc`` text; ``parse_family`` round-trips it exactly."""
    n = family.universe_size
    buf = io.StringIO()
    buf.write(f"n={n}\n")
    for mask in family.sets:
        buf.write("".join("1" if mask >> j & 1 else "0" for j in range(n)))
        buf.write("\n")
    return buf.getvalue()


def load_family(path: str) -> SetFamily:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_family(fh.read())


def dump_family(family: SetFamily, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_family(family))


def is_union_closed(family: SetFamily) -> bool:
    """True iff A | B is a member for every pair of members (A = B included)."""
    _require_nonempty(family, "is_union_closed")
    members = family.member_set()
    sets = family.sets
    for i, a in enumerate(sets):
        for b in sets[i:]:
            if a | b not in members:
                return False
    return True


def closure_fraction(family: SetFamily) -> Fraction:
    """Fraction of ordered pairs (A, B), drawn with replacement, whose union
    is again a member.  Exact rational with denominator |F|^2.

    Equals 1 iff the family is union closed; always at least 1/|F| because
    the |F| diagonal pairs contribute their own unions.
    """
    _require_nonempty(family, "closure_fraction")
    members = family.member_set()
    sets = family.sets
    hits = 0
    for i, a in enumerate(sets):
        if a in members:  # diagonal pair, always true
            hits += 1
        for b in sets[i + 1:]:
            if a | b in members:
                hits += 2  # (A,B) and (B,A)
    return Fraction(hits, family.size ** 2)


def closure_fraction_unordered(family: SetFamily) -> Fraction:
    """Same statistic over unordered pairs {A, B} with A = B allowed.

    Secondary diagnostic only; the theorem checks use the ordered version.
    """
    _require_nonempty(family, "closure_fraction_unordered")
    members = family.member_set()
    sets = family.sets
    hits = 0
    for i, a in enumerate(sets):
        for b in sets[i:]:
            if a | b in members:
                hits += 1
    s = family.size
    return Fraction(hits, s * (s + 1) // 2)


def element_frequencies(family: SetFamily) -> FrequencyProfile:
    """Exact membership frequency of every ground element."""
    _require_nonempty(family, "element_frequencies")
    n = family.universe_size
    counts = [0] * n
    for mask in family.sets:
        while mask:
            low = mask & -mask
            counts[low.bit_length() - 1] += 1
            mask ^= low
    size = family.size
    freq = tuple(Fraction(c, size) for c in counts)
    argmax = max(range(n), key=lambda i: (freq[i], -i))
    max_freq = freq[argmax]
    return FrequencyProfile(freq=freq, max_freq=max_freq, argmax=argmax,
                            p_min_zero=1 - max_freq)


def union_closure(family: SetFamily, cap: int = DEFAULT_CLOSURE_CAP) -> SetFamily:
    """Smallest union-closed family containing the input.

    Fixed-point worklist: every freshly added union is combined with all
    current members until nothing new appears.  Raises
    :class:`CapExceededError` once the closure grows past ``cap`` members
    (the closure of s sets can reach 2^s - 1 distinct unions).
    """
    _require_nonempty(family, "union_closure")
    members = set(family.sets)
    frontier = list(family.sets)
    while frontier:
        fresh: list[int] = []
        for a in frontier:
            for b in members.copy():
                u = a | b
                if u not in members:
                    members.add(u)
                    fresh.append(u)
            if len(members) > cap:
                raise CapExceededError(
                    f"union closure exceeded cap of {cap} members")
        frontier = fresh
    return SetFamily(family.universe_size, tuple(sorted(members)))
