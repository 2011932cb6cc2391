"""Compositions: ordered tuples of positive integers.

Compositions index the monomial basis of the quasisymmetric function ring.
This module provides the combinatorics layer: ordering, concatenation,
reversal, coarsening, Lyndon testing, enumeration, and counting.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class Composition:
    """An immutable tuple of positive integers, possibly empty.

    The weight is the sum of the parts, the length the number of parts.
    Instances are hashable and totally ordered by :func:`compare_lex`.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        if isinstance(parts, Composition):
            self._parts = parts._parts
            return
        pts = tuple(parts)
        for p in pts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"composition parts must be positive integers, got {p!r}")
        self._parts = pts

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def weight(self) -> int:
        return sum(self._parts)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical ordering key: weight first, then lexicographic."""
        return (self.weight, self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, i):
        return self._parts[i]

    def __hash__(self) -> int:
        return hash(self._parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Composition):
            return self._parts == other._parts
        return NotImplemented

    def __lt__(self, other: "Composition") -> bool:
        return compare_lex(self, other) < 0

    def __le__(self, other: "Composition") -> bool:
        return compare_lex(self, other) <= 0

    def __gt__(self, other: "Composition") -> bool:
        return compare_lex(self, other) > 0

    def __ge__(self, other: "Composition") -> bool:
        return compare_lex(self, other) >= 0

    def __repr__(self) -> str:
        return f"Composition({list(self._parts)})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self._parts) + "]"

    def concat(self, other: "Composition") -> "Composition":
        """The parts of ``self`` followed by the parts of ``other``."""
        other = Composition(other)
        return Composition(self._parts + other._parts)

    def reverse(self) -> "Composition":
        """Parts in reversed order."""
        return Composition(self._parts[::-1])

    def is_lyndon(self) -> bool:
        """True iff nonempty and strictly smaller than each proper nonempty suffix."""
        n = len(self._parts)
        if n == 0:
            return False
        for k in range(1, n):
            if compare_lex(Composition(self._parts[k:]), self) <= 0:
                return False
        return True

    def coarsenings(self) -> list["Composition"]:
        """All compositions obtained by summing groups of consecutive parts.

        Returns 2**(len-1) distinct compositions for a nonempty composition,
        and just the empty composition for the empty one, sorted canonically.
        """
        n = len(self._parts)
        if n == 0:
            return [Composition()]
        out = []
        # each bitmask picks which of the n-1 gaps stay as part boundaries
        for mask in range(1 << (n - 1)):
            grouped = []
            acc = self._parts[0]
            for i in range(1, n):
                if mask & (1 << (i - 1)):
                    grouped.append(acc)
                    acc = self._parts[i]
                else:
                    acc += self._parts[i]
            grouped.append(acc)
            out.append(Composition(grouped))
        out.sort(key=lambda c: c.sort_key)
        return out

    def splits(self) -> list[tuple["Composition", "Composition"]]:
        """All ways to cut into a prefix and a suffix, len+1 in total."""
        return [
            (Composition(self._parts[:k]), Composition(self._parts[k:]))
            for k in range(len(self._parts) + 1)
        ]


def compare_lex(left: Composition, right: Composition) -> int:
    """Total order on compositions: -1, 0, or 1.

    The first differing entry decides; a proper prefix is smaller than any
    of its extensions.
    """
    a, b = left.parts, right.parts
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    if len(a) == len(b):
        return 0
    return -1 if len(a) < len(b) else 1


def enumerate_compositions(n: int) -> list[Composition]:
    """All compositions of weight ``n`` in lexicographic order.

    There are 2**(n-1) of them for n >= 1, and only the empty one for n = 0.
    """
    if n < 0:
        raise ValueError(f"weight must be nonnegative, got {n}")
    out: list[Composition] = []

    def rec(remaining: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(Composition(prefix))
            return
        for first in range(1, remaining + 1):
            rec(remaining - first, prefix + (first,))

    rec(n, ())
    return out


def enumerate_lyndon(n: int) -> list[Composition]:
    """All Lyndon compositions of weight ``n`` in lexicographic order."""
    if n < 1:
        raise ValueError(f"weight must be positive, got {n}")
    return [c for c in enumerate_compositions(n) if c.is_lyndon()]


def mobius(d: int) -> int:
    """Number-theoretic Moebius function: 0 on non-squarefree d, else (-1)**#primes."""
    if d < 1:
        raise ValueError(f"argument must be positive, got {d}")
    nprimes = 0
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            nprimes += 1
        p += 1
    if d > 1:
        nprimes += 1
    return -1 if nprimes % 2 else 1


def lyndon_count(n: int) -> int:
    """The number of Lyndon compositions of weight ``n``.

    Computed as (1/n) * sum over divisors d of n of mobius(d) * (2**(n/d) - 1).
    """
    if n < 1:
        raise ValueError(f"weight must be positive, got {n}")
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += mobius(d) * (2 ** (n // d) - 1)
    assert total % n == 0
    return total // n
