"""Polynomial expansions of quasisymmetric functions, and checks built on them.

This module is deliberately independent of the quasi-shuffle recursion in
:mod:`qsym.algebra`: a basis element is expanded into an honest polynomial in
finitely many ordered variables by summing over strictly increasing placements
of its parts.  Multiplying expansions therefore gives a second, unrelated
route to the product, which the test-suite exploits as a cross-check.

Also here: recognising quasisymmetric polynomials, reading them back into the
basis, variable-killing face maps, and the exact-rank certificate that
products of Lyndon-indexed basis elements span each graded piece.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Mapping

from .algebra import QSymElement
from .compositions import Composition, enumerate_compositions, enumerate_lyndon


class SparsePolynomial:
    """An integer polynomial in variables a1..an, stored as exponent tuples.

    Immutable.  Exponent tuples always have length ``num_vars``; terms with
    coefficient zero are dropped.  Arithmetic requires equal ``num_vars``.
    """

    __slots__ = ("_num_vars", "_terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if num_vars < 0:
            raise ValueError(f"variable count must be nonnegative, got {num_vars}")
        self._num_vars = num_vars
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != num_vars:
                    raise ValueError(
                        f"exponent tuple {exps!r} does not match {num_vars} variables"
                    )
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps!r}")
                if coeff:
                    clean[exps] = coeff
        self._terms = clean

    @property
    def num_vars(self) -> int:
        return self._num_vars

    @classmethod
    def zero(cls, num_vars: int) -> "SparsePolynomial":
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, value: int) -> "SparsePolynomial":
        return cls(num_vars, {(0,) * num_vars: value})

    def terms(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Terms in descending graded-lexicographic order of exponents."""
        for exps in sorted(self._terms, key=lambda e: (sum(e), e), reverse=True):
            yield exps, self._terms[exps]

    def coefficient(self, exps: tuple[int, ...]) -> int:
        return self._terms.get(tuple(exps), 0)

    def degree(self) -> int:
        """Largest total degree appearing; 0 for the zero polynomial."""
        if not self._terms:
            return 0
        return max(sum(e) for e in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePolynomial):
            return self._num_vars == other._num_vars and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._num_vars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        from .syntax import format_polynomial

        return f"SparsePolynomial({self._num_vars}, {format_polynomial(self)!r})"

    def _check_vars(self, other: "SparsePolynomial") -> None:
        if self._num_vars != other._num_vars:
            raise ValueError(
                f"variable count mismatch: {self._num_vars} vs {other._num_vars}"
            )

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._check_vars(other)
        acc = dict(self._terms)
        for exps, coeff in other._terms.items():
            acc[exps] = acc.get(exps, 0) + coeff
        return SparsePolynomial(self._num_vars, acc)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(self._num_vars, {e: -v for e, v in self._terms.items()})

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "SparsePolynomial":
        if isinstance(other, int):
            return SparsePolynomial(
                self._num_vars, {e: v * other for e, v in self._terms.items()}
            )
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._check_vars(other)
        acc: dict[tuple[int, ...], int] = {}
        for e1, v1 in self._terms.items():
            for e2, v2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                acc[key] = acc.get(key, 0) + v1 * v2
        return SparsePolynomial(self._num_vars, acc)

    def __rmul__(self, other) -> "SparsePolynomial":
        if isinstance(other, int):
            return self * other
        return NotImplemented


@lru_cache(maxsize=None)
def _basis_expansion(parts: tuple[int, ...], num_vars: int) -> tuple[tuple[int, ...], ...]:
    """Exponent tuples of a basis element in ``num_vars`` variables.

    One tuple per strictly increasing placement of the parts; all carry
    coefficient 1, so only the exponent tuples are stored.
    """
    length = len(parts)
    if length > num_vars:
        return ()
    out = []
    for positions in combinations(range(num_vars), length):
        exps = [0] * num_vars
        for pos, part in zip(positions, parts):
            exps[pos] = part
        out.append(tuple(exps))
    return tuple(out)


def expand(element: QSymElement, num_vars: int) -> SparsePolynomial:
    """Expand into a polynomial in ``num_vars`` ordered variables.

    Basis elements longer than ``num_vars`` expand to zero.
    """
    if num_vars < 0:
        raise ValueError(f"variable count must be nonnegative, got {num_vars}")
    acc: dict[tuple[int, ...], int] = {}
    for comp, coeff in element.terms():
        for exps in _basis_expansion(comp.parts, num_vars):
            acc[exps] = acc.get(exps, 0) + coeff
    return SparsePolynomial(num_vars, acc)


def _packed_pattern(exps: tuple[int, ...]) -> tuple[int, ...]:
    """The subsequence of nonzero exponents, read left to right."""
    return tuple(e for e in exps if e)


def is_quasisymmetric(poly: SparsePolynomial) -> bool:
    """Whether every pattern of nonzero exponents appears at all placements
    with one shared coefficient."""
    groups: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
    for exps, coeff in poly.terms():
        groups.setdefault(_packed_pattern(exps), {})[exps] = coeff
    for pattern, placements in groups.items():
        if len(placements) != comb(poly.num_vars, len(pattern)):
            return False
        if len(set(placements.values())) > 1:
            return False
    return True


def from_polynomial(poly: SparsePolynomial) -> QSymElement:
    """Read a quasisymmetric polynomial back into the monomial basis.

    Requires at least as many variables as the total degree, since with fewer
    variables distinct elements can share the same expansion.  Raises
    ``ValueError`` if the polynomial is not quasisymmetric or has too few
    variables.
    """
    if poly.num_vars < poly.degree():
        raise ValueError(
            f"{poly.num_vars} variables cannot faithfully represent degree "
            f"{poly.degree()}; need at least as many variables as the degree"
        )
    if not is_quasisymmetric(poly):
        raise ValueError("polynomial is not quasisymmetric")
    acc: dict[Composition, int] = {}
    for exps, coeff in poly.terms():
        pattern = _packed_pattern(exps)
        # the leading placement puts all nonzero exponents first
        if exps[: len(pattern)] == pattern:
            acc[Composition(pattern)] = coeff
    return QSymElement(acc)


def face_map(poly: SparsePolynomial, positions: tuple[int, ...]) -> SparsePolynomial:
    """Keep the 1-based variables listed in ``positions``, kill the rest.

    ``positions`` must be strictly increasing and within range.  The kept
    variables are renumbered 1..m in order; any term using a killed variable
    is dropped.
    """
    positions = tuple(positions)
    if any(not isinstance(p, int) or isinstance(p, bool) for p in positions):
        raise ValueError(f"positions must be integers, got {positions!r}")
    if any(p < 1 or p > poly.num_vars for p in positions):
        raise ValueError(
            f"positions {positions!r} out of range for {poly.num_vars} variables"
        )
    if any(a >= b for a, b in zip(positions, positions[1:])):
        raise ValueError(f"positions must be strictly increasing, got {positions!r}")
    keep = [p - 1 for p in positions]
    keep_set = set(keep)
    acc: dict[tuple[int, ...], int] = {}
    for exps, coeff in poly.terms():
        if any(e and i not in keep_set for i, e in enumerate(exps)):
            continue
        key = tuple(exps[i] for i in keep)
        acc[key] = acc.get(key, 0) + coeff
    return SparsePolynomial(len(keep), acc)


def zero_insertion_holds(element: QSymElement, num_vars: int, slot: int) -> bool:
    """Setting one variable of the larger expansion to zero recovers the
    smaller one.

    ``slot`` is the 1-based variable of the ``num_vars + 1``-variable
    expansion to kill.  This compatibility is what makes the finite-variable
    expansions cohere into a single limit object.
    """
    if not 1 <= slot <= num_vars + 1:
        raise ValueError(f"slot {slot} out of range for {num_vars + 1} variables")
    survivors = tuple(p for p in range(1, num_vars + 2) if p != slot)
    return face_map(expand(element, num_vars + 1), survivors) == expand(element, num_vars)


def rational_rank(rows: list[list[Fraction]]) -> int:
    """Rank of a matrix of Fractions, by exact Gaussian elimination."""
    matrix = [list(row) for row in rows]
    if not matrix:
        return 0
    num_cols = len(matrix[0])
    if any(len(row) != num_cols for row in matrix):
        raise ValueError("rows have unequal lengths")
    rank = 0
    for col in range(num_cols):
        pivot = None
        best = Fraction(0)
        for r in range(rank, len(matrix)):
            value = abs(matrix[r][col])
            if value > best:
                best = value
                pivot = r
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        lead = matrix[rank][col]
        for r in range(rank + 1, len(matrix)):
            if matrix[r][col]:
                factor = matrix[r][col] / lead
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
        if rank == len(matrix):
            break
    return rank


def lyndon_monomial_multisets(weight: int) -> list[tuple[Composition, ...]]:
    """All multisets of Lyndon compositions with total weight ``weight``.

    Each multiset is a tuple sorted by the canonical composition order.
    """
    if weight < 0:
        raise ValueError(f"weight must be nonnegative, got {weight}")
    generators: list[Composition] = []
    for w in range(1, weight + 1):
        generators.extend(enumerate_lyndon(w))
    generators.sort(key=lambda c: c.sort_key)

    out: list[tuple[Composition, ...]] = []

    def recurse(start: int, remaining: int, chosen: list[Composition]) -> None:
        if remaining == 0:
            out.append(tuple(chosen))
            return
        for i in range(start, len(generators)):
            g = generators[i]
            if g.weight > remaining:
                continue
            chosen.append(g)
            recurse(i, remaining - g.weight, chosen)
            chosen.pop()

    recurse(0, weight, [])
    return out


def lyndon_generation_matrix(weight: int) -> list[list[Fraction]]:
    """Rows: products over each Lyndon multiset of weight ``weight``;
    columns: compositions of that weight, in lexicographic order."""
    columns = {comp: i for i, comp in enumerate(enumerate_compositions(weight))}
    rows: list[list[Fraction]] = []
    for multiset in lyndon_monomial_multisets(weight):
        product = QSymElement.one()
        for comp in multiset:
            product = product * QSymElement.monomial(comp)
        row = [Fraction(0)] * len(columns)
        for comp, coeff in product.terms():
            row[columns[comp]] = Fraction(coeff)
        rows.append(row)
    return rows


def verify_lyndon_free_generation(weight: int) -> tuple[int, int, int]:
    """Certify that Lyndon monomials of one weight form a rational basis.

    Returns ``(dimension, multiset_count, rank)``: the dimension of the
    graded piece, the number of Lyndon monomials of that weight, and the
    exact rank of the matrix expressing those monomials in the basis.  Free
    polynomial generation at this weight holds exactly when all three agree.
    """
    if weight < 1:
        raise ValueError(f"weight must be positive, got {weight}")
    dimension = 2 ** (weight - 1)
    matrix = lyndon_generation_matrix(weight)
    return dimension, len(matrix), rational_rank(matrix)
