"""The ring of quasisymmetric functions over the integers, monomial basis.

Elements are sparse integer linear combinations of basis elements indexed by
compositions.  The product is the quasi-shuffle (overlapping shuffle) of the
indexing compositions; the coproduct is deconcatenation; the antipode is a
signed sum over coarsenings of the reversed composition.  Everything is exact:
coefficients are Python ints, so they never overflow.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping

from .compositions import Composition

CompositionLike = Composition | Iterable[int]


@lru_cache(maxsize=None)
def _quasi_shuffle(left: tuple[int, ...], right: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Quasi-shuffle of two part tuples as ((parts, coefficient), ...).

    Three-branch recursion on the leading parts: take the head of the left
    factor, take the head of the right factor, or merge both heads into one
    part.  Output-sensitive and cached; callers must not mutate the result.
    """
    if not left:
        return ((right, 1),)
    if not right:
        return ((left, 1),)
    a, b = left[0], right[0]
    acc: dict[tuple[int, ...], int] = {}
    for parts, c in _quasi_shuffle(left[1:], right):
        key = (a,) + parts
        acc[key] = acc.get(key, 0) + c
    for parts, c in _quasi_shuffle(left, right[1:]):
        key = (b,) + parts
        acc[key] = acc.get(key, 0) + c
    for parts, c in _quasi_shuffle(left[1:], right[1:]):
        key = (a + b,) + parts
        acc[key] = acc.get(key, 0) + c
    return tuple(sorted(acc.items()))


class QSymElement:
    """A sparse integer combination of monomial basis elements.

    Immutable.  Supports +, -, * (by integers and by other elements), and **.
    Terms are stored without zero coefficients; iteration is canonical
    (weight first, then lexicographic on the composition).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Composition, int] | None = None):
        clean: dict[Composition, int] = {}
        if terms:
            for comp, coeff in terms.items():
                if coeff:
                    clean[Composition(comp)] = coeff
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "QSymElement":
        return cls()

    @classmethod
    def one(cls) -> "QSymElement":
        return cls({Composition(): 1})

    @classmethod
    def monomial(cls, composition: CompositionLike) -> "QSymElement":
        """The basis element with coefficient 1 on ``composition``."""
        return cls({Composition(composition): 1})

    @classmethod
    def from_int(cls, n: int) -> "QSymElement":
        return cls({Composition(): n})

    # -- inspection --------------------------------------------------------

    def terms(self) -> Iterator[tuple[Composition, int]]:
        """Terms in canonical order: by weight, then lexicographically."""
        for comp in sorted(self._terms, key=lambda c: c.sort_key):
            yield comp, self._terms[comp]

    def coefficient(self, composition: CompositionLike) -> int:
        return self._terms.get(Composition(composition), 0)

    def support(self) -> list[Composition]:
        return sorted(self._terms, key=lambda c: c.sort_key)

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        return len({c.weight for c in self._terms}) <= 1

    def degree(self) -> int:
        """Largest weight appearing; 0 for the zero element."""
        if not self._terms:
            return 0
        return max(c.weight for c in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QSymElement.from_int(other)
        if isinstance(other, QSymElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        from .syntax import format_qsym

        return f"QSymElement({format_qsym(self)!r})"

    # -- module structure --------------------------------------------------

    def __add__(self, other) -> "QSymElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for comp, coeff in other._terms.items():
            acc[comp] = acc.get(comp, 0) + coeff
        return QSymElement(acc)

    __radd__ = __add__

    def __neg__(self) -> "QSymElement":
        return QSymElement({c: -v for c, v in self._terms.items()})

    def __sub__(self, other) -> "QSymElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QSymElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    # -- ring structure ----------------------------------------------------

    def __mul__(self, other) -> "QSymElement":
        if isinstance(other, int):
            return QSymElement({c: v * other for c, v in self._terms.items()})
        if not isinstance(other, QSymElement):
            return NotImplemented
        acc: dict[Composition, int] = {}
        for ci, vi in self._terms.items():
            for cj, vj in other._terms.items():
                v = vi * vj
                for parts, mult in _quasi_shuffle(ci.parts, cj.parts):
                    comp = Composition(parts)
                    acc[comp] = acc.get(comp, 0) + v * mult
        return QSymElement(acc)

    def __rmul__(self, other) -> "QSymElement":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "QSymElement":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = QSymElement.one()
        for _ in range(k):
            result = result * self
        return result

    # -- coalgebra and Hopf structure --------------------------------------

    def coproduct(self) -> "TensorElement":
        """Deconcatenation: each basis term splits over all prefix/suffix cuts."""
        acc: dict[tuple[Composition, ...], int] = {}
        for comp, coeff in self._terms.items():
            for left, right in comp.splits():
                key = (left, right)
                acc[key] = acc.get(key, 0) + coeff
        return TensorElement(2, acc)

    def counit(self) -> int:
        """The coefficient of the empty composition."""
        return self._terms.get(Composition(), 0)

    def antipode(self) -> "QSymElement":
        """Signed sum over coarsenings of the reversed composition, per term."""
        acc: dict[Composition, int] = {}
        for comp, coeff in self._terms.items():
            sign = -1 if len(comp) % 2 else 1
            for coarser in comp.reverse().coarsenings():
                acc[coarser] = acc.get(coarser, 0) + sign * coeff
        return QSymElement(acc)

    def reverse_indices(self) -> "QSymElement":
        """The algebra involution sending each basis index to its reversal."""
        return QSymElement({c.reverse(): v for c, v in self._terms.items()})

    # -- grading and truncation --------------------------------------------

    def truncate(self, n: int) -> "QSymElement":
        """Drop terms indexed by compositions longer than ``n``.

        Models restriction to quasisymmetric functions in ``n`` ordered
        variables, where longer monomials vanish identically.
        """
        if n < 0:
            raise ValueError(f"variable count must be nonnegative, got {n}")
        return QSymElement({c: v for c, v in self._terms.items() if len(c) <= n})

    def homogeneous_part(self, d: int) -> "QSymElement":
        """The sum of terms of weight exactly ``d``."""
        return QSymElement({c: v for c, v in self._terms.items() if c.weight == d})


def _coerce(value) -> "QSymElement":
    if isinstance(value, QSymElement):
        return value
    if isinstance(value, int):
        return QSymElement.from_int(value)
    return NotImplemented


def monomial(composition: CompositionLike) -> QSymElement:
    """Shorthand for :meth:`QSymElement.monomial`."""
    return QSymElement.monomial(composition)


class TensorElement:
    """A sparse integer combination of tensors of monomial basis elements.

    Keys are tuples of compositions of a fixed arity (2 or 3).  The product
    is componentwise quasi-shuffle; adding or multiplying elements of
    different arity is an error.
    """

    __slots__ = ("_arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[tuple, int] | None = None):
        if arity not in (2, 3):
            raise ValueError(f"tensor arity must be 2 or 3, got {arity}")
        self._arity = arity
        clean: dict[tuple[Composition, ...], int] = {}
        if terms:
            for key, coeff in terms.items():
                if len(key) != arity:
                    raise ValueError(f"tensor key {key!r} does not have arity {arity}")
                if coeff:
                    clean[tuple(Composition(c) for c in key)] = coeff
        self._terms = clean

    @property
    def arity(self) -> int:
        return self._arity

    @classmethod
    def unit(cls, arity: int = 2) -> "TensorElement":
        return cls(arity, {(Composition(),) * arity: 1})

    def terms(self) -> Iterator[tuple[tuple[Composition, ...], int]]:
        """Terms in canonical order: factorwise weight-then-lex keys."""
        for key in sorted(self._terms, key=lambda k: tuple(c.sort_key for c in k)):
            yield key, self._terms[key]

    def coefficient(self, key: Iterable[CompositionLike]) -> int:
        return self._terms.get(tuple(Composition(c) for c in key), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, TensorElement):
            return self._arity == other._arity and self._terms == other._terms
        return NotImplemented

    def __repr__(self) -> str:
        from .syntax import format_tensor

        return f"TensorElement({format_tensor(self)!r})"

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check_arity(other)
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, 0) + coeff
        return TensorElement(self._arity, acc)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self._arity, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "TensorElement":
        if isinstance(other, int):
            return TensorElement(self._arity, {k: v * other for k, v in self._terms.items()})
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check_arity(other)
        acc: dict[tuple[Composition, ...], int] = {}
        for key1, v1 in self._terms.items():
            for key2, v2 in other._terms.items():
                factors = [
                    QSymElement.monomial(a) * QSymElement.monomial(b)
                    for a, b in zip(key1, key2)
                ]
                v = v1 * v2
                for key, coeff in _expand_factor_products(factors):
                    acc[key] = acc.get(key, 0) + v * coeff
        return TensorElement(self._arity, acc)

    def __rmul__(self, other) -> "TensorElement":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def _check_arity(self, other: "TensorElement") -> None:
        if self._arity != other._arity:
            raise ValueError(f"tensor arity mismatch: {self._arity} vs {other._arity}")


def _expand_factor_products(
    factors: list[QSymElement],
) -> Iterator[tuple[tuple[Composition, ...], int]]:
    """Distribute a list of elements into tensor keys with coefficients."""
    keys: list[tuple[tuple[Composition, ...], int]] = [((), 1)]
    for factor in factors:
        keys = [
            (key + (comp,), coeff * c)
            for key, coeff in keys
            for comp, c in factor.terms()
        ]
    return iter(keys)


def tensor(left: QSymElement, right: QSymElement) -> TensorElement:
    """The 2-fold tensor of two elements, bilinear in both slots."""
    acc: dict[tuple[Composition, ...], int] = {}
    for ci, vi in left.terms():
        for cj, vj in right.terms():
            acc[(ci, cj)] = vi * vj
    return TensorElement(2, acc)


def triple_tensor(a: QSymElement, b: QSymElement, c: QSymElement) -> TensorElement:
    """The 3-fold tensor of three elements."""
    acc: dict[tuple[Composition, ...], int] = {}
    for ci, vi in a.terms():
        for cj, vj in b.terms():
            for ck, vk in c.terms():
                acc[(ci, cj, ck)] = vi * vj * vk
    return TensorElement(3, acc)


def map_slot(
    element: TensorElement, slot: int, fn: Callable[[QSymElement], QSymElement]
) -> TensorElement:
    """Apply a linear map to one tensor slot, extended bilinearly.

    ``fn`` is evaluated on basis elements; it must be linear for the result
    to be meaningful.  If ``fn`` returns sums, the slot is re-expanded.
    """
    if not 0 <= slot < element.arity:
        raise ValueError(f"slot {slot} out of range for arity {element.arity}")
    acc: dict[tuple[Composition, ...], int] = {}
    for key, coeff in element.terms():
        image = fn(QSymElement.monomial(key[slot]))
        for comp, c in image.terms():
            new_key = key[:slot] + (comp,) + key[slot + 1 :]
            acc[new_key] = acc.get(new_key, 0) + coeff * c
    return TensorElement(element.arity, acc)


def coproduct_first(element: TensorElement) -> TensorElement:
    """Apply the coproduct to the first slot of a 2-fold tensor, giving a 3-fold one."""
    element._check_arity(TensorElement(2))
    acc: dict[tuple[Composition, ...], int] = {}
    for (left, right), coeff in element.terms():
        for a, b in left.splits():
            key = (a, b, right)
            acc[key] = acc.get(key, 0) + coeff
    return TensorElement(3, acc)


def coproduct_second(element: TensorElement) -> TensorElement:
    """Apply the coproduct to the second slot of a 2-fold tensor, giving a 3-fold one."""
    element._check_arity(TensorElement(2))
    acc: dict[tuple[Composition, ...], int] = {}
    for (left, right), coeff in element.terms():
        for a, b in right.splits():
            key = (left, a, b)
            acc[key] = acc.get(key, 0) + coeff
    return TensorElement(3, acc)


def counit_first(element: TensorElement) -> QSymElement:
    """Contract the first slot of a 2-fold tensor with the counit."""
    element._check_arity(TensorElement(2))
    acc: dict[Composition, int] = {}
    for (left, right), coeff in element.terms():
        if len(left) == 0:
            acc[right] = acc.get(right, 0) + coeff
    return QSymElement(acc)


def counit_second(element: TensorElement) -> QSymElement:
    """Contract the second slot of a 2-fold tensor with the counit."""
    element._check_arity(TensorElement(2))
    acc: dict[Composition, int] = {}
    for (left, right), coeff in element.terms():
        if len(right) == 0:
            acc[left] = acc.get(left, 0) + coeff
    return QSymElement(acc)


def contract_product(element: TensorElement) -> QSymElement:
    """Multiply the two slots of a 2-fold tensor together."""
    element._check_arity(TensorElement(2))
    result = QSymElement.zero()
    for (left, right), coeff in element.terms():
        result = result + coeff * (QSymElement.monomial(left) * QSymElement.monomial(right))
    return result
