"""Ring models for moduli of pointed genus-zero curves.

The stable parts of the moduli spaces with one or two marked points have
Chow rings assembled from quasisymmetric functions: the two-point tower is
modelled by the basis truncations of :mod:`qsym.algebra`, gluing two curves
along marked points pulls classes back through the deconcatenation coproduct,
and the one-point tower extends the ring by a class ``beta`` carrying an
involution that swaps the roles of the two marked points upstairs.
"""

from __future__ import annotations

from typing import Iterator, Mapping

from .algebra import QSymElement, TensorElement
from .compositions import Composition


def truncate_tensor(element: TensorElement, bounds: tuple[int, ...]) -> TensorElement:
    """Drop tensor terms whose factor in slot ``i`` is longer than ``bounds[i]``.

    Models the finite-variable quotients applied slotwise.
    """
    bounds = tuple(bounds)
    if len(bounds) != element.arity:
        raise ValueError(
            f"expected {element.arity} length bounds, got {len(bounds)}"
        )
    if any(b < 0 for b in bounds):
        raise ValueError(f"length bounds must be nonnegative, got {bounds!r}")
    acc = {
        key: coeff
        for key, coeff in element.terms()
        if all(len(comp) <= bound for comp, bound in zip(key, bounds))
    }
    return TensorElement(element.arity, acc)


def gluing_pullback(element: QSymElement, n1: int, n2: int) -> TensorElement:
    """Pull a class back along the map gluing two curves at marked points.

    The target keeps ``n1`` variables in the first slot and ``n2`` in the
    second: each basis term splits over all prefix/suffix cuts, and cuts
    whose halves are too long for their slot die in the quotient.
    """
    if n1 < 0 or n2 < 0:
        raise ValueError(f"variable counts must be nonnegative, got {n1}, {n2}")
    return truncate_tensor(element.coproduct(), (n1, n2))


def gluing_matches_coproduct(element: QSymElement) -> bool:
    """Whether the gluing pullbacks jointly recover the coproduct.

    For each way of splitting the total weight ``d`` as ``n1 + n2``, the
    pullback into ``n1`` and ``n2`` variables must equal the coproduct
    truncated the same way; and together those truncations must cover every
    coproduct term.  This is the finite-level shadow of the statement that
    gluing induces the comultiplication on the limit ring.
    """
    full = element.coproduct()
    d = element.degree()
    seen: set[tuple[Composition, ...]] = set()
    for n1 in range(d + 1):
        n2 = d - n1
        truncated = truncate_tensor(full, (n1, n2))
        if gluing_pullback(element, n1, n2) != truncated:
            return False
        seen.update(key for key, _ in truncated.terms())
    return seen == {key for key, _ in full.terms()}


def deep_stratum_class(d: int) -> QSymElement:
    """The class of the smallest boundary stratum in ``d`` variables.

    A chain of ``d`` two-pointed rational curves: the basis element indexed
    by ``d`` parts equal to 1.
    """
    if d < 0:
        raise ValueError(f"stratum depth must be nonnegative, got {d}")
    return QSymElement.monomial([1] * d)


class BetaElement:
    """A polynomial in one extra class ``beta`` with quasisymmetric coefficients.

    Models the Chow ring of the one-point tower: ``beta`` is the extra
    generator, and the coefficient of each power is an element of the
    two-point ring.  Immutable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, QSymElement] | None = None):
        clean: dict[int, QSymElement] = {}
        if coeffs:
            for power, value in coeffs.items():
                if not isinstance(power, int) or isinstance(power, bool) or power < 0:
                    raise ValueError(f"beta power must be a nonnegative integer, got {power!r}")
                if not isinstance(value, QSymElement):
                    value = QSymElement.from_int(value)
                if value:
                    clean[power] = value
        self._coeffs = clean

    @classmethod
    def zero(cls) -> "BetaElement":
        return cls()

    @classmethod
    def one(cls) -> "BetaElement":
        return cls({0: QSymElement.one()})

    @classmethod
    def beta(cls) -> "BetaElement":
        return cls({1: QSymElement.one()})

    @classmethod
    def from_qsym(cls, element: QSymElement) -> "BetaElement":
        return cls({0: element})

    def terms(self) -> Iterator[tuple[int, QSymElement]]:
        """Pairs (power, coefficient) in descending beta power."""
        for power in sorted(self._coeffs, reverse=True):
            yield power, self._coeffs[power]

    def coefficient(self, power: int) -> QSymElement:
        return self._coeffs.get(power, QSymElement.zero())

    def beta_degree(self) -> int:
        """Largest beta power appearing; 0 for the zero element."""
        if not self._coeffs:
            return 0
        return max(self._coeffs)

    def total_degree(self) -> int:
        """Largest combined degree, counting beta with weight 1."""
        if not self._coeffs:
            return 0
        return max(power + value.degree() for power, value in self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        other = _coerce_beta(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        from .syntax import format_beta

        return f"BetaElement({format_beta(self)!r})"

    def __add__(self, other) -> "BetaElement":
        other = _coerce_beta(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._coeffs)
        for power, value in other._coeffs.items():
            acc[power] = acc.get(power, QSymElement.zero()) + value
        return BetaElement(acc)

    __radd__ = __add__

    def __neg__(self) -> "BetaElement":
        return BetaElement({p: -v for p, v in self._coeffs.items()})

    def __sub__(self, other) -> "BetaElement":
        other = _coerce_beta(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "BetaElement":
        other = _coerce_beta(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "BetaElement":
        other = _coerce_beta(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[int, QSymElement] = {}
        for p1, v1 in self._coeffs.items():
            for p2, v2 in other._coeffs.items():
                power = p1 + p2
                acc[power] = acc.get(power, QSymElement.zero()) + v1 * v2
        return BetaElement(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BetaElement":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = BetaElement.one()
        for _ in range(k):
            result = result * self
        return result


def _coerce_beta(value) -> "BetaElement":
    if isinstance(value, BetaElement):
        return value
    if isinstance(value, QSymElement):
        return BetaElement.from_qsym(value)
    if isinstance(value, int):
        return BetaElement({0: QSymElement.from_int(value)})
    return NotImplemented


def marked_point_involution(element: BetaElement) -> BetaElement:
    """The involution swapping the two marked points of the double cover.

    Reverses the indexing composition of each coefficient and substitutes
    ``-beta + M_[1]`` for ``beta``.  It is a ring involution: applying it
    twice is the identity, and it preserves total degree.
    """
    image_of_beta = BetaElement(
        {1: QSymElement.from_int(-1), 0: QSymElement.monomial([1])}
    )
    result = BetaElement.zero()
    for power, value in element.terms():
        result = result + BetaElement.from_qsym(value.reverse_indices()) * image_of_beta**power
    return result
