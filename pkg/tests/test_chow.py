"""Gluing pullbacks, stratum classes, and the beta extension."""

import pytest

from qsym.algebra import QSymElement, TensorElement, monomial, tensor
from qsym.chow import (
    BetaElement,
    deep_stratum_class,
    gluing_matches_coproduct,
    gluing_pullback,
    marked_point_involution,
    truncate_tensor,
)
from qsym.compositions import Composition, enumerate_compositions

M = monomial


def all_compositions(max_weight):
    out = []
    for d in range(max_weight + 1):
        out.extend(enumerate_compositions(d))
    return out


class TestTruncateTensor:
    def test_drops_long_factors(self):
        element = M([1, 2, 1]).coproduct()
        kept = truncate_tensor(element, (1, 2))
        assert kept == TensorElement(2, {
            (Composition([1]), Composition([2, 1])): 1,
        })

    def test_bound_validation(self):
        element = tensor(M([1]), M([1]))
        with pytest.raises(ValueError):
            truncate_tensor(element, (1,))
        with pytest.raises(ValueError):
            truncate_tensor(element, (1, -1))

    def test_zero_bounds(self):
        element = M([1]).coproduct()
        assert truncate_tensor(element, (0, 0)).is_zero()
        unit = TensorElement.unit(2)
        assert truncate_tensor(unit, (0, 0)) == unit


class TestGluingPullback:
    def test_example(self):
        result = gluing_pullback(M([1, 2]), 1, 2)
        assert result == TensorElement(2, {
            (Composition(), Composition([1, 2])): 1,
            (Composition([1]), Composition([2])): 1,
        })

    def test_full_bounds_recover_coproduct(self):
        for comp in all_compositions(5):
            f = M(comp)
            assert gluing_pullback(f, comp.weight, comp.weight) == f.coproduct()

    def test_linear(self):
        f, g = M([1, 2]), M([3])
        assert gluing_pullback(f + g, 2, 2) == gluing_pullback(f, 2, 2) + gluing_pullback(g, 2, 2)

    def test_negative_counts_rejected(self):
        with pytest.raises(ValueError):
            gluing_pullback(M([1]), -1, 2)

    def test_matches_coproduct_through_weight_five(self):
        for comp in all_compositions(5):
            assert gluing_matches_coproduct(M(comp))


class TestDeepStratum:
    def test_classes(self):
        assert deep_stratum_class(0) == QSymElement.one()
        assert deep_stratum_class(1) == M([1])
        assert deep_stratum_class(3) == M([1, 1, 1])

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            deep_stratum_class(-1)

    def test_coproduct_splits_the_chain(self):
        for d in range(6):
            delta = deep_stratum_class(d).coproduct()
            expected = TensorElement(2, {
                (Composition([1] * i), Composition([1] * (d - i))): 1
                for i in range(d + 1)
            })
            assert delta == expected


class TestBetaElement:
    def test_validation(self):
        with pytest.raises(ValueError):
            BetaElement({-1: QSymElement.one()})
        with pytest.raises(ValueError):
            BetaElement({True: QSymElement.one()})

    def test_zero_coefficients_dropped(self):
        assert BetaElement({2: QSymElement.zero()}).is_zero()

    def test_constructors(self):
        assert BetaElement.beta() == BetaElement({1: QSymElement.one()})
        assert BetaElement.one() == BetaElement.from_qsym(QSymElement.one())
        assert BetaElement.zero().is_zero()

    def test_coercion(self):
        b = BetaElement.beta()
        assert b + 1 == BetaElement({1: QSymElement.one(), 0: QSymElement.one()})
        assert b + M([2]) == BetaElement({1: QSymElement.one(), 0: M([2])})
        assert 2 * b == b + b

    def test_product_convolves_powers(self):
        b = BetaElement.beta()
        x = BetaElement({0: M([1])})
        assert b * b == BetaElement({2: QSymElement.one()})
        assert (b + x) * (b - x) == BetaElement({2: QSymElement.one(), 0: -(M([1]) * M([1]))})

    def test_power(self):
        b = BetaElement.beta()
        assert b**3 == BetaElement({3: QSymElement.one()})
        assert (b + 1) ** 2 == b * b + 2 * b + 1
        with pytest.raises(ValueError):
            b**-2

    def test_terms_descending(self):
        x = BetaElement({0: M([1]), 2: QSymElement.one(), 1: M([2])})
        assert [p for p, _ in x.terms()] == [2, 1, 0]

    def test_degrees(self):
        x = BetaElement({2: M([1, 1]), 0: M([1])})
        assert x.beta_degree() == 2
        assert x.total_degree() == 4
        assert BetaElement.zero().total_degree() == 0

    def test_coefficient_lookup(self):
        x = BetaElement({1: M([2])})
        assert x.coefficient(1) == M([2])
        assert x.coefficient(0).is_zero()


class TestMarkedPointInvolution:
    def test_image_of_beta(self):
        assert marked_point_involution(BetaElement.beta()) == BetaElement(
            {1: QSymElement.from_int(-1), 0: M([1])}
        )

    def test_image_of_scalars(self):
        x = BetaElement.from_qsym(M([1, 2]))
        assert marked_point_involution(x) == BetaElement.from_qsym(M([2, 1]))

    def test_squares_to_identity(self):
        generators = []
        for comp in all_compositions(4):
            for k in range(5 - comp.weight):
                generators.append(BetaElement({k: M(comp)}))
        for g in generators:
            assert marked_point_involution(marked_point_involution(g)) == g

    def test_preserves_total_degree(self):
        x = BetaElement({2: M([1, 2]), 1: QSymElement.one()})
        assert marked_point_involution(x).total_degree() == x.total_degree()

    def test_multiplicative(self):
        xs = [
            BetaElement.beta(),
            BetaElement({0: M([1])}),
            BetaElement({1: M([1]), 0: QSymElement.from_int(2)}),
        ]
        for x in xs:
            for y in xs:
                assert marked_point_involution(x * y) == (
                    marked_point_involution(x) * marked_point_involution(y)
                )

    def test_additive(self):
        x = BetaElement({2: M([1])})
        y = BetaElement({0: M([3])})
        assert marked_point_involution(x + y) == (
            marked_point_involution(x) + marked_point_involution(y)
        )
