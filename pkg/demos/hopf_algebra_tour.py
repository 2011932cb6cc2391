"""A walk through the ring structure: product, coproduct, and antipode.

Run with:  python3 demos/hopf_algebra_tour.py
"""

from qsym import monomial, QSymElement, map_slot, contract_product
from qsym.syntax import format_qsym, format_tensor

M = monomial


def show(label, text):
    print(f"{label:<28} {text}")


print("== the quasi-shuffle product ==")
print()
print("Basis elements multiply by interleaving their parts; whenever two")
print("parts land in the same slot they add.  The smallest example already")
print("shows both behaviours:")
print()
show("[1] * [1]", format_qsym(M([1]) * M([1])))
print()
print("A bigger product, with coefficients counting the ways each")
print("interleaving arises:")
print()
show("[1,2] * [1,1]", format_qsym(M([1, 2]) * M([1, 1])))
print()

print("== the deconcatenation coproduct ==")
print()
print("A basis element splits over every way of cutting its index into a")
print("prefix and a suffix:")
print()
show("coproduct of [3,1,4]", format_tensor(M([3, 1, 4]).coproduct()))
print()
print("The coproduct respects products (it is a ring map), which makes the")
print("whole structure a bialgebra:")
f, g = M([1]), M([2])
lhs = (f * g).coproduct()
rhs = f.coproduct() * g.coproduct()
print()
show("coproduct of [1]*[2]", format_tensor(lhs))
show("agrees with slotwise?", str(lhs == rhs))
print()

print("== the antipode ==")
print()
print("The antipode reverses the composition and sums over coarsenings with")
print("an alternating sign:")
print()
show("antipode of [3,1,4]", format_qsym(M([3, 1, 4]).antipode()))
print()
print("Its defining property: multiplying the two halves of the coproduct")
print("after applying the antipode to one slot collapses everything to the")
print("coefficient of the empty composition:")
print()
f = M([2, 1])
collapsed = contract_product(map_slot(f.coproduct(), 0, QSymElement.antipode))
show("collapse of [2,1]", format_qsym(collapsed))
show("counit of [2,1]", str(f.counit()))
print()
print("Applied twice it is the identity, as it must be in a commutative ring:")
print()
show("antipode twice on [3,1,4]", format_qsym(M([3, 1, 4]).antipode().antipode()))
