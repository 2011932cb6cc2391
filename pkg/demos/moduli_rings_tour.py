"""The geometric dictionary: gluing, strata, and the marked-point involution.

Run with:  python3 demos/moduli_rings_tour.py
"""

from qsym import (
    monomial,
    gluing_pullback,
    gluing_matches_coproduct,
    deep_stratum_class,
    marked_point_involution,
    BetaElement,
)
from qsym.syntax import format_beta, format_qsym, format_tensor

M = monomial


def show(label, text):
    print(f"{label:<28} {text}")


print("== gluing two curves ==")
print()
print("Pulling a class back along the gluing map splits it over all")
print("prefix/suffix cuts; cuts too long for either side die in the")
print("finite-variable quotient:")
print()
show("[1,2] into 1+2 vars", format_tensor(gluing_pullback(M([1, 2]), 1, 2)))
show("[1,2] into 3+3 vars", format_tensor(gluing_pullback(M([1, 2]), 3, 3)))
print()
print("Taken over every split of the weight, these truncations assemble")
print("into the full coproduct:")
print()
show("assembles for [2,1,1]?", str(gluing_matches_coproduct(M([2, 1, 1]))))
print()

print("== boundary strata ==")
print()
print("The deepest boundary stratum is a chain of two-pointed curves; its")
print("class is the all-ones basis element, and its coproduct walks the")
print("cuts of the chain:")
print()
show("depth 3 stratum", format_qsym(deep_stratum_class(3)))
show("its coproduct", format_tensor(deep_stratum_class(3).coproduct()))
print()

print("== the ring with one extra class ==")
print()
print("The one-marked-point tower needs one more generator, written b.")
print("Swapping the two points of the double cover reverses every indexing")
print("composition and sends b to -b + [1]:")
print()
show("image of b", format_beta(marked_point_involution(BetaElement.beta())))
print()
x = BetaElement({2: M([1]) + 2, 0: M([1, 2])})
show("a sample class x", format_beta(x))
show("image of x", format_beta(marked_point_involution(x)))
show("image of image", format_beta(marked_point_involution(marked_point_involution(x))))
print()
print("Applying the involution twice restores x, and products map to")
print("products, so the two presentations of the tower agree.")
