"""Expansions into honest polynomials, and what they certify.

Run with:  python3 demos/polynomial_oracle_tour.py
"""

from qsym import (
    monomial,
    expand,
    from_polynomial,
    is_quasisymmetric,
    face_map,
    verify_lyndon_free_generation,
    enumerate_lyndon,
)
from qsym.expansion import SparsePolynomial
from qsym.syntax import format_polynomial, format_qsym, format_composition

M = monomial


def show(label, text):
    print(f"{label:<28} {text}")


print("== expanding into variables ==")
print()
print("A basis element becomes a polynomial by placing its parts as")
print("exponents on strictly increasing sets of variables:")
print()
show("[2,1] in 3 variables", format_polynomial(expand(M([2, 1]), 3)))
show("[2,1] in 4 variables", format_polynomial(expand(M([2, 1]), 4)))
print()
print("With too few variables, long elements vanish:")
print()
show("[1,1,1] in 2 variables", format_polynomial(expand(M([1, 1, 1]), 2)))
print()

print("== the product oracle ==")
print()
print("Multiplying expansions and expanding products are two routes that")
print("share no code, so their agreement is evidence the combinatorial")
print("recursion is right:")
print()
f, g = M([1, 2]), M([1, 1])
n = 5
route_one = expand(f * g, n)
route_two = expand(f, n) * expand(g, n)
show("routes agree in 5 vars?", str(route_one == route_two))
print()

print("== recognising and reading back ==")
print()
poly = expand(3 * M([1, 2]) - M([2, 1]), 4)
show("a quasisymmetric poly?", str(is_quasisymmetric(poly)))
show("read back", format_qsym(from_polynomial(poly)))
print()
lopsided = SparsePolynomial(2, {(1, 0): 1})
show("a1 alone in 2 vars?", str(is_quasisymmetric(lopsided)))
print()

print("== coherence under dropping variables ==")
print()
print("Keeping an increasing subset of variables and renumbering recovers")
print("the smaller expansion, which is what lets all the finite expansions")
print("describe one object:")
print()
big = expand(M([2, 1]), 4)
small = face_map(big, (1, 3, 4))
show("keep vars 1,3,4", format_polynomial(small))
show("equals 3-var expansion?", str(small == expand(M([2, 1]), 3)))
print()

print("== free generation by Lyndon indices ==")
print()
print("Products of basis elements indexed by Lyndon compositions span each")
print("graded piece with no relations over the rationals.  The certificate")
print("is an exact rank computation:")
print()
for weight in range(1, 7):
    dim, count, rank = verify_lyndon_free_generation(weight)
    names = " ".join(format_composition(c) for c in enumerate_lyndon(weight))
    print(f"  weight {weight}: dimension {dim}, monomials {count}, rank {rank}; new generators: {names}")
