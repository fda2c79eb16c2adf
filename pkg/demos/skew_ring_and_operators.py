"""
Walk through the skew-polynomial ring, the odd Demazure operators and the
relations they satisfy. Run: python3 demos/skew_ring_and_operators.py
"""

from spin_nilhecke import DemazureOperator, SkewPolynomial, parse_polynomial, verify_relations
from spin_nilhecke.skewpoly import point_action
from spin_nilhecke.weyl import enumerate_group, length, longest_element, reduced_word
from spin_nilhecke.weyl import format_word

x1, x2, x3 = (SkewPolynomial.variable(3, i) for i in (1, 2, 3))
print("x2*x1         =", x2 * x1)
print("(x1+x2)^2     =", (x1 + x2) ** 2)
print("x1^2*x2       =", x1 ** 2 * x2, " (squares are central)")

f = parse_polynomial("x1^3*x2 + 2*x2*x3", 3)
for i in (1, 2, 3):
    d = DemazureOperator("spin", "b", i, 3)
    print(f"d{i}({f}) = {d(f)}")
    print(f"   reflection s{i} sends it to {point_action(f, 'b', i)}")

print("\nType B3 Weyl group:", len(enumerate_group("b", 3)), "elements;",
      "longest element", longest_element("b", 3), "of length", length(longest_element("b", 3)))
for w in enumerate_group("b", 3)[:6]:
    print(f"  {str(w):<14} {format_word(reduced_word(w))}")

for wtype, n in (("b", 3), ("d", 3)):
    rep = verify_relations("spin", wtype, n, max_degree=6)
    print(f"\nspin {wtype.upper()}{n}: {len(rep.results)} relation instances, all hold: {rep.passed}")
    for r in rep.results[:4]:
        print(f"  {r.formula:<40} {r.params}  checked on {r.checked} monomials")
