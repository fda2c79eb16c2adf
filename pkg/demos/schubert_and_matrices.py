"""
Schubert polynomials, free-module decomposition, the matrix model and the
center, on small ranks. Run: python3 demos/schubert_and_matrices.py
"""

from spin_nilhecke import (
    enumerate_group, multiply, parse_expression, parse_polynomial, pbw_decompose, schubert_decompose,
    schubert_family, solve_preimage, to_matrix,
)
from spin_nilhecke.nilhecke import center_check, generator_element, matrix_unit

print("Type D2 Schubert polynomials:")
for w, s in schubert_family("spin", "d", 2).items():
    print(f"  {str(w):<10} {s}")

f = parse_polynomial("x1^5*x2 - 3*x2^4 + 7", 2)
print(f"\nDecomposing {f} over the type B2 symmetric ring:")
for w, c in schubert_decompose("spin", "b", 2, f).items():
    print(f"  s_{str(w):<10} * ({c})")

a = parse_expression("x1 d1 + d2", "spin", "b", 2)
print(f"\nMatrix of {a} over the symmetric ring (columns: Schubert basis):")
print(to_matrix(a))

group = enumerate_group("b", 2)
unit = matrix_unit("spin", "b", 2, group[2], group[5])
pre = solve_preimage(unit, "int")
print(f"\nPreimage of E[{group[2]}, {group[5]}]: {pre}")
print("its matrix is the unit:", to_matrix(pre) == unit)

print("\nType D2 center: right multiplication by x1*x2 as an algebra element")
z = pbw_decompose(lambda g: g * parse_polynomial("x1*x2", 2), "spin", "d", 2)
print(" ", z)
central = all(multiply(z, g) == multiply(g, z)
              for g in (generator_element("spin", "d", 2, k, i) for k in "xd" for i in (1, 2)))
print("  commutes with every generator:", central)
rep = center_check("d", 2, 8)
for s in rep.slices:
    if s["q_degree"] >= 0:
        print(f"  q-degree {s['q_degree']}: commutant {s['commutant_dim']}, "
              f"squares-only prediction {s['expected_dim']}, type D symmetric ring {s['own_lambda_dim']}")
