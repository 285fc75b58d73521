"""Tour of the sp(4) apparatus: the form, root vectors, brackets, membership,
standard subalgebras and the Weyl action.

Run:  python demos/01_sp4_basics.py
"""

from sp4solvable import (DiagonalElement, J_FORM, Mat4, T, W_MAT, A_MAT,
                         X_A2B, X_AB, X_ALPHA, X_BETA, bracket, char_poly,
                         conjugate, in_sp4, in_sp4_group, standard_subalgebra,
                         weyl_orbit)
from sp4solvable.rational import Q

print("The symplectic form J:")
print(J_FORM)

print("\nMembership: J X^t J = X")
for name, x in [("X_beta", X_BETA), ("T(5,-2)", T(5, -2)),
                ("diag(1,0,0,0)", Mat4.diag(1, 0, 0, 0))]:
    print(f"  in_sp4({name}) = {in_sp4(x)}")

print("\nGroup membership: g J g^t = J")
print(f"  W: {in_sp4_group(W_MAT)}, A: {in_sp4_group(A_MAT)}")

print("\nRoot vector brackets (the nilradical is generated by X_alpha, X_beta):")
print(f"  [X_b, X_a] == X_ab:    {bracket(X_BETA, X_ALPHA) == X_AB}")
print(f"  [X_b, X_ab] == 2X_a2b: {bracket(X_BETA, X_AB) == X_A2B * 2}")
print(f"  [T(a,1), X_a] = 2 X_a at a=5: {bracket(T(5, 1), X_ALPHA) == X_ALPHA * 2}")

print("\nEigenvalues of sp(4) elements occur in negative pairs:")
p = char_poly(T(1, 2))
print(f"  char poly of T(1,2): {p}   (odd coefficients vanish)")

print("\nStandard subalgebras and their dimensions:")
for name in ("t", "b", "n", "p", "n_p"):
    print(f"  {name}: dim {standard_subalgebra(name).dim}")

print("\nConjugation identities behind the table equivalences:")
print(f"  W T(3,1) W^-1 == T(1,3):           {conjugate(W_MAT, T(3, 1)) == T(1, 3)}")
print(f"  A (T(1,1)+X_b) A^-1 == T(1,-1)+X_ab: "
      f"{conjugate(A_MAT, T(1, 1) + X_BETA) == T(1, -1) + X_AB}")

print("\nWeyl orbits of diagonal parameters (a,b) -> (a,-b), (b,a):")
for a, b in ((1, 2), (1, 1), (0, 0)):
    orbit = weyl_orbit(DiagonalElement(Q(a), Q(b)))
    print(f"  orbit of T({a},{b}): {len(orbit)} elements")
