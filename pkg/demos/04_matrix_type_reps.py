"""Representations of the two matrix-type semigroups inside C_3."""
from fractions import Fraction

from hkmonoid.matrix_type import (
    Element,
    build_rep,
    c3_data,
    dimension_profile,
    evaluate_sandwich,
    extend_rep,
    format_data,
    verify_homomorphism,
)

for which in ("M0", "M1"):
    d = c3_data(which)
    print(f"--- {which}")
    print(format_data(d), end="")
    prof = dimension_profile(d)
    print("det P(λ) coefficients (constant first):", list(prof.determinant))
    print("dimension rule:", prof.annotation())
    for lam in (Fraction(2), Fraction(-1), Fraction(1), Fraction(1, 3)):
        rep = build_rep(d, lam)
        ok = verify_homomorphism(rep, d, 3)
        print(f"  λ={lam}: rank {evaluate_sandwich(d, lam).rank()}, dim {rep.dim}, multiplicative: {ok}")

# extending ψ_2 of M1 to negative exponents
ext = extend_rep(build_rep(c3_data("M1"), 2))
print("\ncorner idempotent e of ψ_2 on M1:")
print(ext.e)
print("image of (t^-1; 2, 3):")
print(ext.image(-1, 2, 3))
print("extension multiplicative on -3..3:", ext.verify(range(-3, 4)))
print("agrees with ψ_2 on (t^2; 3, 1):", ext.image(2, 3, 1) == ext.rep.image(Element(2, 3, 1)))
