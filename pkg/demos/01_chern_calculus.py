# %% [markdown]
# Exact Chern calculus on P3 and the quadric threefold Q3.
# Everything is a Fraction; nothing is ever rounded.

# %%
from foliatlas.chern import chern_character, euler_characteristic, line_bundle, todd_class, twist
from foliatlas.ring import ONE, H, mul, power
from foliatlas.varieties import P3, Q3, SPINOR, SheafId, cohomology_table

# %% The only relation that depends on the variety is H^2 = nu * l.
print("on Q3, H*H =", mul(H, H, Q3.nu))
print("(1+H)^5 on Q3 =", power(ONE + H, 5, Q3.nu))

# %% Tangent bundles and their Todd classes.
for X in (P3, Q3):
    print(X.name, "c(TX) =", X.tangent.total, " td =", todd_class(X.tangent, X.nu), " cX =", X.cX)

# %% Riemann-Roch reproduces the Hilbert polynomials.
print("chi(O_P3(t)):", [euler_characteristic(line_bundle(t), P3) for t in range(6)])
print("chi(O_Q3(t)):", [euler_characteristic(line_bundle(t), Q3) for t in range(6)])

# %% The spinor bundle: S^v = S(1), and h^0(S(1)) = 4.
S1 = twist(SPINOR, 1, Q3.nu)
print("ch(S(1)) =", chern_character(S1, Q3.nu), " chi(S(1)) =", euler_characteristic(S1, Q3))

# %% Cohomology tables are closed formulas (Bott on P3, sequences on Q3).
for entry in cohomology_table(Q3, SheafId.Omega1X, range(-1, 4)):
    print(f"h^i(Omega_Q3({entry.twist:>2})) = {entry.h}")
