# %% [markdown]
# Singular schemes of foliations by curves: the length of the isolated part
# and the curve contributions must balance against c3 of the normal sheaf.

# %%
from foliatlas.chern import twist
from foliatlas.foliations import (
    SOLVE,
    FoliationSpec,
    conormal_chern,
    curve_from_conormal,
    normal_chern,
    singular_points_count,
    verify_c3_identity,
)
from foliatlas.varieties import P3, Q3, SPINOR

# %% Generic foliations have only isolated singular points.
for r in range(4):
    print(f"degree {r}: P3 has {singular_points_count(P3, r)} points, Q3 has {singular_points_count(Q3, r)}")

# %% A spinor foliation of degree 2 on Q3 is singular along a curve of degree 15.
spec = FoliationSpec.build(Q3, 2, 0, [(15, SOLVE)])
print("solved chi(O_C) =", spec.curve_chi, " genus =", spec.curves[0].genus)
print("balance:", verify_c3_identity(spec))
print("conormal sheaf:", conormal_chern(spec))

# %% Going backwards: the conormal c2 determines degree and genus of the curve.
for t in range(-1, 3):
    curve = curve_from_conormal(Q3, 2 * t + 2, twist(SPINOR, -2 - t, Q3.nu).c2)
    print(f"t={t}: deg {curve.deg}, genus {curve.genus}")

# %% Normalizing the normal sheaf of an odd degree foliation on P3.
for k in range(3):
    print(f"k={k}:", twist(normal_chern(P3, 2 * k + 1), -2 - k, P3.nu))
