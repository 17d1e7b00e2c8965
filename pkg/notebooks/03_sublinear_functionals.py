"""
Sublinear functionals: normalization and nonlinearity
=====================================================

A functional given by the maximum over finitely many measures is sublinear.
Its normalization ``π̂`` is the largest functional below it that is additive
on constants; the nonlinearity modulus measures how far π is from linear.
"""

# %%
from kelley import (
    GroundSet,
    Measure,
    VertexFunctional,
    intersection_number_pi,
    nonlinearity_modulus_bounds,
    normalize_functional,
    threshold_family_pi,
)


def show(x):
    """Readable rationals for printing."""
    if hasattr(x, "as_dict"):
        return {k: str(v) for k, v in x.as_dict().items()}
    return [str(v) for v in x]


g = GroundSet(["1", "2"])
pi = VertexFunctional(g, [Measure(g, ["3/2", 0]), Measure(g, [0, "1/2"])])

# %%
hat = normalize_functional(pi)
print("dual probabilities:", [show(p) for p in hat.vertices])
for f in ([1, 0], [0, 1], [2, -1]):
    print(f, "π =", pi(f), " π̂ =", hat(f))

# %% [markdown]
# With point masses as vertices the modulus reaches its ceiling of ``k - 1``.

# %%
for k in (2, 3):
    gk = GroundSet.of_size(k)
    b = nonlinearity_modulus_bounds(VertexFunctional.point_masses(gk), k)
    print(f"k={k}: {b.lower} <= modulus <= {b.upper}")

# %%
fam = threshold_family_pi(pi, "1/4")
print("I_π of the 1/4 threshold family:", intersection_number_pi(pi, fam).value)
