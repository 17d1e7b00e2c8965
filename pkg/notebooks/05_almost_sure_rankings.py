"""
Almost-sure rankings of functions
=================================

A measure ranks ``f`` above ``g`` when ``f < g`` only on a null set.  The
axiom checker tests the five defining properties on a grid of functions and
flags orders that break them.
"""

# %%
from kelley import (
    GroundSet,
    Measure,
    MeasureOrder,
    OracleOrder,
    SimpleFunction,
    axioms_check,
    function_grid,
    null_ideal,
    orders_agree,
    representability,
)


def show(x):
    """Readable rationals for printing."""
    if hasattr(x, "as_dict"):
        return {k: str(v) for k, v in x.as_dict().items()}
    return [str(v) for v in x]


g = GroundSet.of_size(2)
m = Measure(g, [1, 0])
order = MeasureOrder(m)
print(order.geq(SimpleFunction(g, [1, 0]), SimpleFunction(g, [0, 7])))

# %%
grid = function_grid(g)
report = axioms_check(order, grid)
print({k: v.passed for k, v in report.verdicts.items()})

# %% [markdown]
# Comparing maxima is not translation invariant; the checker finds a
# counterexample to axiom (iv).

# %%
bad = axioms_check(OracleOrder(g, lambda f, h: f.sup() >= h.sup()), grid)
f, h, b, shift = bad["iv"].counterexample
print("(iv) fails at f =", show(f.values), "g =", show(h.values), "b =", show(b.values), "h =", show(shift.values))

# %%
# measure -> null ideal -> representing measure gives back the same order
rep = representability(null_ideal(m))
print("orders agree:", orders_agree(order, MeasureOrder(rep.measure), grid) is None)
