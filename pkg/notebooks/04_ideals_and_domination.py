"""
Null ideals, weak domination and norming
========================================

Every proper ideal of a finite algebra is the null ideal of some
probability.  A finite family of probabilities is weakly dominated by its
average, and a small subfamily already has the same null sets.
"""

# %%
from kelley import (
    GroundSet,
    Ideal,
    Measure,
    MeasureFamily,
    SimpleFunction,
    check_norming,
    halmos_savage_subset,
    representability,
    weakly_dominating_measure,
)
from kelley.errors import NotAnIdeal


def show(x):
    """Readable rationals for printing."""
    if hasattr(x, "as_dict"):
        return {k: str(v) for k, v in x.as_dict().items()}
    return [str(v) for v in x]


g = GroundSet(["a", "b", "c"])

# %%
rep = representability(Ideal(g, g.mask(["c"])))
print("measure:", show(rep.measure), "null ideal matches:", rep.null_ideal_matches)

# %%
try:
    representability([0, g.mask("a"), g.mask("b")], g)
except NotAnIdeal as exc:
    print(type(exc).__name__, "->", exc)

# %%
fam = MeasureFamily(g, [
    Measure.point_mass(g, 0),
    Measure(g, ["1/2", "1/2", 0]),
    Measure.point_mass(g, 1),
])
cert = weakly_dominating_measure(fam)
print("dominating:", show(cert.measure), cert.weakly_dominates)
print("subfamily indices:", halmos_savage_subset(fam))

# %%
f = SimpleFunction(g, [1, 5, -2])
check = check_norming(Ideal(g, g.mask("b")), f)
print("norming:", check.verdict, check.lhs, "=", check.rhs)
