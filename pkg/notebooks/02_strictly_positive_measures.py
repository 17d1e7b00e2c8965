"""
From decompositions to strictly positive measures
=================================================

A measure produces threshold families ``{A : m(A) > ε}`` whose intersection
numbers are at least ε.  Running this backwards, a covering of the nonempty
sets by families with positive intersection numbers yields a measure that
charges every nonempty set.
"""

# %%
from kelley import (
    Decomposition,
    GroundSet,
    Measure,
    SetSystem,
    intersection_number,
    synthesize_strictly_positive,
    threshold_decomposition,
    threshold_family,
    verify_decomposition,
)


def show(x):
    """Readable rationals for printing."""
    if hasattr(x, "as_dict"):
        return {k: str(v) for k, v in x.as_dict().items()}
    return [str(v) for v in x]


g = GroundSet.of_size(4)
m = Measure(g, ["1/10", "2/10", "3/10", "4/10"])

# %%
for eps in ("1/2", "1/4", "1/8"):
    fam = threshold_family(m, eps)
    print(f"ε={eps}: {len(fam.family)} sets, I = {intersection_number(fam).value}")

# %% [markdown]
# The halving thresholds cover every nonempty set, so the decomposition is
# valid and a fresh strictly positive probability can be mixed from the
# families' optimal measures.

# %%
D = threshold_decomposition(m)
verdict = verify_decomposition(D)
print("valid:", verdict.verdict, "values:", [str(v) for v in verdict.values])
fresh = synthesize_strictly_positive(D)
print(show(fresh), "strictly positive:", fresh.is_strictly_positive())

# %%
# an invalid decomposition is reported with its uncovered sets
bad = Decomposition(g, [SetSystem(g, [g.full])])
print([g.format_set(a) for a in verify_decomposition(bad).uncovered][:5], "...")
