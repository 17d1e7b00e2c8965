"""
Intersection numbers as matrix games
====================================

A family of sets has intersection number ``I``: the smallest achievable
maximum of the averaged indicators over finite sequences drawn from the
family.  The library solves this as a zero-sum game with exact rationals.
"""

# %%
from fractions import Fraction

from kelley import GroundSet, SetSystem, intersection_number, sequence_average, verify_minimax


def show(x):
    """Readable rationals for printing."""
    if hasattr(x, "as_dict"):
        return {k: str(v) for k, v in x.as_dict().items()}
    return [str(v) for v in x]


# %% [markdown]
# The three two-point subsets of a three-point set: any two of them share a
# point, so short sequences always hit some point twice.

# %%
g = GroundSet(["x", "y", "z"])
triangle = SetSystem.from_labels(g, [["x", "y"], ["y", "z"], ["x", "z"]])
report = intersection_number(triangle)
print("I =", report.value)
print("optimal measure:", show(report.optimal_measure))
print("witness multiplicities:", report.witness_sequence)

# %%
# averaging the witness sequence reproduces the value pointwise
avg = sequence_average(g, report.witness_sets())
print(show(avg.values), "sup =", avg.sup())

# %% [markdown]
# ``verify_minimax`` compares three numbers that must coincide: the LP value,
# the sup of the witness average, and a brute-force minimum over all
# multisets up to the witness length.

# %%
check = verify_minimax(triangle)
print({k: str(check[k]) for k in ("verdict", "value", "witness_sup", "bruteforce_value")})

# %%
# k disjoint sets always give 1/k
for k in range(2, 6):
    gk = GroundSet.of_size(k)
    assert intersection_number(SetSystem(gk, [1 << i for i in range(k)])).value == Fraction(1, k)
print("disjoint families ok")
