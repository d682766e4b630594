"""Three ways to evaluate the B2 generalized Bessel function.

Run with ``python3 demos/01_three_representations.py``.
"""
# %% [markdown]
# The Bessel-Jacobi series works for every multiplicity.  For k = 0 and k = 1
# the function is also a finite sum over the eight symmetries of the square,
# and for even gamma it is a double Beta average of a single normalized
# Bessel function.  All of them should print the same digits.

# %%
from dihedral_bessel import (
    DihedralParams,
    PolarPoint,
    gbf_closed_b2_k0,
    gbf_corollary_even,
    gbf_orbit_k0,
    gbf_orbit_k1,
    gbf_series,
)

x = PolarPoint(1.3, 0.2)
y = PolarPoint(1.6, 0.55)

# %%
flat = DihedralParams(2, 0.0, 0.0)
print("k = (0, 0)")
print(f"  series      {gbf_series(flat, x, y).value:.16f}")
print(f"  orbit sum   {gbf_orbit_k0(2, x, y):.16f}")
print(f"  four cosh   {gbf_closed_b2_k0(x, y):.16f}")

# %%
geometric = DihedralParams(2, 1.0, 1.0)
print("k = (1, 1)")
print(f"  series      {gbf_series(geometric, x, y).value:.16f}")
print(f"  orbit sum   {gbf_orbit_k1(2, x, y):.16f}")
print(f"  Beta double {gbf_corollary_even(geometric, x, y, n=64):.16f}")

# %% [markdown]
# Unequal multiplicities only have the series and the Beta average.  Which
# Beta law goes with which variable matters once k0 != k1: the one attached
# to ``cos 2theta cos 2phi`` carries the parameter k0 - 1/2.

# %%
mixed = DihedralParams(2, 0.3, 0.7)
s = gbf_series(mixed, x, y)
print("k = (0.3, 0.7)")
print(f"  series      {s.value:.16f}  ({s.terms_used} terms, tail <= {s.est_error:.1e})")
print(f"  Beta double {gbf_corollary_even(mixed, x, y):.16f}")
