"""Skew-symmetric forms on the complement of the discriminantal arrangement
and the sl2 dual Verma action they encode."""

from fractions import Fraction

from aomoto_bgg import orlik_solomon as osm
from aomoto_bgg import sl2
from aomoto_bgg.arrangement import DiscriminantalSpec

spec = DiscriminantalSpec(k=2, m=(2, 1), kappa=Fraction(7, 3))
os = osm.discriminantal_os(spec)
print("Orlik-Solomon dims:", os.dims())

# The symmetric group S_k permutes the variables; only two degrees carry
# skew-symmetric classes, of dimensions #{|J| = k-1} and #{|J| = k}.
report = osm.omega_J_basis_check(spec)
print("skew dims per degree:", report["skew_dims"])
print("omega_J families are bases:", report["passed"])

# One of the top forms, written in the no-broken-circuit basis.
print("\nomega_(1,1) =", osm.omega_J(os, (1, 1)).to_json())

# Wedge with the master 1-form, written in the omega_J bases, is the matrix
# of f on the dual tensor Verma module.
wedge = osm.omega_a_matrix(os)
f = sl2.f_matrix(spec.m, spec.k)
print("\nwedge omega_a:", [[str(x) for x in r] for r in wedge.to_rows()])
print("f-action     :", [[str(x) for x in r] for r in f.to_rows()])
print("equal:", wedge == f)

# kappa only rescales omega_a, and the omega_J normalisation absorbs it.
other = osm.discriminantal_os(DiscriminantalSpec(k=2, m=(2, 1), kappa=Fraction(-5, 11)))
print("same matrix at another kappa:", osm.omega_a_matrix(other) == wedge)
