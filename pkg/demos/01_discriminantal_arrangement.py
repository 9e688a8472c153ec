"""Walk through a weighted discriminantal arrangement: hyperplanes, flats,
dense edges and the resonant ones."""

from aomoto_bgg.arrangement import (
    DiscriminantalSpec,
    dense_edges,
    discriminantal,
    edge_weight,
    flats,
    predicted_resonant_edges,
    moebius_poincare,
    resonant_dense_edges,
)

# Two marked points z = (1, 2) with sl2 weights m = (1, 2) and k = 3 variables.
spec = DiscriminantalSpec(k=3, m=(1, 2))
arr = discriminantal(spec)

print("hyperplanes and weight numerators (weight = numerator / kappa):")
for h, w in zip(arr.hyperplanes, arr.weight_numerators):
    print(f"  {str(h):<16} {w}")

fl = flats(arr)
print(f"\n{len(fl)} flats; Poincare coefficients {moebius_poincare(arr)}")

# Dense edges are the irreducible ones; a codim-1 flat is always dense.
dense = dense_edges(arr)
print(f"{len(dense)} dense edges, by codim:", {c: sum(f.codim == c for f in dense) for c in (1, 2, 3)})

# Resonance: the weights through the edge add up to zero.  Collisions of
# m_j + 1 variables at z_j have weight (m_j + 1) m_j - (m_j + 1) m_j = 0.
print("\nresonant dense edges:")
for f in resonant_dense_edges(arr):
    eqs = ", ".join(str(arr.hyperplanes[i]) for i in sorted(f.hyperplane_indices))
    print(f"  codim {f.codim}, weight {edge_weight(arr, f)}: {eqs}")

found = {f.hyperplane_indices for f in resonant_dense_edges(arr)}
print("\nmatches the closed-form list:", found == predicted_resonant_edges(spec))
