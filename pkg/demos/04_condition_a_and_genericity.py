"""The local condition on resonant strata and the kappa-genericity scan."""

from aomoto_bgg import strata as S

kappas = S.sample_kappas(seed=11, count=3)
print("sampled kappa:", [str(x) for x in kappas])

for mj in (1, 2, 3):
    r = S.condition_a_check(mj, kappas)
    print(f"m_j = {mj}: betti {r['betti']}, stable {r['kappa_stable']}, vanishes above m_j {r['vanishing_above_m_j']}")

# The same check with every weight zero: the differential is zero, so the
# betti numbers are just the Orlik-Solomon dims.
for mj in (1, 2, 3):
    r = S.condition_a_check(mj, kappas, zero_weights=True)
    print(f"zero weights, m_j = {mj}: betti {r['betti']}, concentrated {r['concentrated_in_degree_m_j']}")

# Genericity: rebuild the open-stratum block from actual forms at each kappa.
for m, k in [((1, 1), 2), ((2, 1), 3), ((1, 1, 1), 3)]:
    r = S.genericity_scan(m, k, kappas=kappas)
    print(f"m = {m}, k = {k}: betti {r['betti']}, stable {r['stable']}")
