import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aomoto_bgg.arrangement import (
    DiscriminantalSpec,
    Hyperplane,
    WeightedArrangement,
    apply_permutation,
    coordinate_index,
    dense_edges,
    discriminantal,
    edge_weight,
    flats,
    is_dense,
    moebius_poincare,
    predicted_resonant_edges,
    resonant_dense_edges,
)
from aomoto_bgg.exact import Matrix, rank


def braid():
    return WeightedArrangement.from_equations(2, [([1, 0], 0), ([0, 1], 0), ([1, -1], 0)])


# --- brute-force oracles -------------------------------------------------------


def _aug(arr, S):
    return Matrix.from_rows([[h.constant, *h.coefficients] for h in (arr.hyperplanes[i] for i in S)], cols=arr.ambient_dim + 1)


def _lin(arr, S):
    return Matrix.from_rows([list(arr.hyperplanes[i].coefficients) for i in S], cols=arr.ambient_dim)


def oracle_flats(arr):
    """Close every consistent subset; distinct closures are the flats."""
    n = len(arr.hyperplanes)
    out = {}
    for size in range(1, n + 1):
        for S in itertools.combinations(range(n), size):
            r = rank(_lin(arr, S))
            if rank(_aug(arr, S)) != r:
                continue
            closure = frozenset(h for h in range(n) if rank(_aug(arr, S + (h,))) == r)
            out[closure] = r
    return out


def oracle_dense(arr, S):
    """No split of the local arrangement into parts whose codims add up."""
    S = sorted(S)
    total = rank(_lin(arr, S))
    for size in range(1, len(S)):
        for A in itertools.combinations(S, size):
            B = [i for i in S if i not in A]
            if rank(_lin(arr, A)) + rank(_lin(arr, B)) == total:
                return False
    return True


# --- examples ---------------------------------------------------------------------


def test_hyperplane_canonical_form():
    h = Hyperplane.make([-2, 4], 6)
    assert h == Hyperplane.make([Fraction(1, 2), -1], Fraction(-3, 2))
    assert h.coefficients[0] > 0
    with pytest.raises(ValueError):
        Hyperplane.make([0, 0], 1)


def test_flats_examples():
    one = WeightedArrangement.from_equations(1, [([1], 0)])
    assert [f.codim for f in flats(one)] == [1]
    fl = flats(braid())
    assert sorted(f.codim for f in fl) == [1, 1, 1, 2]
    assert fl[-1].hyperplane_indices == frozenset({0, 1, 2})
    disc = discriminantal(DiscriminantalSpec(k=2, m=(2,)))
    assert sorted(f.codim for f in flats(disc)) == [1, 1, 1, 2]


def test_dense_examples():
    b = braid()
    assert all(is_dense(b, f) for f in flats(b) if f.codim == 1)
    assert is_dense(b, flats(b)[-1])
    boolean = WeightedArrangement.from_equations(2, [([1, 0], 0), ([0, 1], 0)])
    assert not is_dense(boolean, flats(boolean)[-1])


def test_edge_weight_examples():
    spec = DiscriminantalSpec(k=2, m=(3, 1))
    arr = discriminantal(spec)
    pts = {f.hyperplane_indices: f for f in flats(arr) if f.codim == 2}
    for j, mj in enumerate(spec.m):
        X = frozenset({0, coordinate_index(spec, 0, j), coordinate_index(spec, 1, j)})
        assert edge_weight(arr, pts[X]) == 2 - 2 * mj
    single = [f for f in flats(arr) if f.hyperplane_indices == frozenset({coordinate_index(spec, 0, 0)})]
    assert edge_weight(arr, single[0]) == -3


def test_resonant_examples():
    arr = discriminantal(DiscriminantalSpec(k=2, m=(1, 2)))
    assert [sorted(f.hyperplane_indices) for f in resonant_dense_edges(arr)] == [[0, 1, 3]]
    arr = discriminantal(DiscriminantalSpec(k=2, m=(1, 1)))
    assert len(resonant_dense_edges(arr)) == 2
    assert resonant_dense_edges(discriminantal(DiscriminantalSpec(k=1, m=(2,)))) == []


def test_discriminantal_counts():
    arr = discriminantal(DiscriminantalSpec(k=1, m=(4,)))
    assert len(arr.hyperplanes) == 1 and arr.weight_numerators == (-4,)
    assert len(discriminantal(DiscriminantalSpec(k=2, m=(1, 1))).hyperplanes) == 5
    assert len(discriminantal(DiscriminantalSpec(k=3, m=(1, 1))).hyperplanes) == 9


def test_discriminantal_validation():
    with pytest.raises(ValueError):
        DiscriminantalSpec(k=2, m=(1, 1), z=(1, 1))
    with pytest.raises(ValueError):
        DiscriminantalSpec(k=0, m=(1,))
    with pytest.raises(ValueError):
        DiscriminantalSpec(k=1, m=(0,))
    with pytest.raises(ValueError):
        DiscriminantalSpec(k=1, m=(1,), kappa=0)


def test_permutation_examples():
    arr = discriminantal(DiscriminantalSpec(k=2, m=(1,)))
    assert apply_permutation(arr, (0, 1)) == (0, 1, 2)
    assert apply_permutation(arr, (1, 0)) == (0, 2, 1)
    arr3 = discriminantal(DiscriminantalSpec(k=3, m=(1,)))
    cyc = apply_permutation(arr3, (1, 2, 0))
    assert [cyc[i] for i in (3, 4, 5)] == [4, 5, 3]
    with pytest.raises(ValueError):
        apply_permutation(arr, (0, 0))


def test_moebius_examples():
    assert moebius_poincare(WeightedArrangement.from_equations(1, [([1], 0)])) == (1, 1)
    assert moebius_poincare(braid()) == (1, 3, 2)
    assert moebius_poincare(WeightedArrangement.from_equations(1, [([1], 0), ([1], -1)])) == (1, 2)


def test_non_generic_points():
    # z_1 = z_2 would collapse hyperplanes; distinct rationals are fine
    arr = discriminantal(DiscriminantalSpec(k=2, m=(1, 1), z=(Fraction(1, 3), Fraction(-2, 7))))
    assert len(resonant_dense_edges(arr)) == 2


# --- properties -------------------------------------------------------------------

specs = st.builds(
    lambda m, k: DiscriminantalSpec(k=k, m=tuple(m)),
    st.lists(st.integers(1, 3), min_size=1, max_size=3),
    st.integers(1, 3),
)

random_arrs = st.integers(1, 3).flatmap(
    lambda d: st.lists(
        st.tuples(st.lists(st.integers(-2, 2), min_size=d, max_size=d).filter(any), st.integers(-2, 2)),
        min_size=1,
        max_size=5,
    ).map(lambda eqs: _arr(d, eqs))
)


def _arr(d, eqs):
    seen = {}
    for c, c0 in eqs:
        seen.setdefault(Hyperplane.make(c, c0), None)
    return WeightedArrangement(d, tuple(seen), [1] * len(seen))


@settings(max_examples=60, deadline=None)
@given(random_arrs)
def test_flats_match_oracle(arr):
    fl = flats(arr)
    assert {f.hyperplane_indices: f.codim for f in fl} == oracle_flats(arr)
    for f in fl:
        assert all(arr.hyperplanes[i].contains(f.witness_point) for i in f.hyperplane_indices)


@settings(max_examples=60, deadline=None)
@given(random_arrs)
def test_dense_matches_oracle(arr):
    for f in flats(arr):
        assert is_dense(arr, f) == oracle_dense(arr, f.hyperplane_indices)


@settings(max_examples=40, deadline=None)
@given(random_arrs)
def test_moebius_low_coefficients(arr):
    # every coefficient is positive, the constant term is 1, the linear one counts hyperplanes
    coeffs = moebius_poincare(arr)
    assert coeffs[0] == 1 and all(c > 0 for c in coeffs)
    assert coeffs[1] == len(arr.hyperplanes)


@settings(max_examples=30, deadline=None)
@given(specs, st.data())
def test_permutation_action_composes(spec, data):
    arr = discriminantal(spec)
    k = spec.k
    sigma = data.draw(st.permutations(range(k)))
    tau = data.draw(st.permutations(range(k)))
    ms, mt = apply_permutation(arr, sigma), apply_permutation(arr, tau)
    comp = apply_permutation(arr, [sigma[tau[i]] for i in range(k)])
    assert comp == tuple(ms[mt[i]] for i in range(len(mt)))


@settings(max_examples=30, deadline=None)
@given(specs)
def test_resonant_edges_prediction(spec):
    got = {f.hyperplane_indices for f in resonant_dense_edges(discriminantal(spec))}
    assert got == predicted_resonant_edges(spec)


def test_dense_edges_include_hyperplanes():
    arr = discriminantal(DiscriminantalSpec(k=3, m=(1, 2)))
    dense = dense_edges(arr)
    assert sum(1 for f in dense if f.codim == 1) == len(arr.hyperplanes)
