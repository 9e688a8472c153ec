"""Affine hyperplane arrangements with rational weights.

Coordinates are 0-based in code (``t[0] .. t[k-1]``) and printed 1-based.
A hyperplane ``c0 + c1 t1 + ... + ck tk = 0`` is stored with integer
coefficients in canonical form: gcd 1 and first nonzero linear coefficient
positive, so equal hyperplanes compare equal.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import Matrix, RowSpace, format_scalar, scalar, solve


@dataclass(frozen=True)
class Hyperplane:
    coefficients: tuple[int, ...]
    constant: int = 0

    def __post_init__(self):
        if not any(self.coefficients):
            raise ValueError("hyperplane needs a nonzero linear part")

    @classmethod
    def make(cls, coefficients: Sequence, constant=0) -> Hyperplane:
        """Canonicalise rational data ``constant + sum(c_i t_i) = 0``."""
        vals = [scalar(c) for c in (constant, *coefficients)]
        if not any(vals[1:]):
            raise ValueError("hyperplane needs a nonzero linear part")
        den = math.lcm(*(v.denominator for v in vals))
        ints = [int(v * den) for v in vals]
        g = math.gcd(*ints)
        ints = [x // g for x in ints]
        lead = next(x for x in ints[1:] if x)
        if lead < 0:
            ints = [-x for x in ints]
        return cls(tuple(ints[1:]), ints[0])

    @property
    def dim(self) -> int:
        return len(self.coefficients)

    def augmented(self) -> dict[int, Fraction]:
        """Sparse row ``(c0, c1, ..., ck)`` with the constant at index 0."""
        row = {0: Fraction(self.constant)} if self.constant else {}
        row.update({i + 1: Fraction(c) for i, c in enumerate(self.coefficients) if c})
        return row

    def linear(self) -> dict[int, Fraction]:
        return {i: Fraction(c) for i, c in enumerate(self.coefficients) if c}

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        return self.constant + sum(c * x for c, x in zip(self.coefficients, point))

    def contains(self, point: Sequence[Fraction]) -> bool:
        return self.evaluate(point) == 0

    def permuted(self, sigma: Sequence[int]) -> Hyperplane:
        """Image under ``t_i -> t_{sigma[i]}``."""
        coeffs = [0] * self.dim
        for i, c in enumerate(self.coefficients):
            coeffs[sigma[i]] = c
        return Hyperplane.make(coeffs, self.constant)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            sign = "-" if c < 0 else "+"
            terms.append((sign, f"{mag}t{i + 1}"))
        if self.constant:
            terms.append(("-" if self.constant < 0 else "+", str(abs(self.constant))))
        s = terms[0][1] if terms[0][0] == "+" else "-" + terms[0][1]
        for sign, t in terms[1:]:
            s += f" {sign} {t}"
        return s + " = 0"


@dataclass(frozen=True)
class DiscriminantalSpec:
    """Marked points ``z``, highest weights ``m``, ``k`` integration variables."""

    k: int
    m: tuple[int, ...]
    z: tuple[Fraction, ...] | None = None
    kappa: Fraction = Fraction(1)

    def __post_init__(self):
        m = tuple(int(x) for x in self.m)
        object.__setattr__(self, "m", m)
        z = self.z if self.z is not None else tuple(range(1, len(m) + 1))
        z = tuple(scalar(x) for x in z)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "kappa", scalar(self.kappa))
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if not m or any(x < 1 for x in m):
            raise ValueError("m entries must be positive integers")
        if len(z) != len(m):
            raise ValueError("z and m must have the same length")
        if len(set(z)) != len(z):
            raise ValueError(f"marked points must be distinct, got {[format_scalar(x) for x in z]}")
        if self.kappa == 0:
            raise ValueError("kappa must be nonzero")

    @property
    def n(self) -> int:
        return len(self.m)


@dataclass(frozen=True)
class WeightedArrangement:
    """Hyperplanes with weights ``weight_numerators[i] / kappa``."""

    ambient_dim: int
    hyperplanes: tuple[Hyperplane, ...]
    weight_numerators: tuple[Fraction, ...]
    kappa: Fraction = Fraction(1)
    discriminantal: DiscriminantalSpec | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "hyperplanes", tuple(self.hyperplanes))
        object.__setattr__(self, "weight_numerators", tuple(scalar(w) for w in self.weight_numerators))
        object.__setattr__(self, "kappa", scalar(self.kappa))
        if not self.hyperplanes:
            raise ValueError("arrangement must be nonempty")
        if len(set(self.hyperplanes)) != len(self.hyperplanes):
            raise ValueError("hyperplanes must be pairwise distinct")
        if any(h.dim != self.ambient_dim for h in self.hyperplanes):
            raise ValueError("hyperplane dimension does not match ambient_dim")
        if len(self.weight_numerators) != len(self.hyperplanes):
            raise ValueError("one weight per hyperplane")
        if self.kappa == 0:
            raise ValueError("kappa must be nonzero")

    @classmethod
    def from_equations(cls, ambient_dim, equations, weights=None, kappa=1) -> WeightedArrangement:
        """``equations`` are ``(coefficients, constant)`` pairs."""
        hs = tuple(Hyperplane.make(c, c0) for c, c0 in equations)
        if weights is None:
            weights = [0] * len(hs)
        return cls(ambient_dim, hs, tuple(weights), kappa)

    def __len__(self) -> int:
        return len(self.hyperplanes)

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(w / self.kappa for w in self.weight_numerators)

    def index(self, h: Hyperplane) -> int:
        return self._index_map()[h]

    def _index_map(self) -> dict[Hyperplane, int]:
        return _index_map(self.hyperplanes)

    def with_kappa(self, kappa) -> WeightedArrangement:
        return WeightedArrangement(self.ambient_dim, self.hyperplanes, self.weight_numerators, kappa, self.discriminantal)

    def with_weights(self, numerators) -> WeightedArrangement:
        return WeightedArrangement(self.ambient_dim, self.hyperplanes, tuple(numerators), self.kappa, self.discriminantal)

    def is_central(self) -> bool:
        space = RowSpace()
        lin = RowSpace()
        for h in self.hyperplanes:
            space.add(h.augmented())
            lin.add(h.linear())
        return len(space) == len(lin)

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "hyperplanes": [[list(h.coefficients), h.constant] for h in self.hyperplanes],
            "weight_numerators": [format_scalar(w) for w in self.weight_numerators],
            "kappa": format_scalar(self.kappa),
        }

    @classmethod
    def from_json(cls, data) -> WeightedArrangement:
        hs = tuple(Hyperplane.make(c, c0) for c, c0 in data["hyperplanes"])
        return cls(data["ambient_dim"], hs, tuple(scalar(w) for w in data["weight_numerators"]), scalar(data["kappa"]))


@lru_cache(maxsize=None)
def _index_map(hyperplanes):
    return {h: i for i, h in enumerate(hyperplanes)}


@dataclass(frozen=True)
class Flat:
    hyperplane_indices: frozenset[int]
    codim: int
    witness_point: tuple[Fraction, ...]

    def __str__(self):
        pt = ", ".join(format_scalar(x) for x in self.witness_point)
        return f"Flat(codim={self.codim}, H={sorted(self.hyperplane_indices)}, point=({pt}))"


def _linear_system_point(arr: WeightedArrangement, idx) -> tuple[Fraction, ...]:
    idx = sorted(idx)
    a = Matrix(len(idx), arr.ambient_dim, {(r, c): v for r, i in enumerate(idx) for c, v in arr.hyperplanes[i].linear().items()})
    b = Matrix(len(idx), 1, {(r, 0): -arr.hyperplanes[i].constant for r, i in enumerate(idx)})
    x = solve(a, b)
    if x is None:
        raise ValueError("inconsistent system")
    return tuple(x[(c, 0)] for c in range(arr.ambient_dim))


def _closure(arr: WeightedArrangement, point, lin: RowSpace) -> frozenset[int]:
    return frozenset(
        i for i, h in enumerate(arr.hyperplanes) if h.contains(point) and lin.contains(h.linear())
    )


def _lin_space(arr, idx) -> RowSpace:
    sp = RowSpace()
    for i in idx:
        sp.add(arr.hyperplanes[i].linear())
    return sp


@lru_cache(maxsize=64)
def flats(arr: WeightedArrangement) -> tuple[Flat, ...]:
    """All nonempty flats of codim >= 1, ordered by codim then index set.

    Breadth-first: each flat of codim c is intersected with every hyperplane
    transverse to it, and the result is deduplicated by its closed index set.
    """
    seen: dict[frozenset[int], Flat] = {}
    level = []
    for i in range(len(arr)):
        pt = _linear_system_point(arr, [i])
        closed = _closure(arr, pt, _lin_space(arr, [i]))
        if closed not in seen:
            seen[closed] = Flat(closed, 1, pt)
            level.append(seen[closed])
    while level:
        nxt = []
        for f in level:
            lin = _lin_space(arr, f.hyperplane_indices)
            for i, h in enumerate(arr.hyperplanes):
                if i in f.hyperplane_indices or lin.contains(h.linear()):
                    continue
                idx = set(f.hyperplane_indices) | {i}
                pt = _linear_system_point(arr, idx)
                lin2 = _lin_space(arr, idx)
                closed = _closure(arr, pt, lin2)
                if closed not in seen:
                    seen[closed] = Flat(closed, len(lin2), pt)
                    nxt.append(seen[closed])
        level = nxt
    return tuple(sorted(seen.values(), key=lambda f: (f.codim, sorted(f.hyperplane_indices))))


def _matroid_components(rows: list[dict[int, Fraction]]) -> list[set[int]]:
    """Connected components of the linear matroid on ``rows``.

    Uses fundamental circuits with respect to a greedy basis; two elements
    lie in the same component iff they are linked by such circuits.
    """
    n = len(rows)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    basis = []
    space = RowSpace()
    for i, r in enumerate(rows):
        if space.add(r):
            basis.append(i)
    bmat = Matrix.from_columns([rows[b] for b in basis], max((max(r) for r in rows if r), default=-1) + 1)
    for i in range(n):
        if i in basis:
            continue
        coeffs = solve(bmat, Matrix.from_columns([rows[i]], bmat.rows))
        for a, b in enumerate(basis):
            if coeffs[(a, 0)]:
                parent[find(b)] = find(i)
    comps: dict[int, set[int]] = {}
    for i in range(n):
        comps.setdefault(find(i), set()).add(i)
    return list(comps.values())


def is_dense(arr: WeightedArrangement, f: Flat) -> bool:
    """True iff the central arrangement of hyperplanes through ``f`` is irreducible."""
    idx = sorted(f.hyperplane_indices)
    if len(idx) == 1:
        return True
    rows = [arr.hyperplanes[i].linear() for i in idx]
    return len(_matroid_components(rows)) == 1


def edge_weight(arr: WeightedArrangement, f: Flat) -> Fraction:
    """Sum of weight numerators over hyperplanes containing ``f``.

    The actual weight is this divided by kappa; resonance only depends on
    whether the numerator sum vanishes.
    """
    return sum((arr.weight_numerators[i] for i in f.hyperplane_indices), Fraction(0))


def dense_edges(arr: WeightedArrangement) -> list[Flat]:
    return [f for f in flats(arr) if is_dense(arr, f)]


def resonant_dense_edges(arr: WeightedArrangement) -> list[Flat]:
    return [f for f in dense_edges(arr) if edge_weight(arr, f) == 0]


def diagonal_hyperplane(k: int, i: int, j: int) -> Hyperplane:
    c = [0] * k
    c[i], c[j] = 1, -1
    return Hyperplane.make(c)


def coordinate_hyperplane(k: int, i: int, z) -> Hyperplane:
    c = [0] * k
    c[i] = 1
    return Hyperplane.make(c, -scalar(z))


def discriminantal(spec: DiscriminantalSpec) -> WeightedArrangement:
    """Diagonals ``t_i - t_j`` (weight 2) then ``t_i - z_j`` (weight -m_j).

    Order: diagonals lexicographically in (i, j), then coordinate hyperplanes
    by (i, j) with i the variable and j the marked point.
    """
    k, n = spec.k, spec.n
    hs, ws = [], []
    for i, j in itertools.combinations(range(k), 2):
        hs.append(diagonal_hyperplane(k, i, j))
        ws.append(Fraction(2))
    for i in range(k):
        for j in range(n):
            hs.append(coordinate_hyperplane(k, i, spec.z[j]))
            ws.append(Fraction(-spec.m[j]))
    return WeightedArrangement(k, tuple(hs), tuple(ws), spec.kappa, spec)


def coordinate_index(spec: DiscriminantalSpec, i: int, j: int) -> int:
    """Index of ``t_i - z_j`` in :func:`discriminantal` order."""
    return spec.k * (spec.k - 1) // 2 + i * spec.n + j


def apply_permutation(arr: WeightedArrangement, sigma: Sequence[int]) -> tuple[int, ...]:
    """Index map induced by ``t_i -> t_{sigma[i]}``; weights must be preserved."""
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(arr.ambient_dim)):
        raise ValueError(f"{sigma} is not a permutation of {arr.ambient_dim} coordinates")
    idx = arr._index_map()
    out = []
    for i, h in enumerate(arr.hyperplanes):
        img = h.permuted(sigma)
        if img not in idx:
            raise ValueError(f"image of {h} is not in the arrangement")
        j = idx[img]
        if arr.weight_numerators[j] != arr.weight_numerators[i]:
            raise ValueError(f"permutation does not preserve the weight of {h}")
        out.append(j)
    return tuple(out)


def permutation_sign(sigma: Sequence[int]) -> int:
    sign = 1
    for a, b in itertools.combinations(range(len(sigma)), 2):
        if sigma[a] > sigma[b]:
            sign = -sign
    return sign


def symmetric_action(arr: WeightedArrangement) -> list[tuple[tuple[int, ...], int]]:
    """``(index_map, sign)`` for every coordinate permutation."""
    return [(apply_permutation(arr, s), permutation_sign(s)) for s in itertools.permutations(range(arr.ambient_dim))]


def moebius_poincare(arr: WeightedArrangement) -> tuple[int, ...]:
    """Coefficients of the Poincare polynomial, ``sum |mu(X)|`` by codim."""
    fl = flats(arr)
    mu: dict[frozenset[int], int] = {frozenset(): 1}
    for f in fl:
        mu[f.hyperplane_indices] = -sum(v for s, v in mu.items() if s < f.hyperplane_indices)
    top = max((f.codim for f in fl), default=0)
    coeffs = [0] * (top + 1)
    coeffs[0] = 1
    for f in fl:
        coeffs[f.codim] += abs(mu[f.hyperplane_indices])
    return tuple(coeffs)


def predicted_resonant_edges(spec: DiscriminantalSpec) -> set[frozenset[int]]:
    """Index sets of the edges ``t_i = z_j (i in I)`` with ``|I| = m_j + 1 <= k``.

    This is the predicted answer; :func:`resonant_dense_edges` computes it
    from scratch.
    """
    arr = discriminantal(spec)
    idx = arr._index_map()
    out = set()
    for j, mj in enumerate(spec.m):
        if mj + 1 > spec.k:
            continue
        for I in itertools.combinations(range(spec.k), mj + 1):
            members = {coordinate_index(spec, i, j) for i in I}
            members |= {idx[diagonal_hyperplane(spec.k, a, b)] for a, b in itertools.combinations(I, 2)}
            out.add(frozenset(members))
    return out
