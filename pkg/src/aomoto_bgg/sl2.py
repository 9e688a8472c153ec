"""Verma modules of sl2, their contragradient duals, and BGG complexes.

A basis vector of a tensor product is indexed by a multi-level
``J = (j_1, ..., j_n)``: ``f^J v_m`` in the Verma modules, ``phi^J_m`` in the
restricted duals.  Only the levels a computation touches are materialised.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import CochainComplex, Matrix, rank

GENERATORS = ("e", "f", "h")


@lru_cache(maxsize=None)
def compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    """All ``J`` in ``Z_{>=0}^parts`` with ``|J| = total``, lexicographic."""
    if total < 0 or parts < 0:
        return ()
    if parts == 0:
        return ((),) if total == 0 else ()
    out = []
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def verma_action(m: int, gen: str, j: int) -> list[tuple[int, Fraction]]:
    """Action of ``gen`` on ``f^j v_m`` as ``[(level, coefficient)]``."""
    if gen == "f":
        return [(j + 1, Fraction(1))]
    if gen == "h":
        return [(j, Fraction(m - 2 * j))]
    if gen == "e":
        c = j * (m - j + 1)
        return [(j - 1, Fraction(c))] if j > 0 and c else []
    raise ValueError(f"unknown generator {gen!r}")


def dual_action(m: int, gen: str, j: int) -> list[tuple[int, Fraction]]:
    """Contragradient action on ``phi^j_m`` (dual to ``f^j v_m``)."""
    if gen == "f":
        c = (j + 1) * (m - j)
        return [(j + 1, Fraction(c))] if c else []
    if gen == "h":
        return [(j, Fraction(m - 2 * j))] if m - 2 * j else []
    if gen == "e":
        return [(j - 1, Fraction(1))] if j > 0 else []
    raise ValueError(f"unknown generator {gen!r}")


def _tensor(single, m: Sequence[int], gen: str, J: Sequence[int]) -> list[tuple[tuple[int, ...], Fraction]]:
    acc: dict[tuple[int, ...], Fraction] = {}
    for a in range(len(m)):
        for lvl, c in single(m[a], gen, J[a]):
            key = tuple(J[:a]) + (lvl,) + tuple(J[a + 1:])
            acc[key] = acc.get(key, 0) + c
    return [(K, c) for K, c in sorted(acc.items()) if c]


def tensor_verma_action(m, gen, J):
    """Coproduct action on ``f^J v_m`` in the tensor product of Vermas."""
    return _tensor(verma_action, m, gen, J)


def tensor_dual_action(m, gen, J):
    return _tensor(dual_action, m, gen, J)


def tensor_dual_f(m: Sequence[int], J: Sequence[int]) -> list[tuple[tuple[int, ...], Fraction]]:
    """``f . phi^J_m = sum_a (j_a + 1)(m_a - j_a) phi^{J + 1_a}_m``."""
    return tensor_dual_action(m, "f", J)


def f_matrix(m: Sequence[int], k: int) -> Matrix:
    """Dual f-action from level ``k-1`` to level ``k``, lexicographic bases."""
    n = len(m)
    src = compositions(k - 1, n)
    dst = {J: i for i, J in enumerate(compositions(k, n))}
    ent = {}
    for c, J in enumerate(src):
        for K, v in tensor_dual_f(m, J):
            ent[(dst[K], c)] = v
    return Matrix(len(dst), len(src), ent)


def shapovalov_gram(m: int, j: int) -> Fraction:
    """``S(f^j v_m, f^j v_m)`` from ``S(v,v) = 1`` and ``S(fx, y) = S(x, ey)``."""
    s = Fraction(1)
    for level in range(1, j + 1):
        # S(f^l v, f^l v) = S(f^{l-1} v, e f^l v)
        s *= sum((c for _, c in verma_action(m, "e", level)), Fraction(0))
    return s


def iota(m: int, j: int) -> tuple[int, Fraction] | None:
    """BGG epimorphism ``M*_m -> M*_{-m-2}``: ``phi^j_m -> phi^{j-m-1}``."""
    if m < 0:
        raise ValueError("iota is defined for dominant m >= 0")
    if j >= m + 1:
        return (j - m - 1, Fraction(1))
    return None


def weight_multiplicity(m: Sequence[int], weight: int) -> int:
    """``dim (L_{m_1} x ... x L_{m_n})[weight]`` by brute-force counting."""
    total = sum(m) - weight
    if total % 2:
        return 0
    k = total // 2
    return sum(1 for J in compositions(k, len(m)) if all(j <= mi for j, mi in zip(J, m)))


def clebsch_gordan_mult(m: Sequence[int], p: int) -> int:
    """Multiplicity of ``L_p`` in ``L_{m_1} x ... x L_{m_n}``."""
    if p < 0:
        return 0
    return weight_multiplicity(m, p) - weight_multiplicity(m, p + 2)


def shifted(m: Sequence[int], bold_j: Sequence[int]) -> tuple[int, ...]:
    """``m^j``: entries in ``bold_j`` become ``-m_i - 2``."""
    return tuple(-mi - 2 if i in bold_j else mi for i, mi in enumerate(m))


def excess(m: Sequence[int], k: int, bold_j: Sequence[int]) -> int:
    """``e(j) = k - |j| - sum_{j in bold_j} m_j``."""
    return k - len(bold_j) - sum(m[j] for j in bold_j)


def _koszul_iota(m, bold_j: tuple[int, ...], K: tuple[int, ...]):
    """``iota`` on ``phi^K_{m^j}`` in the summand ``bold_j`` of the tensor BGG
    complex; yields ``(bold_j + {a}, K', sign)``."""
    for a in range(len(m)):
        if a in bold_j:
            continue
        hit = iota(m[a], K[a])
        if hit is None:
            continue
        lvl, c = hit
        sign = (-1) ** sum(1 for b in bold_j if b < a)
        target = tuple(sorted(bold_j + (a,)))
        yield target, K[:a] + (lvl,) + K[a + 1:], sign * c


def _subsets(n: int, size: int):
    return itertools.combinations(range(n), size)


def bgg_tensor_complex(m: Sequence[int], weight: int) -> CochainComplex:
    """Weight component of the tensor product of BGG resolutions of ``L_{m_a}``.

    Degree ``i`` has basis ``(bold_j, K)`` with ``|bold_j| = i`` and
    ``phi^K_{m^j}`` of the requested weight.
    """
    m = tuple(m)
    total = sum(m) - weight
    if total < 0 or total % 2:
        raise ValueError(f"weight {weight} is not of the form |m| - 2k with k >= 0")
    k = total // 2
    n = len(m)
    labels = {}
    for i in range(n + 1):
        labs = []
        for bj in _subsets(n, i):
            e = excess(m, k, bj)
            labs.extend((bj, K) for K in compositions(e, n))
        labels[i] = labs
    diffs = {}
    for i in range(n):
        pos = {lab: r for r, lab in enumerate(labels[i + 1])}
        ent = {}
        for c, (bj, K) in enumerate(labels[i]):
            for tj, K2, v in _koszul_iota(m, bj, K):
                ent[(pos[(tj, K2)], c)] = v
        diffs[i] = Matrix(len(labels[i + 1]), len(labels[i]), ent)
    return CochainComplex(0, [len(labels[i]) for i in range(n + 1)], diffs, labels)


@dataclass
class BGGWeightComplex:
    """``(B_m[|m| - 2k], d~)`` with labels ``(bold_j, K, kind)``.

    ``kind`` is ``"f"`` for ``f x phi^K`` and ``"plain"`` for ``phi^K``.
    """

    m: tuple[int, ...]
    k: int
    complex: CochainComplex

    def labels(self, degree: int):
        return self.complex.labels.get(degree, ())


def b_labels(m: Sequence[int], k: int) -> dict[int, list]:
    n = len(m)
    labels = {}
    for i in range(n + 2):
        labs = []
        for bj in _subsets(n, i):
            e = excess(m, k, bj)
            labs.extend((bj, K, "f") for K in compositions(e - 1, n))
        for bj in _subsets(n, i - 1) if i >= 1 else ():
            e = excess(m, k, bj)
            labs.extend((bj, K, "plain") for K in compositions(e, n))
        labels[i] = labs
    return labels


def b_complex(m: Sequence[int], k: int) -> BGGWeightComplex:
    """``d~ : f x x + y  ->  f x - f x iota(x) + iota(y)``."""
    m = tuple(m)
    if k < 0:
        raise ValueError("k must be nonnegative")
    labels = b_labels(m, k)
    n = len(m)
    diffs = {}
    for i in range(n + 1):
        pos = {lab: r for r, lab in enumerate(labels[i + 1])}
        ent = {}
        for c, (bj, K, kind) in enumerate(labels[i]):
            if kind == "f":
                for K2, v in tensor_dual_f(shifted(m, bj), K):
                    ent[(pos[(bj, K2, "plain")], c)] = v
                for tj, K2, v in _koszul_iota(m, bj, K):
                    r = pos[(tj, K2, "f")]
                    ent[(r, c)] = ent.get((r, c), 0) - v
            else:
                for tj, K2, v in _koszul_iota(m, bj, K):
                    ent[(pos[(tj, K2, "plain")], c)] = v
        diffs[i] = Matrix(len(labels[i + 1]), len(labels[i]), ent)
    cx = CochainComplex(0, [len(labels[i]) for i in range(n + 2)], diffs, labels)
    return BGGWeightComplex(m, k, cx)


def truncated_f_matrix(m: Sequence[int], k: int) -> Matrix:
    """f on ``(L_{m_1} x ... x L_{m_n})`` from weight ``|m|-2k+2`` to ``|m|-2k``,
    in the truncated monomial bases ``f^J v`` with ``j_a <= m_a``."""
    n = len(m)
    src = [J for J in compositions(k - 1, n) if all(j <= mi for j, mi in zip(J, m))]
    dst = {J: i for i, J in enumerate(J for J in compositions(k, n) if all(j <= mi for j, mi in zip(J, m)))}
    ent = {}
    for c, J in enumerate(src):
        for a in range(n):
            K = J[:a] + (J[a] + 1,) + J[a + 1:]
            if K in dst:
                ent[(dst[K], c)] = ent.get((dst[K], c), 0) + 1
    return Matrix(len(dst), len(src), ent)


def lie_homology_dims(m: Sequence[int], k: int) -> tuple[int, int]:
    """``(dim H_1, dim H_0)`` of ``n_- x V[|m|-2k+2] -> V[|m|-2k]``, ``V = x L_{m_a}``."""
    f = truncated_f_matrix(m, k)
    r = rank(f)
    return f.cols - r, f.rows - r


def expected_skew_betti(m: Sequence[int], k: int) -> dict[int, int]:
    """Nonzero cohomology dims predicted from Clebsch-Gordan multiplicities.

    Weight ``lam = |m| - 2k``: for ``lam >= 0`` the only class sits in
    degree ``k`` with dimension ``mult(L_lam)``; for ``lam = -1`` everything
    vanishes; for ``lam < -1`` it sits in degree ``k - 1`` with dimension
    ``mult(L_{-lam-2})``.
    """
    lam = sum(m) - 2 * k
    if lam >= 0:
        d = clebsch_gordan_mult(m, lam)
        return {k: d} if d else {}
    if lam == -1:
        return {}
    d = clebsch_gordan_mult(m, -lam - 2)
    return {k - 1: d} if d else {}


# --- operator identities used as sanity checks ------------------------------


def _apply(action, m, gen, vec: dict) -> dict:
    out: dict = {}
    for J, c in vec.items():
        for K, v in action(m, gen, J):
            out[K] = out.get(K, 0) + c * v
    return {K: v for K, v in out.items() if v}


def bracket_relations_hold(m: Sequence[int], max_level: int, dual: bool = False) -> bool:
    """Check ``[e,f]=h``, ``[h,e]=2e``, ``[h,f]=-2f`` on every basis vector up
    to total level ``max_level``."""
    action = tensor_dual_action if dual else tensor_verma_action
    n = len(m)

    def op(gen, vec):
        return _apply(action, m, gen, vec)

    def sub(a, b, scale_b=1):
        out = dict(a)
        for K, v in b.items():
            out[K] = out.get(K, 0) - scale_b * v
        return {K: v for K, v in out.items() if v}

    for level in range(max_level + 1):
        for J in compositions(level, n):
            x = {J: Fraction(1)}
            if sub(op("e", op("f", x)), op("f", op("e", x))) != op("h", x):
                return False
            if sub(op("h", op("e", x)), op("e", op("h", x))) != {K: 2 * v for K, v in op("e", x).items()}:
                return False
            if sub(op("h", op("f", x)), op("f", op("h", x))) != {K: -2 * v for K, v in op("f", x).items()}:
                return False
    return True


def contragradient_pairing_holds(m: Sequence[int], max_level: int) -> bool:
    """``<g phi, v> = <phi, g' v>`` with ``e' = f``, ``f' = e``, ``h' = h``."""
    n = len(m)
    swap = {"e": "f", "f": "e", "h": "h"}
    for level in range(max_level + 1):
        for J in compositions(level, n):
            for gen in GENERATORS:
                lhs = dict(tensor_dual_action(m, gen, J))
                # <g phi^J, f^I v> = coefficient of f^J v in g' f^I v
                for lvl in (level - 1, level, level + 1):
                    for I in compositions(lvl, n):
                        rhs = dict(tensor_verma_action(m, swap[gen], I)).get(J, 0)
                        if lhs.get(I, 0) != rhs:
                            return False
    return True


def iota_is_module_map(m: int, max_level: int) -> bool:
    target = -m - 2
    for j in range(max_level + 1):
        for gen in GENERATORS:
            left: dict[int, Fraction] = {}
            for lvl, c in dual_action(m, gen, j):
                hit = iota(m, lvl)
                if hit:
                    left[hit[0]] = left.get(hit[0], 0) + c * hit[1]
            right: dict[int, Fraction] = {}
            hit = iota(m, j)
            if hit:
                for lvl, c in dual_action(target, gen, hit[0]):
                    right[lvl] = right.get(lvl, 0) + c * hit[1]
            if {a: b for a, b in left.items() if b} != {a: b for a, b in right.items() if b}:
                return False
    return True


def iota_pairing_holds(m: int, max_level: int) -> bool:
    """``<iota phi^j, f^i v_{-m-2}> = <phi^j, f^{i+m+1} v_m>``."""
    for j in range(max_level + 1):
        hit = iota(m, j)
        for i in range(max_level + 1):
            lhs = hit[1] if hit and hit[0] == i else 0
            rhs = 1 if j == i + m + 1 else 0
            if lhs != rhs:
                return False
    return True


def shapovalov_matches_flag_coefficient(m: int, j: int) -> bool:
    """The flag coefficient of a single factor equals the Shapovalov norm."""
    return shapovalov_gram(m, j) == math.factorial(j) * math.prod(m + 1 - l for l in range(1, j + 1))
