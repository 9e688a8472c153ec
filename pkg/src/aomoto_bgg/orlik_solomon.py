"""Orlik-Solomon algebras of affine arrangements and their skew-symmetric parts.

Elements are stored in the no-broken-circuit (NBC) basis relative to the
arrangement's hyperplane order.  Arbitrary monomials are rewritten with the
two relation families of the algebra: a monomial whose hyperplanes have empty
intersection or dependent linear parts vanishes, and every circuit ``C``
(minimal dependent set with nonempty intersection) gives
``sum_l (-1)^l e_{C - c_l} = 0``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .arrangement import (
    DiscriminantalSpec,
    WeightedArrangement,
    coordinate_index,
    discriminantal,
    symmetric_action,
)
from .exact import CochainComplex, Matrix, RowSpace, column_basis, rank, same_column_span, solve
from . import sl2


def sort_word(word: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign and sorted tuple of a wedge word; sign 0 on a repeated letter."""
    w = list(word)
    if len(set(w)) != len(w):
        return 0, ()
    sign = 1
    for a, b in itertools.combinations(range(len(w)), 2):
        if w[a] > w[b]:
            sign = -sign
    return sign, tuple(sorted(w))


class _OSCore:
    """Combinatorial data shared by every weighting of one arrangement."""

    def __init__(self, arr: WeightedArrangement):
        self.ambient_dim = arr.ambient_dim
        self.hyperplanes = arr.hyperplanes
        self._lin = [h.linear() for h in arr.hyperplanes]
        self._aug = [h.augmented() for h in arr.hyperplanes]
        self._reduced: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}
        self.form_cache: dict = {}
        self.nbc_basis = self._enumerate_nbc()
        self.index = [{t: i for i, t in enumerate(b)} for b in self.nbc_basis]

    def _independent(self, S) -> bool:
        sp = RowSpace()
        return all(sp.add(self._lin[i]) for i in S)

    def _broken_circuit(self, S: tuple[int, ...]):
        """``(h, T)`` with ``T`` a subset of ``S`` such that ``T + {h}`` is a
        circuit whose least element is ``h``; None if ``S`` is NBC.

        Assumes ``S`` independent.
        """
        if not S:
            return None
        cols = Matrix.from_columns([self._aug[s] for s in S], self.ambient_dim + 1)
        sp = RowSpace()
        for s in S:
            sp.add(self._aug[s])
        for h in range(max(S)):
            if h in S or not sp.contains(self._aug[h]):
                continue
            lam = solve(cols, Matrix.from_columns([self._aug[h]], cols.rows))
            T = tuple(s for a, s in enumerate(S) if lam[(a, 0)])
            if h < min(T):
                return h, T
        return None

    def _enumerate_nbc(self) -> list[list[tuple[int, ...]]]:
        basis = [[()]]
        frontier = [()]
        for _ in range(self.ambient_dim):
            nxt = []
            for S in frontier:
                start = S[-1] + 1 if S else 0
                for h in range(start, len(self.hyperplanes)):
                    T = S + (h,)
                    if self._independent(T) and self._broken_circuit(T) is None:
                        nxt.append(T)
            if not nxt:
                break
            basis.append(nxt)
            frontier = nxt
        while len(basis) < self.ambient_dim + 1:
            basis.append([])
        return basis

    def reduce(self, S: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
        """Express the sorted monomial ``e_S`` in the NBC basis."""
        hit = self._reduced.get(S)
        if hit is not None:
            return hit
        if not self._independent(S):
            out = {}
        else:
            bc = self._broken_circuit(S)
            if bc is None:
                out = {S: Fraction(1)}
            else:
                h, T = bc
                rest = tuple(s for s in S if s not in T)
                sgn, _ = sort_word(T + rest)
                C = (h,) + T
                out = {}
                # e_T = -sum_{l>=1} (-1)^l e_{C - c_l}
                for l in range(1, len(C)):
                    word = C[:l] + C[l + 1:] + rest
                    coef = -sgn * (-1) ** l
                    for t, v in self.reduce_word(word).items():
                        out[t] = out.get(t, 0) + coef * v
                out = {t: v for t, v in out.items() if v}
        self._reduced[S] = out
        return out

    def reduce_word(self, word: Sequence[int]) -> dict[tuple[int, ...], Fraction]:
        sign, S = sort_word(word)
        if not sign:
            return {}
        red = self.reduce(S)
        if sign == 1:
            return red
        return {t: -v for t, v in red.items()}


@lru_cache(maxsize=32)
def _core(ambient_dim: int, hyperplanes) -> _OSCore:
    arr = WeightedArrangement(ambient_dim, hyperplanes, (0,) * len(hyperplanes))
    return _OSCore(arr)


@dataclass(frozen=True)
class OSElement:
    degree: int
    coefficients: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(t): Fraction(v) for t, v in dict(self.coefficients).items() if v}
        if any(len(t) != self.degree for t in clean):
            raise ValueError("monomial degree does not match element degree")
        object.__setattr__(self, "coefficients", clean)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: OSElement) -> OSElement:
        if self.degree != other.degree:
            raise ValueError("cannot add elements of different degree")
        acc = dict(self.coefficients)
        for t, v in other.coefficients.items():
            acc[t] = acc.get(t, 0) + v
        return OSElement(self.degree, acc)

    def __neg__(self) -> OSElement:
        return self.scale(-1)

    def __sub__(self, other: OSElement) -> OSElement:
        return self + (-other)

    def scale(self, c) -> OSElement:
        c = Fraction(c)
        return OSElement(self.degree, {t: c * v for t, v in self.coefficients.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, OSElement):
            return NotImplemented
        return self.degree == other.degree and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.degree, frozenset(self.coefficients.items())))

    def to_json(self) -> dict:
        from .exact import format_scalar

        return {",".join(map(str, t)): format_scalar(v) for t, v in sorted(self.coefficients.items())}


class OSAlgebra:
    """Orlik-Solomon algebra of a weighted arrangement, in the NBC basis."""

    def __init__(self, arr: WeightedArrangement):
        self.arrangement = arr
        self._core = _core(arr.ambient_dim, arr.hyperplanes)

    @property
    def nbc_basis(self) -> list[list[tuple[int, ...]]]:
        return self._core.nbc_basis

    @property
    def top_degree(self) -> int:
        return self.arrangement.ambient_dim

    def dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.nbc_basis)

    def dim(self, p: int) -> int:
        if 0 <= p < len(self.nbc_basis):
            return len(self.nbc_basis[p])
        return 0

    def monomial(self, word: Sequence[int], coef=1) -> OSElement:
        red = self._core.reduce_word(word)
        c = Fraction(coef)
        return OSElement(len(word), {t: c * v for t, v in red.items()})

    def generator(self, i: int) -> OSElement:
        return self.monomial((i,))

    def unit(self) -> OSElement:
        return OSElement(0, {(): Fraction(1)})

    def zero(self, degree: int) -> OSElement:
        return OSElement(degree)

    def vector(self, x: OSElement) -> dict[int, Fraction]:
        idx = self._core.index[x.degree]
        return {idx[t]: v for t, v in x.coefficients.items()}

    def from_vector(self, degree: int, vec: Mapping[int, Fraction]) -> OSElement:
        b = self.nbc_basis[degree]
        return OSElement(degree, {b[i]: v for i, v in vec.items()})

    def columns(self, elements: Sequence[OSElement], degree: int) -> Matrix:
        return Matrix.from_columns([self.vector(x) for x in elements], self.dim(degree))

    def omega_a(self) -> OSElement:
        """The weighted 1-form ``sum_l (a_l / kappa) e_l``."""
        arr = self.arrangement
        return _sum(1, [self.generator(i).scale(w) for i, w in enumerate(arr.weights) if w])

    def left_multiplication(self, x: OSElement, p: int) -> Matrix:
        """Matrix of ``y -> x ^ y`` from degree ``p`` to ``p + deg x``."""
        q = p + x.degree
        cols = []
        for S in self.nbc_basis[p] if p < len(self.nbc_basis) else []:
            cols.append(self.vector(wedge(self, x, OSElement(p, {S: 1}))) if q <= self.top_degree else {})
        return Matrix.from_columns(cols, self.dim(q))


def _sum(degree: int, xs: Sequence[OSElement]) -> OSElement:
    acc: dict[tuple[int, ...], Fraction] = {}
    for x in xs:
        for t, v in x.coefficients.items():
            acc[t] = acc.get(t, 0) + v
    return OSElement(degree, acc)


def build_os(arr: WeightedArrangement) -> OSAlgebra:
    return OSAlgebra(arr)


def wedge(os: OSAlgebra, a: OSElement, b: OSElement) -> OSElement:
    """Product ``a ^ b`` reduced to the NBC basis."""
    deg = a.degree + b.degree
    acc: dict[tuple[int, ...], Fraction] = {}
    if deg > os.top_degree:
        return OSElement(deg)
    for s, x in a.coefficients.items():
        for t, y in b.coefficients.items():
            for u, v in os._core.reduce_word(s + t).items():
                acc[u] = acc.get(u, 0) + x * y * v
    return OSElement(deg, acc)


def aomoto(os: OSAlgebra) -> CochainComplex:
    """``0 -> A^0 -> A^1 -> ... -> A^k`` with ``d x = omega_a ^ x``."""
    w = os.omega_a()
    diffs = {p: os.left_multiplication(w, p) for p in range(os.top_degree)}
    labels = {p: list(os.nbc_basis[p]) for p in range(os.top_degree + 1)}
    return CochainComplex(0, os.dims(), diffs, labels)


# --- symmetric group action --------------------------------------------------


def act(os: OSAlgebra, index_map: Sequence[int], x: OSElement) -> OSElement:
    """Relabel generators by ``index_map`` (no sign) and re-sort the wedge."""
    acc: dict[tuple[int, ...], Fraction] = {}
    for s, v in x.coefficients.items():
        for u, w in os._core.reduce_word(tuple(index_map[i] for i in s)).items():
            acc[u] = acc.get(u, 0) + v * w
    return OSElement(x.degree, acc)


def skew(os: OSAlgebra, action, x: OSElement) -> OSElement:
    """``sum_sigma sign(sigma) sigma . x``."""
    acc: dict[tuple[int, ...], Fraction] = {}
    for imap, sign in action:
        for s, v in x.coefficients.items():
            for u, w in os._core.reduce_word(tuple(imap[i] for i in s)).items():
                acc[u] = acc.get(u, 0) + sign * v * w
    return OSElement(x.degree, acc)


def skew_projector(os: OSAlgebra, action, degree: int) -> Matrix:
    cols = [os.vector(skew(os, action, OSElement(degree, {S: 1}))) for S in os.nbc_basis[degree]]
    return Matrix.from_columns(cols, os.dim(degree))


def skew_subspace(os: OSAlgebra, action, degree: int) -> Matrix:
    """Columns: a basis of the skew-symmetric part in the given degree."""
    if degree < 0 or degree > os.top_degree:
        return Matrix.zeros(0, 0)
    return column_basis(skew_projector(os, action, degree))


# --- the omega_J forms on a discriminantal arrangement -----------------------


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    return sl2.compositions(total, parts)


def _spec(os: OSAlgebra) -> DiscriminantalSpec:
    spec = os.arrangement.discriminantal
    if spec is None:
        raise ValueError("omega_J forms need a discriminantal arrangement")
    return spec


def eta_word(spec: DiscriminantalSpec, J: Sequence[int]) -> tuple[int, ...]:
    """Hyperplane word of ``eta_{J,1} ^ ... ^ eta_{J,n}``: consecutive variables
    paired with ``z_1`` (``j_1`` of them), then ``z_2``, and so on."""
    word = []
    t = 0
    for i, ji in enumerate(J):
        for _ in range(ji):
            word.append(coordinate_index(spec, t, i))
            t += 1
    return tuple(word)


def alpha(J: Sequence[int], kappa: Fraction) -> Fraction:
    return 1 / (kappa ** sum(J) * math.prod(math.factorial(j) for j in J))


@lru_cache(maxsize=64)
def _action(arr: WeightedArrangement):
    return symmetric_action(arr)


def omega_J(os: OSAlgebra, J: Sequence[int], variant: str = "top") -> OSElement:
    """Skew-symmetrised ``alpha_J eta_J``; the subtop form carries ``(-1)^k``."""
    spec = _spec(os)
    J = tuple(J)
    if len(J) != spec.n:
        raise ValueError(f"J must have {spec.n} entries")
    want = spec.k if variant == "top" else spec.k - 1
    if variant not in ("top", "subtop"):
        raise ValueError("variant must be 'top' or 'subtop'")
    if sum(J) != want or min(J) < 0:
        raise ValueError(f"{variant} form needs |J| = {want}, got {J}")
    key = (spec.n, spec.z, spec.kappa, J, variant)
    hit = os._core.form_cache.get(key)
    if hit is not None:
        return hit
    c = alpha(J, spec.kappa)
    if variant == "subtop":
        c *= (-1) ** spec.k
    eta = os.monomial(eta_word(spec, J), c)
    out = skew(os, _action(os.arrangement), eta)
    os._core.form_cache[key] = out
    return out


def omega_basis(os: OSAlgebra, variant: str) -> tuple[list[tuple[int, ...]], list[OSElement]]:
    spec = _spec(os)
    level = spec.k if variant == "top" else spec.k - 1
    Js = compositions(level, spec.n)
    return Js, [omega_J(os, J, variant) for J in Js]


def discriminantal_os(spec: DiscriminantalSpec) -> OSAlgebra:
    return build_os(discriminantal(spec))


def omega_J_basis_check(spec: DiscriminantalSpec) -> dict:
    """Skew dims in every degree vs. the counts of the omega_J families."""
    os = discriminantal_os(spec)
    action = _action(os.arrangement)
    k = spec.k
    skew_dims = []
    bases = {}
    for p in range(k + 1):
        b = skew_subspace(os, action, p)
        bases[p] = b
        skew_dims.append(b.cols)
    report = {"k": k, "n": spec.n, "skew_dims": skew_dims, "checks": {}}
    for variant, level in (("subtop", k - 1), ("top", k)):
        Js, forms = omega_basis(os, variant)
        mat = os.columns(forms, level)
        r = rank(mat)
        report[f"{variant}_count"] = len(Js)
        report["checks"][f"{variant}_independent"] = r == len(Js)
        report["checks"][f"{variant}_spans"] = same_column_span(mat, bases[level])
    report["checks"]["vanishing_elsewhere"] = all(
        d == 0 for p, d in enumerate(skew_dims) if p not in (k - 1, k)
    )
    report["passed"] = all(report["checks"].values())
    return report


def omega_a_matrix(os: OSAlgebra) -> Matrix:
    """Matrix of ``x -> omega_a ^ x`` from the subtop to the top omega_J basis."""
    spec = _spec(os)
    k = spec.k
    _, sub = omega_basis(os, "subtop")
    _, top = omega_basis(os, "top")
    w = os.omega_a()
    images = os.columns([wedge(os, w, x) for x in sub], k)
    coeffs = solve(os.columns(top, k), images)
    if coeffs is None:
        raise ArithmeticError("omega_a ^ omega_J left the span of the top forms")
    return coeffs


def sv_isomorphism_check(spec: DiscriminantalSpec) -> dict:
    """Compare ``omega_a ^`` in the omega_J bases with the dual f-action."""
    os = discriminantal_os(spec)
    got = omega_a_matrix(os)
    want = sl2.f_matrix(spec.m, spec.k)
    report = {"m": list(spec.m), "k": spec.k, "shape": list(got.shape), "passed": got == want}
    if not report["passed"]:
        diff = (got - want).entries
        (i, j), _ = min(diff.items())
        report["first_mismatch"] = {"row": i, "col": j, "wedge": str(got[(i, j)]), "f_action": str(want[(i, j)])}
    return report


# --- central arrangements and the projective skew part ------------------------


def euler_contraction(os: OSAlgebra, x: OSElement) -> OSElement:
    """``d(e_{i1} .. e_{ip}) = sum_l (-1)^(l-1) e_{i1} .. ^e_{il} .. e_{ip}``."""
    if not os.arrangement.is_central():
        raise ValueError("Euler contraction needs a central arrangement")
    acc: dict[tuple[int, ...], Fraction] = {}
    for s, v in x.coefficients.items():
        for l in range(len(s)):
            sign = -1 if l % 2 else 1
            for u, w in os._core.reduce_word(s[:l] + s[l + 1:]).items():
                acc[u] = acc.get(u, 0) + sign * v * w
    return OSElement(x.degree - 1, acc)


def euler_matrix(os: OSAlgebra, p: int) -> Matrix:
    """Matrix of the contraction from degree ``p`` to ``p - 1``."""
    cols = [os.vector(euler_contraction(os, OSElement(p, {S: 1}))) for S in os.nbc_basis[p]]
    return Matrix.from_columns(cols, os.dim(p - 1))


def central_braid_arrangement(m: int) -> WeightedArrangement:
    """``t_i = 0`` and ``t_i - t_j = 0`` in ``C^(m+1)``."""
    d = m + 1
    eqs = []
    for i in range(d):
        c = [0] * d
        c[i] = 1
        eqs.append((c, 0))
    for i, j in itertools.combinations(range(d), 2):
        c = [0] * d
        c[i], c[j] = 1, -1
        eqs.append((c, 0))
    return WeightedArrangement.from_equations(d, eqs)


def projective_skew_dims(m: int) -> tuple[int, ...]:
    """Skew dims of the projectivised OS algebra, realised as the image of
    the Euler contraction on the central cone in ``C^(m+1)``."""
    arr = central_braid_arrangement(m)
    os = build_os(arr)
    action = _action(arr)
    dims = []
    for p in range(m + 1):
        proj = skew_projector(os, action, p + 1)
        dims.append(rank(euler_matrix(os, p + 1) @ proj))
    return tuple(dims)


# --- flag forms ---------------------------------------------------------------


def beta(m: Sequence[int], K: Sequence[int]) -> int:
    """``prod_i k_i! prod_{l=1..k_i} (m_i + 1 - l)``."""
    out = 1
    for mi, ki in zip(m, K):
        out *= math.factorial(ki)
        for l in range(1, ki + 1):
            out *= mi + 1 - l
    return out


def flag_subspace(spec: DiscriminantalSpec, degree: int) -> list[tuple[tuple[int, ...], int]]:
    """``(K, beta^K)`` for the nonzero flag generators ``beta^K omega_K``."""
    k = spec.k
    if degree not in (k - 1, k):
        raise ValueError("flag forms live in degrees k-1 and k")
    out = []
    for K in compositions(degree, spec.n):
        b = beta(spec.m, K)
        if b:
            out.append((K, b))
    return out


def flag_complex_matrix(spec: DiscriminantalSpec) -> tuple[Matrix, Matrix, Matrix]:
    """Concrete flag spaces in the NBC basis and the wedge map between them.

    Returns ``(F_sub, F_top, W)`` where the columns of ``F_sub``/``F_top`` are
    ``beta^K omega_K`` and ``W`` is the matrix of ``omega_a ^`` on degree k-1.
    """
    os = discriminantal_os(spec)
    k = spec.k
    fsub = [omega_J(os, K, "subtop").scale(b) for K, b in flag_subspace(spec, k - 1)]
    ftop = [omega_J(os, K, "top").scale(b) for K, b in flag_subspace(spec, k)]
    return os.columns(fsub, k - 1), os.columns(ftop, k), os.left_multiplication(os.omega_a(), k - 1)
