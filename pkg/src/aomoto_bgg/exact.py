"""Exact rational linear algebra and cochain-complex bookkeeping.

Everything here works over :class:`fractions.Fraction`.  Matrices are sparse
(a dict of nonzero entries) because the complexes built elsewhere in the
package are large but very sparse.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Scalar = Fraction


class ComplexError(ValueError):
    """Raised when a cochain complex violates d o d = 0 or shape rules."""


def scalar(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_scalar(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Matrix:
    """Sparse exact matrix; absent entries are zero."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], object] = ()):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be nonnegative")
        self.rows = rows
        self.cols = cols
        clean = {}
        for (i, j), v in dict(entries).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
            v = scalar(v)
            if v:
                clean[(i, j)] = v
        self._entries = clean

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], cols: int | None = None) -> Matrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        ent = {}
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                ent[(i, j)] = v
        return cls(len(rows), cols, ent)

    @classmethod
    def from_columns(cls, columns: Sequence[Mapping[int, object]], rows: int) -> Matrix:
        ent = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                ent[(i, j)] = v
        return cls(rows, len(columns), ent)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._entries)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self._entries.get(key, Fraction(0))

    def nnz(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def to_rows(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    def row_dicts(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [{} for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    def column_dicts(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [{} for _ in range(self.cols)]
        for (i, j), v in self._entries.items():
            out[j][i] = v
        return out

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, {(j, i): v for (i, j), v in self._entries.items()})

    T = property(transpose)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        right = other.row_dicts()
        acc: dict[tuple[int, int], Fraction] = {}
        for (i, j), v in self._entries.items():
            for c, w in right[j].items():
                acc[(i, c)] = acc.get((i, c), 0) + v * w
        return Matrix(self.rows, other.cols, acc)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        acc = dict(self._entries)
        for k, v in other._entries.items():
            acc[k] = acc.get(k, 0) + v
        return Matrix(self.rows, self.cols, acc)

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c) -> Matrix:
        c = scalar(c)
        return Matrix(self.rows, self.cols, {k: c * v for k, v in self._entries.items()})

    def apply(self, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Multiply by a sparse column vector given as ``{index: value}``."""
        out: dict[int, Fraction] = {}
        cols = self.column_dicts()
        for j, x in vec.items():
            for i, v in cols[j].items():
                out[i] = out.get(i, 0) + v * x
        return {i: v for i, v in out.items() if v}

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        rpos = {r: a for a, r in enumerate(rows)}
        cpos = {c: b for b, c in enumerate(cols)}
        ent = {}
        for (i, j), v in self._entries.items():
            if i in rpos and j in cpos:
                ent[(rpos[i], cpos[j])] = v
        return Matrix(len(rows), len(cols), ent)

    def hstack(self, other: Matrix) -> Matrix:
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        ent = dict(self._entries)
        for (i, j), v in other._entries.items():
            ent[(i, j + self.cols)] = v
        return Matrix(self.rows, self.cols + other.cols, ent)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, nnz={len(self._entries)})"

    def to_json(self) -> dict:
        trip = [[i, j, format_scalar(v)] for (i, j), v in sorted(self._entries.items())]
        return {"rows": self.rows, "cols": self.cols, "entries": trip}

    @classmethod
    def from_json(cls, data: Mapping) -> Matrix:
        return cls(data["rows"], data["cols"], {(i, j): scalar(v) for i, j, v in data["entries"]})


class RowSpace:
    """Incrementally maintained echelon basis of a row space.

    Rows are sparse dicts; each stored pivot row is normalised so its leading
    (smallest) column holds 1.
    """

    def __init__(self):
        self._pivots: dict[int, dict[int, Fraction]] = {}

    def __len__(self) -> int:
        return len(self._pivots)

    def reduce(self, row: Mapping[int, Fraction]) -> dict[int, Fraction]:
        r = {c: scalar(v) for c, v in row.items() if v}
        while r:
            c = min(r)
            piv = self._pivots.get(c)
            if piv is None:
                return r
            f = r[c]
            for cc, v in piv.items():
                nv = r.get(cc, 0) - f * v
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
        return r

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Insert ``row``; returns True when it enlarged the space."""
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        inv = 1 / r[c]
        self._pivots[c] = {cc: v * inv for cc, v in r.items()}
        return True

    def contains(self, row: Mapping[int, Fraction]) -> bool:
        return not self.reduce(row)


def _rref(rows: Iterable[Mapping[int, Fraction]]) -> dict[int, dict[int, Fraction]]:
    """Reduced row echelon form as ``{pivot_col: row}``."""
    space = RowSpace()
    for r in rows:
        space.add(r)
    piv = space._pivots
    for c in sorted(piv, reverse=True):
        row = piv[c]
        for c2 in sorted(piv):
            if c2 >= c:
                break
            other = piv[c2]
            f = other.get(c)
            if f:
                for cc, v in row.items():
                    nv = other.get(cc, 0) - f * v
                    if nv:
                        other[cc] = nv
                    else:
                        other.pop(cc, None)
    return piv


def rank(m: Matrix) -> int:
    """Exact rank over the rationals."""
    # eliminate along the shorter side
    rows = m.row_dicts() if m.rows <= m.cols else m.column_dicts()
    space = RowSpace()
    for r in rows:
        space.add(r)
    return len(space)


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form a basis of the right kernel of ``m``."""
    piv = _rref(m.row_dicts())
    free = [c for c in range(m.cols) if c not in piv]
    cols = []
    for f in free:
        v = {f: Fraction(1)}
        for pc, row in piv.items():
            x = row.get(f)
            if x:
                v[pc] = -x
        cols.append(v)
    return Matrix.from_columns(cols, m.cols)


def column_basis(m: Matrix) -> Matrix:
    """A maximal independent subset of the columns of ``m``, in order."""
    space = RowSpace()
    keep = []
    for col in m.column_dicts():
        if space.add(col):
            keep.append(col)
    return Matrix.from_columns(keep, m.rows)


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """Return ``x`` with ``a @ x == b``, or None when inconsistent.

    Free variables are set to zero, so for injective ``a`` the answer is the
    unique solution.
    """
    if a.rows != b.rows:
        raise ValueError("row counts differ")
    n = a.cols
    aug = [dict(r) for r in a.row_dicts()]
    for (i, j), v in b.entries.items():
        aug[i][n + j] = v
    piv = _rref(aug)
    if any(c >= n for c in piv):
        return None
    ent = {}
    for pc, row in piv.items():
        for c, v in row.items():
            if c >= n:
                ent[(pc, c - n)] = v
    return Matrix(n, b.cols, ent)


def in_column_span(basis: Matrix, vectors: Matrix) -> bool:
    return rank(basis.hstack(vectors)) == rank(basis)


def same_column_span(a: Matrix, b: Matrix) -> bool:
    """Exact subspace equality by double inclusion."""
    ra, rb = rank(a), rank(b)
    both = rank(a.hstack(b))
    return ra == rb == both


def _to_jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_to_jsonable(y) for y in x]
    if isinstance(x, frozenset):
        return sorted(_to_jsonable(y) for y in x)
    if isinstance(x, Fraction):
        return format_scalar(x)
    return x


def _from_jsonable(x):
    if isinstance(x, list):
        return tuple(_from_jsonable(y) for y in x)
    return x


@dataclass(frozen=True)
class BettiTable:
    degrees: tuple[int, ...]
    dims: tuple[int, ...]
    dim_kernel: tuple[int, ...]
    dim_image_incoming: tuple[int, ...]

    @property
    def betti(self) -> tuple[int, ...]:
        return tuple(k - i for k, i in zip(self.dim_kernel, self.dim_image_incoming))

    def __getitem__(self, degree: int) -> int:
        if degree not in self.degrees:
            return 0
        return self.betti[self.degrees.index(degree)]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.degrees, self.betti))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * b for d, b in zip(self.degrees, self.dims))

    def to_json(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "dims": list(self.dims),
            "dim_kernel": list(self.dim_kernel),
            "dim_image_incoming": list(self.dim_image_incoming),
            "betti": list(self.betti),
        }


class CochainComplex:
    """A bounded cochain complex ``C^lo -> ... -> C^hi`` of rational spaces.

    ``differentials[l]`` is the matrix of ``d^l : C^l -> C^{l+1}`` for
    ``lo <= l < hi``.  Shapes and ``d o d = 0`` are checked on construction.
    """

    def __init__(
        self,
        lo: int,
        dims: Sequence[int],
        differentials: Mapping[int, Matrix],
        labels: Mapping[int, Sequence] | None = None,
        check: bool = True,
    ):
        self.lo = lo
        self.dims = tuple(dims)
        self.hi = lo + len(self.dims) - 1
        self.labels = {d: tuple(labels.get(d, ())) for d in self.degrees} if labels else {}
        diffs = {}
        for l in range(lo, self.hi):
            m = differentials.get(l)
            shape = (self.dim(l + 1), self.dim(l))
            if m is None:
                m = Matrix.zeros(*shape)
            if m.shape != shape:
                raise ComplexError(f"d^{l} has shape {m.shape}, expected {shape}")
            diffs[l] = m
        extra = set(differentials) - set(diffs)
        if any(not differentials[l].is_zero() for l in extra):
            raise ComplexError(f"differentials outside degree range: {sorted(extra)}")
        self.differentials = diffs
        for d, labs in self.labels.items():
            if len(labs) != self.dim(d):
                raise ComplexError(f"degree {d}: {len(labs)} labels for dimension {self.dim(d)}")
        if check:
            self.check_d_squared()

    @property
    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def dim(self, l: int) -> int:
        if self.lo <= l <= self.hi:
            return self.dims[l - self.lo]
        return 0

    def d(self, l: int) -> Matrix:
        if l in self.differentials:
            return self.differentials[l]
        return Matrix.zeros(self.dim(l + 1), self.dim(l))

    def d_squared_failures(self) -> list[int]:
        return [l for l in range(self.lo, self.hi - 1) if not (self.d(l + 1) @ self.d(l)).is_zero()]

    def check_d_squared(self) -> None:
        bad = self.d_squared_failures()
        if bad:
            raise ComplexError(f"d o d != 0 starting in degrees {bad}")

    def to_json(self) -> dict:
        return {
            "lo": self.lo,
            "dims": list(self.dims),
            "labels": {str(d): _to_jsonable(list(v)) for d, v in self.labels.items()},
            "differentials": {str(l): m.to_json() for l, m in self.differentials.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> CochainComplex:
        diffs = {int(l): Matrix.from_json(m) for l, m in data["differentials"].items()}
        labels = {int(d): [_from_jsonable(x) for x in v] for d, v in data.get("labels", {}).items()}
        return cls(data["lo"], data["dims"], diffs, labels or None)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __repr__(self) -> str:
        return f"CochainComplex(degrees {self.lo}..{self.hi}, dims={self.dims})"


def betti(c: CochainComplex) -> BettiTable:
    """Cohomology dimensions ``dim ker d^l - rank d^{l-1}`` per degree."""
    c.check_d_squared()
    ranks = {l: rank(c.d(l)) for l in range(c.lo - 1, c.hi + 1)}
    ker = tuple(c.dim(l) - ranks[l] for l in c.degrees)
    img = tuple(ranks[l - 1] for l in c.degrees)
    return BettiTable(tuple(c.degrees), c.dims, ker, img)
