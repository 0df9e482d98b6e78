"""Exact sparse matrices over Q(zeta) with labelled bases."""

from __future__ import annotations

from typing import Callable, Hashable, Sequence

from .arith import CycContext, CycRat, h_valuation, is_unit

__all__ = ["RepMatrix", "SingularMatrix"]


class SingularMatrix(ArithmeticError):
    pass


def _acc(out: dict, key, c) -> None:
    v = out.get(key)
    if v is None:
        out[key] = c
    else:
        v = v + c
        if v:
            out[key] = v
        else:
            del out[key]


class RepMatrix:
    """Square matrix stored column-wise: ``cols[j]`` maps row index to a nonzero CycRat.

    Column j is the image of basis vector ``labels[j]``.  ``basis`` names the basis
    (for instance "v", "t", "vprime", "E1F", "E1primeF").  ``projective`` marks a
    representative that is only meaningful up to a nonzero scalar.
    """

    __slots__ = ("ctx", "labels", "cols", "basis", "projective", "_index")

    def __init__(self, ctx: CycContext, labels: Sequence[Hashable], cols: list, basis: str = "",
                 projective: bool = False):
        self.ctx = ctx
        self.labels = list(labels)
        self.cols = cols
        self.basis = basis
        self.projective = projective
        self._index = None
        if len(cols) != len(self.labels):
            raise ValueError("need one column per basis label")

    # -- construction

    @classmethod
    def from_function(cls, ctx, labels, image: Callable, basis: str = "") -> RepMatrix:
        """``image(label)`` returns a dict label -> coefficient."""
        labels = list(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        cols = []
        for lab in labels:
            col = {}
            for out_lab, c in image(lab).items():
                c = ctx.rat(c)
                if c:
                    _acc(col, index[out_lab], c)
            cols.append(col)
        m = cls(ctx, labels, cols, basis)
        m._index = index
        return m

    @classmethod
    def identity(cls, ctx, labels, basis: str = "") -> RepMatrix:
        one = ctx.one()
        return cls(ctx, labels, [{j: one} for j in range(len(labels))], basis)

    @classmethod
    def diagonal(cls, ctx, labels, values, basis: str = "") -> RepMatrix:
        return cls(ctx, labels, [{j: ctx.rat(v)} if v else {} for j, v in enumerate(values)], basis)

    @classmethod
    def from_rows(cls, ctx, labels, rows, basis: str = "") -> RepMatrix:
        n = len(labels)
        cols = [{} for _ in range(n)]
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                v = ctx.rat(v)
                if v:
                    cols[j][i] = v
        return cls(ctx, labels, cols, basis)

    # -- access

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def index(self) -> dict:
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        return self._index

    def entry(self, i: int, j: int) -> CycRat:
        return self.cols[j].get(i, self.ctx.zero())

    def __getitem__(self, ij) -> CycRat:
        return self.entry(*ij)

    def entries(self):
        """Nonzero entries as (row, col, value)."""
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                yield i, j, v

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def rows(self) -> list:
        out = [{} for _ in range(self.dim)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    def to_dense(self) -> list:
        z = self.ctx.zero()
        dense = [[z] * self.dim for _ in range(self.dim)]
        for i, j, v in self.entries():
            dense[i][j] = v
        return dense

    def relabel(self, basis: str) -> RepMatrix:
        return RepMatrix(self.ctx, self.labels, self.cols, basis, self.projective)

    def as_projective(self, flag: bool = True) -> RepMatrix:
        return RepMatrix(self.ctx, self.labels, self.cols, self.basis, flag)

    # -- arithmetic

    def apply_col(self, vec: dict) -> dict:
        """Matrix times a sparse column vector (row index -> value)."""
        out = {}
        for k, c in vec.items():
            for i, v in self.cols[k].items():
                _acc(out, i, v * c)
        return out

    def __matmul__(self, other: RepMatrix) -> RepMatrix:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return RepMatrix(self.ctx, other.labels, [self.apply_col(c) for c in other.cols], self.basis,
                         self.projective or other.projective)

    def __mul__(self, c) -> RepMatrix:
        c = self.ctx.rat(c)
        if not c:
            return RepMatrix(self.ctx, self.labels, [{} for _ in self.cols], self.basis)
        return RepMatrix(self.ctx, self.labels,
                         [{i: v * c for i, v in col.items()} for col in self.cols], self.basis)

    __rmul__ = __mul__

    def __add__(self, other: RepMatrix) -> RepMatrix:
        cols = []
        for a, b in zip(self.cols, other.cols):
            col = dict(a)
            for i, v in b.items():
                _acc(col, i, v)
            cols.append(col)
        return RepMatrix(self.ctx, self.labels, cols, self.basis, self.projective)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self.dim == other.dim and self.cols == other.cols

    __hash__ = None

    def kron(self, other: RepMatrix) -> RepMatrix:
        """Kronecker product; labels are concatenated tuples, first factor most significant."""
        def cat(a, b):
            a = a if isinstance(a, tuple) else (a,)
            b = b if isinstance(b, tuple) else (b,)
            return a + b

        labels = [cat(a, b) for a in self.labels for b in other.labels]
        m = other.dim
        cols = []
        for ca in self.cols:
            for cb in other.cols:
                col = {}
                for i, va in ca.items():
                    for k, vb in cb.items():
                        col[i * m + k] = va * vb
                cols.append(col)
        return RepMatrix(self.ctx, labels, cols, self.basis or other.basis,
                         self.projective or other.projective)

    def is_identity(self) -> bool:
        one = self.ctx.one()
        return all(col == {j: one} for j, col in enumerate(self.cols))

    # -- elimination

    def _eliminate(self, want_inverse: bool):
        n = self.dim
        ctx = self.ctx
        rows = self.rows()
        aug = [{i: ctx.one()} for i in range(n)] if want_inverse else None
        det = ctx.one()
        # column -> rows having a nonzero there, maintained lazily
        for col in range(n):
            piv = None
            best = None
            for i in range(col, n):
                v = rows[i].get(col)
                if v is not None:
                    cost = (v.den != 1, len(rows[i]))
                    if best is None or cost < best:
                        piv, best = i, cost
            if piv is None:
                raise SingularMatrix(f"no pivot in column {col}")
            if piv != col:
                rows[piv], rows[col] = rows[col], rows[piv]
                if want_inverse:
                    aug[piv], aug[col] = aug[col], aug[piv]
                det = -det
            prow = rows[col]
            pv = prow[col]
            det = det * pv
            inv = pv.inverse()
            prow = {j: v * inv for j, v in prow.items()}
            rows[col] = prow
            if want_inverse:
                arow = {j: v * inv for j, v in aug[col].items()}
                aug[col] = arow
            targets = range(n) if want_inverse else range(col + 1, n)
            for i in targets:
                if i == col:
                    continue
                f = rows[i].get(col)
                if f is None:
                    continue
                row = rows[i]
                for j, v in prow.items():
                    _acc(row, j, -(f * v))
                if want_inverse:
                    arow_i = aug[i]
                    for j, v in aug[col].items():
                        _acc(arow_i, j, -(f * v))
        return det, aug

    def det(self) -> CycRat:
        try:
            d, _ = self._eliminate(False)
        except SingularMatrix:
            return self.ctx.zero()
        return d

    def inverse(self) -> RepMatrix:
        _, aug = self._eliminate(True)
        n = self.dim
        cols = [{} for _ in range(n)]
        for i, row in enumerate(aug):
            for j, v in row.items():
                cols[j][i] = v
        return RepMatrix(self.ctx, self.labels, cols, self.basis, self.projective)

    # -- predicates

    def first_nonintegral(self):
        for i, j, v in self.entries():
            if v.den != 1:
                return i, j, v
        return None

    def is_integral(self) -> bool:
        return self.first_nonintegral() is None

    def det_is_unit(self) -> bool:
        return is_unit(self.det())

    def projectively_equal(self, other: RepMatrix) -> bool:
        return self.proportional(other) is not None

    def proportional(self, other: RepMatrix):
        """Return the scalar c with self = c * other, or None if no such nonzero c exists."""
        if self.dim != other.dim:
            return None
        c = None
        for j in range(self.dim):
            a, b = self.cols[j], other.cols[j]
            if a.keys() != b.keys():
                return None
            for i, va in a.items():
                if c is None:
                    c = va / b[i]
                elif va != c * b[i]:
                    return None
        return c

    def triangular_violation(self, upper: bool, order: Callable | None = None):
        """First entry (i, j, v) breaking upper (row <= col) or lower (row >= col) triangularity."""
        key = order or (lambda lab: lab)
        labs = [key(lab) for lab in self.labels]
        for i, j, v in self.entries():
            if (upper and labs[i] > labs[j]) or (not upper and labs[i] < labs[j]):
                return i, j, v
        return None

    def witness(self, i: int, j: int, v=None) -> dict:
        if v is None:
            v = self.entry(i, j)
        return {"row": _jsonable(self.labels[i]), "col": _jsonable(self.labels[j]), "value": str(v)}

    def det_h_valuation(self) -> int | None:
        d = self.det()
        return h_valuation(d) if d else None

    def __repr__(self):
        return f"RepMatrix(dim={self.dim}, basis={self.basis!r}, nnz={self.nnz()})"


def _jsonable(lab):
    if isinstance(lab, tuple):
        return [_jsonable(x) for x in lab]
    return lab
