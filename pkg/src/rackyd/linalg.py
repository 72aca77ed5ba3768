"""Dense exact matrices, Kronecker products, and echelon-form utilities.

The tensor flattening convention is fixed once and for all: the basis vector
e_i (x) e_j of two factors of dimensions m, n sits at flat index ``i + m*j``
(0-based; equivalently ``m*(j-1) + i`` 1-based).  The first factor varies
fastest, and the convention extends associatively to any number of factors.
``kron`` follows the same convention, so composites like (T (x) 1)(1 (x) T)
can be formed by plain matrix products.  No other flattening is used anywhere
in the package.

Matrices are immutable after construction and may be shared freely.
"""

from __future__ import annotations

from .errors import ShapeError, ValidationError
from .scalars import QQ


class TensorIndex:
    """Mixed-radix flattening of multi-indices, first factor fastest."""

    def __init__(self, dims):
        dims = tuple(int(d) for d in dims)
        if any(d <= 0 for d in dims):
            raise ValidationError(f"tensor factor dimensions must be positive: {dims}")
        self.dims = dims

    @property
    def total(self) -> int:
        n = 1
        for d in self.dims:
            n *= d
        return n

    def flatten(self, multi) -> int:
        multi = tuple(multi)
        if len(multi) != len(self.dims):
            raise ShapeError(f"expected {len(self.dims)} indices, got {len(multi)}")
        flat, weight = 0, 1
        for i, d in zip(multi, self.dims):
            if not 0 <= i < d:
                raise ShapeError(f"index {i} out of range for factor of dimension {d}")
            flat += weight * i
            weight *= d
        return flat

    def unflatten(self, flat: int):
        if not 0 <= flat < self.total:
            raise ShapeError(f"flat index {flat} out of range")
        multi = []
        for d in self.dims:
            multi.append(flat % d)
            flat //= d
        return tuple(multi)


def flat2(i: int, j: int, m: int) -> int:
    """Flat index of e_i (x) e_j when the first factor has dimension m."""
    return i + m * j


class Matrix:
    """A dense matrix of exact scalars; equality is entrywise and exact."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, rows=None, cols=None):
        data = tuple(tuple(row) for row in data)
        if rows is None:
            if not data:
                raise ShapeError("pass explicit rows/cols for an empty matrix")
            rows, cols = len(data), len(data[0])
        for row in data:
            if len(row) != cols:
                raise ShapeError("ragged rows")
        if len(data) != rows:
            raise ShapeError(f"expected {rows} rows, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, rows, cols, field=QQ):
        z = field.zero
        return cls(tuple(tuple(z for _ in range(cols)) for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n, field=QQ):
        one, zero = field.one, field.zero
        return cls(
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)),
            n, n,
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError("matrix addition needs equal shapes")
        return Matrix(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.data, other.data)),
            self.rows, self.cols,
        )

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError("matrix subtraction needs equal shapes")
        return Matrix(
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.data, other.data)),
            self.rows, self.cols,
        )

    def __neg__(self):
        return Matrix(tuple(tuple(-a for a in row) for row in self.data), self.rows, self.cols)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def scale(self, c):
        return Matrix(tuple(tuple(c * a for a in row) for row in self.data), self.rows, self.cols)

    def transpose(self):
        return Matrix(tuple(zip(*self.data)) if self.data else (), self.cols, self.rows)

    def is_zero(self) -> bool:
        return all(not a for row in self.data for a in row)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            (a == 1 if i == j else not a)
            for i, row in enumerate(self.data)
            for j, a in enumerate(row)
        )

    def as_int_rows(self):
        """Rows as plain ints; raises unless every entry is integral."""
        out = []
        for row in self.data:
            ints = []
            for a in row:
                if getattr(a, "denominator", 1) != 1:
                    raise ValidationError(f"non-integral entry {a}")
                ints.append(int(a) if not hasattr(a, "v") else a.v)
            out.append(ints)
        return out

    def to_json_dict(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(a) for a in row] for row in self.data],
        }

    @classmethod
    def from_json_dict(cls, d, field=QQ):
        try:
            rows, cols, entries = d["rows"], d["cols"], d["entries"]
        except (KeyError, TypeError) as exc:
            raise ValidationError("matrix JSON needs rows/cols/entries") from exc
        data = [[field.parse(s) for s in row] for row in entries]
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ShapeError("entry table does not match declared shape")
        return cls(data, rows, cols)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product; skips zero entries, which makes the sparse
    permutation-like matrices of the braiding checks cheap."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = [[None] * b.cols for _ in range(a.rows)]
    for i in range(a.rows):
        arow = a.data[i]
        orow = out[i]
        for k in range(a.cols):
            c = arow[k]
            if not c:
                continue
            brow = b.data[k]
            for j, v in enumerate(brow):
                if v:
                    cv = c * v
                    orow[j] = cv if orow[j] is None else orow[j] + cv
    # fill holes with an actual zero scalar of the right type
    some = next((x for row in a.data for x in row), None)
    if some is None:
        some = next((x for row in b.data for x in row), None)
    z = (some - some) if some is not None else 0
    for i in range(a.rows):
        orow = out[i]
        for j in range(b.cols):
            if orow[j] is None:
                orow[j] = z
    return Matrix(out, a.rows, b.cols)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product under the package flattening convention:
    ``kron(a, b)[i + a.rows*i2, j + a.cols*j2] = a[i, j] * b[i2, j2]``."""
    some = next((x for row in a.data for x in row), None)
    if some is None:
        some = next((x for row in b.data for x in row), None)
    z = (some - some) if some is not None else 0
    rows, cols = a.rows * b.rows, a.cols * b.cols
    out = [[z] * cols for _ in range(rows)]
    for i in range(a.rows):
        for j in range(a.cols):
            c = a.data[i][j]
            if not c:
                continue
            for i2 in range(b.rows):
                brow = b.data[i2]
                orow = out[i + a.rows * i2]
                base = j
                for j2, v in enumerate(brow):
                    if v:
                        orow[base + a.cols * j2] = c * v
    return Matrix(out, rows, cols)


# ---------------------------------------------------------------------------
# echelon-form utilities (internal, used by the quotient and invariant code)

def rref(vectors, field=QQ):
    """Reduced row echelon basis of the span of ``vectors``.

    Returns ``(rows, pivots)`` where each row has a leading 1 in its pivot
    column and zeros in every other pivot column; rows are ordered by pivot.
    """
    rows = []
    pivots = []
    for vec in vectors:
        v = list(vec)
        for r, p in zip(rows, pivots):
            c = v[p]
            if c:
                v = [x - c * y for x, y in zip(v, r)]
        piv = next((k for k, x in enumerate(v) if x), None)
        if piv is None:
            continue
        lead = v[piv]
        v = [x / lead for x in v]
        for i, (r, p) in enumerate(zip(rows, pivots)):
            c = r[piv]
            if c:
                rows[i] = [x - c * y for x, y in zip(r, v)]
        rows.append(v)
        pivots.append(piv)
    order = sorted(range(len(rows)), key=lambda i: pivots[i])
    return [tuple(rows[i]) for i in order], [pivots[i] for i in order]


def reduce_mod(vec, rows, pivots):
    """Residual of ``vec`` after subtracting its projection onto an rref span."""
    v = list(vec)
    for r, p in zip(rows, pivots):
        c = v[p]
        if c:
            v = [x - c * y for x, y in zip(v, r)]
    return tuple(v)


def coords_in_span(vec, rows, pivots):
    """Coordinates of ``vec`` in an rref basis, or None if it lies outside."""
    coords = [vec[p] for p in pivots]
    if any(reduce_mod(vec, rows, pivots)):
        return None
    return tuple(coords)


def nullspace(rows_of_matrix, ncols, field=QQ):
    """Kernel basis of the linear map given by a list of row vectors."""
    rr, pivots = rref(rows_of_matrix, field)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for r, p in zip(rr, pivots):
            if r[free]:
                v[p] = -r[free]
        basis.append(tuple(v))
    return basis
