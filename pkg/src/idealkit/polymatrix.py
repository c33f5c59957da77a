"""Dense matrices of polynomials: determinants, adjoints, minors, exterior powers."""

from itertools import combinations

from .polyring import Polynomial, RingMismatch


class DimensionError(ValueError):
    pass


class PolyMatrix:
    """A dense ``rows x cols`` matrix over a polynomial ring, row-major."""

    def __init__(self, ring, rows, cols, entries):
        if rows < 1 or cols < 1:
            raise DimensionError("matrix dimensions must be positive")
        entries = [ring(e) for e in entries]
        if len(entries) != rows * cols:
            raise DimensionError(f"expected {rows * cols} entries, got {len(entries)}")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, ring, rows):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        return cls(ring, len(rows), width, [e for r in rows for e in r])

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry {ij} out of range for a {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def _check(self, other):
        if not isinstance(other, PolyMatrix):
            return False
        if other.ring != self.ring:
            raise RingMismatch(f"ring mismatch: {self.ring} vs {other.ring}")
        return True

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self.entries == other.entries

    __hash__ = None

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return PolyMatrix(self.ring, self.rows, self.cols,
                          [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PolyMatrix(self.ring, self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c):
        c = self.ring(c)
        return PolyMatrix(self.ring, self.rows, self.cols, [c * a for a in self.entries])

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return self.scale(other)
        self._check(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        zero = self.ring.zero
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = r[k]
                    if a:
                        b = other.entries[k * other.cols + j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return PolyMatrix(self.ring, self.rows, other.cols, out)

    def __rmul__(self, other):
        return self.scale(other)

    def transpose(self):
        return PolyMatrix(self.ring, self.cols, self.rows,
                          [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def hconcat(self, other):
        self._check(other)
        if self.rows != other.rows:
            raise DimensionError("horizontal concatenation needs equal row counts")
        return PolyMatrix.from_rows(self.ring, [a + b for a, b in zip(self.to_rows(), other.to_rows())])

    def vconcat(self, other):
        self._check(other)
        if self.cols != other.cols:
            raise DimensionError("vertical concatenation needs equal column counts")
        return PolyMatrix(self.ring, self.rows + other.rows, self.cols, self.entries + other.entries)

    def submatrix(self, rows=None, cols=None):
        rows = range(self.rows) if rows is None else list(rows)
        cols = range(self.cols) if cols is None else list(cols)
        return PolyMatrix.from_rows(self.ring, [[self[i, j] for j in cols] for i in rows])

    def map_entries(self, fn, ring=None):
        ring = ring or self.ring
        return PolyMatrix(ring, self.rows, self.cols, [fn(e) for e in self.entries])

    def det(self):
        return det(self)

    def __str__(self):
        body = ", ".join("{" + ", ".join(str(e) for e in r) + "}" for r in self.to_rows())
        return "matrix {" + body + "}"

    def __repr__(self):
        return f"<{self.rows}x{self.cols} matrix over {self.ring}: {self}>"


def identity(ring, n):
    return PolyMatrix.identity(ring, n)


def generic_matrix(ring, first, rows, cols):
    """Matrix of consecutive variables starting at ``first``, filled column by column."""
    start = ring.var_index(first)
    if start + rows * cols > ring.ngens:
        raise ValueError(f"{ring} has too few variables for a {rows}x{cols} generic matrix")
    gens = ring.gens
    return PolyMatrix.from_rows(ring, [[gens[start + j * rows + i] for j in range(cols)]
                                       for i in range(rows)])


def det(M):
    """Determinant by cofactor expansion along rows, memoised on column subsets."""
    if M.rows != M.cols:
        raise DimensionError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    ent = M.entries
    zero = M.ring.zero
    memo = {}

    def minor(row, mask):
        # rows row..n-1 against the columns whose bits are set in mask
        if row == n:
            return M.ring.one
        hit = memo.get(mask)
        if hit is not None:
            return hit
        acc = zero
        sign = 1
        for j in range(n):
            bit = 1 << j
            if not mask & bit:
                continue
            a = ent[row * n + j]
            if a:
                sub = minor(row + 1, mask & ~bit)
                if sub:
                    term = a * sub
                    acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[mask] = acc
        return acc

    return minor(0, (1 << n) - 1)


def classical_adjoint(M):
    """Transpose of the cofactor matrix: ``M * adj(M) == det(M) * I``."""
    if M.rows != M.cols:
        raise DimensionError("adjoint of a non-square matrix")
    n = M.rows
    if n == 1:
        return PolyMatrix(M.ring, 1, 1, [1])
    out = []
    for i in range(n):
        for j in range(n):
            rows = [r for r in range(n) if r != j]
            cols = [c for c in range(n) if c != i]
            d = det(M.submatrix(rows, cols))
            out.append(d if (i + j) % 2 == 0 else -d)
    return PolyMatrix(M.ring, n, n, out)


def _check_k(k, M):
    if not 1 <= k <= min(M.rows, M.cols):
        raise ValueError(f"k={k} out of range for a {M.rows}x{M.cols} matrix")


def minors_list(k, M):
    _check_k(k, M)
    return [det(M.submatrix(r, c))
            for r in combinations(range(M.rows), k)
            for c in combinations(range(M.cols), k)]


def minors(k, M):
    from .ideals import Ideal
    return Ideal(M.ring, minors_list(k, M))


def _subsets(n, k, order):
    subs = list(combinations(range(n), k))
    if order == "colex":
        subs.sort(key=lambda s: s[::-1])
    elif order != "lex":
        raise ValueError(f"unknown subset order {order!r}")
    return subs


def exterior_power(k, M, order="colex"):
    """Matrix of ``k x k`` minors indexed by ``k``-subsets of rows and columns.

    Subsets are listed colexicographically by default ({0,1}, {0,2}, {1,2},
    {0,3}, ...), the usual convention for Pluecker coordinates; pass
    ``order="lex"`` for lexicographic order.
    """
    _check_k(k, M)
    rsets = _subsets(M.rows, k, order)
    csets = _subsets(M.cols, k, order)
    return PolyMatrix(M.ring, len(rsets), len(csets),
                      [det(M.submatrix(r, c)) for r in rsets for c in csets])


def jacobian(gens):
    """``(number of variables) x (number of polynomials)`` matrix of partial derivatives."""
    gens = list(gens)
    if not gens:
        raise ValueError("jacobian of an empty list")
    ring = gens[0].ring
    for g in gens:
        if not isinstance(g, Polynomial) or g.ring != ring:
            raise RingMismatch("jacobian entries must share one ring")
    return PolyMatrix.from_rows(ring, [[g.diff(i) for g in gens] for i in range(ring.ngens)])
