"""Exact linear algebra over the rationals and prime fields.

Everything here is dense-on-demand Gaussian elimination with deterministic
pivoting (first nonzero entry in column order), which keeps homology
representatives reproducible.  Matrices come in as coordinate-sparse
``SparseMatrix`` objects because boundary maps are; elimination happens on
small dense rows.  Exactness is the point: ranks are compared across
characteristics, so there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import KoszulkitError, NotPrimeError
from .monomials import is_prime


class RationalField:
    """The field of rational numbers."""

    name = "QQ"
    characteristic = 0

    def of(self, x) -> Fraction:
        return Fraction(x)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """GF(p) with word-size representatives 0..p-1."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if p >= 2**31:
            raise ValueError("prime too large for word-size representatives")
        self.p = p
        self.name = f"GF({p})"
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def of(self, x) -> int:
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str):
    """Parse a field spec: "qq" or "gf:<p>"."""
    t = text.strip().lower()
    if t in ("qq", "q", "rationals"):
        return QQ
    if t.startswith("gf:"):
        return GF(int(t[3:]))
    if t.startswith("gf(") and t.endswith(")"):
        return GF(int(t[3:-1]))
    raise ValueError(f"unknown field spec {text!r}; use 'qq' or 'gf:<p>'")


class SparseMatrix:
    """Coordinate-sparse matrix; no stored zeros, no duplicate coordinates."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (r, c), v in dict(entries).items():
                self.set(r, c, v)

    def set(self, r: int, c: int, v) -> None:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"({r},{c}) outside {self.rows}x{self.cols}")
        if (r, c) in self.entries:
            raise KoszulkitError(f"duplicate coordinate ({r},{c})")
        if v:
            self.entries[(r, c)] = v

    def transpose(self) -> "SparseMatrix":
        t = SparseMatrix(self.cols, self.rows)
        for (r, c), v in self.entries.items():
            t.entries[(c, r)] = v
        return t

    def dense_rows(self, field):
        rows = [[field.zero] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = field.of(v)
        return rows

    def columns(self, field):
        """Column vectors as lists of field elements."""
        cols = [[field.zero] * self.rows for _ in range(self.cols)]
        for (r, c), v in self.entries.items():
            cols[c][r] = field.of(v)
        return cols

    def apply(self, vec, field):
        """Matrix-vector product over the field."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        out = [field.zero] * self.rows
        for (r, c), v in self.entries.items():
            x = vec[c]
            if x:
                out[r] = field.add(out[r], field.mul(field.of(v), x))
        return out


def _eliminate(rows, field):
    """In-place forward elimination; returns list of pivot column indices."""
    pivots = []
    if not rows:
        return pivots
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(matrix: SparseMatrix, field) -> int:
    rows = matrix.dense_rows(field)
    return len(_eliminate(rows, field))


def kernel_basis(matrix: SparseMatrix, field):
    """Basis of the right null space; deterministic, one vector per free column."""
    rows = matrix.dense_rows(field)
    pivots = _eliminate(rows, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vec = [field.zero] * matrix.cols
        vec[free] = field.one
        for r, pc in enumerate(pivots):
            # after full reduction rows[r] has 1 at pc and 0 at other pivots
            coeff = rows[r][free]
            if coeff:
                vec[pc] = field.neg(coeff)
        basis.append(vec)
    return basis


class RowSpace:
    """Incrementally built echelon form of a span of vectors."""

    def __init__(self, field, vectors=()):
        self.field = field
        self._rows = {}  # pivot column -> row normalized to leading 1
        for v in vectors:
            self.add(v)

    def reduce(self, vec):
        """Residue of vec modulo the current span."""
        field = self.field
        v = list(vec)
        for pc in sorted(self._rows):
            if pc >= len(v):
                break
            if v[pc]:
                f = v[pc]
                row = self._rows[pc]
                v = [field.sub(x, field.mul(f, y)) for x, y in zip(v, row)]
        return v

    def add(self, vec) -> bool:
        """Add vec to the span; True iff the rank grew."""
        field = self.field
        v = self.reduce(vec)
        for pc, x in enumerate(v):
            if x:
                inv = field.inv(x)
                self._rows[pc] = [field.mul(inv, y) for y in v]
                return True
        return False

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    @property
    def dim(self) -> int:
        return len(self._rows)


def quotient_representatives(z_vectors, b_vectors, field):
    """Vectors from z_vectors whose classes form a basis of span(Z)/span(B).

    Raises if span(B) is not contained in span(Z).
    """
    z_space = RowSpace(field, z_vectors)
    for b in b_vectors:
        if not z_space.contains(b):
            raise KoszulkitError("relation space is not contained in the cycle space")
    work = RowSpace(field, b_vectors)
    reps = []
    for z in z_vectors:
        if work.add(z):
            reps.append(list(z))
    return reps


def solve_combination(columns, target, field):
    """Coefficients expressing target as a combination of the given columns.

    Returns a list of coefficients or None when target is outside the span.
    """
    if not columns:
        return None if any(target) else []
    m = len(columns[0])
    for col in columns:
        if len(col) != m:
            raise ValueError("ragged columns")
    if len(target) != m:
        raise ValueError("dimension mismatch")
    # eliminate on the transpose augmented with bookkeeping of coefficients
    n = len(columns)
    rows = [list(col) + [field.one if i == j else field.zero for j in range(n)]
            for i, col in enumerate(columns)]
    space = RowSpace(field)
    for row in rows:
        space.add(row)
    residue = space.reduce(list(target) + [field.zero] * n)
    if any(residue[:m]):
        return None
    return [field.neg(x) for x in residue[m:]]
