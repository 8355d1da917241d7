"""Exact linear algebra over Q and F_p.

Morphisms between finite-dimensional spaces are stored as sparse column
dictionaries: ``cols[j]`` maps row index to a nonzero scalar, so that
``f @ g`` is composition ``f o g``.  Tensor products use the row-major
basis ordering with the left factor major, i.e. ``e_a (x) e_b`` has index
``a * dim_right + b``; this is the ordering of ``numpy.kron``.

Scalars are plain Python numbers.  Over Q they are ``int`` or
``fractions.Fraction`` (a fraction with denominator 1 is always stored as
an ``int``); over F_p they are ints in ``range(p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence


class DimensionError(ValueError):
    pass


class NotIdempotent(ValueError):
    pass


class FieldMismatch(ValueError):
    pass


class InconsistentSystem(ValueError):
    pass


# --------------------------------------------------------------------------
# fields


class Rationals:
    name = "Q"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def norm(self, x):
        if type(x) is Fraction and x.denominator == 1:
            return x.numerator
        return x

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x.strip())
        elif isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise TypeError(f"cannot coerce {x!r} to QQ")
        return self.norm(x)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        if type(x) is int:
            return self.norm(Fraction(1, x))
        return self.norm(1 / x)

    def format(self, x) -> str:
        return str(x)

    def descriptor(self):
        return "Q"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"{p!r} is not a prime")
        self.p = p
        self.name = f"F{p}"

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def norm(self, x):
        return x % self.p

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in {self!r}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"cannot coerce {x!r} to {self!r}")
        return x % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(x, -1, self.p)

    def format(self, x) -> str:
        return str(x % self.p)

    def descriptor(self):
        return {"Fp": self.p}


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_descriptor(desc):
    if desc == "Q":
        return QQ
    if isinstance(desc, dict) and set(desc) == {"Fp"}:
        return GF(int(desc["Fp"]))
    raise ValueError(f"unknown field descriptor {desc!r}")


# --------------------------------------------------------------------------
# morphisms


def _clean(col: dict, field) -> dict:
    out = {}
    for i, v in col.items():
        v = field.norm(v)
        if v:
            out[i] = v
    return out


class Mor:
    """A linear map ``src -> dst`` given by an exact ``dst x src`` matrix."""

    __slots__ = ("src", "dst", "field", "_cols", "_hash")

    def __init__(self, dst: int, src: int, cols: dict | None = None, field=QQ, _trusted=False):
        if dst < 0 or src < 0:
            raise DimensionError(f"negative dimension {dst}x{src}")
        self.src = src
        self.dst = dst
        self.field = field
        self._hash = None
        if cols is None:
            cols = {}
        if _trusted:
            self._cols = cols
            return
        clean = {}
        for j, col in cols.items():
            if not 0 <= j < src:
                raise DimensionError(f"column {j} outside source dim {src}")
            col = _clean(col, field)
            for i in col:
                if not 0 <= i < dst:
                    raise DimensionError(f"row {i} outside target dim {dst}")
            if col:
                clean[j] = col
        self._cols = clean

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field=QQ, src: int | None = None) -> "Mor":
        dst = len(rows)
        if src is None:
            if dst == 0:
                raise DimensionError("source dimension needed for an empty row list")
            src = len(rows[0])
        cols: dict = {}
        for i, row in enumerate(rows):
            if len(row) != src:
                raise DimensionError(f"row {i} has length {len(row)}, expected {src}")
            for j, v in enumerate(row):
                v = field(v)
                if v:
                    cols.setdefault(j, {})[i] = v
        return cls(dst, src, cols, field, _trusted=True)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field=QQ, dst: int | None = None) -> "Mor":
        src = len(columns)
        if dst is None:
            if src == 0:
                raise DimensionError("target dimension needed for an empty column list")
            dst = len(columns[0])
        return cls.from_rows([[c[i] for c in columns] for i in range(dst)], field, src=src) \
            if dst else cls(0, src, {}, field)

    @classmethod
    def identity(cls, n: int, field=QQ) -> "Mor":
        return cls(n, n, {j: {j: 1} for j in range(n)}, field, _trusted=True)

    @classmethod
    def zero(cls, dst: int, src: int, field=QQ) -> "Mor":
        return cls(dst, src, {}, field, _trusted=True)

    # access -------------------------------------------------------------

    @property
    def shape(self):
        return (self.dst, self.src)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.dst and 0 <= j < self.src):
            raise IndexError(ij)
        return self._cols.get(j, {}).get(i, 0)

    def column(self, j: int) -> dict:
        return dict(self._cols.get(j, {}))

    def items(self):
        """Nonzero entries as ``((row, col), value)`` in column-major order."""
        for j in sorted(self._cols):
            col = self._cols[j]
            for i in sorted(col):
                yield (i, j), col[i]

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self._cols.values())

    def to_rows(self) -> list[list]:
        rows = [[0] * self.src for _ in range(self.dst)]
        for j, col in self._cols.items():
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def is_zero(self) -> bool:
        return not self._cols

    def is_identity(self) -> bool:
        return self.src == self.dst and self == Mor.identity(self.src, self.field)

    # algebra ------------------------------------------------------------

    def _check_field(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __matmul__(self, f: "Mor") -> "Mor":
        return compose(self, f)

    def __add__(self, other: "Mor") -> "Mor":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        cols = {j: dict(c) for j, c in self._cols.items()}
        for j, c in other._cols.items():
            acc = cols.setdefault(j, {})
            for i, v in c.items():
                acc[i] = acc.get(i, 0) + v
        return Mor(self.dst, self.src, cols, self.field)

    def __neg__(self) -> "Mor":
        return self.scale(-1)

    def __sub__(self, other: "Mor") -> "Mor":
        return self + (-other)

    def scale(self, a) -> "Mor":
        a = self.field(a)
        return Mor(self.dst, self.src,
                   {j: {i: a * v for i, v in c.items()} for j, c in self._cols.items()},
                   self.field)

    @property
    def T(self) -> "Mor":
        cols: dict = {}
        for j, c in self._cols.items():
            for i, v in c.items():
                cols.setdefault(i, {})[j] = v
        return Mor(self.src, self.dst, cols, self.field, _trusted=True)

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Mor):
            return NotImplemented
        return (self.shape == other.shape and self.field == other.field
                and self._cols == other._cols)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dst, self.src, self.field,
                               tuple((ij, v) for ij, v in self.items())))
        return self._hash

    def first_difference(self, other: "Mor"):
        """First ``(row, col)`` where the matrices differ, in row-major order, or None."""
        if self.shape != other.shape:
            raise DimensionError(f"cannot compare {self.shape} and {other.shape}")
        diff = (self - other)._cols
        if not diff:
            return None
        return min((i, j) for j, c in diff.items() for i in c)

    def __repr__(self):
        if self.dst * self.src <= 64:
            body = ", ".join("[" + ", ".join(self.field.format(v) for v in r) + "]"
                             for r in self.to_rows())
            return f"Mor({self.dst}<-{self.src}, [{body}])"
        return f"Mor({self.dst}<-{self.src}, nnz={self.nnz})"


def compose(g: Mor, f: Mor) -> Mor:
    """``g o f``."""
    if f.dst != g.src:
        raise DimensionError(f"cannot compose: f has target {f.dst}, g has source {g.src}")
    g._check_field(f)
    norm = f.field.norm
    gcols = g._cols
    out = {}
    for k, fcol in f._cols.items():
        acc: dict = {}
        for j, a in fcol.items():
            gc = gcols.get(j)
            if gc is None:
                continue
            for i, b in gc.items():
                acc[i] = acc.get(i, 0) + b * a
        col = {}
        for i, v in acc.items():
            v = norm(v)
            if v:
                col[i] = v
        if col:
            out[k] = col
    return Mor(g.dst, f.src, out, f.field, _trusted=True)


def chain(*fs: Mor) -> Mor:
    """``chain(f1, f2, ..., fk) = f1 o f2 o ... o fk``."""
    return reduce(compose, fs)


def kron(f: Mor, g: Mor) -> Mor:
    f._check_field(g)
    norm = f.field.norm
    gd, gs = g.dst, g.src
    out = {}
    for a, fc in f._cols.items():
        for b, gc in g._cols.items():
            col = {}
            for r1, v1 in fc.items():
                base = r1 * gd
                for r2, v2 in gc.items():
                    col[base + r2] = norm(v1 * v2)
            out[a * gs + b] = col
    return Mor(f.dst * gd, f.src * gs, out, f.field, _trusted=True)


def tensor(*fs: Mor) -> Mor:
    if not fs:
        raise ValueError("tensor of nothing; use identity(1)")
    return reduce(kron, fs)


def identity(n: int, field=QQ) -> Mor:
    return Mor.identity(n, field)


def zero(dst: int, src: int, field=QQ) -> Mor:
    return Mor.zero(dst, src, field)


def swap(m: int, n: int, field=QQ) -> Mor:
    """The symmetric braiding ``c_{m,n}: m (x) n -> n (x) m``."""
    return Mor(n * m, m * n, {a * n + b: {b * m + a: 1} for a in range(m) for b in range(n)},
               field, _trusted=True)


def direct_sum(*fs: Mor) -> Mor:
    field = fs[0].field
    cols = {}
    r0 = c0 = 0
    for f in fs:
        for j, c in f._cols.items():
            cols[c0 + j] = {r0 + i: v for i, v in c.items()}
        r0 += f.dst
        c0 += f.src
    return Mor(r0, c0, cols, field, _trusted=True)


def is_idempotent(e: Mor) -> bool:
    return e.src == e.dst and e @ e == e


# --------------------------------------------------------------------------
# elimination


def _echelon(vectors: Iterable[dict], field):
    """Incremental sparse elimination.

    Returns ``pivots: {col: row}`` where every stored row has leading
    coefficient 1 at ``col`` (its smallest key).
    """
    norm, inv = field.norm, field.inv
    pivots: dict = {}
    for vec in vectors:
        row = {k: v for k, v in vec.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                a = inv(row[c])
                pivots[c] = {k: norm(v * a) for k, v in row.items()}
                break
            a = row[c]
            for k, v in piv.items():
                w = norm(row.get(k, 0) - a * v)
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
    return pivots


def _reduce_fully(pivots: dict, field) -> dict:
    """Back-substitute a semi-echelon pivot table into reduced row echelon form."""
    norm = field.norm
    order = sorted(pivots)
    for c in reversed(order):
        prow = pivots[c]
        for c2 in order:
            if c2 >= c:
                break
            r = pivots[c2]
            a = r.get(c)
            if a:
                for k, v in prow.items():
                    w = norm(r.get(k, 0) - a * v)
                    if w:
                        r[k] = w
                    else:
                        r.pop(k, None)
    return pivots


def rref(f: Mor):
    """Reduced row echelon form of ``f``: ``(rows, pivot_columns)``.

    ``rows`` is a list of sparse row dicts, one per pivot, in pivot order.
    """
    rows: dict = {}
    for j, c in f._cols.items():
        for i, v in c.items():
            rows.setdefault(i, {})[j] = v
    pivots = _reduce_fully(_echelon((rows[i] for i in sorted(rows)), f.field), f.field)
    order = sorted(pivots)
    return [pivots[c] for c in order], order


def rank(f: Mor) -> int:
    # column space and row space have equal dimension; columns are stored directly
    return len(_echelon(f._cols.values(), f.field))


def kernel(f: Mor) -> Mor:
    """Inclusion ``K -> src`` of the standard null-space basis of ``f``.

    Basis vector ``k`` has a 1 at the ``k``-th free column and zeros at the
    other free columns.
    """
    return _nullspace(f)[0]


def _nullspace(f: Mor):
    rows, piv = rref(f)
    pivset = set(piv)
    free = [j for j in range(f.src) if j not in pivset]
    cols = {}
    for k, fj in enumerate(free):
        col = {fj: 1}
        for r, pc in zip(rows, piv):
            v = r.get(fj)
            if v:
                col[pc] = f.field.norm(-v)
        cols[k] = col
    return Mor(f.src, len(free), cols, f.field, _trusted=True), free


def solve(a: Mor, b: Mor) -> Mor:
    """The unique-or-canonical ``x`` with ``a @ x == b``.

    Free variables are set to zero.  Raises ``InconsistentSystem`` when no
    solution exists.
    """
    if a.dst != b.dst:
        raise DimensionError(f"solve: a has target {a.dst}, b has target {b.dst}")
    a._check_field(b)
    aug = hstack(a, b)
    rows, piv = rref(aug)
    for c in piv:
        if c >= a.src:
            raise InconsistentSystem("right-hand side outside the column space")
    cols: dict = {}
    for r, pc in zip(rows, piv):
        for k, v in r.items():
            if k >= a.src:
                cols.setdefault(k - a.src, {})[pc] = v
    return Mor(a.src, b.src, cols, a.field, _trusted=True)


def hstack(a: Mor, b: Mor) -> Mor:
    """Horizontal block matrix ``[a | b]``."""
    cols = {j: dict(c) for j, c in a._cols.items()}
    for j, c in b._cols.items():
        cols[a.src + j] = dict(c)
    return Mor(a.dst, a.src + b.src, cols, a.field, _trusted=True)


def vstack(a: Mor, b: Mor) -> Mor:
    cols = {j: dict(c) for j, c in a._cols.items()}
    for j, c in b._cols.items():
        col = cols.setdefault(j, {})
        for i, v in c.items():
            col[a.dst + i] = v
    return Mor(a.dst + b.dst, a.src, cols, a.field, _trusted=True)


# --------------------------------------------------------------------------
# splittings, equalizers, coequalizers


@dataclass(frozen=True)
class SplitIdempotent:
    """``e = i @ p`` with ``p @ i = id``."""

    e: Mor
    p: Mor
    i: Mor

    @property
    def ambient(self) -> int:
        return self.e.src

    @property
    def rank(self) -> int:
        return self.p.dst


def split_idempotent(e: Mor) -> SplitIdempotent:
    if e.src != e.dst:
        raise DimensionError(f"idempotent must be square, got {e.shape}")
    if e @ e != e:
        raise NotIdempotent(f"e o e != e (first difference at {(e @ e).first_difference(e)})")
    rows, piv = rref(e)
    i = Mor(e.dst, len(piv), {k: dict(e._cols[c]) for k, c in enumerate(piv)}, e.field,
            _trusted=True)
    p_cols: dict = {}
    for k, r in enumerate(rows):
        for j, v in r.items():
            p_cols.setdefault(j, {})[k] = v
    p = Mor(len(piv), e.src, p_cols, e.field, _trusted=True)
    return SplitIdempotent(e, p, i)


@dataclass(frozen=True)
class EqualizerDatum:
    """``i: E -> src`` with ``f @ i == g @ i``; ``p`` is a retraction, ``p @ i = id``."""

    i: Mor
    p: Mor

    @property
    def dim(self) -> int:
        return self.i.src

    def factor(self, t: Mor) -> Mor:
        """The unique ``t'`` with ``i @ t' == t`` for ``t`` equalizing the pair."""
        return self.p @ t


def equalizer(f: Mor, g: Mor) -> EqualizerDatum:
    if f.shape != g.shape:
        raise DimensionError(f"equalizer of non-parallel pair {f.shape}, {g.shape}")
    i, free = _nullspace(f - g)
    p = Mor(len(free), f.src, {c: {k: 1} for k, c in enumerate(free)}, f.field, _trusted=True)
    return EqualizerDatum(i, p)


@dataclass(frozen=True)
class CoequalizerDatum:
    """Cokernel projection ``n: dst -> Q`` of ``f - g`` with a section ``s``.

    ``n @ s = id``; any ``t`` with ``t @ f == t @ g`` factors as ``t = (t @ s) @ n``.
    """

    n: Mor
    s: Mor

    @property
    def src(self) -> int:
        return self.n.src

    @property
    def dim(self) -> int:
        return self.n.dst

    def factor(self, t: Mor) -> Mor:
        return t @ self.s


def coequalizer(f: Mor, g: Mor) -> CoequalizerDatum:
    if f.shape != g.shape:
        raise DimensionError(f"coequalizer of non-parallel pair {f.shape}, {g.shape}")
    d = f - g
    # left null space of d = null space of d^T; quotient basis = free coordinates
    k, free = _nullspace(d.T)
    n = k.T
    s = Mor(d.dst, len(free), {k_: {c: 1} for k_, c in enumerate(free)}, f.field, _trusted=True)
    return CoequalizerDatum(n, s)


def is_coequalizer(n: Mor, f: Mor, g: Mor) -> bool:
    """Whether ``n`` is a coequalizer of ``(f, g)``: it coequalizes, is onto, and has the right size."""
    if n @ f != n @ g:
        return False
    if rank(n) != n.dst:
        return False
    return n.dst == f.dst - rank(f - g)


def is_equalizer(i: Mor, f: Mor, g: Mor) -> bool:
    if f @ i != g @ i:
        return False
    if rank(i) != i.src:
        return False
    return i.src == f.src - rank(f - g)
