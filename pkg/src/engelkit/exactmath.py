"""Exact linear algebra over GF(p), GF(p^k) and the rationals.

Scalars are plain Python values: integers in [0, p) for prime fields,
integer codes in [0, p^k) for extension fields (the base-p digits of a
code are the coefficients of the residue polynomial, lowest degree
first) and ``fractions.Fraction`` for the rationals.  A ``Field`` object
supplies the arithmetic.  Vectors are tuples of scalars; zero testing
relies on all scalar representations being falsy exactly at zero.

Subspaces are kept in reduced row-echelon form with pivots leftmost, so
equality of subspaces is equality of their basis tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import (
    AmbientMismatch,
    BudgetExceeded,
    DivisionByZero,
    InfiniteField,
    InputError,
    NonPrimeModulus,
    ReducibleModulusPolynomial,
)

DEFAULT_ENUM_BUDGET = 10**6

# Extension fields are table driven; anything larger is out of scope.
MAX_EXTENSION_SIZE = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# field descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """Descriptor for GF(p), GF(p^k) with an explicit modulus, or Q.

    ``modulus`` lists the coefficients of a monic irreducible degree-k
    polynomial over GF(p), lowest degree first (length k+1); it is
    present exactly when k > 1.
    """

    kind: str  # "prime" | "prime-power" | "rational"
    p: Optional[int] = None
    k: int = 1
    modulus: Optional[tuple[int, ...]] = None

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec("prime", p=p)

    @staticmethod
    def prime_power(p: int, k: int, modulus: Sequence[int]) -> "FieldSpec":
        return FieldSpec("prime-power", p=p, k=k, modulus=tuple(int(c) for c in modulus))

    @staticmethod
    def rational() -> "FieldSpec":
        return FieldSpec("rational")

    def to_json(self) -> dict:
        if self.kind == "rational":
            return {"kind": "rational"}
        if self.kind == "prime":
            return {"kind": "prime", "p": self.p}
        return {"kind": "prime-power", "p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj: dict) -> "FieldSpec":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise InputError(f"not a field descriptor: {obj!r}")
        kind = obj["kind"]
        if kind == "rational":
            return FieldSpec.rational()
        if kind == "prime":
            return FieldSpec.prime(int(obj["p"]))
        if kind == "prime-power":
            return FieldSpec.prime_power(int(obj["p"]), int(obj["k"]), obj["modulus"])
        raise InputError(f"unknown field kind {kind!r}")


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p) (for modulus validation and table building)
# ---------------------------------------------------------------------------


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    # m is monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
    return _poly_trim(a)


def _poly_is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(m) - 1
    if deg < 1 or m[-1] % p != 1:
        return False
    for d in range(1, deg // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            div = list(lower) + [1]
            if not _poly_mod(m, div, p):
                return False
    return True


def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible degree-k polynomial over GF(p) in lex order."""
    for lower in itertools.product(range(p), repeat=k):
        cand = list(lower) + [1]
        if _poly_is_irreducible(cand, p):
            return tuple(cand)
    raise InputError(f"no irreducible polynomial of degree {k} over GF({p})")  # pragma: no cover


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------


class Field:
    """Arithmetic on plain-value scalars; one instance per FieldSpec."""

    spec: FieldSpec

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"<{self.name}>"

    # subclasses provide: name, zero, one, char, add, sub, mul, neg, inv,
    # size(), elements(), coerce(), scalar_to_json(), scalar_from_json(),
    # sort_key(), display()

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return not a

    def size(self) -> Optional[int]:
        raise NotImplementedError

    def elements(self):
        raise NotImplementedError


class PrimeField(Field):
    def __init__(self, spec: FieldSpec):
        if not is_prime(spec.p):
            raise NonPrimeModulus(f"{spec.p} is not prime")
        self.spec = spec
        self.p = spec.p
        self.char = spec.p
        self.name = f"GF({spec.p})"
        self.zero = 0
        self.one = 1 % spec.p

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
            raise DivisionByZero(f"inverse of 0 in {self.name}")
        return pow(a, self.p - 2, self.p)

    def size(self):
        return self.p

    def elements(self):
        return range(self.p)

    def coerce(self, v):
        if isinstance(v, int):
            return v % self.p
        if isinstance(v, Fraction) and v.denominator == 1:
            return int(v) % self.p
        raise InputError(f"cannot coerce {v!r} into {self.name}")

    def scalar_to_json(self, s):
        return s

    def scalar_from_json(self, v):
        return self.coerce(v)

    def sort_key(self, s):
        return s

    def display(self, s) -> str:
        return str(s)


class ExtensionField(Field):
    """GF(p^k) with table-driven arithmetic on integer codes 0..p^k-1."""

    def __init__(self, spec: FieldSpec):
        p, k, modulus = spec.p, spec.k, spec.modulus
        if not is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        if k < 2:
            raise InputError("extension fields need degree k >= 2; use kind 'prime' for k = 1")
        if modulus is None or len(modulus) != k + 1:
            raise InputError(f"modulus must list k+1 coefficients, got {modulus!r}")
        modulus = tuple(c % p for c in modulus)
        if modulus[-1] != 1:
            raise InputError("modulus must be monic")
        if not _poly_is_irreducible(modulus, p):
            raise ReducibleModulusPolynomial(f"{list(modulus)} is reducible over GF({p})")
        q = p**k
        if q > MAX_EXTENSION_SIZE:
            raise InputError(f"GF({p}^{k}) has {q} elements; table-driven fields are capped at {MAX_EXTENSION_SIZE}")
        self.spec = FieldSpec("prime-power", p=p, k=k, modulus=modulus)
        self.p, self.k, self.q = p, k, q
        self.char = p
        self.name = f"GF({p}^{k})"
        self.zero = 0
        self.one = 1

        coeffs = [self._code_to_coeffs(c) for c in range(q)]
        self._coeffs = coeffs
        add_t = []
        mul_t = []
        for a in range(q):
            ca = coeffs[a]
            add_t.append(tuple(self._coeffs_to_code([(x + y) % p for x, y in zip(ca, coeffs[b])]) for b in range(q)))
            row = []
            for b in range(q):
                prod = _poly_mod(_poly_mul(_poly_trim(list(ca)), _poly_trim(list(coeffs[b])), p), modulus, p)
                row.append(self._coeffs_to_code(prod + [0] * (k - len(prod))))
            mul_t.append(tuple(row))
        self._add = tuple(add_t)
        self._mul = tuple(mul_t)
        self._neg = tuple(self._coeffs_to_code([(-x) % p for x in coeffs[a]]) for a in range(q))
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    inv[a] = b
                    break
        self._inv = tuple(inv)

    def _code_to_coeffs(self, code: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(code % self.p)
            code //= self.p
        return out

    def _coeffs_to_code(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + (c % self.p)
        return code

    def coeffs(self, s: int) -> tuple[int, ...]:
        """Coefficient vector of the residue polynomial, lowest degree first."""
        return tuple(self._coeffs[s])

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.k:
            raise InputError(f"{self.name} scalars need {self.k} coefficients, got {list(coeffs)}")
        return self._coeffs_to_code(coeffs)

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self._neg[a]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self.name}")
        return self._inv[a]

    def size(self):
        return self.q

    def elements(self):
        return range(self.q)

    def coerce(self, v):
        if isinstance(v, int):
            return v % self.p  # integers embed through the prime subfield
        if isinstance(v, (list, tuple)):
            return self.from_coeffs([int(c) for c in v])
        raise InputError(f"cannot coerce {v!r} into {self.name}")

    def scalar_to_json(self, s):
        return list(self.coeffs(s))

    def scalar_from_json(self, v):
        return self.coerce(v)

    def sort_key(self, s):
        return s

    def display(self, s) -> str:
        return str(list(self.coeffs(s)))


class RationalField(Field):
    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.char = 0
        self.name = "Q"
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / a

    def size(self):
        return None

    def elements(self):
        raise InfiniteField("cannot enumerate the rationals")

    def coerce(self, v):
        if isinstance(v, (int, Fraction)):
            return Fraction(v)
        if isinstance(v, str):
            return Fraction(v)
        raise InputError(f"cannot coerce {v!r} into Q")

    def scalar_to_json(self, s):
        return int(s) if s.denominator == 1 else f"{s.numerator}/{s.denominator}"

    def scalar_from_json(self, v):
        return self.coerce(v)

    def sort_key(self, s):
        return s

    def display(self, s) -> str:
        return str(s)


_FIELD_CACHE: dict[FieldSpec, Field] = {}


def field_make(spec: FieldSpec) -> Field:
    """Build (and cache) the arithmetic handle for a field descriptor."""
    handle = _FIELD_CACHE.get(spec)
    if handle is None:
        if spec.kind == "prime":
            handle = PrimeField(spec)
        elif spec.kind == "prime-power":
            handle = ExtensionField(spec)
        elif spec.kind == "rational":
            handle = RationalField(spec)
        else:
            raise InputError(f"unknown field kind {spec.kind!r}")
        _FIELD_CACHE[spec] = handle
        _FIELD_CACHE[handle.spec] = handle
    return handle


def gf(q: int) -> Field:
    """GF(q) with the lexicographically first irreducible modulus when q = p^k."""
    p, k = q, 1
    for cand in range(2, q + 1):
        if q % cand == 0:
            p = cand
            k = 0
            while q > 1:
                if q % p:
                    raise InputError(f"{q} is not a prime power")
                q //= p
                k += 1
            break
    if k == 1:
        return field_make(FieldSpec.prime(p))
    return field_make(FieldSpec.prime_power(p, k, find_irreducible(p, k)))


def rationals() -> Field:
    return field_make(FieldSpec.rational())


# ---------------------------------------------------------------------------
# vectors and matrices
# ---------------------------------------------------------------------------


def vec_add(field: Field, u, v):
    add = field.add
    return tuple(add(a, b) for a, b in zip(u, v))


def vec_sub(field: Field, u, v):
    sub = field.sub
    return tuple(sub(a, b) for a, b in zip(u, v))


def vec_scale(field: Field, c, v):
    mul = field.mul
    return tuple(mul(c, a) for a in v)


def vec_neg(field: Field, v):
    neg = field.neg
    return tuple(neg(a) for a in v)


def zero_vector(field: Field, n: int):
    return (field.zero,) * n


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: int
    cols: int
    entries: tuple[tuple, ...]


def matrix(field: Field, rows: Sequence[Sequence]) -> Matrix:
    entries = tuple(tuple(r) for r in rows)
    ncols = len(entries[0]) if entries else 0
    if any(len(r) != ncols for r in entries):
        raise InputError("ragged matrix")
    return Matrix(field, len(entries), ncols, entries)


def identity_matrix(field: Field, n: int) -> Matrix:
    one, zero = field.one, field.zero
    return Matrix(field, n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))


def transpose(m: Matrix) -> Matrix:
    return Matrix(m.field, m.cols, m.rows, tuple(zip(*m.entries)) if m.entries else ())


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.field != b.field or a.cols != b.rows:
        raise AmbientMismatch("matrix product shape/field mismatch")
    F = a.field
    add, mul, zero = F.add, F.mul, F.zero
    bt = list(zip(*b.entries)) if b.entries else []
    out = []
    for row in a.entries:
        orow = []
        for col in bt:
            acc = zero
            for x, y in zip(row, col):
                if x and y:
                    acc = add(acc, mul(x, y))
            orow.append(acc)
        out.append(tuple(orow))
    return Matrix(F, a.rows, b.cols, tuple(out))


def mat_pow(m: Matrix, e: int) -> Matrix:
    if m.rows != m.cols:
        raise InputError("matrix power needs a square matrix")
    result = identity_matrix(m.field, m.rows)
    base = m
    while e > 0:
        if e & 1:
            result = mat_mul(result, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return result


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Unique reduced row-echelon form of m, with rank and pivot columns."""
    F = m.field
    sub, mul, inv = F.sub, F.mul, F.inv
    rows = [list(r) for r in m.entries]
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(m.cols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        lead = rows[r][c]
        if lead != F.one:
            s = inv(lead)
            rows[r] = [mul(s, x) for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [sub(x, mul(f, y)) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix(F, nrows, m.cols, tuple(tuple(x) for x in rows)), r, tuple(pivots)


# ---------------------------------------------------------------------------
# subspaces (row spaces in canonical RREF form)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    field: Field
    ambient_dim: int
    basis: tuple[tuple, ...]  # nonzero RREF rows
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def codim(self) -> int:
        return self.ambient_dim - len(self.basis)

    def reduce(self, v) -> tuple:
        """Residual of v after elimination against the basis rows."""
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient dim {self.ambient_dim}")
        F = self.field
        sub, mul = F.sub, F.mul
        w = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c:
                for i, x in enumerate(row):
                    if x:
                        w[i] = sub(w[i], mul(c, x))
        return tuple(w)

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def coords(self, v) -> tuple:
        """Coordinates of v in the RREF basis (v must lie in the subspace)."""
        if any(self.reduce(v)):
            raise AmbientMismatch("vector not in subspace")
        return tuple(v[p] for p in self.pivots)

    def linear_combination(self, coords) -> tuple:
        F = self.field
        out = [F.zero] * self.ambient_dim
        for c, row in zip(coords, self.basis):
            if c:
                add, mul = F.add, F.mul
                for i, x in enumerate(row):
                    if x:
                        out[i] = add(out[i], mul(c, x))
        return tuple(out)

    def vectors(self):
        """All vectors of the subspace (finite fields only)."""
        F = self.field
        if F.size() is None:
            raise InfiniteField("cannot enumerate a rational subspace")
        for coords in itertools.product(list(F.elements()), repeat=self.dim):
            yield self.linear_combination(coords)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={self.basis})"


def subspace_from_vectors(field: Field, ambient_dim: int, vectors: Sequence[Sequence]) -> Subspace:
    for v in vectors:
        if len(v) != ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient dim {ambient_dim}")
    if not vectors:
        return Subspace(field, ambient_dim, (), ())
    m, rank, pivots = rref(matrix(field, vectors))
    return Subspace(field, ambient_dim, m.entries[:rank], pivots)


def zero_subspace(field: Field, ambient_dim: int) -> Subspace:
    return Subspace(field, ambient_dim, (), ())


def full_subspace(field: Field, ambient_dim: int) -> Subspace:
    return Subspace(
        field,
        ambient_dim,
        identity_matrix(field, ambient_dim).entries,
        tuple(range(ambient_dim)),
    )


def _check_same_ambient(a: Subspace, b: Subspace):
    if a.field != b.field or a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("subspaces live in different ambient spaces")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    return subspace_from_vectors(a.field, a.ambient_dim, a.basis + b.basis)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: rref [[A|A],[B|0]]; rows with zero left half span A cap B."""
    _check_same_ambient(a, b)
    F = a.field
    n = a.ambient_dim
    zero_row = (F.zero,) * n
    stacked = [row + row for row in a.basis] + [row + zero_row for row in b.basis]
    if not stacked:
        return zero_subspace(F, n)
    m, rank, _ = rref(matrix(F, stacked))
    out = [row[n:] for row in m.entries[:rank] if not any(row[:n])]
    return subspace_from_vectors(F, n, out)


def subspace_contains(a: Subspace, v) -> bool:
    return a.contains(v)


def subspace_leq(a: Subspace, b: Subspace) -> bool:
    _check_same_ambient(a, b)
    if a.dim > b.dim:
        return False
    return all(b.contains(row) for row in a.basis)


def subspace_sort_key(s: Subspace):
    key = s.field.sort_key
    return (len(s.basis), tuple(tuple(key(x) for x in row) for row in s.basis))


def subspace_to_json(s: Subspace) -> dict:
    enc = s.field.scalar_to_json
    return {"dim": s.dim, "ambient": s.ambient_dim, "rows": [[enc(x) for x in row] for row in s.basis]}


def kernel(m: Matrix) -> Subspace:
    """Right kernel: all v with m . v^T = 0 (a subspace of F^cols)."""
    R, rank, pivots = rref(m)
    F = m.field
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [F.zero] * m.cols
        v[f] = F.one
        for r_idx, pc in enumerate(pivots):
            v[pc] = F.neg(R.entries[r_idx][f])
        basis.append(tuple(v))
    return subspace_from_vectors(F, m.cols, basis)


def image(m: Matrix) -> Subspace:
    """Row space of m: the image of the right action v -> v . m."""
    return subspace_from_vectors(m.field, m.cols, m.entries)


def left_kernel(m: Matrix) -> Subspace:
    """All v with v . m = 0 (a subspace of F^rows)."""
    return kernel(transpose(m))


# ---------------------------------------------------------------------------
# enumeration and square testing
# ---------------------------------------------------------------------------


def enumerate_vectors(field: Field, n: int, max_elements: int = DEFAULT_ENUM_BUDGET) -> Iterator[tuple]:
    """All q^n vectors of F^n, zero first, in lexicographic element order."""
    q = field.size()
    if q is None:
        raise InfiniteField("cannot enumerate vectors over Q")
    total = q**n
    if total > max_elements:
        raise BudgetExceeded(f"{total} vectors exceed budget {max_elements}")
    elems = list(field.elements())
    for tup in itertools.product(elems, repeat=n):
        yield tup


def enumerate_line_reps(field: Field, n: int, max_elements: int = DEFAULT_ENUM_BUDGET) -> Iterator[tuple]:
    """Canonical representatives of the (q^n - 1)/(q - 1) lines of F^n.

    Each representative is the RREF basis row of its line: zeros before
    the leading 1, arbitrary entries after it.  Every nonzero vector is
    a scalar multiple of exactly one representative.
    """
    q = field.size()
    if q is None:
        raise InfiniteField("cannot enumerate lines over Q")
    if n and (q**n - 1) // (q - 1) > max_elements:
        raise BudgetExceeded(f"line sweep of F^{n} exceeds budget {max_elements}")
    elems = list(field.elements())
    zero, one = field.zero, field.one
    for lead in range(n):
        head = (zero,) * lead + (one,)
        for tail in itertools.product(elems, repeat=n - lead - 1):
            yield head + tail


def is_square(field: Field, s) -> bool:
    """True iff some t in the field satisfies t*t = s (finite fields only)."""
    q = field.size()
    if q is None:
        raise InfiniteField("square testing is only provided over finite fields")
    if not s:
        return True
    if isinstance(field, PrimeField):
        if field.p == 2:
            return True
        return pow(s, (field.p - 1) // 2, field.p) == 1
    mul = field.mul
    return any(mul(t, t) == s for t in field.elements())
