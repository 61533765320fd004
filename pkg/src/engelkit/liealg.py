"""Structure-constant Lie algebras: validation, brackets, adjoint maps,
quotients, direct sums, restrictions and a brute-force isomorphism oracle.

Elements are plain coordinate tuples over the algebra's field; the
algebra is always passed explicitly.  Adjoint maps follow the right
action convention: ``y . ad(x) = [y, x]``, so ``ad(x)`` is the matrix
whose i-th row is [b_i, x].
"""

from __future__ import annotations

import itertools
import json
from typing import Callable, Iterable, Mapping, Optional, Sequence

from . import exactmath as xm
from .errors import (
    AlgebraMismatch,
    AntisymmetryViolation,
    BudgetExceeded,
    FieldMismatch,
    InfiniteField,
    InputError,
    JacobiViolation,
    NotAnIdeal,
    NotASubalgebra,
)
from .exactmath import Field, Matrix, Subspace


class LieAlgebra:
    """A finite-dimensional Lie algebra given by its structure constants.

    ``sc[i][j]`` is the coordinate tuple of [b_i, b_j]; the full
    antisymmetric table is stored.  Instances are immutable after
    construction and identity-hashed, which lets expensive derived data
    (lattices, family reports) be cached per algebra.
    """

    __slots__ = ("field", "dim", "labels", "sc", "_pairs", "_adrows", "_cache")

    def __init__(self, field: Field, dim: int, table, labels, validate: bool = True):
        self.field = field
        self.dim = dim
        self.sc = tuple(tuple(tuple(v) for v in row) for row in table)
        self.labels = tuple(labels)
        if len(self.labels) != dim:
            raise InputError("label count must match dimension")
        self._pairs = tuple(
            (i, j, self.sc[i][j]) for i in range(dim) for j in range(i + 1, dim) if any(self.sc[i][j])
        )
        self._adrows = tuple(
            tuple((j, self.sc[i][j]) for j in range(dim) if j != i and any(self.sc[i][j]))
            for i in range(dim)
        )
        self._cache: dict = {}
        if validate:
            self._validate()

    def _validate(self):
        n, F = self.dim, self.field
        for i in range(n):
            if any(self.sc[i][i]):
                raise AntisymmetryViolation(f"[b_{i}, b_{i}] must vanish")
            for j in range(n):
                if self.sc[i][j] != xm.vec_neg(F, self.sc[j][i]):
                    raise AntisymmetryViolation(f"sc[{i}][{j}] != -sc[{j}][{i}]")
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    res = self._jacobiator(i, j, k)
                    if any(res):
                        raise JacobiViolation((i, j, k), res)

    def _jacobiator(self, i: int, j: int, k: int) -> tuple:
        e = self.basis_vector
        acc = self.bracket_vectors(self.sc[i][j], e(k))
        acc = xm.vec_add(self.field, acc, self.bracket_vectors(self.sc[j][k], e(i)))
        return xm.vec_add(self.field, acc, self.bracket_vectors(self.sc[k][i], e(j)))

    def basis_vector(self, i: int) -> tuple:
        F = self.field
        return tuple(F.one if t == i else F.zero for t in range(self.dim))

    def zero_vector(self) -> tuple:
        return (self.field.zero,) * self.dim

    def bracket_vectors(self, x, y) -> tuple:
        if len(x) != self.dim or len(y) != self.dim:
            raise AlgebraMismatch("element length does not match algebra dimension")
        F = self.field
        add, sub, mul = F.add, F.sub, F.mul
        out = [F.zero] * self.dim
        for i, j, c in self._pairs:
            t = sub(mul(x[i], y[j]), mul(x[j], y[i]))
            if t:
                for idx, cc in enumerate(c):
                    if cc:
                        out[idx] = add(out[idx], mul(t, cc))
        return tuple(out)

    def ad_matrix(self, x) -> Matrix:
        if len(x) != self.dim:
            raise AlgebraMismatch("element length does not match algebra dimension")
        F = self.field
        add, mul = F.add, F.mul
        rows = []
        for i in range(self.dim):
            out = [F.zero] * self.dim
            for j, c in self._adrows[i]:
                t = x[j]
                if t:
                    for idx, cc in enumerate(c):
                        if cc:
                            out[idx] = add(out[idx], mul(t, cc))
            rows.append(tuple(out))
        return Matrix(F, self.dim, self.dim, tuple(rows))

    def full_space(self) -> Subspace:
        return xm.full_subspace(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return xm.zero_subspace(self.field, self.dim)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, field={self.field.name}, labels={list(self.labels)})"


def cached(L: LieAlgebra, key, compute: Callable):
    """Memoise a derived object on the algebra (successes only)."""
    cache = L._cache
    if key not in cache:
        cache[key] = compute()
    return cache[key]


def algebra_make(
    field: Field,
    dim: int,
    brackets: Mapping[tuple[int, int], Sequence] | Iterable[tuple[int, int, Sequence]],
    labels: Optional[Sequence[str]] = None,
) -> LieAlgebra:
    """Build and validate a Lie algebra from brackets on pairs i < j.

    Omitted pairs have zero bracket.  Raises AntisymmetryViolation for
    ill-formed pairs and JacobiViolation (with the witness triple) when
    the Jacobi identity fails.
    """
    if isinstance(brackets, Mapping):
        items = [(i, j, v) for (i, j), v in brackets.items()]
    else:
        items = [(i, j, v) for i, j, v in brackets]
    table = [[(field.zero,) * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for i, j, value in items:
        if not (0 <= i < dim and 0 <= j < dim):
            raise InputError(f"bracket index ({i},{j}) out of range for dim {dim}")
        coords = tuple(field.coerce(c) for c in value)
        if len(coords) != dim:
            raise InputError(f"bracket value for ({i},{j}) has length {len(coords)}, expected {dim}")
        if i == j:
            if any(coords):
                raise AntisymmetryViolation(f"[b_{i}, b_{i}] must vanish")
            continue
        if i > j:
            raise AntisymmetryViolation(f"bracket pairs must be given with i < j, got ({i},{j})")
        if (i, j) in seen:
            raise InputError(f"duplicate bracket pair ({i},{j})")
        seen.add((i, j))
        table[i][j] = coords
        table[j][i] = xm.vec_neg(field, coords)
    if labels is None:
        labels = [f"e{t}" for t in range(dim)]
    return LieAlgebra(field, dim, table, labels)


def bracket(L: LieAlgebra, x, y) -> tuple:
    return L.bracket_vectors(x, y)


def ad(L: LieAlgebra, x) -> Matrix:
    return L.ad_matrix(x)


def is_subalgebra_space(L: LieAlgebra, U: Subspace) -> bool:
    for a in range(U.dim):
        for b in range(a + 1, U.dim):
            if not U.contains(L.bracket_vectors(U.basis[a], U.basis[b])):
                return False
    return True


def is_ideal_space(L: LieAlgebra, U: Subspace) -> bool:
    for i in range(L.dim):
        e = L.basis_vector(i)
        for row in U.basis:
            if not U.contains(L.bracket_vectors(e, row)):
                return False
    return True


def quotient(L: LieAlgebra, B: Subspace) -> tuple[LieAlgebra, Callable, Callable]:
    """Quotient by an ideal, with project/lift maps.

    The quotient basis is the image of the standard vectors at B's
    non-pivot columns, so structure constants are reproducible.
    Quotienting by the zero ideal returns L itself with identity maps.
    """
    if B.ambient_dim != L.dim or B.field != L.field:
        raise AlgebraMismatch("subspace does not live in the algebra")
    if not is_ideal_space(L, B):
        raise NotAnIdeal("quotient requires an ideal")
    if B.dim == 0:
        ident = lambda v: v
        return L, ident, ident
    F = L.field
    comp = [c for c in range(L.dim) if c not in B.pivots]
    qdim = len(comp)

    def project(v):
        w = B.reduce(v)
        return tuple(w[c] for c in comp)

    def lift(w):
        out = [F.zero] * L.dim
        for c, val in zip(comp, w):
            out[c] = val
        return tuple(out)

    table = [[(F.zero,) * qdim for _ in range(qdim)] for _ in range(qdim)]
    for a in range(qdim):
        for b in range(qdim):
            table[a][b] = project(L.bracket_vectors(L.basis_vector(comp[a]), L.basis_vector(comp[b])))
    labels = [L.labels[c] for c in comp]
    Q = LieAlgebra(F, qdim, table, labels)
    # project must be a Lie homomorphism on every basis pair of L
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = project(L.sc[i][j])
            rhs = Q.bracket_vectors(project(L.basis_vector(i)), project(L.basis_vector(j)))
            if lhs != rhs:  # pragma: no cover - guards construction bugs
                raise NotAnIdeal(f"projection fails to preserve brackets on ({i},{j})")
    return Q, project, lift


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    if L1.field != L2.field:
        raise FieldMismatch("direct sum needs a common field")
    F = L1.field
    n1, n2 = L1.dim, L2.dim
    n = n1 + n2
    table = [[(F.zero,) * n for _ in range(n)] for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            table[i][j] = L1.sc[i][j] + (F.zero,) * n2
    for i in range(n2):
        for j in range(n2):
            table[n1 + i][n1 + j] = (F.zero,) * n1 + L2.sc[i][j]
    labels = list(L1.labels) + [lab + "'" for lab in L2.labels]
    return LieAlgebra(F, n, table, labels)


def restrict(L: LieAlgebra, U: Subspace) -> LieAlgebra:
    """The algebra on U's RREF basis (U must be bracket-closed)."""
    if U.ambient_dim != L.dim or U.field != L.field:
        raise AlgebraMismatch("subspace does not live in the algebra")
    if not is_subalgebra_space(L, U):
        raise NotASubalgebra("restriction requires a bracket-closed subspace")
    k = U.dim
    table = [[U.coords(L.bracket_vectors(U.basis[a], U.basis[b])) for b in range(k)] for a in range(k)]
    return LieAlgebra(L.field, k, table, [f"w{t}" for t in range(k)])


def embed_subspace(project: Callable, S: Subspace, target_dim: int, field: Field) -> Subspace:
    """Image of a subspace under a linear map given by `project`."""
    return xm.subspace_from_vectors(field, target_dim, [project(row) for row in S.basis])


# ---------------------------------------------------------------------------
# brute-force isomorphism oracle
# ---------------------------------------------------------------------------


def _series_dims(L: LieAlgebra, step) -> tuple[int, ...]:
    cur = L.full_space()
    dims = [cur.dim]
    while True:
        nxt = step(cur)
        if nxt.dim == cur.dim:
            break
        cur = nxt
        dims.append(cur.dim)
    return tuple(dims)


def _invariant_profile(L: LieAlgebra) -> tuple:
    def derived_step(U):
        vecs = [L.bracket_vectors(a, b) for a in U.basis for b in U.basis]
        return xm.subspace_from_vectors(L.field, L.dim, vecs)

    def lcs_step(U):
        vecs = [L.bracket_vectors(L.basis_vector(i), b) for i in range(L.dim) for b in U.basis]
        return xm.subspace_from_vectors(L.field, L.dim, vecs)

    center_dim = xm.left_kernel(
        xm.matrix(L.field, [sum((list(L.sc[i][j]) for j in range(L.dim)), []) for i in range(L.dim)])
    ).dim if L.dim else 0
    return (L.dim, _series_dims(L, derived_step), _series_dims(L, lcs_step), center_dim)


def iso_bruteforce(L1: LieAlgebra, L2: LieAlgebra, max_nodes: int = 10**6) -> bool:
    """Decide L1 = L2 up to isomorphism by exhaustive search (dim <= 3).

    Invariant prefilters (derived/lower-central dimension sequences,
    centre dimension) handle most mismatches; the residual search walks
    basis images with constraint propagation and raises BudgetExceeded
    after `max_nodes` visited assignments.
    """
    if L1.field != L2.field:
        raise FieldMismatch("isomorphism testing needs a common field")
    if L1.field.size() is None:
        raise InfiniteField("brute-force isomorphism testing needs a finite field")
    if L1.dim != L2.dim:
        return False
    if L1.dim > 3:
        raise BudgetExceeded("brute-force isomorphism testing is restricted to dim <= 3")
    p1, p2 = _invariant_profile(L1), _invariant_profile(L2)
    if p1 != p2:
        return False
    n = L1.dim
    if n <= 1:
        return True
    abelian = not L1._pairs
    if abelian:
        return True  # equal dimension abelian algebras
    if n == 2:
        return True  # non-abelian dim-2 algebras are all isomorphic
    return _iso_search_dim3(L1, L2, max_nodes)


def _permutations_with_derivable_third(L: LieAlgebra):
    """Basis orders of L whose first pair bracket hits the third vector."""
    for perm in itertools.permutations(range(3)):
        if L.sc[perm[0]][perm[1]][perm[2]]:
            yield perm


def _iso_search_dim3(L1: LieAlgebra, L2: LieAlgebra, max_nodes: int) -> bool:
    F = L1.field
    vectors = [v for v in itertools.product(list(F.elements()), repeat=3)]
    nonzero = [v for v in vectors if any(v)]
    nodes = 0

    def check_map(images) -> bool:
        # images[i] is the image of b_i of L1; verify all three brackets
        for i in range(3):
            for j in range(i + 1, 3):
                want = [F.zero] * 3
                for t, c in enumerate(L1.sc[i][j]):
                    if c:
                        for idx in range(3):
                            want[idx] = F.add(want[idx], F.mul(c, images[t][idx]))
                if L2.bracket_vectors(images[i], images[j]) != tuple(want):
                    return False
        return True

    def independent(rows) -> bool:
        return xm.subspace_from_vectors(F, 3, rows).dim == len(rows)

    perms = list(_permutations_with_derivable_third(L1))
    if perms:
        perm = perms[0]
        i0, i1, i2 = perm
        c2 = L1.sc[i0][i1][i2]
        inv_c2 = F.inv(c2)
        for u0 in nonzero:
            for u1 in nonzero:
                nodes += 1
                if nodes > max_nodes:
                    raise BudgetExceeded("isomorphism search budget exhausted")
                if not independent([u0, u1]):
                    continue
                w = L2.bracket_vectors(u0, u1)
                # solve [u0,u1] = a*u0 + b*u1 + c2*u2 for u2
                a, b = L1.sc[i0][i1][i0], L1.sc[i0][i1][i1]
                u2 = tuple(
                    F.mul(inv_c2, F.sub(w[idx], F.add(F.mul(a, u0[idx]), F.mul(b, u1[idx]))))
                    for idx in range(3)
                )
                if not any(u2) or not independent([u0, u1, u2]):
                    continue
                images = [None] * 3
                images[i0], images[i1], images[i2] = u0, u1, u2
                if check_map(images):
                    return True
        return False

    for u0 in nonzero:  # pragma: no cover - corpus algebras always derive the third image
        for u1 in nonzero:
            if not independent([u0, u1]):
                continue
            for u2 in nonzero:
                nodes += 1
                if nodes > max_nodes:
                    raise BudgetExceeded("isomorphism search budget exhausted")
                if not independent([u0, u1, u2]) :
                    continue
                if check_map([u0, u1, u2]):
                    return True
    return False


# ---------------------------------------------------------------------------
# JSON wire format
# ---------------------------------------------------------------------------


def algebra_to_json(L: LieAlgebra) -> dict:
    enc = L.field.scalar_to_json
    brackets = [
        {"i": i, "j": j, "value": [enc(c) for c in coords]}
        for i, j, coords in L._pairs
    ]
    return {
        "field": L.field.spec.to_json(),
        "dim": L.dim,
        "labels": list(L.labels),
        "brackets": brackets,
    }


def algebra_from_json(obj: dict) -> LieAlgebra:
    try:
        spec = xm.FieldSpec.from_json(obj["field"])
        dim = int(obj["dim"])
        labels = obj.get("labels")
        raw = obj.get("brackets", [])
        items = [(int(b["i"]), int(b["j"]), b["value"]) for b in raw]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed algebra document: {exc}") from exc
    field = xm.field_make(spec)
    return algebra_make(field, dim, items, labels=labels)


def algebra_to_json_str(L: LieAlgebra) -> str:
    return json.dumps(algebra_to_json(L), indent=2, sort_keys=True)


def algebra_from_json_str(text: str) -> LieAlgebra:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return algebra_from_json(obj)
