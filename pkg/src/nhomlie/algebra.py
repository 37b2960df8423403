"""Structure-constant model of multiplicative n-ary Hom-Lie superalgebras.

An algebra is an arity ``n``, a Z2-graded basis e_0 .. e_{d-1}, a twist
matrix ``alpha``, and a table of bracket values on weakly increasing index
tuples.  Values on arbitrary tuples follow from the graded sign rule: each
adjacent swap of homogeneous slots multiplies by -(-1)^{|x||y|}, and a
repeated even index forces the value to vanish (a repeated odd index does
not).

The constructor only enforces the structural shape (canonical keys, index
ranges, lengths); the mathematical axioms, including the twisted Jacobi
identity, are checked by :func:`validate` so that deliberately broken
inputs can be constructed and reported on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .linalg import (
    Echelon,
    Mat,
    SubspaceBasis,
    Vector,
    as_scalar,
    is_zero_vector,
    rref,
    unit_vector,
    vec_add,
    vec_scale,
    vector,
    zero_vector,
)

EVEN = 0
ODD = 1


def canonicalize_tuple(indices: Sequence[int], parity: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sort a basis index tuple, tracking the graded sign.

    Returns ``(sorted_tuple, sign)`` with sign in {1, -1, 0}.  Each adjacent
    transposition contributes -(-1)^{pq} (so swapping two odd slots costs
    nothing, every other swap flips the sign); a repeated even index makes
    the whole bracket vanish, giving sign 0.
    """
    d = len(parity)
    idx = list(indices)
    for i in idx:
        if not 0 <= i < d:
            raise IndexError(f"basis index {i} out of range for dimension {d}")
    sign = 1
    n = len(idx)
    for i in range(n):
        for j in range(n - 1 - i):
            a, b = idx[j], idx[j + 1]
            if a > b:
                idx[j], idx[j + 1] = b, a
                if not (parity[a] and parity[b]):
                    sign = -sign
    for j in range(n - 1):
        if idx[j] == idx[j + 1] and parity[idx[j]] == EVEN:
            return tuple(idx), 0
    return tuple(idx), sign


class NHomAlgebra:
    """Multiplicative n-ary Hom-Lie superalgebra given by structure constants."""

    __slots__ = ("arity", "dim", "parity", "table", "alpha", "name",
                 "_alpha_pows", "_full_table", "_cache")

    def __init__(self, arity: int, dim: int, parity: Sequence[int],
                 table: Mapping[Sequence[int], Sequence], alpha: Mat,
                 name: str = ""):
        if arity < 2:
            raise ValueError("arity must be at least 2")
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        parity = tuple(int(p) for p in parity)
        if len(parity) != dim or any(p not in (0, 1) for p in parity):
            raise ValueError("parity vector must contain 0/1 entries, one per basis element")
        if (alpha.rows, alpha.cols) != (dim, dim):
            raise ValueError("alpha must be a dim x dim matrix")
        canon: dict[tuple[int, ...], Vector] = {}
        for key, value in table.items():
            key = tuple(int(i) for i in key)
            if len(key) != arity:
                raise ValueError(f"bracket key {key} does not have arity {arity}")
            if any(not 0 <= i < dim for i in key):
                raise ValueError(f"bracket key {key} has an index out of range")
            if any(key[i] > key[i + 1] for i in range(arity - 1)):
                raise ValueError(f"bracket key {key} is not weakly increasing")
            vec = vector(value)
            if len(vec) != dim:
                raise ValueError(f"bracket value for {key} has wrong length")
            if not is_zero_vector(vec):
                canon[key] = vec
        self.arity = arity
        self.dim = dim
        self.parity = parity
        self.table = canon
        self.alpha = alpha
        self.name = name
        self._alpha_pows: dict[int, Mat] = {0: Mat.identity(dim)}
        self._full_table: dict[tuple[int, ...], Vector] | None = None
        self._cache: dict = {}

    def __eq__(self, other):
        if not isinstance(other, NHomAlgebra):
            return NotImplemented
        return (self.arity, self.dim, self.parity, self.table, self.alpha) == \
               (other.arity, other.dim, other.parity, other.table, other.alpha)

    __hash__ = None

    def __repr__(self):
        label = self.name or "?"
        return f"NHomAlgebra({label}, n={self.arity}, dim={self.dim})"

    def tuple_parity(self, indices: Sequence[int]) -> int:
        p = 0
        for i in indices:
            p ^= self.parity[i]
        return p

    def basis_value(self, indices: Sequence[int]) -> Vector:
        """Bracket of basis elements e_{i_1}, ..., e_{i_n} in any order."""
        canon, sign = canonicalize_tuple(indices, self.parity)
        if sign == 0:
            return zero_vector(self.dim)
        val = self.table.get(canon)
        if val is None:
            return zero_vector(self.dim)
        if sign == 1:
            return val
        return tuple(-x for x in val)

    @property
    def full_table(self) -> dict[tuple[int, ...], Vector]:
        """Bracket values on all d^n ordered basis tuples (built lazily)."""
        if self._full_table is None:
            ft = {}
            for t in product(range(self.dim), repeat=self.arity):
                ft[t] = self.basis_value(t)
            self._full_table = ft
        return self._full_table

    def alpha_power(self, k: int) -> Mat:
        if k < 0:
            raise ValueError("alpha power must be nonnegative")
        pows = self._alpha_pows
        if k not in pows:
            high = max(pows)
            acc = pows[high]
            for i in range(high + 1, k + 1):
                acc = acc @ self.alpha
                pows[i] = acc
        return pows[k]


def bracket(alg: NHomAlgebra, args: Sequence[Sequence[Fraction]]) -> Vector:
    """Multilinear bracket of ``n`` coefficient vectors."""
    if len(args) != alg.arity:
        raise ValueError(f"bracket expects {alg.arity} arguments")
    d = alg.dim
    supports = []
    for a in args:
        if len(a) != d:
            raise ValueError("argument length does not match algebra dimension")
        sup = [(i, as_scalar(c)) for i, c in enumerate(a) if c != 0]
        if not sup:
            return zero_vector(d)
        supports.append(sup)
    acc = [Fraction(0)] * d
    for combo in product(*supports):
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        val = alg.basis_value(tuple(i for i, _ in combo))
        if not is_zero_vector(val):
            for j, x in enumerate(val):
                if x:
                    acc[j] += coeff * x
    return tuple(acc)


@dataclass(frozen=True)
class ValidationFailure:
    axiom: str
    witness: tuple
    residual: Vector


@dataclass(frozen=True)
class ValidationReport:
    skew_ok: bool
    jacobi_ok: bool
    multiplicative_ok: bool
    even_alpha_ok: bool
    degree_ok: bool
    failures: tuple[ValidationFailure, ...]

    @property
    def all_ok(self) -> bool:
        return not self.failures


def _canonical_tuples(dim: int, arity: int):
    def rec(start, left):
        if left == 0:
            yield ()
            return
        for i in range(start, dim):
            for rest in rec(i, left - 1):
                yield (i,) + rest
    return rec(0, arity)


def validate(alg: NHomAlgebra) -> ValidationReport:
    """Check all defining axioms on basis tuples, collecting witnesses."""
    if "validate" in alg._cache:
        return alg._cache["validate"]
    d, n = alg.dim, alg.arity
    parity = alg.parity
    failures: list[ValidationFailure] = []

    # stored-table canonical form: repeated even index must map to zero
    skew_ok = True
    for key, val in alg.table.items():
        if any(key[i] == key[i + 1] and parity[key[i]] == EVEN for i in range(n - 1)):
            skew_ok = False
            failures.append(ValidationFailure("skew", key, val))

    # degree law and evenness of alpha
    degree_ok = True
    for key, val in alg.table.items():
        want = alg.tuple_parity(key)
        bad = tuple(x if parity[j] != want else Fraction(0) for j, x in enumerate(val))
        if not is_zero_vector(bad):
            degree_ok = False
            failures.append(ValidationFailure("degree", key, bad))
    even_alpha_ok = True
    for r in range(d):
        for c in range(d):
            if parity[r] != parity[c] and alg.alpha.entries[r][c] != 0:
                even_alpha_ok = False
                failures.append(
                    ValidationFailure("even_alpha", (r, c),
                                      (alg.alpha.entries[r][c],)))

    # sign consistency of the evaluated bracket under adjacent transpositions
    ft = alg.full_table
    for t in product(range(d), repeat=n):
        base = ft[t]
        for s in range(n - 1):
            swapped = list(t)
            swapped[s], swapped[s + 1] = swapped[s + 1], swapped[s]
            factor = 1 if (parity[t[s]] and parity[t[s + 1]]) else -1
            expect = vec_scale(Fraction(factor), base)
            got = ft[tuple(swapped)]
            if got != expect:
                skew_ok = False
                failures.append(ValidationFailure(
                    "skew", (t, s), tuple(x - y for x, y in zip(got, expect))))

    # multiplicativity on canonical tuples (extends multilinearly)
    multiplicative_ok = True
    alpha_cols = [alg.alpha.col(i) for i in range(d)]
    for t in _canonical_tuples(d, n):
        lhs = alg.alpha.apply(ft[t]) if t in ft else alg.alpha.apply(alg.basis_value(t))
        rhs = bracket(alg, [alpha_cols[i] for i in t])
        if lhs != rhs:
            multiplicative_ok = False
            failures.append(ValidationFailure(
                "multiplicative", t, tuple(x - y for x, y in zip(lhs, rhs))))

    # twisted Jacobi identity on all d^(2n-1) pairs of basis tuples
    jacobi_ok = True
    for xs in product(range(d), repeat=n - 1):
        px = alg.tuple_parity(xs)
        ax = [alpha_cols[i] for i in xs]
        for ys in product(range(d), repeat=n):
            inner = ft[ys]
            lhs = bracket(alg, ax + [inner])
            rhs = [Fraction(0)] * d
            pprefix = 0
            for i in range(n):
                plug = ft[xs + (ys[i],)]
                if not is_zero_vector(plug):
                    args = [alpha_cols[j] for j in ys[:i]] + [plug] + \
                           [alpha_cols[j] for j in ys[i + 1:]]
                    term = bracket(alg, args)
                    if (px & pprefix) == 1:
                        term = vec_scale(Fraction(-1), term)
                    rhs = list(vec_add(rhs, term))
                pprefix ^= parity[ys[i]]
            if lhs != tuple(rhs):
                jacobi_ok = False
                failures.append(ValidationFailure(
                    "jacobi", (xs, ys), tuple(x - y for x, y in zip(lhs, rhs))))

    report = ValidationReport(skew_ok, jacobi_ok, multiplicative_ok,
                              even_alpha_ok, degree_ok, tuple(failures))
    alg._cache["validate"] = report
    return report


def center(alg: NHomAlgebra) -> tuple[SubspaceBasis, SubspaceBasis]:
    """Per-parity bases of {x : [x, y_2, ..., y_n] = 0 for all y}."""
    key = "center"
    if key in alg._cache:
        return alg._cache[key]
    d, n = alg.dim, alg.arity
    ft = alg.full_table
    out = []
    for par in (EVEN, ODD):
        idxs = [i for i in range(d) if alg.parity[i] == par]
        if not idxs:
            out.append(SubspaceBasis.zero(d))
            continue
        ech = Echelon(len(idxs))
        for rest in product(range(d), repeat=n - 1):
            for l in range(d):
                row = [ft[(i,) + rest][l] for i in idxs]
                if any(row):
                    ech.add(row)
        vecs = []
        for v in ech.nullspace_vectors():
            full = [Fraction(0)] * d
            for pos, i in enumerate(idxs):
                full[i] = v[pos]
            vecs.append(tuple(full))
        out.append(SubspaceBasis.span(d, vecs))
    result = (out[0], out[1])
    alg._cache[key] = result
    return result


def derived_subspace(alg: NHomAlgebra) -> tuple[SubspaceBasis, SubspaceBasis]:
    """Per-parity span of all brackets of basis elements."""
    key = "derived"
    if key in alg._cache:
        return alg._cache[key]
    d = alg.dim
    by_parity = {EVEN: [], ODD: []}
    for t, val in alg.table.items():
        by_parity[alg.tuple_parity(t)].append(val)
    result = (SubspaceBasis.span(d, by_parity[EVEN]),
              SubspaceBasis.span(d, by_parity[ODD]))
    alg._cache[key] = result
    return result


def alpha_power(alg: NHomAlgebra, k: int) -> Mat:
    return alg.alpha_power(k)


def is_alpha_surjective(alg: NHomAlgebra) -> bool:
    return rref(alg.alpha).rank == alg.dim


def transport(alg: NHomAlgebra, p: Mat) -> NHomAlgebra:
    """Conjugate the structure through an even invertible basis change.

    New basis f_i = sum_j p[j][i] e_j; the bracket table and alpha are
    rewritten in the f-coordinates.
    """
    d, n = alg.dim, alg.arity
    if (p.rows, p.cols) != (d, d):
        raise ValueError("basis-change matrix has wrong shape")
    for r in range(d):
        for c in range(d):
            if alg.parity[r] != alg.parity[c] and p.entries[r][c] != 0:
                raise ValueError("basis-change matrix must be even")
    p_inv = invert(p)
    cols = [p.col(i) for i in range(d)]
    new_table = {}
    for t in _canonical_tuples(d, n):
        val = bracket(alg, [cols[i] for i in t])
        if not is_zero_vector(val):
            new_table[t] = p_inv.apply(val)
    new_alpha = p_inv @ alg.alpha @ p
    return NHomAlgebra(n, d, alg.parity, new_table, new_alpha,
                       name=f"{alg.name}~" if alg.name else "")


def invert(m: Mat) -> Mat:
    """Exact inverse; raises ValueError when singular."""
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    aug = Mat.from_rows(
        [tuple(m.entries[i]) + unit_vector(n, i) for i in range(n)],
        cols=2 * n,
    )
    res = rref(aug)
    if res.pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    inv_rows = [row[n:] for row in res.reduced.entries[:n]]
    return Mat.from_rows(inv_rows, cols=n)
