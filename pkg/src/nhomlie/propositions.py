"""Machine checks for the structural theorems about the operator spaces.

Each check returns a :class:`PropReport` whose claims are backed either by
definition-level membership (:func:`~nhomlie.solver.in_space`) or by exact
subspace containment, never by dimension counting.  Claims whose hypothesis
fails are reported as skipped, with the reason.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .algebra import NHomAlgebra, center, is_alpha_surjective, transport, validate
from .linalg import (
    Mat,
    SubspaceBasis,
    contains,
    subspace_sum,
)
from .solver import (
    GradedEndo,
    Kind,
    TUPLE_KINDS,
    alpha_twist,
    compose,
    hom_associator,
    in_space,
    jordan_product,
    omega,
    qder_identity_holds,
    solve,
    supercommutator,
)


@dataclass(frozen=True)
class Claim:
    claim_id: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""
    witness: tuple = ()


@dataclass(frozen=True)
class PropReport:
    prop: str
    claims: tuple[Claim, ...]
    dims: tuple[tuple[str, int, int, int], ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.claims)

    def claim(self, claim_id: str) -> Claim:
        for c in self.claims:
            if c.claim_id == claim_id:
                return c
        raise KeyError(claim_id)


def _mat_witness(mat: Mat) -> tuple:
    return tuple(tuple(str(x) for x in row) for row in mat.entries)


def _report(prop: str, claims: list[Claim], dims=()) -> PropReport:
    return PropReport(prop, tuple(sorted(claims, key=lambda c: c.claim_id)), tuple(dims))


def _require_valid(alg: NHomAlgebra):
    if not validate(alg).all_ok:
        raise ValueError("algebra does not satisfy its axioms")


def solved_dims(alg: NHomAlgebra, kmax: int):
    """Dimension table of every solved space up to twist power kmax."""
    out = []
    for xi in (0, 1):
        out.append((Kind.OMEGA.value, 0, xi, omega(alg, xi).dim))
        for kind in TUPLE_KINDS:
            for k in range(kmax + 1):
                out.append((kind.value, k, xi, solve(alg, kind, k, xi).dim))
    return tuple(sorted(out))


def _grades(kmax: int):
    """Pairs of (k, xi) grades whose product grade stays below the cutoff."""
    for k1, k2 in product(range(kmax + 1), repeat=2):
        if k1 + k2 > kmax:
            continue
        for x1, x2 in product((0, 1), repeat=2):
            yield k1, x1, k2, x2


def check_prop31(alg: NHomAlgebra, kmax: int = 2) -> PropReport:
    """Closure of GDer/QDer/C under the bracket and the twist; ZDer is an ideal."""
    _require_valid(alg)
    claims = []
    for kind in (Kind.GDER, Kind.QDER, Kind.C):
        bad = None
        for k1, x1, k2, x2 in _grades(kmax):
            a = solve(alg, kind, k1, x1)
            b = solve(alg, kind, k2, x2)
            for da in a.basis:
                for db in b.basis:
                    c = supercommutator(da, db)
                    if not in_space(alg, kind, k1 + k2, (x1 + x2) % 2, c):
                        bad = ((k1, x1, k2, x2), _mat_witness(c.mat))
                        break
                if bad:
                    break
            if bad:
                break
        claims.append(Claim(f"31.1.{kind.value}.bracket",
                            "fail" if bad else "pass",
                            witness=bad or ()))
        bad = None
        for k in range(kmax):
            for xi in (0, 1):
                for da in solve(alg, kind, k, xi).basis:
                    t = alpha_twist(alg, da)
                    if not in_space(alg, kind, k + 1, xi, t):
                        bad = ((k, xi), _mat_witness(t.mat))
                        break
        claims.append(Claim(f"31.1.{kind.value}.twist",
                            "fail" if bad else "pass",
                            witness=bad or ()))

    bad = None
    for k1, x1, k2, x2 in _grades(kmax):
        for da in solve(alg, Kind.DER, k1, x1).basis:
            for db in solve(alg, Kind.ZDER, k2, x2).basis:
                c = supercommutator(da, db)
                if not in_space(alg, Kind.ZDER, k1 + k2, (x1 + x2) % 2, c):
                    bad = ((k1, x1, k2, x2), _mat_witness(c.mat))
    claims.append(Claim("31.2.ZDer.ideal", "fail" if bad else "pass", witness=bad or ()))
    bad = None
    for k in range(kmax):
        for xi in (0, 1):
            for da in solve(alg, Kind.ZDER, k, xi).basis:
                t = alpha_twist(alg, da)
                if not in_space(alg, Kind.ZDER, k + 1, xi, t):
                    bad = ((k, xi), _mat_witness(t.mat))
    claims.append(Claim("31.2.ZDer.twist", "fail" if bad else "pass", witness=bad or ()))
    return _report("3.1", claims, solved_dims(alg, kmax))


def check_prop32(alg: NHomAlgebra, kmax: int = 2) -> PropReport:
    """The six inclusion statements tying Der, C, QC, QDer and GDer together."""
    _require_valid(alg)
    n = alg.arity
    claims = []

    def pair_claim(cid, kind_a, kind_b, target, op):
        bad = None
        for k1, x1, k2, x2 in _grades(kmax):
            for da in solve(alg, kind_a, k1, x1).basis:
                for db in solve(alg, kind_b, k2, x2).basis:
                    c = op(da, db)
                    if not in_space(alg, target, k1 + k2, (x1 + x2) % 2, c):
                        bad = ((k1, x1, k2, x2), _mat_witness(c.mat))
        claims.append(Claim(cid, "fail" if bad else "pass", witness=bad or ()))

    pair_claim("32.1.[Der,C]_in_C", Kind.DER, Kind.C, Kind.C, supercommutator)
    pair_claim("32.2.[QDer,QC]_in_QC", Kind.QDER, Kind.QC, Kind.QC, supercommutator)
    pair_claim("32.3.C.Der_in_Der", Kind.C, Kind.DER, Kind.DER, compose)

    bad = None
    for k in range(kmax + 1):
        for xi in (0, 1):
            for da in solve(alg, Kind.C, k, xi).basis:
                witness = da.mat.scale(n)
                if not in_space(alg, Kind.QDER, k, xi, da) or \
                        not qder_identity_holds(alg, k, xi, da, witness):
                    bad = ((k, xi), _mat_witness(da.mat))
    claims.append(Claim("32.4.C_in_QDer", "fail" if bad else "pass",
                        detail="witness n*D verified", witness=bad or ()))

    pair_claim("32.5.[QC,QC]_in_QDer", Kind.QC, Kind.QC, Kind.QDER, supercommutator)

    bad = None
    for k in range(kmax + 1):
        for xi in (0, 1):
            gens = solve(alg, Kind.QDER, k, xi).basis + solve(alg, Kind.QC, k, xi).basis
            for da in gens:
                if not in_space(alg, Kind.GDER, k, xi, da):
                    bad = ((k, xi), _mat_witness(da.mat))
    claims.append(Claim("32.6.QDer+QC_in_GDer", "fail" if bad else "pass",
                        witness=bad or ()))
    return _report("3.2", claims, solved_dims(alg, kmax))


def _qc_plus_brackets(alg: NHomAlgebra, kmax: int):
    """Graded pieces of QC + [QC, QC], as flattened-matrix subspaces."""
    d2 = alg.dim ** 2
    pieces: dict[tuple[int, int], SubspaceBasis] = {}
    for k in range(kmax + 1):
        for xi in (0, 1):
            vecs = [g.mat.flatten() for g in solve(alg, Kind.QC, k, xi).basis]
            for k1, x1, k2, x2 in _grades(kmax):
                if k1 + k2 != k or (x1 + x2) % 2 != xi:
                    continue
                for da in solve(alg, Kind.QC, k1, x1).basis:
                    for db in solve(alg, Kind.QC, k2, x2).basis:
                        vecs.append(supercommutator(da, db).mat.flatten())
            pieces[(k, xi)] = SubspaceBasis.span(d2, vecs)
    return pieces


def check_prop33(alg: NHomAlgebra, kmax: int = 2) -> PropReport:
    """QC + [QC, QC] sits inside GDer and is closed under the bracket."""
    _require_valid(alg)
    d = alg.dim
    pieces = _qc_plus_brackets(alg, kmax)
    claims = []
    bad = None
    for (k, xi), piece in sorted(pieces.items()):
        for v in piece.vectors:
            g = GradedEndo(_unflatten(d, v), xi)
            if not in_space(alg, Kind.GDER, k, xi, g):
                bad = ((k, xi), _mat_witness(g.mat))
    claims.append(Claim("33.S_in_GDer", "fail" if bad else "pass", witness=bad or ()))
    bad = None
    for k1, x1, k2, x2 in _grades(kmax):
        target = pieces[(k1 + k2, (x1 + x2) % 2)]
        for va in pieces[(k1, x1)].vectors:
            for vb in pieces[(k2, x2)].vectors:
                c = supercommutator(GradedEndo(_unflatten(d, va), x1),
                                    GradedEndo(_unflatten(d, vb), x2))
                if not contains(target, c.mat.flatten()):
                    bad = ((k1, x1, k2, x2), _mat_witness(c.mat))
    claims.append(Claim("33.S_bracket_closed", "fail" if bad else "pass",
                        witness=bad or ()))
    return _report("3.3", claims, solved_dims(alg, kmax))


def _unflatten(d: int, flat) -> Mat:
    return Mat.from_rows([flat[i * d:(i + 1) * d] for i in range(d)], cols=d)


def check_prop34(alg: NHomAlgebra, kmax: int = 2) -> PropReport:
    """[C, QC] lands in Hom(N, Z(N)) when alpha is onto; zero when Z(N) = 0."""
    _require_valid(alg)
    claims = []
    if not is_alpha_surjective(alg):
        claims.append(Claim("34.1.image_in_center", "skipped", detail="alpha not surjective"))
        claims.append(Claim("34.2.zero_when_centerless", "skipped", detail="alpha not surjective"))
        return _report("3.4", claims, solved_dims(alg, kmax))
    z_even, z_odd = center(alg)
    z_full = subspace_sum(z_even, z_odd)
    bad = None
    bad_zero = None
    for k1, x1, k2, x2 in product(range(kmax + 1), (0, 1), range(kmax + 1), (0, 1)):
        for da in solve(alg, Kind.C, k1, x1).basis:
            for db in solve(alg, Kind.QC, k2, x2).basis:
                c = supercommutator(da, db)
                for j in range(alg.dim):
                    col = c.mat.col(j)
                    if not contains(z_full, col):
                        bad = ((k1, x1, k2, x2, j), _mat_witness(c.mat))
                if not c.mat.is_zero():
                    bad_zero = ((k1, x1, k2, x2), _mat_witness(c.mat))
    claims.append(Claim("34.1.image_in_center", "fail" if bad else "pass",
                        witness=bad or ()))
    if z_full.dim == 0:
        claims.append(Claim("34.2.zero_when_centerless",
                            "fail" if bad_zero else "pass", witness=bad_zero or ()))
    else:
        claims.append(Claim("34.2.zero_when_centerless", "skipped",
                            detail="center is nonzero"))
    return _report("3.4", claims, solved_dims(alg, kmax))


def _hom_jordan_residual(alg, x: GradedEndo, y: GradedEndo, z: GradedEndo,
                         w: GradedEndo) -> Mat:
    """Cyclic associator combination that a Hom-Jordan product must kill."""
    def term(a, b, c):
        return hom_associator(alg, jordan_product(a, b),
                              alpha_twist(alg, w), alpha_twist(alg, c))

    def sgn(e):
        return -1 if (e % 2) else 1

    t1 = term(x, y, z).mat.scale(sgn(z.xi * (x.xi + w.xi)))
    t2 = term(y, z, x).mat.scale(sgn(x.xi * (y.xi + w.xi)))
    t3 = term(z, x, y).mat.scale(sgn(y.xi * (z.xi + w.xi)))
    return t1 + t2 + t3


def _random_homogeneous(rng: random.Random, basis_by_parity) -> GradedEndo | None:
    parities = [xi for xi in (0, 1) if basis_by_parity[xi]]
    if not parities:
        return None
    xi = rng.choice(parities)
    basis = basis_by_parity[xi]
    coeffs = [rng.randint(-3, 3) for _ in basis]
    if not any(coeffs):
        coeffs[rng.randrange(len(coeffs))] = 1
    acc = Mat.zero(basis[0].mat.rows, basis[0].mat.cols)
    for c, g in zip(coeffs, basis):
        if c:
            acc = acc + g.mat.scale(c)
    return GradedEndo(acc, xi)


def check_prop38(alg: NHomAlgebra, kmax: int = 2, samples: int = 40,
                 seed: int = 20260811) -> PropReport:
    """The half-anticommutator turns the commutant into a Hom-Jordan structure."""
    _require_valid(alg)
    claims = []
    basis_by_parity = {0: list(omega(alg, 0).basis), 1: list(omega(alg, 1).basis)}
    all_basis = basis_by_parity[0] + basis_by_parity[1]

    bad = None
    for da in all_basis:
        for db in all_basis:
            sign = -1 if (da.xi and db.xi) else 1
            lhs = jordan_product(da, db)
            rhs = jordan_product(db, da)
            if lhs.mat != rhs.mat.scale(sign):
                bad = ((da.xi, db.xi), _mat_witness(lhs.mat))
    claims.append(Claim("38.1.supercommutative", "fail" if bad else "pass",
                        witness=bad or ()))

    bad = None
    checked = 0
    if all_basis and len(all_basis) ** 4 <= 10 ** 4:
        for x, y, z, w in product(all_basis, repeat=4):
            if not _hom_jordan_residual(alg, x, y, z, w).is_zero():
                bad = ((x.xi, y.xi, z.xi, w.xi), _mat_witness(x.mat))
            checked += 1
    rng = random.Random(seed)
    for _ in range(samples):
        quad = [_random_homogeneous(rng, basis_by_parity) for _ in range(4)]
        if any(q is None for q in quad):
            break
        if not _hom_jordan_residual(alg, *quad).is_zero():
            bad = (tuple(q.xi for q in quad), _mat_witness(quad[0].mat))
        checked += 1
    claims.append(Claim("38.1.hom_jordan_identity", "fail" if bad else "pass",
                        detail=f"checked {checked} quadruples, seed {seed}",
                        witness=bad or ()))

    bad = None
    for k1, x1, k2, x2 in _grades(kmax):
        for da in solve(alg, Kind.QC, k1, x1).basis:
            for db in solve(alg, Kind.QC, k2, x2).basis:
                p = jordan_product(da, db)
                if not in_space(alg, Kind.QC, k1 + k2, (x1 + x2) % 2, p):
                    bad = ((k1, x1, k2, x2), _mat_witness(p.mat))
    claims.append(Claim("38.2.QC_jordan_closed", "fail" if bad else "pass",
                        witness=bad or ()))
    return _report("3.8", claims, solved_dims(alg, kmax))


def check_prop39(alg: NHomAlgebra, kmax: int = 2) -> PropReport:
    """Bracket closure of QC versus composition closure and commutativity."""
    _require_valid(alg)
    p1 = p2 = p3 = True
    for k1, x1, k2, x2 in _grades(kmax):
        for da in solve(alg, Kind.QC, k1, x1).basis:
            for db in solve(alg, Kind.QC, k2, x2).basis:
                k, xi = k1 + k2, (x1 + x2) % 2
                c = supercommutator(da, db)
                if not in_space(alg, Kind.QC, k, xi, c):
                    p1 = False
                if not in_space(alg, Kind.QC, k, xi, compose(da, db)):
                    p2 = False
                if not c.mat.is_zero():
                    p3 = False
    claims = [Claim("39.predicates", "pass",
                    detail=f"bracket_closed={p1} composition_closed={p2} "
                           f"brackets_vanish={p3}")]
    claims.append(Claim("39.1.bracket_closure_implies_composition",
                        "pass" if (not p1 or p2) else "fail",
                        detail=f"P1={p1}, P2={p2}"))
    z_even, z_odd = center(alg)
    if z_even.dim == 0 and z_odd.dim == 0:
        claims.append(Claim("39.2.centerless_equivalence",
                            "pass" if p1 == p3 else "fail",
                            detail=f"P1={p1}, P3={p3}"))
    else:
        claims.append(Claim("39.2.centerless_equivalence", "skipped",
                            detail="center is nonzero"))
    return _report("3.9", claims, solved_dims(alg, kmax))


def check_basis_change(alg: NHomAlgebra, p: Mat, kmax: int = 2) -> PropReport:
    """Every solved dimension is unchanged under an even invertible change."""
    moved = transport(alg, p)  # raises when p is odd or singular
    before = solved_dims(alg, kmax)
    after = solved_dims(moved, kmax)
    mismatches = tuple(
        (b, a) for b, a in zip(before, after) if b != a
    )
    claims = [Claim("basis_change.dims_invariant",
                    "fail" if mismatches else "pass",
                    witness=mismatches)]
    return _report("basis-change", claims, after)


def random_even_invertible(parity, rng: random.Random) -> Mat:
    """Random even basis change with small integer entries, retried to invertibility."""
    d = len(parity)
    from .algebra import invert
    while True:
        grid = [[0] * d for _ in range(d)]
        for r in range(d):
            for c in range(d):
                if parity[r] == parity[c]:
                    grid[r][c] = rng.randint(-2, 2)
        m = Mat.from_rows(grid, cols=d)
        try:
            invert(m)
        except ValueError:
            continue
        return m


ALL_PROP_CHECKS = {
    "3.1": check_prop31,
    "3.2": check_prop32,
    "3.3": check_prop33,
    "3.4": check_prop34,
    "3.8": check_prop38,
    "3.9": check_prop39,
}
