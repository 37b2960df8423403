"""Two-block extension of an algebra and the derivation embedding.

Given N of dimension d, the extension lives on 2d coordinates: indices
0..d-1 form the first block ("degree one"), indices d..2d-1 the second
("degree n").  Brackets multiply block degrees, and anything past degree n
is annihilated, so the only surviving products take first-block arguments
to the second block.  The twist acts blockwise.

Quasiderivations of N embed as derivations of the extension: a pair
(D, D') acts as D on the first block, as D' on the bracket-image part of
the second block, and as zero on the chosen complement U.  When N is
centerless, these embedded maps together with the center derivations of
the extension decompose its whole derivation space as a direct sum.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import NHomAlgebra, center, derived_subspace, invert, validate
from .linalg import (
    Echelon,
    Mat,
    SubspaceBasis,
    subspace_intersect,
    subspace_sum,
    unit_vector,
    zero_vector,
    extend_to_complement,
)
from .propositions import Claim, PropReport, _mat_witness, _report
from .solver import (
    GradedEndo,
    Kind,
    allowed_positions,
    in_space,
    is_homogeneous,
    qder_identity_holds,
    solve,
)


@dataclass(frozen=True)
class TExtension:
    base: NHomAlgebra
    ext: NHomAlgebra
    u_even: SubspaceBasis
    u_odd: SubspaceBasis
    derived_even: SubspaceBasis
    derived_odd: SubspaceBasis
    # projection of the base space onto the derived subspace along U
    derived_projection: Mat


def build_check(alg: NHomAlgebra) -> TExtension:
    """Construct the two-block extension and validate it end to end."""
    if not validate(alg).all_ok:
        raise ValueError("source algebra does not satisfy its axioms")
    d, n = alg.dim, alg.arity
    table = {}
    for key, val in alg.table.items():
        table[key] = zero_vector(d) + tuple(val)
    parity = alg.parity + alg.parity
    top = [tuple(row) + zero_vector(d) for row in alg.alpha.entries]
    bottom = [zero_vector(d) + tuple(row) for row in alg.alpha.entries]
    alpha = Mat.from_rows(top + bottom, cols=2 * d)
    ext = NHomAlgebra(n, 2 * d, parity, table, alpha,
                      name=f"{alg.name}^ext" if alg.name else "ext")
    if not validate(ext).all_ok:
        raise ValueError("extension failed axiom validation")

    der_even, der_odd = derived_subspace(alg)
    u_even = extend_to_complement(der_even, [i for i in range(d) if alg.parity[i] == 0])
    u_odd = extend_to_complement(der_odd, [i for i in range(d) if alg.parity[i] == 1])
    cols = list(u_even.vectors) + list(u_odd.vectors) + \
        list(der_even.vectors) + list(der_odd.vectors)
    if len(cols) != d:
        raise ValueError("complement construction did not produce a direct sum")
    change = Mat.from_rows(cols, cols=d).transpose()
    change_inv = invert(change)
    n_u = u_even.dim + u_odd.dim
    selector = Mat.from_rows(
        [zero_vector(d)] * n_u + [unit_vector(d, i) for i in range(n_u, d)], cols=d)
    projection = change @ selector @ change_inv
    return TExtension(alg, ext, u_even, u_odd, der_even, der_odd, projection)


def phi(text: TExtension, endo: GradedEndo, witness: Mat, k: int) -> GradedEndo:
    """Embed a quasiderivation witness pair as a map on the extension.

    Acts as ``endo`` on the first block, as ``witness`` on the derived part
    of the second block, and as zero on the complement part.
    """
    base = text.base
    d = base.dim
    xi = endo.xi
    if not qder_identity_holds(base, k, xi, endo, witness):
        raise ValueError("witness pair fails the quasiderivation identity")
    bottom_right = witness @ text.derived_projection
    grid = []
    for r in range(d):
        grid.append(tuple(endo.mat.entries[r]) + zero_vector(d))
    for r in range(d):
        grid.append(zero_vector(d) + tuple(bottom_right.entries[r]))
    return GradedEndo(Mat.from_rows(grid, cols=2 * d), xi)


def _witness_slack_directions(text: TExtension, xi: int) -> list[Mat]:
    """Witness perturbations invisible to phi: maps killing the derived part.

    These are exactly the degree-xi maps W with W alpha = alpha W and
    W([N,...,N]) = 0, i.e. valid second components for the zero map.
    """
    base = text.base
    d = base.dim
    pos = allowed_positions(base.parity, xi)
    posidx = {rc: m for m, rc in enumerate(pos)}
    width = len(pos)
    ech = Echelon(width)
    derived = list(text.derived_even.vectors) + list(text.derived_odd.vectors)
    for v in derived:
        for l in range(d):
            row = [0] * width
            hit = False
            for j in range(d):
                col = posidx.get((l, j))
                if col is not None and v[j]:
                    row[col] = v[j]
                    hit = True
            if hit:
                ech.add(row)
    if base.alpha != Mat.identity(d):
        a = base.alpha
        for l in range(d):
            for m in range(d):
                row = [0] * width
                for j in range(d):
                    col = posidx.get((l, j))
                    if col is not None and a.entries[j][m]:
                        row[col] += a.entries[j][m]
                    col = posidx.get((j, m))
                    if col is not None and a.entries[l][j]:
                        row[col] -= a.entries[l][j]
                if any(row):
                    ech.add(row)
    out = []
    for v in ech.nullspace_vectors():
        grid = [[0] * d for _ in range(d)]
        for (r, c), x in zip(pos, v):
            grid[r][c] = x
        out.append(Mat.from_rows(grid, cols=d))
    return out


def check_prop42(alg: NHomAlgebra, kmax: int = 2, seed: int = 20260811) -> PropReport:
    """Parity preservation, injectivity, witness independence, image in Der."""
    text = build_check(alg)
    ext = text.ext
    d2 = (2 * alg.dim) ** 2
    rng = random.Random(seed)
    claims = []
    bad_parity = bad_inject = bad_witness = bad_der = None
    for k in range(kmax + 1):
        for xi in (0, 1):
            qd = solve(alg, Kind.QDER, k, xi)
            images = []
            for g, w in zip(qd.basis, qd.witnesses):
                img = phi(text, g, w, k)
                images.append(img)
                if not is_homogeneous(ext.parity, xi, img.mat):
                    bad_parity = ((k, xi), _mat_witness(img.mat))
                if not in_space(ext, Kind.DER, k, xi, img):
                    bad_der = ((k, xi), _mat_witness(img.mat))
            stacked = SubspaceBasis.span(d2, [g.mat.flatten() for g in images])
            if stacked.dim != qd.dim:
                bad_inject = ((k, xi, qd.dim, stacked.dim), ())
            slack = _witness_slack_directions(text, xi)
            if slack:
                for g, w in zip(qd.basis, qd.witnesses):
                    noise = Mat.zero(alg.dim, alg.dim)
                    for s in slack:
                        noise = noise + s.scale(rng.randint(-3, 3))
                    other = phi(text, g, w + noise, k)
                    if other.mat != phi(text, g, w, k).mat:
                        bad_witness = ((k, xi), _mat_witness(noise))
    claims.append(Claim("42.1.parity_preserving",
                        "fail" if bad_parity else "pass", witness=bad_parity or ()))
    claims.append(Claim("42.2.injective",
                        "fail" if bad_inject else "pass", witness=bad_inject or ()))
    claims.append(Claim("42.2.witness_independent",
                        "fail" if bad_witness else "pass",
                        detail=f"seed {seed}", witness=bad_witness or ()))
    claims.append(Claim("42.3.image_in_Der",
                        "fail" if bad_der else "pass", witness=bad_der or ()))
    return _report("4.2", claims)


def check_prop43(alg: NHomAlgebra, kmax: int = 2) -> PropReport:
    """Der(ext) splits as the embedded quasiderivations plus ZDer(ext)."""
    z_even, z_odd = center(alg)
    if z_even.dim or z_odd.dim:
        claims = [
            Claim("43.center_of_ext", "skipped", detail="center of the base is nonzero"),
            Claim("43.direct_sum", "skipped", detail="center of the base is nonzero"),
        ]
        return _report("4.3", claims)
    text = build_check(alg)
    ext = text.ext
    d = alg.dim
    d2 = (2 * d) ** 2
    claims = []

    expected_even = SubspaceBasis.span(
        2 * d, [unit_vector(2 * d, d + i) for i in range(d) if alg.parity[i] == 0])
    expected_odd = SubspaceBasis.span(
        2 * d, [unit_vector(2 * d, d + i) for i in range(d) if alg.parity[i] == 1])
    ze, zo = center(ext)
    ok = (ze == expected_even and zo == expected_odd)
    claims.append(Claim("43.center_of_ext", "pass" if ok else "fail",
                        detail="center of the extension is the second block"))

    bad = None
    dims_seen = []
    for k in range(kmax + 1):
        for xi in (0, 1):
            qd = solve(alg, Kind.QDER, k, xi)
            images = [phi(text, g, w, k).mat.flatten()
                      for g, w in zip(qd.basis, qd.witnesses)]
            a_sub = SubspaceBasis.span(d2, images)
            b_sub = solve(ext, Kind.ZDER, k, xi).as_subspace(d2)
            c_sub = solve(ext, Kind.DER, k, xi).as_subspace(d2)
            dims_seen.append((k, xi, a_sub.dim, b_sub.dim, c_sub.dim))
            if subspace_intersect(a_sub, b_sub).dim != 0:
                bad = ((k, xi), "intersection is nonzero")
            if subspace_sum(a_sub, b_sub) != c_sub:
                bad = ((k, xi), "sum does not exhaust the derivation space")
    claims.append(Claim("43.direct_sum", "fail" if bad else "pass",
                        detail="; ".join(
                            f"k={k} xi={xi}: {da}+{db}={dc}"
                            for k, xi, da, db, dc in dims_seen),
                        witness=(bad,) if bad else ()))
    return _report("4.3", claims)
