import random
from fractions import Fraction

import pytest

from nhomlie.fixtures import FIXTURES, abelian2, aff1, homaff1, super2, threeLie4
from nhomlie.linalg import Mat, contains, is_subspace_of
from nhomlie.solver import (
    GradedEndo,
    Kind,
    allowed_positions,
    alpha_twist,
    hom_associator,
    in_space,
    jordan_product,
    omega,
    qder_identity_holds,
    solve,
    supercommutator,
)

F = Fraction


def endo(rows, xi=0):
    return GradedEndo(Mat.from_rows(rows), xi)


class TestOmega:
    def test_identity_twist_gives_all_even_maps(self):
        assert omega(aff1(), 0).dim == 4
        assert omega(aff1(), 1).dim == 0  # no odd part

    def test_distinct_eigenvalues_give_diagonals(self):
        sp = omega(homaff1(), 0)
        assert sp.dim == 2
        for g in sp.basis:
            assert g.mat.entries[0][1] == 0 and g.mat.entries[1][0] == 0

    def test_super2_odd_commutant(self):
        assert omega(super2(), 1).dim == 2


class TestSolveDimensions:
    def test_abelian_derivations_full_at_every_level(self):
        alg = abelian2()
        for k in range(3):
            assert solve(alg, Kind.DER, k, 0).dim == 4

    def test_aff1_der_basis(self):
        sp = solve(aff1(), Kind.DER, 0, 0)
        assert sp.dim == 2
        mats = {g.mat.entries for g in sp.basis}
        assert Mat.from_rows([[0, 0], [1, 0]]).entries in mats  # e0 -> e1
        assert Mat.from_rows([[0, 0], [0, 1]]).entries in mats  # e1 -> e1

    def test_homaff1_twisted_derivations(self):
        sp = solve(homaff1(), Kind.DER, 1, 0)
        assert sp.dim == 1
        assert sp.basis[0].mat == Mat.from_rows([[0, 0], [0, 1]])

    def test_aff1_centroid_is_scalars(self):
        sp = solve(aff1(), Kind.C, 0, 0)
        assert sp.dim == 1
        assert sp.basis[0].mat == Mat.identity(2)

    def test_aff1_quasiderivations_everything(self):
        assert solve(aff1(), Kind.QDER, 0, 0).dim == 4

    def test_super2_odd_derivation(self):
        sp = solve(super2(), Kind.DER, 0, 1)
        assert sp.dim == 1
        assert sp.basis[0].mat == Mat.from_rows([[0, 0], [1, 0]])

    def test_aff1_center_derivations_vanish(self):
        assert solve(aff1(), Kind.ZDER, 0, 0).dim == 0

    def test_threeLie4_derivations(self):
        assert solve(threeLie4(), Kind.DER, 0, 0).dim == 6


class TestWitnesses:
    def test_qder_witnesses_satisfy_identity(self):
        for name in ("aff1", "super2", "threeLie4", "homaff1"):
            alg = FIXTURES[name]()
            for k in (0, 1):
                for xi in (0, 1):
                    sp = solve(alg, Kind.QDER, k, xi)
                    assert len(sp.witnesses) == sp.dim
                    for g, w in zip(sp.basis, sp.witnesses):
                        assert qder_identity_holds(alg, k, xi, g, w)

    def test_gder_witness_count(self):
        sp = solve(threeLie4(), Kind.GDER, 0, 0)
        assert all(len(ws) == 3 for ws in sp.witnesses)


class TestInSpace:
    def test_identity_is_centroid_of_aff1(self):
        assert in_space(aff1(), Kind.C, 0, 0, endo([[1, 0], [0, 1]]))

    def test_zero_map_in_everything(self):
        alg = super2()
        for kind in Kind:
            for xi in (0, 1):
                z = GradedEndo(Mat.zero(2, 2), xi)
                assert in_space(alg, kind, 0, xi, z)

    def test_projection_is_not_derivation(self):
        assert not in_space(aff1(), Kind.DER, 0, 0, endo([[1, 0], [0, 0]]))

    def test_rejects_inhomogeneous(self):
        with pytest.raises(ValueError):
            in_space(super2(), Kind.DER, 0, 0, endo([[0, 1], [1, 0]]))

    def test_solver_and_membership_agree(self):
        rng = random.Random(7)
        for name, build in FIXTURES.items():
            alg = build()
            for kind in (Kind.DER, Kind.ZDER, Kind.C, Kind.QC, Kind.QDER, Kind.GDER):
                for xi in (0, 1):
                    sp = solve(alg, kind, 0, xi)
                    for g in sp.basis:
                        assert in_space(alg, kind, 0, xi, g), (name, kind, xi)
                    # random homogeneous maps outside the span must fail
                    pos = allowed_positions(alg.parity, xi)
                    span = sp.as_subspace(alg.dim ** 2)
                    if not pos or span.dim == len(pos):
                        continue
                    found = 0
                    for _ in range(50):
                        grid = [[0] * alg.dim for _ in range(alg.dim)]
                        for r, c in pos:
                            grid[r][c] = rng.randint(-3, 3)
                        cand = Mat.from_rows(grid, cols=alg.dim)
                        if contains(span, cand.flatten()):
                            continue
                        found += 1
                        assert not in_space(alg, kind, 0, xi, GradedEndo(cand, xi)), \
                            (name, kind, xi)
                        if found >= 3:
                            break
                    assert found > 0


class TestTower:
    @pytest.mark.parametrize("name", sorted(FIXTURES))
    def test_tower_inclusions(self, name):
        alg = FIXTURES[name]()
        d2 = alg.dim ** 2
        for k in range(3):
            for xi in (0, 1):
                chain = [solve(alg, kd, k, xi).as_subspace(d2)
                         for kd in (Kind.ZDER, Kind.DER, Kind.QDER, Kind.GDER)]
                chain.append(omega(alg, xi).as_subspace(d2))
                for small, big in zip(chain, chain[1:]):
                    assert is_subspace_of(small, big)


class TestGrading:
    def test_bracket_of_solutions_lands_in_higher_grade(self):
        for name in ("aff1", "homaff1", "super2"):
            alg = FIXTURES[name]()
            d2 = alg.dim ** 2
            for kind in (Kind.GDER, Kind.QDER, Kind.C):
                for k, s in ((0, 0), (0, 1), (1, 1)):
                    for xi, eta in ((0, 0), (0, 1), (1, 0), (1, 1)):
                        target = solve(alg, kind, k + s, (xi + eta) % 2).as_subspace(d2)
                        for da in solve(alg, kind, k, xi).basis:
                            for db in solve(alg, kind, s, eta).basis:
                                c = supercommutator(da, db)
                                assert contains(target, c.mat.flatten())

    def test_twist_raises_the_level(self):
        for name in ("homaff1", "aff1", "super2"):
            alg = FIXTURES[name]()
            for kind in (Kind.DER, Kind.ZDER, Kind.C):
                for k in (0, 1):
                    for xi in (0, 1):
                        for g in solve(alg, kind, k, xi).basis:
                            assert in_space(alg, kind, k + 1, xi, alpha_twist(alg, g))


class TestEndoOperations:
    def test_even_self_commutator_vanishes(self):
        d = endo([[1, 2], [3, 4]])
        assert supercommutator(d, d).mat.is_zero()

    def test_odd_self_commutator_is_twice_square(self):
        d = endo([[0, 1], [2, 0]], xi=1)
        sc = supercommutator(d, d)
        assert sc.xi == 0
        assert sc.mat == (d.mat @ d.mat).scale(2)

    def test_commuting_diagonals(self):
        a = endo([[1, 0], [0, 2]])
        b = endo([[3, 0], [0, 5]])
        assert supercommutator(a, b).mat.is_zero()

    def test_jordan_square_of_even(self):
        d = endo([[1, 2], [0, 1]])
        assert jordan_product(d, d).mat == d.mat @ d.mat

    def test_jordan_identity_element(self):
        e = endo([[1, 2], [3, 4]])
        assert jordan_product(endo([[1, 0], [0, 1]]), e).mat == e.mat

    def test_jordan_supercommutative(self):
        a = endo([[0, 1], [1, 0]], xi=1)
        b = endo([[0, 2], [-1, 0]], xi=1)
        lhs = jordan_product(a, b)
        rhs = jordan_product(b, a)
        assert lhs.mat == rhs.mat.scale(-1)  # (-1)^{1*1}

    def test_alpha_twist_identity(self):
        a = aff1()
        d = endo([[1, 2], [3, 4]])
        assert alpha_twist(a, d).mat == d.mat

    def test_alpha_twist_diagonal(self):
        h = homaff1()
        assert alpha_twist(h, endo([[0, 0], [0, 1]])).mat == Mat.from_rows([[0, 0], [0, 2]])

    def test_alpha_twist_requires_commutation(self):
        h = homaff1()
        with pytest.raises(ValueError):
            alpha_twist(h, endo([[0, 1], [0, 0]]))

    def test_associator_with_zero_slot(self):
        a = aff1()
        z = GradedEndo(Mat.zero(2, 2), 0)
        d = endo([[1, 1], [0, 1]])
        assert hom_associator(a, z, d, d).mat.is_zero()
        assert hom_associator(a, d, z, d).mat.is_zero()
        assert hom_associator(a, d, d, z).mat.is_zero()

    def test_associator_of_scalars_vanishes(self):
        a = aff1()
        s1 = endo([[2, 0], [0, 2]])
        s2 = endo([[3, 0], [0, 3]])
        assert hom_associator(a, s1, s2, s1).mat.is_zero()

    def test_associator_reduces_to_classical_for_identity_twist(self):
        a = aff1()
        x = endo([[1, 2], [0, 1]])
        y = endo([[0, 1], [1, 0]])
        z = endo([[1, 0], [2, 1]])
        classical = jordan_product(jordan_product(x, y), z).mat - \
            jordan_product(x, jordan_product(y, z)).mat
        assert hom_associator(a, x, y, z).mat == classical
