import random

import pytest

from nhomlie.fixtures import FIXTURES, abelian2, aff1, nonsurjective_abelian2, super2
from nhomlie.linalg import Mat
from nhomlie.propositions import (
    check_basis_change,
    check_prop31,
    check_prop32,
    check_prop33,
    check_prop34,
    check_prop38,
    check_prop39,
    random_even_invertible,
    solved_dims,
)

ALL_CHECKS = [check_prop31, check_prop32, check_prop33, check_prop34,
              check_prop38, check_prop39]


@pytest.mark.parametrize("name", sorted(FIXTURES))
@pytest.mark.parametrize("check", ALL_CHECKS)
def test_propositions_hold_on_fixtures(name, check):
    report = check(FIXTURES[name](), 2)
    failing = [c for c in report.claims if c.status == "fail"]
    assert not failing, [(c.claim_id, c.witness) for c in failing]


def test_prop32_verifies_the_explicit_witness():
    report = check_prop32(aff1(), 2)
    claim = report.claim("32.4.C_in_QDer")
    assert claim.status == "pass"
    assert "n*D" in claim.detail


def test_prop34_gates_on_surjectivity():
    report = check_prop34(nonsurjective_abelian2(), 1)
    assert all(c.status == "skipped" for c in report.claims)
    assert all("surjective" in c.detail for c in report.claims)


def test_prop34_zero_claim_skipped_with_center():
    report = check_prop34(abelian2(), 1)
    assert report.claim("34.1.image_in_center").status == "pass"
    assert report.claim("34.2.zero_when_centerless").status == "skipped"


def test_prop39_equivalence_gated_by_center():
    report = check_prop39(abelian2(), 1)
    assert report.claim("39.2.centerless_equivalence").status == "skipped"
    report = check_prop39(aff1(), 1)
    assert report.claim("39.2.centerless_equivalence").status == "pass"


def test_prop38_records_the_seed():
    report = check_prop38(aff1(), 1, samples=5, seed=99)
    claim = report.claim("38.1.hom_jordan_identity")
    assert "seed 99" in claim.detail


def test_reports_are_deterministic():
    a = check_prop31(super2(), 2)
    b = check_prop31(super2(), 2)
    assert a == b
    assert [c.claim_id for c in a.claims] == sorted(c.claim_id for c in a.claims)


def test_dims_table_contains_every_kind():
    dims = dict(((kind, k, xi), v) for kind, k, xi, v in solved_dims(aff1(), 2))
    assert dims[("Der", 0, 0)] == 2
    assert dims[("Omega", 0, 0)] == 4
    assert dims[("GDer", 2, 0)] == 4
    assert dims[("Der", 0, 1)] == 0


def test_basis_change_identity_is_trivial():
    report = check_basis_change(aff1(), Mat.identity(2), 2)
    assert report.passed


def test_basis_change_diag_and_permutation():
    assert check_basis_change(aff1(), Mat.from_rows([[1, 0], [0, 3]]), 2).passed
    assert check_basis_change(abelian2(), Mat.from_rows([[0, 1], [1, 0]]), 2).passed


def test_basis_change_rejects_singular():
    with pytest.raises(ValueError):
        check_basis_change(aff1(), Mat.from_rows([[1, 1], [1, 1]]), 1)


def test_basis_change_rejects_odd():
    with pytest.raises(ValueError):
        check_basis_change(super2(), Mat.from_rows([[0, 1], [1, 0]]), 1)


def test_random_even_invertible_respects_parity():
    rng = random.Random(3)
    parity = (0, 1, 0, 1)
    for _ in range(5):
        p = random_even_invertible(parity, rng)
        for r in range(4):
            for c in range(4):
                if parity[r] != parity[c]:
                    assert p.entries[r][c] == 0


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_random_basis_changes_preserve_dims(name):
    alg = FIXTURES[name]()
    rng = random.Random(11)
    for _ in range(3):
        p = random_even_invertible(alg.parity, rng)
        assert check_basis_change(alg, p, 1).passed
