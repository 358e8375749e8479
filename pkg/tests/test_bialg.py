import pytest

from hopfrob import QQ, GF, Matrix, check_bialgebra_axioms, dual_bialgebra, op_cop
from hopfrob.bialg import AxiomError, Bialgebra, double_dual_relabel
from hopfrob.frob import summingup_report
from hopfrob.zoo import (
    ZooValidationError,
    cyclic_group_algebra,
    cyclic_group_table,
    divided_power_char_p,
    group_algebra,
    monoid_algebra,
    sweedler_h4,
    symmetric_group_table,
    zoo,
)

from conftest import zoo_member

AXIOMS = [
    "associativity",
    "unitality",
    "coassociativity",
    "counitality",
    "comultiplication_multiplicative",
    "counit_multiplicative",
]


@pytest.mark.parametrize("name", ["C2", "C3", "S3", "F2[x]/(x^2)", "H4", "M2"])
def test_zoo_members_pass_all_axioms(name):
    rep = check_bialgebra_axioms(zoo_member(name))
    assert [c.name for c in rep.checks] == AXIOMS
    assert rep.passed, rep.render()


def test_sweedler_relations():
    B = sweedler_h4()
    g, x, gx = B.e(1), B.e(2), B.e(3)
    assert B.mul(g, g) == B.one
    assert not any(B.mul(x, x))
    assert B.mul(x, g) == [-c for c in B.mul(g, x)]
    assert B.mul(g, x) == gx
    # Delta x = x (x) 1 + g (x) x
    expect = [0] * 16
    expect[2 * 4 + 0] = 1
    expect[1 * 4 + 2] = 1
    assert B.comul(x) == expect


def test_divided_power_needs_characteristic_p():
    assert check_bialgebra_axioms(divided_power_char_p(3)).passed
    with pytest.raises(AxiomError) as info:
        divided_power_char_p(3, QQ)
    assert "comultiplication_multiplicative: FAIL" in str(info.value)


def test_zoo_validation_names_the_cell():
    with pytest.raises(ZooValidationError, match=r"cell \(1,0\)"):
        group_algebra([[0, 1], [5, 0]])
    with pytest.raises(ZooValidationError, match="no inverse"):
        group_algebra([[0, 1], [1, 1]])
    with pytest.raises(ZooValidationError, match="not associative"):
        monoid_algebra([[0, 1, 2], [1, 0, 0], [2, 2, 2]])


def test_symmetric_group_table_composition():
    table, labels = symmetric_group_table(3)
    assert labels[0] == "123"
    assert all(table[0][j] == j for j in range(6))


def test_zoo_lookup():
    assert zoo("c2") == cyclic_group_algebra(2)
    assert zoo("divided_power_char_p", GF(2)) == divided_power_char_p(2)
    with pytest.raises(KeyError):
        zoo("nope")


@pytest.mark.parametrize("name", ["C3", "H4", "M2", "F2[x]/(x^2)"])
def test_double_dual_is_the_original(name):
    B = zoo_member(name)
    D = dual_bialgebra(B)
    assert D.basis == tuple(f"{b}*" for b in B.basis)
    assert double_dual_relabel(dual_bialgebra(D)) == B


def test_dual_of_group_algebra_is_function_algebra():
    D = dual_bialgebra(cyclic_group_algebra(3))
    # delta-functions are orthogonal idempotents
    for i in range(3):
        for j in range(3):
            expect = D.e(i) if i == j else [0, 0, 0]
            assert D.mul(D.e(i), D.e(j)) == expect


def test_op_cop_is_a_bialgebra_and_an_involution():
    B = sweedler_h4()
    for mo in (False, True):
        for co in (False, True):
            X = op_cop(B, mo, co)
            assert check_bialgebra_axioms(X).passed
            assert op_cop(X, mo, co).m == B.m and op_cop(X, mo, co).delta == B.delta


def test_structure_constant_round_trip():
    B = sweedler_h4()
    sc = B.structure_constants()
    again = Bialgebra.from_structure_constants(
        B.field, sc["basis"], sc["mult"], sc["unit"], sc["comult"], sc["counit"], name="H4"
    )
    assert again == B


# -- mutation robustness ----------------------------------------------------


def single_entry_mutants(B):
    """Add 1 to one structure constant at a time, in m, delta, u and eps."""
    F = B.field
    for member in ("m", "delta"):
        M = getattr(B, member)
        for i in range(M.rows):
            for j in range(M.cols):
                rows = M.to_rows()
                rows[i][j] = rows[i][j] + 1
                yield (member, i, j), B.replace(check=False, **{member: Matrix.from_rows(F, rows)})
    for member in ("u", "eps"):
        v = list(getattr(B, member))
        for i in range(len(v)):
            w = list(v)
            w[i] = w[i] + 1
            yield (member, i), B.replace(check=False, **{member: w})


@pytest.mark.parametrize("name", ["C2", "H4"])
def test_every_single_entry_mutation_is_caught(name):
    B = zoo_member(name)
    caught = 0
    for key, mutant in single_entry_mutants(B):
        rep = check_bialgebra_axioms(mutant)
        if rep.passed:
            # still a bialgebra: the panel verdict has to flip
            assert summingup_report(mutant).verdict is False, key
        else:
            for c in rep.failures():
                assert c.witness is not None, (key, c.name)
            with pytest.raises(AxiomError):
                B.replace(**{key[0]: getattr(mutant, key[0])})
        caught += 1
    assert caught >= 20


def test_cayley_table_mutation_flips_the_panel():
    table = cyclic_group_table(2)
    table[1][1] = 1  # g^2 = g: the idempotent monoid
    mutant = monoid_algebra(table)
    assert summingup_report(cyclic_group_algebra(2)).verdict is True
    assert summingup_report(mutant).verdict is False


def test_axiom_witness_is_pinpointed():
    B = sweedler_h4()
    rows = B.m.to_rows()
    rows[2][1 * 4 + 1] = 1  # g g now also has an x component
    rep = check_bialgebra_axioms(B.replace(check=False, m=Matrix.from_rows(QQ, rows)))
    bad = rep.failures()
    assert bad and all(c.witness is not None for c in bad)
    assert any("g" in c.witness for c in bad)
