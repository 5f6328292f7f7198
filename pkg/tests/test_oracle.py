import pytest

from superinv import gens, oracle, superalg
from superinv.poly import GradedSubspace, parse_poly


@pytest.mark.parametrize("name", oracle.ORACLE_CATALOG)
def test_structure_constants(name):
    sc = oracle.build_sc(name)
    assert oracle.jacobi_violations(sc) == []
    assert oracle.skew_violations(sc) == []
    for d in (1, 2):
        assert oracle.representation_violations(sc, d) == []
    # every basis element is a weight vector and the Cartan has weight zero
    ws = sc.weights()
    assert all(not any(ws[h]) for h in sc.cartan)


@pytest.mark.parametrize("name,dims", [("gl(1|1)", (2, 2)), ("gl(2|1)", (5, 4)),
                                       ("gl(2|2)", (8, 8)), ("sl(2|1)", (4, 4)),
                                       ("osp(1|2)", (3, 2)), ("osp(2|2)", (4, 4)),
                                       ("pe(2)", (4, 4)), ("vect(0|2)", (4, 4))])
def test_dimensions(name, dims):
    sc = oracle.build_sc(name)
    assert (sc.dim_even, sc.dim_odd) == dims


def test_gl11_supertrace():
    space = oracle.coadjoint_invariants("gl(1|1)", 1)
    assert space.dim == 1
    (vec,) = space.basis
    sc = space.sc
    coeff = {sc.labels[m[0]]: c for m, c in zip(space.monomials, vec) if c}
    assert coeff["E11"] == -coeff["E22"] and set(coeff) == {"E11", "E22"}
    assert oracle.coadjoint_invariants("gl(1|1)", 2).dim == 2


@pytest.mark.parametrize("name", oracle.ORACLE_CATALOG)
def test_degree_zero(name):
    assert oracle.coadjoint_invariants(name, 0).dim == 1


def test_restriction_examples():
    d = superalg.get("gl(1|1)")
    res = oracle.restrict_to_cartan(oracle.coadjoint_invariants("gl(1|1)", 1))
    assert res == GradedSubspace.from_polys(d.vartable, 1, [parse_poly("e1 - d1", d.vartable)])
    d = superalg.get("gl(2|1)")
    res = oracle.restrict_to_cartan(oracle.coadjoint_invariants("gl(2|1)", 1))
    assert res == GradedSubspace.from_polys(d.vartable, 1, [parse_poly("e1 + e2 - d1", d.vartable)])


def test_supertrace_powers_are_restrictions():
    d = superalg.get("gl(2|1)")
    for k in (2, 3):
        res = oracle.restrict_to_cartan(oracle.coadjoint_invariants("gl(2|1)", k))
        assert res.contains(gens.power_sums(d, k))


@pytest.mark.parametrize("name,d,dim", [("gl(1|1)", 1, 1), ("gl(1|1)", 2, 2), ("gl(1|1)", 3, 3),
                                        ("vect(0|2)", 2, 1), ("pe(2)", 2, 1)])
def test_oracle_check_examples(name, d, dim):
    v = oracle.oracle_check(name, d)
    assert v.matches_membership and v.dim_restricted == dim == v.dim_invariants


def test_errors():
    with pytest.raises(oracle.OracleError):
        oracle.build_sc("ab3")
    with pytest.raises(oracle.OracleError):
        oracle.coadjoint_invariants("gl(2|2)", 3, cap=10)
