"""Nerve chain complexes and the class-colimit comparison of homology."""

import pytest

from oghom import fixtures
from oghom.errors import StructuralDefect
from oghom.gmodules import colim_category
from oghom.homology import (
    ChainComplex,
    _chain_tuples,
    check_theorem,
    homology,
    homology_profile,
    nerve_complex,
)
from oghom.zmodule import AbHom, FgAbGroup, ZMatrix
from .oracles import periodic_cyclic_homology


def test_chain_complex_rejects_bad_square():
    z = FgAbGroup.free(1)
    dbl = AbHom(z, z, ZMatrix([[2]]))
    ident = AbHom.identity(z)
    with pytest.raises(StructuralDefect):
        ChainComplex([z, z, z], [None, ident, dbl])


def test_chain_complex_zero_mod_relations():
    # the composite matrix is nonzero but vanishes modulo the target
    z = FgAbGroup.free(1)
    z4 = FgAbGroup.from_invariants(0, [4])
    z2 = FgAbGroup.from_invariants(0, [2])
    b1 = AbHom(z4, z2, ZMatrix([[1]]))
    b2 = AbHom(z, z4, ZMatrix([[2]]))
    cx = ChainComplex([z2, z4, z], [None, b1, b2])
    assert not b2.then(b1).matrix.is_zero()
    assert cx.homology(1).is_trivial()
    assert cx.top_degree == 2
    with pytest.raises(StructuralDefect):
        cx.homology(2)  # needs chains one degree higher
    with pytest.raises(StructuralDefect):
        ChainComplex([z2, z4], [None, b1, b2])


def test_chain_tuples_counts():
    cat = fixtures.load("cyclic3").lc.category
    chains = _chain_tuples(cat, 3)
    assert len(chains[0]) == 1
    assert len(chains[1]) == 2
    assert len(chains[2]) == 4
    assert len(chains[3]) == 8


def test_normalized_boundaries_z2():
    bundle = fixtures.load("cyclic2")
    cat = bundle.lc.category
    cx_triv = nerve_complex(cat, bundle.modules["const"], 2)
    # one generator per degree: differentials alternate 0 and the norm
    assert cx_triv.boundaries[1].matrix == ZMatrix([[0]])
    assert cx_triv.boundaries[2].matrix == ZMatrix([[2]])
    cx_sign = nerve_complex(cat, bundle.modules["sign"], 2)
    assert cx_sign.boundaries[1].matrix == ZMatrix([[-2]])
    assert cx_sign.boundaries[2].matrix == ZMatrix([[0]])


@pytest.mark.parametrize("m", [2, 3])
def test_cyclic_homology_matches_periodic_resolution(m):
    bundle = fixtures.load("cyclic%d" % m)
    cat = bundle.lc.category
    prof = homology_profile(cat, bundle.modules["const"], 3)
    expected = [periodic_cyclic_homology(m, 0, 1, n) for n in range(4)]
    assert prof == expected
    if m % 2 == 0:
        prof = homology_profile(cat, bundle.modules["sign"], 3)
        expected = [periodic_cyclic_homology(m, 0, -1, n) for n in range(4)]
        assert prof == expected


def test_clifford_profiles():
    bundle = fixtures.load("clifford")
    cat = bundle.lc.category
    # the fused order makes these the profiles of the quotient group
    assert homology_profile(cat, bundle.modules["const"], 2) == [
        (1, ()), (0, (2,)), (0, ())]
    assert homology_profile(cat, bundle.modules["sign"], 2) == [
        (0, (2,)), (0, ()), (0, (2,))]


def test_h0_is_colimit():
    for name, module in [("clifford", "sign"), ("chain2", "mixed"),
                         ("z2", "const")]:
        bundle = fixtures.load(name)
        cat = bundle.lc.category
        mod = bundle.modules[module]
        h0 = homology(cat, mod, 0)
        colim = colim_category(cat, mod)
        assert h0.canonical_form() == colim.result.canonical_form()


def test_rank_warning(monkeypatch):
    monkeypatch.setenv("OG_MAX_CHAIN_RANK", "1")
    bundle = fixtures.load("clifford")
    with pytest.warns(UserWarning):
        nerve_complex(bundle.lc.category, bundle.modules["const"], 2)


def test_theorem_on_fixtures():
    for name, module in [("clifford", "sign"), ("clifford", "const"),
                         ("chain2", "mixed"), ("z2", "sign")]:
        bundle = fixtures.load(name)
        rep = check_theorem(bundle.groupoid, bundle.lc,
                            bundle.modules[module], [0, 1, 2])
        assert rep.ok, (name, module, rep.rows)
        assert [r["degree"] for r in rep.rows] == [0, 1, 2]


def test_theorem_rows_shape():
    bundle = fixtures.load("clifford")
    rep = check_theorem(bundle.groupoid, bundle.lc,
                        bundle.modules["sign"], [0, 1])
    row = rep.rows[0]
    assert row["left"] == {"rank": 0, "torsion": [2]}
    assert row["right"] == {"rank": 0, "torsion": [2]}
