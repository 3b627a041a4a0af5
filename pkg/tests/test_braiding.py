import itertools
import math
import warnings

import numpy as np
import pytest

from fuscat import catalog
from fuscat.braiding import centralizer, classify, is_transparent_pair, monodromy, mueger_center
from fuscat.category_data import BaseEmbedding, FusionRing, RibbonData, identity_embedding, trivial_ribbon, vec_embedding
from fuscat.errors import BraidingError, InvalidCategoryError
from fuscat.fp_dimension import fpdims, relative_center_dim

from conftest import CATALOG_IDS
from oracles import FIB_TWIST, PHI, brute_monodromy


def _md(rd):
    d = fpdims(rd.ring)
    return d, monodromy(rd, d)


def test_monodromy_examples(rep_z2, toric):
    d, S = _md(rep_z2)
    np.testing.assert_allclose(S.entries, [[1, 1], [1, 1]])
    d, S = _md(trivial_ribbon())
    np.testing.assert_allclose(S.entries, [[1]])
    d, S = _md(toric)
    assert S["e", "m"] == pytest.approx(-1)


@pytest.mark.parametrize("cid", CATALOG_IDS)
def test_monodromy_invariants(cid):
    rd = catalog.load(cid).ribbon
    d, S = _md(rd)
    np.testing.assert_allclose(S.entries, brute_monodromy(rd.ring.tensor, d.dims, rd.twists), atol=1e-12)
    assert np.abs(S.entries - S.entries.T).max() < 1e-9
    u = rd.ring.unit_index
    np.testing.assert_allclose(S.entries[u], d.dims, atol=1e-12)
    assert (np.abs(S.entries) <= np.outer(d.dims, d.dims) + 1e-6).all()


def test_noncommutative_rejected():
    els = list(itertools.permutations(range(3)))
    labels = ["".join(map(str, p)) for p in els]
    comp = lambda a, b: tuple(a[b[i]] for i in range(3))
    entries = [(labels[a], labels[b], labels[els.index(comp(x, y))], 1) for a, x in enumerate(els) for b, y in enumerate(els)]
    ring = FusionRing.from_entries("S3", labels, "012", entries)
    rd = RibbonData(ring, np.ones(6))
    with pytest.raises(BraidingError):
        monodromy(rd, fpdims(ring))


def test_transparent_pairs(rep_z2, toric):
    d, S = _md(rep_z2)
    assert is_transparent_pair(S, d, "psi", "psi")
    d, S = _md(toric)
    assert not is_transparent_pair(S, d, "e", "m")
    for j in range(4):
        assert is_transparent_pair(S, d, "1", j)


def test_centralizer_examples(ising, toric):
    d, S = _md(ising)
    assert centralizer(S, d, range(3)) == {0}
    assert centralizer(S, d, ["1"]) == {0, 1, 2}
    d, S = _md(toric)
    assert centralizer(S, d, ["1", "e"]) == {0, 1}


def test_centralizer_warns_when_not_dual_closed():
    labels = ["1", "w", "w2"]
    ring = FusionRing.from_entries("Z3", labels, "1", [(labels[a], labels[b], labels[(a + b) % 3], 1) for a in range(3) for b in range(3)])
    rd = RibbonData(ring, np.ones(3))
    d, S = _md(rd)
    with pytest.warns(UserWarning, match="dual"):
        centralizer(S, d, ["w"])


def test_mueger_examples(fib, rep_z2, svec):
    d, S = _md(fib)
    expected = (1 + PHI * FIB_TWIST) / FIB_TWIST**2
    assert S["tau", "tau"] == pytest.approx(expected)
    assert abs(expected - PHI**2) > 1
    assert mueger_center(S, d) == {0}
    d, S = _md(rep_z2)
    assert mueger_center(S, d) == {0, 1}
    d, S = _md(svec)
    assert S["psi", "psi"] == pytest.approx(1)
    assert mueger_center(S, d) == {0, 1}


@pytest.mark.parametrize("cid", ["trivial", "rep_z2", "svec", "fibonacci", "ising", "toric_code"])
def test_double_centralizer(cid):
    rd = catalog.load(cid).ribbon
    d, S = _md(rd)
    n = rd.ring.n
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for r in range(n + 1):
            for X in itertools.combinations(range(n), r):
                X = frozenset(X)
                cx = centralizer(S, d, X)
                assert 0 in cx
                assert centralizer(S, d, cx) >= X
                for Y in (X | {y} for y in range(n)):
                    assert centralizer(S, d, Y) <= cx


def test_classify_examples(ising, rep_z2, rep_z2_into_ising):
    c = classify(vec_embedding(ising))
    assert c.is_over_base and c.is_umtc_over_E and not c.is_symmetric
    c = classify(identity_embedding(rep_z2))
    assert c.is_symmetric and c.is_umtc_over_E and c.base_centralizer_equals_base
    c = classify(rep_z2_into_ising)
    assert not c.is_over_base and not c.is_umtc_over_E


def test_classify_transparency_failure_without_twist_mismatch(svec, ising):
    # sVec -> Ising is braided-compatible, yet eps braids with sigma: S~_{eps sigma} = -sqrt2
    emb = BaseEmbedding.from_labels(svec, ising, {"1": "1", "psi": "eps"})
    d, S = _md(ising)
    assert S["eps", "sigma"] == pytest.approx(-math.sqrt(2))
    c = classify(emb)
    assert not c.is_over_base
    assert any("not transparent" in n for n in c.notes)


def test_classify_over_base_but_not_umtc(svec):
    # sVec over Vec: symmetric, Muger center strictly larger than the image of Vec
    c = classify(vec_embedding(svec))
    assert c.is_over_base and c.is_symmetric and not c.is_umtc_over_E


def test_classify_propagates_invalid_embedding(rep_z2, ising):
    with pytest.raises(InvalidCategoryError):
        classify(BaseEmbedding(rep_z2, ising, (0, 2)))


@pytest.mark.parametrize("cid", ["fibonacci", "ising", "toric_code", "rep_z2_over_rep_z2"])
def test_umtc_relative_center_bound(cid):
    emb = catalog.embedding(cid)
    assert classify(emb).is_umtc_over_E
    dC, dE = fpdims(emb.target.ring), fpdims(emb.base.ring)
    z = relative_center_dim(emb, dC, dE)
    assert z == pytest.approx(dC.category_dim**2 / dE.category_dim)
    assert z >= dC.category_dim - 1e-9


def test_tolerance_override(fib):
    d, S = _md(fib)
    gap = abs(S["tau", "tau"] - PHI**2)
    assert mueger_center(S, d, tol=gap) == {0, 1}
