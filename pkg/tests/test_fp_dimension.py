import math

import numpy as np
import pytest

from fuscat import catalog
from fuscat.category_data import FusionRing, ObjectClass, fuse, identity_embedding, trivial_ring, vec_embedding
from fuscat.errors import InvalidCategoryError, NumericalError, RingMismatchError
from fuscat.fp_dimension import fpdim_class, fpdims, regular_algebra_dim, relative_center_dim

from conftest import CATALOG_IDS
from oracles import PHI, eig_fpdims


def test_trivial():
    d = fpdims(trivial_ring())
    assert list(d.dims) == [1.0] and d.category_dim == 1.0


def test_fibonacci(fib):
    d = fpdims(fib.ring)
    assert d["tau"] == pytest.approx(PHI, abs=1e-12)
    assert d.category_dim == pytest.approx(PHI + 2, abs=1e-12)


def test_ising(ising):
    d = fpdims(ising.ring)
    np.testing.assert_allclose(d.dims, [1, 1, math.sqrt(2)], atol=1e-12)
    assert d.category_dim == pytest.approx(4, abs=1e-9)


@pytest.mark.parametrize("cid", CATALOG_IDS)
def test_matches_dense_eigensolver_and_character(cid):
    ring = catalog.load(cid).ring
    d = fpdims(ring)
    np.testing.assert_allclose(d.dims, eig_fpdims(ring.tensor, ring.unit_index), atol=1e-10)
    n = ring.n
    for i in range(n):
        for j in range(n):
            rhs = sum(ring.tensor[i, j, k] * d.dims[k] for k in range(n))
            assert abs(d.dims[i] * d.dims[j] - rhs) < 1e-9
        assert abs(d.dims[ring.duals[i]] - d.dims[i]) < 1e-9


@pytest.mark.parametrize("cid", ["fibonacci", "ising", "toric_code"])
def test_permutation_invariance(cid):
    ring = catalog.load(cid).ring
    d = fpdims(ring).dims
    for perm in [list(reversed(range(ring.n))), list(np.roll(range(ring.n), 1))]:
        dp = fpdims(ring.permuted(perm)).dims
        np.testing.assert_allclose(dp, d[perm], atol=1e-10)


@pytest.mark.parametrize("order", [2, 3, 5, 6])
def test_pointed_cyclic(order):
    labels = [f"g{a}" for a in range(order)]
    ring = FusionRing.from_entries(
        f"Z{order}", labels, "g0", [(labels[a], labels[b], labels[(a + b) % order], 1) for a in range(order) for b in range(order)]
    )
    d = fpdims(ring)
    np.testing.assert_allclose(d.dims, 1, atol=1e-12)
    assert d.category_dim == pytest.approx(order)


def test_su2_level3_ring():
    # SU(2)_3 fusion with doubled spins 0..3; dims sin((a+1)pi/5)/sin(pi/5)
    labels = ["0", "1", "2", "3"]
    def rule(a, b):
        return range(abs(a - b), min(a + b, 6 - a - b) + 1, 2)
    entries = [(labels[a], labels[b], labels[c], 1) for a in range(4) for b in range(4) for c in rule(a, b)]
    ring = FusionRing.from_entries("SU2_3", labels, "0", entries)
    d = fpdims(ring)
    np.testing.assert_allclose(d.dims, [1, PHI, PHI, 1], atol=1e-10)
    np.testing.assert_allclose(d.dims, eig_fpdims(ring.tensor), atol=1e-10)


def test_class_dims(ising, fib):
    d = fpdims(ising.ring)
    assert fpdim_class(d, ObjectClass.from_dict(ising.ring, {"1": 1, "eps": 1})) == pytest.approx(2)
    assert fpdim_class(d, ObjectClass.unit(ising.ring)) == 1
    df = fpdims(fib.ring)
    assert fpdim_class(df, ObjectClass.simple(fib.ring, "tau", 2)) == pytest.approx(2 * PHI)
    with pytest.raises(RingMismatchError):
        fpdim_class(df, ObjectClass.unit(ising.ring))


@pytest.mark.parametrize("cid", CATALOG_IDS)
def test_class_dim_multiplicative(cid):
    ring = catalog.load(cid).ring
    d = fpdims(ring)
    rng = np.random.default_rng(7)
    for _ in range(20):
        a = ObjectClass(ring, rng.integers(0, 3, ring.n))
        b = ObjectClass(ring, rng.integers(0, 3, ring.n))
        lhs = fpdim_class(d, fuse(a, b))
        assert lhs == pytest.approx(fpdim_class(d, a) * fpdim_class(d, b), rel=1e-6, abs=1e-12)


def test_relative_dims(ising, fib, toric, rep_z2):
    for rd, z in [(ising, 16), (toric, 16)]:
        emb = vec_embedding(rd)
        dC, dE = fpdims(rd.ring), fpdims(emb.base.ring)
        assert relative_center_dim(emb, dC, dE) == pytest.approx(z, rel=1e-9)
    emb = vec_embedding(ising)
    assert regular_algebra_dim(emb, fpdims(ising.ring), fpdims(emb.base.ring)) == pytest.approx(4, rel=1e-9)
    emb = vec_embedding(fib)
    assert regular_algebra_dim(emb, fpdims(fib.ring), fpdims(emb.base.ring)) == pytest.approx((5 + math.sqrt(5)) / 2)
    ident = identity_embedding(rep_z2)
    d = fpdims(rep_z2.ring)
    assert relative_center_dim(ident, d, d) == pytest.approx(d.category_dim)
    assert regular_algebra_dim(ident, d, d) == pytest.approx(1)


def test_not_a_fusion_ring_character_failure(ising):
    bad = ising.ring.tensor.copy()
    bad[1, 2, 2] = bad[2, 1, 2] = 0  # eps x sigma = 0, so d_eps d_sigma = 0 is impossible
    with pytest.raises(InvalidCategoryError, match="character"):
        fpdims(FusionRing("bad", ising.ring.simples, 0, bad))


def test_convergence_cap(fib):
    with pytest.raises(NumericalError) as exc:
        fpdims(fib.ring, max_iter=2)
    assert exc.value.residual > 0
