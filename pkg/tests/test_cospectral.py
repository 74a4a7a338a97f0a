import numpy as np
import pytest

from tcorona import graphs as gr
from tcorona.cospectral import (
    CertificationError,
    CospectralPair,
    SeedPair,
    build_cospectral_corona,
    certify,
    compose,
    load_seed,
    seed_pairs,
    verify_seed,
)
from tcorona.spectra import eigenvalues_symmetric


@pytest.fixture(scope="module")
def seed():
    return seed_pairs()[0]


class TestSeeds:
    def test_regular(self, seed):
        for g in (seed.left, seed.right):
            assert g.n == 16 and g.m == 48
            assert gr.regularity(g) == gr.RegularityInfo(True, 6)

    def test_spectrum(self, seed):
        expected = np.array([6.0] + [2.0] * 6 + [-2.0] * 9)
        for g in (seed.left, seed.right):
            vals = eigenvalues_symmetric(gr.adjacency_matrix(g)).values
            assert np.max(np.abs(vals - expected)) <= 1e-9

    def test_distinct_edge_sets(self, seed):
        assert set(seed.left.edges) != set(seed.right.edges)

    def test_laplacian_cospectral_too(self, seed):
        assert verify_seed(seed, "L") <= 1e-9

    def test_rejects_non_cospectral(self):
        bad = SeedPair("c6-vs-2c3", gr.cycle(6), gr.disjoint_union(gr.cycle(3), gr.cycle(3)))
        with pytest.raises(CertificationError, match="cospectral"):
            verify_seed(bad)

    def test_rejects_irregular(self):
        with pytest.raises(CertificationError, match="regular"):
            verify_seed(SeedPair("p3", gr.path(3), gr.path(3)))

    def test_load_from_files(self, seed, tmp_path):
        a, b = tmp_path / "a.edges", tmp_path / "b.edges"
        gr.write_edge_list(seed.left, a)
        gr.write_edge_list(seed.right, b)
        loaded = load_seed(a, b)
        assert loaded.left == seed.left and loaded.right == seed.right

    def test_load_rejects_bad_pair(self, tmp_path):
        a, b = tmp_path / "a.edges", tmp_path / "b.edges"
        gr.write_edge_list(gr.cycle(4), a)
        gr.write_edge_list(gr.complete(4), b)
        with pytest.raises(CertificationError):
            load_seed(a, b)


class TestCertify:
    def test_identical(self):
        c4 = gr.cycle(4)
        pair = certify(CospectralPair(c4, c4, "A"))
        assert pair.certified and pair.max_spectral_deviation == 0.0
        cert = pair.certificate()
        assert cert["same_degree_sequence"] and not cert["non_regular"]

    def test_size_mismatch(self):
        with pytest.raises(ValueError, match="vertex-count mismatch"):
            certify(CospectralPair(gr.cycle(4), gr.complete(3), "A"))

    def test_not_cospectral(self):
        pair = certify(CospectralPair(gr.cycle(4), gr.path(4), "A"))
        assert not pair.certified and pair.max_spectral_deviation > 0.1

    def test_non_regular_gate(self):
        c4 = gr.cycle(4)
        assert not certify(CospectralPair(c4, c4, "A"), require_non_regular=True).certified

    def test_unknown_matrix(self):
        with pytest.raises(ValueError):
            certify(CospectralPair(gr.cycle(4), gr.cycle(4), "Q"))


class TestFactory:
    @pytest.mark.parametrize("matrix", ["A", "L"])
    def test_headline_pair(self, seed, matrix):
        pair = build_cospectral_corona(seed, gr.complete(2), "left", matrix)
        assert pair.left.n == pair.right.n == 160
        assert pair.certified and pair.max_spectral_deviation <= 1e-6
        cert = pair.certificate()
        assert cert["non_regular"]
        assert len(cert["degrees_left"]) >= 2 and len(cert["degrees_right"]) >= 2
        assert cert["n"] == 160 and cert["matrix_kind"] == matrix and not cert["experimental"]

    def test_degrees(self, seed):
        pair = build_cospectral_corona(seed, gr.complete(2))
        # copy vertex 1 + 2, edge vertex 2 + 10, original vertex 6 + 6 + 6 * 2
        assert set(pair.degrees_left) == {3, 12, 24}
        assert pair.degrees_left == pair.degrees_right

    @pytest.mark.parametrize("matrix", ["A", "L"])
    def test_right_side(self, seed, matrix):
        pair = build_cospectral_corona(seed, gr.complete(2), "right", matrix)
        assert pair.left.n == 1 * 17 + 2
        assert pair.certified

    def test_other_operand(self, seed):
        assert build_cospectral_corona(seed, gr.cycle(4), "left", "L").certified

    def test_tvn_experimental(self, seed):
        pair = build_cospectral_corona(seed, gr.complete(1), kind="tvn")
        assert pair.certified and pair.certificate()["experimental"]

    def test_degenerate_seed(self):
        c5 = gr.cycle(5)
        pair = build_cospectral_corona(SeedPair("same", c5, c5), gr.complete(2))
        assert pair.left == pair.right
        assert pair.max_spectral_deviation == 0.0

    def test_irregular_operand(self, seed):
        with pytest.raises(ValueError, match="regular"):
            build_cospectral_corona(seed, gr.path(3))

    def test_bad_side(self, seed):
        with pytest.raises(ValueError, match="side"):
            build_cospectral_corona(seed, gr.complete(2), "middle")

    def test_failure_is_loud(self):
        c3 = gr.cycle(3)
        with pytest.raises(CertificationError, match="not certified"):
            build_cospectral_corona(SeedPair("c3", c3, c3), gr.complete(1), tol=-1.0)

    def test_compose(self, seed):
        small = SeedPair("c4", gr.cycle(4), gr.cycle(4))
        pair = compose(small, seed, "A")
        assert pair.left.n == 4 * 17 + 4
        assert pair.certified
