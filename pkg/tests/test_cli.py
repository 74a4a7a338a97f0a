import json

import pytest

from tcorona import graphs as gr
from tcorona.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def no_env(monkeypatch):
    monkeypatch.delenv("TCORONA_OUT_DIR", raising=False)


class TestGenerate:
    @pytest.mark.parametrize("key,n,m", [("cycle:5", 5, 5), ("shrikhande", 16, 48), ("kpq:2,3", 5, 6)])
    def test_counts(self, capsys, key, n, m):
        code, out, _ = run(capsys, "generate", key)
        assert code == 0
        g = gr.parse_edge_list(out)
        assert (g.n, g.m) == (n, m)

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "p.edges"
        assert main(["generate", "petersen", "--out", str(path)]) == 0
        assert gr.read_edge_list(path) == gr.petersen()

    def test_unknown_key(self, capsys):
        code, _, err = run(capsys, "generate", "dodecahedron")
        assert code == 2 and "error" in err

    def test_env_dir(self, tmp_path, monkeypatch):
        monkeypatch.setenv("TCORONA_OUT_DIR", str(tmp_path))
        assert main(["generate", "cycle:5"]) == 0
        assert gr.read_edge_list(tmp_path / "cycle_5.edges") == gr.cycle(5)


class TestCorona:
    @pytest.mark.parametrize("kind", ["tvn", "ten"])
    def test_c3_k2(self, capsys, tmp_path, kind):
        code, out, _ = run(capsys, "corona", "--kind", kind, "--g1", "C3", "--g2", "K2", "--out", str(tmp_path))
        assert code == 0 and "12 vertices" in out
        g = gr.read_edge_list(tmp_path / f"{kind}_C3_K2.edges")
        layout = json.loads((tmp_path / f"{kind}_C3_K2.layout.json").read_text())
        assert g.n == layout["order"] == 12
        assert layout["ranges"]["vertices"] == [0, 3] and layout["ranges"]["edges"] == [3, 6]

    def test_non_regular_g1(self, capsys, tmp_path):
        code, out, _ = run(capsys, "corona", "--kind", "ten", "--g1", "P3", "--g2", "K2", "--out", str(tmp_path))
        assert code == 0 and "9 vertices" in out

    def test_g1_from_file(self, capsys, tmp_path):
        path = tmp_path / "g.edges"
        gr.write_edge_list(gr.cycle(4), path)
        code, out, _ = run(capsys, "corona", "--kind", "tvn", "--g1", str(path), "--g2", "K1", "--out", str(tmp_path))
        assert code == 0 and "12 vertices" in out
        assert (tmp_path / "tvn_g_K1.edges").exists()

    def test_bad_spec(self, capsys, tmp_path):
        code, _, err = run(capsys, "corona", "--kind", "ten", "--g1", "nope", "--g2", "K2", "--out", str(tmp_path))
        assert code == 2


class TestSpectrum:
    def test_k2(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--g1", "K2", "--matrix", "A")
        assert code == 0 and json.loads(out)["spectrum"] == [1.0, -1.0]

    def test_c4_laplacian(self, capsys):
        _, out, _ = run(capsys, "spectrum", "--g1", "C4", "--matrix", "L")
        assert json.loads(out)["spectrum"] == pytest.approx([0, 2, 2, 4], abs=1e-12)

    def test_petersen(self, capsys):
        _, out, _ = run(capsys, "spectrum", "--g1", "petersen")
        assert json.loads(out)["spectrum"] == pytest.approx([3] + [1] * 5 + [-2] * 4, abs=1e-9)


class TestVerify:
    def test_thm3_default_grid(self, capsys):
        code, out, _ = run(capsys, "verify", "--theorems", "thm3")
        doc = json.loads(out)
        assert code == 0
        assert doc["summary"] == {"pass": len(doc["reports"])}
        assert {r["seed"] for r in doc["reports"]} == {doc["seed"]}

    def test_r1_precondition(self, capsys):
        code, _, err = run(capsys, "verify", "--theorems", "thm1", "--g1", "K2", "--g2", "K1")
        assert code == 2 and "r1 >= 2" in err

    def test_discrepancies_do_not_fail(self, capsys):
        code, out, _ = run(capsys, "verify", "--theorems", "thm4", "--grid", "quick", "--points", "3")
        doc = json.loads(out)
        assert code == 0
        assert doc["summary"]["documented-discrepancy"] > 0 and "fail" not in doc["summary"]

    def test_tiny_tol_fails(self, capsys):
        code, out, _ = run(capsys, "verify", "--theorems", "thm1", "--grid", "quick", "--tol", "1e-30")
        assert code == 1

    def test_nonpositive_tol(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", "--tol", "0"])

    def test_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for p in (a, b):
            assert main(["verify", "--grid", "quick", "--seed", "42", "--out", str(p)]) == 0
        assert a.read_bytes() == b.read_bytes()
        assert json.loads(a.read_text())["seed"] == 42

    def test_unknown_theorem(self, capsys):
        code, _, err = run(capsys, "verify", "--theorems", "thm7")
        assert code == 2


class TestCospectralDemo:
    @pytest.mark.parametrize("matrix", ["A", "L"])
    def test_default(self, capsys, tmp_path, matrix):
        code, out, _ = run(capsys, "cospectral-demo", "--matrix", matrix, "--out", str(tmp_path))
        assert code == 0
        cert = json.loads((tmp_path / "certificate.json").read_text())
        assert cert["certified"] and cert["n"] == 160 and cert["matrix_kind"] == matrix
        assert cert["deviation"] <= 1e-6
        left = gr.read_edge_list(tmp_path / "left.edges")
        right = gr.read_edge_list(tmp_path / "right.edges")
        assert left.n == right.n == 160 and left != right

    def test_user_seeds(self, capsys, tmp_path):
        a, b = tmp_path / "h1.edges", tmp_path / "h2.edges"
        gr.write_edge_list(gr.shrikhande(), a)
        gr.write_edge_list(gr.rook4(), b)
        code, _, _ = run(capsys, "cospectral-demo", "--seed-left", str(a), "--seed-right", str(b),
                         "--side", "right", "--out", str(tmp_path / "o"))
        assert code == 0
        assert json.loads((tmp_path / "o" / "certificate.json").read_text())["side"] == "right"

    def test_half_seed(self, capsys, tmp_path):
        code, _, err = run(capsys, "cospectral-demo", "--seed-left", "x", "--out", str(tmp_path))
        assert code == 2 and "together" in err
