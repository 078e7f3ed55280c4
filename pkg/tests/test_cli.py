import json

import pytest

from cantorint.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    return code, json.loads(out)


class TestSubcommands:
    def test_alpha_kl(self, capsys):
        code, payload = run_json(capsys, "alpha-kl", "--width", "1e-6")
        assert code == 0
        assert payload["status"] == "ok"
        dec = float(payload["result"]["decimal"])
        assert abs(dec - 0.39433) < 1e-4

    def test_unique_true(self, capsys):
        code, payload = run_json(capsys, "unique", "--alpha", "rat:9/25",
                                 "--t-seq", "(+-0)")
        assert code == 0
        assert payload["result"]["status"] == "unique"

    def test_unique_false(self, capsys):
        code, payload = run_json(capsys, "unique",
                                 "--alpha", "alg:-1,1,2,2@[2/5,1/2]",
                                 "--t-seq", "(-+)")
        assert code == 0
        assert payload["result"]["status"] == "not-unique"

    def test_intersect_example51(self, capsys, tmp_path):
        out_file = tmp_path / "graph.json"
        code, payload = run_json(capsys, "intersect",
                                 "--alpha", "alg:-1,1,2,2@[2/5,1/2]",
                                 "--t", "sum-neg-alpha",
                                 "--export", str(out_file))
        assert code == 0
        res = payload["result"]
        assert res["states"] == 6 and res["complete"]
        assert abs(float(res["lambda"]["decimal"]) - 1.69562) < 1e-4
        assert abs(float(res["dimension"]["decimal"]) - 0.644297) < 1e-4
        assert res["cycle_zero_frequency_bound"] == "1/3"
        exported = json.loads(out_file.read_text())
        assert exported["complete"] and len(exported["states"]) == 6

    def test_intersect_ex52(self, capsys):
        code, payload = run_json(capsys, "intersect",
                                 "--alpha", "alg:-1,2,1@[2/5,1/2]",
                                 "--t", "ex52")
        assert code == 0
        assert payload["result"]["states"] == 5

    def test_expand(self, capsys):
        code, payload = run_json(capsys, "expand", "--alpha", "rat:9/20",
                                 "--x", "rat:1", "--length", "3",
                                 "--algorithm", "quasi-greedy",
                                 "--alphabet", "0:3")
        assert code == 0
        assert payload["result"]["digits"] == "2,0,1"

    def test_delta(self, capsys):
        code, payload = run_json(capsys, "delta",
                                 "--alpha", "alg:1,-3,1@[1/3,1/2]",
                                 "--length", "6")
        assert code == 0
        assert payload["result"]["prefix"] == "+00000"
        assert payload["result"]["eventually_periodic"] == "+(0)"

    def test_tm(self, capsys):
        code, payload = run_json(capsys, "tm", "--what", "tau", "--n", "16")
        assert code == 0
        assert payload["result"]["word"] == "0,1,1,0,1,0,0,1,1,0,0,1,0,1,1,0"

    def test_dim(self, capsys):
        code, payload = run_json(capsys, "dim", "--alpha", "rat:9/25",
                                 "--t-seq", "(+-0)")
        assert code == 0
        assert payload["result"]["zero_density"] == "1/3"

    def test_dset(self, capsys):
        code, payload = run_json(capsys, "dset", "--alpha", "rat:19/50")
        assert code == 0
        assert payload["result"]["kind"] == "full-interval"

    def test_boxcount_csv(self, capsys, tmp_path):
        csv = tmp_path / "counts.csv"
        code, payload = run_json(capsys, "boxcount", "--alpha", "rat:2/5",
                                 "--t", "rat:0", "--depth", "6",
                                 "--csv", str(csv))
        assert code == 0
        lines = csv.read_text().strip().splitlines()
        assert lines[0] == "n,lower,upper"
        assert lines[1] == "1,2,2"
        assert lines[6] == "6,64,64"

    def test_selfsimilar(self, capsys):
        code, payload = run_json(capsys, "selfsimilar", "--alpha", "rat:9/25",
                                 "--t-seq", "(+-+-000)")
        assert code == 0
        assert payload["result"]["status"] == "self-similar"

    def test_dense_targets(self, capsys):
        code, payload = run_json(capsys, "dense-targets",
                                 "--alpha", "rat:9/25",
                                 "--targets", "0,0.5,1", "--tol", "0.01")
        assert code == 0
        assert len(payload["result"]["rows"]) == 3

    def test_liouville(self, capsys):
        code, payload = run_json(capsys, "liouville", "--pq", "2/5",
                                 "--k", "2")
        assert code == 0
        assert payload["result"]["nk"] == [1, 4, 20]


class TestDeterminism:
    def test_identical_json(self, capsys):
        _, out1, _ = run(capsys, "--json", "intersect",
                         "--alpha", "alg:-1,1,2,2@[2/5,1/2]",
                         "--t", "sum-neg-alpha")
        _, out2, _ = run(capsys, "--json", "intersect",
                         "--alpha", "alg:-1,1,2,2@[2/5,1/2]",
                         "--t", "sum-neg-alpha")
        assert out1 == out2


class TestErrors:
    def test_domain_error_exit_1(self, capsys):
        code, out, err = run(capsys, "unique", "--alpha", "rat:1/10",
                             "--t-seq", "(+)")
        assert code == 1
        assert "error" in err

    def test_dim_requires_uniqueness(self, capsys):
        code, out, err = run(capsys, "dim",
                             "--alpha", "alg:-1,1,2,2@[2/5,1/2]",
                             "--t-seq", "(-+)")
        assert code == 1

    def test_bad_number_format(self, capsys):
        code, out, err = run(capsys, "alpha-kl", "--width", "zero")
        assert code == 1

    def test_usage_error_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["not-a-command"])
        assert exc.value.code == 2

    def test_json_error_envelope(self, capsys):
        code, payload = run_json(capsys, "liouville", "--pq", "1/4", "--k", "1")
        assert code == 1
        assert payload["status"].startswith("error")

    def test_depth_cap_env(self, capsys, monkeypatch):
        monkeypatch.setenv("CANTOR_DEPTH_CAP", "12")
        code, payload = run_json(capsys, "boxcount", "--alpha", "rat:2/5",
                                 "--t", "rat:0", "--depth", "14")
        assert code == 1  # depth above the overridden cap
