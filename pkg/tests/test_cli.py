import json
import math

import pytest

import frechetfit.special_functions as sf
from frechetfit import FrechetShape, LaurentCoefficients, normalized_centered_moment
from frechetfit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestExitStatusContract:
    def test_success(self, capsys):
        assert run(capsys, "moments", "--alpha", "5")[0] == 0

    def test_usage_error_is_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["estimate"])  # neither --variance nor --input
        assert exc.value.code == 2
        capsys.readouterr()

    def test_both_sources_is_usage_error(self, capsys, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["estimate", "--variance", "0.1", "--input", "x.txt"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_domain_error_is_3(self, capsys):
        code, _, err = run(capsys, "estimate", "--variance", "-1")
        assert code == 3
        assert "error" in err

    def test_io_error_is_4(self, capsys, tmp_path):
        code, _, err = run(capsys, "estimate", "--input", str(tmp_path / "missing.txt"))
        assert code == 4

    def test_parse_error_is_4(self, capsys, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("1.0\nxyz\n")
        code, _, _ = run(capsys, "estimate", "--input", str(p))
        assert code == 4


class TestMoments:
    def test_variance_row(self, capsys):
        code, out, _ = run(capsys, "moments", "--alpha", "5", "--max-order", "4")
        assert code == 0
        assert "0.1337614" in out

    def test_undefined_markers(self, capsys):
        code, out, _ = run(capsys, "moments", "--alpha", "2", "--max-order", "4")
        assert code == 0
        assert out.count("undefined (k >= alpha)") >= 3
        assert "+inf" in out

    def test_json_matches_library(self, capsys):
        code, out, _ = run(capsys, "moments", "--alpha", "8", "--max-order", "6",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["schema_version"] == 1
        sixth = payload["moments"][5]
        assert sixth["order"] == 6
        expected = normalized_centered_moment(FrechetShape(8.0), 6)
        assert sixth["normalized"] == expected

    def test_json_fields_finite_or_marked(self, capsys):
        _, out, _ = run(capsys, "moments", "--alpha", "3", "--max-order", "5",
                        "--format", "json")
        payload = json.loads(out)
        for entry in payload["moments"]:
            for key in ("raw", "centered", "normalized"):
                v = entry[key]
                assert v is None or isinstance(v, str) or math.isfinite(v)
        assert payload["skewness"] == "inf"


class TestEstimate:
    def test_method_all_table_row(self, capsys):
        code, out, _ = run(capsys, "estimate", "--variance", "0.0222624", "--method", "all")
        assert code == 0
        payloadless = out
        assert "order1" in payloadless and "order2-cardano" in payloadless
        code, out, _ = run(capsys, "estimate", "--variance", "0.0222624",
                           "--method", "all", "--format", "json")
        payload = json.loads(out)
        alphas = {e["method"]: e["alpha"] for e in payload["estimates"]}
        assert alphas["order1"] == pytest.approx(8.60, abs=0.005)
        assert alphas["order2-cardano"] == pytest.approx(9.69, abs=0.005)
        assert alphas["exact-root"] == pytest.approx(10.0, abs=0.001)

    def test_estimate_from_file(self, capsys, tmp_path):
        out_file = tmp_path / "samples.txt"
        code, _, _ = run(capsys, "sample", "--alpha", "5", "--count", "1000000",
                         "--seed", "8", "-o", str(out_file))
        assert code == 0
        code, out, _ = run(capsys, "estimate", "--input", str(out_file),
                           "--method", "exact", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["sample"]["count"] == 1_000_000
        assert payload["estimates"][0]["alpha"] == pytest.approx(5.0, abs=0.2)


class TestSample:
    def test_deterministic_files(self, capsys, tmp_path):
        f1, f2 = tmp_path / "a.txt", tmp_path / "b.txt"
        for f in (f1, f2):
            code, _, _ = run(capsys, "sample", "--alpha", "5", "--count", "100",
                             "--seed", "42", "-o", str(f))
            assert code == 0
        assert f1.read_text() == f2.read_text()

    def test_values_above_location(self, capsys, tmp_path):
        f = tmp_path / "c.txt"
        run(capsys, "sample", "--alpha", "3", "-m", "2.5", "--count", "500",
            "--seed", "1", "-o", str(f))
        values = [float(line) for line in f.read_text().splitlines()]
        assert all(v > 2.5 for v in values)

    def test_unwritable_path_is_4(self, capsys, tmp_path):
        code, _, _ = run(capsys, "sample", "--alpha", "5", "--count", "10",
                         "--seed", "1", "-o", str(tmp_path / "no" / "dir" / "f.txt"))
        assert code == 4


class TestTables:
    def test_printed_values_reproduce(self, capsys):
        code, out, _ = run(capsys, "tables", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert [r["rounded"] for r in payload["order1_table"]] == [
            "3.51", "8.60", "48.67", "98.68"]
        assert [r["rounded"] for r in payload["order2_table"]] == [
            "4.42", "9.69", "49.93", "99.965"]
        for r in payload["order1_table"] + payload["order2_table"]:
            assert r["rounded"] == r["printed"]

    def test_exact_column(self, capsys):
        _, out, _ = run(capsys, "tables", "--format", "json")
        payload = json.loads(out)
        for row, alpha in zip(payload["order1_table"], (5.0, 10.0, 50.0, 100.0)):
            assert row["alpha_exact"] == pytest.approx(alpha, abs=0.005)

    def test_reproducible_output(self, capsys):
        _, out1, _ = run(capsys, "tables")
        _, out2, _ = run(capsys, "tables")
        assert out1 == out2


class TestCheck:
    def test_clean_build_passes(self, capsys):
        code, out, _ = run(capsys, "check")
        assert code == 0
        assert "FAIL" not in out

    def test_alpha_grid_flag(self, capsys):
        code, out, _ = run(capsys, "check", "--alpha-grid", "5")
        assert code == 0

    def test_mutation_sanity_flipped_c2(self, capsys, monkeypatch):
        # flipping the sign of the z^2 coefficient must trip the
        # remainder-order check and give a nonzero exit
        corrupted = LaurentCoefficients(
            c_minus1=sf.LAURENT.c_minus1,
            c0=sf.LAURENT.c0,
            c1=sf.LAURENT.c1,
            c2=-sf.LAURENT.c2,
        )
        monkeypatch.setattr(sf, "LAURENT", corrupted)
        code, out, _ = run(capsys, "check")
        assert code != 0
        assert "FAIL" in out


class TestVersion:
    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert "frechetfit" in capsys.readouterr().out
