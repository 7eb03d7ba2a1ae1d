"""Command-line interface: formats, exit codes, determinism, round-trips."""

from __future__ import annotations

import json

import pytest

from hypentropy import SweepConfig, embed_real, stability_sweep
from hypentropy.cli import (
    EXIT_INVARIANT,
    EXIT_IO,
    EXIT_NONCONVERGENT,
    EXIT_OK,
    EXIT_VALIDATION,
    main,
    records_from_csv,
    records_to_csv,
)

HYP_FIXTURE = '{"case": "full", "rho": [[0.5, 0.25], [0.5, 0.75]]}'
REAL_FIXTURE = "[0.5, 0.5]"
BAD_FIXTURE = '{"rho": [[0.5, 0.5], [0.6, 0.5]]}'


@pytest.fixture
def hyp_path(tmp_path):
    path = tmp_path / "hyp.json"
    path.write_text(HYP_FIXTURE)
    return str(path)


@pytest.fixture
def real_path(tmp_path):
    path = tmp_path / "real.json"
    path.write_text(REAL_FIXTURE)
    return str(path)


@pytest.fixture
def bad_path(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(BAD_FIXTURE)
    return str(path)


class TestEntropyCommand:
    def test_real_measures(self, real_path, capsys):
        code = main(["entropy", "--input", real_path,
                     "--measure", "shannon", "--measure", "collision"])
        assert code == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "measure,order_e1,order_e2,value_e1,value_e2"
        shannon_row = lines[1].split(",")
        assert shannon_row[0] == "shannon"
        assert float(shannon_row[3]) == pytest.approx(0.6931471805599453)
        assert float(shannon_row[4]) == pytest.approx(0.6931471805599453)

    def test_hyperbolic_fixture(self, hyp_path, capsys):
        code = main(["entropy", "--input", hyp_path,
                     "--measure", "strong_shannon_hyp"])
        assert code == EXIT_OK
        row = capsys.readouterr().out.splitlines()[1].split(",")
        assert float(row[3]) == pytest.approx(0.6931471805599453)
        assert float(row[4]) == pytest.approx(0.5623351446188083)

    def test_order_attached_only_where_needed(self, hyp_path, capsys):
        code = main(["entropy", "--input", hyp_path,
                     "--measure", "strong_shannon_hyp",
                     "--measure", "renyi_hyp", "--order", "2"])
        assert code == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        shannon_row = lines[1].split(",")
        renyi_row = lines[2].split(",")
        assert shannon_row[1] == "" and shannon_row[2] == ""
        assert renyi_row[1] == "2" and renyi_row[2] == "2"
        assert float(renyi_row[4]) == pytest.approx(0.4700036292457356)

    def test_hyperbolic_order_components(self, hyp_path, capsys):
        code = main(["entropy", "--input", hyp_path,
                     "--measure", "renyi_hyp", "--order", "0.5,2"])
        assert code == EXIT_OK
        row = capsys.readouterr().out.splitlines()[1].split(",")
        assert row[1] == "0.5" and row[2] == "2"

    def test_json_format(self, real_path, capsys):
        code = main(["entropy", "--input", real_path,
                     "--measure", "shannon", "--format", "json"])
        assert code == EXIT_OK
        rows = json.loads(capsys.readouterr().out)
        assert rows[0]["measure"] == "shannon"

    def test_unit_k_basis(self, hyp_path, capsys):
        code = main(["entropy", "--input", hyp_path,
                     "--measure", "strong_shannon_hyp", "--basis", "unit-k"])
        assert code == EXIT_OK
        row = capsys.readouterr().out.splitlines()[1].split(",")
        x1, x2 = 0.6931471805599453, 0.5623351446188083
        assert float(row[3]) == pytest.approx((x1 + x2) / 2)
        assert float(row[4]) == pytest.approx((x1 - x2) / 2)

    def test_invalid_distribution_exits_2(self, bad_path, capsys):
        code = main(["entropy", "--input", bad_path, "--measure", "shannon"])
        assert code == EXIT_VALIDATION
        assert "SumInvalid" in capsys.readouterr().err

    def test_missing_file_exits_1(self, tmp_path):
        code = main(["entropy", "--input", str(tmp_path / "nope.json"),
                     "--measure", "shannon"])
        assert code == EXIT_IO

    def test_missing_order_exits_2(self, real_path):
        code = main(["entropy", "--input", real_path, "--measure", "renyi"])
        assert code == EXIT_VALIDATION

    def test_real_measure_on_hyperbolic_input_exits_2(self, hyp_path):
        code = main(["entropy", "--input", hyp_path, "--measure", "shannon"])
        assert code == EXIT_VALIDATION


class TestStabilityCommand:
    ARGS = ["stability", "--family", "CertaintySpread",
            "--family", "RandomSmooth", "--N-grid", "10,100",
            "--delta-grid", "0.01", "--measure", "shannon",
            "--measure", "renyi", "--order", "0.5", "--seed", "7"]

    def test_deterministic_byte_identical(self, tmp_path):
        out1 = tmp_path / "a.csv"
        out2 = tmp_path / "b.csv"
        assert main(self.ARGS + ["--output", str(out1)]) == EXIT_OK
        assert main(self.ARGS + ["--output", str(out2)]) == EXIT_OK
        assert out1.read_bytes() == out2.read_bytes()

    def test_csv_round_trip(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(self.ARGS + ["--output", str(out)]) == EXIT_OK
        parsed = records_from_csv(out.read_text())
        expected = stability_sweep(SweepConfig(
            families=["CertaintySpread", "RandomSmooth"],
            n_grid=[10, 100],
            delta_grid=[0.01],
            measures=[("shannon", None), ("renyi", embed_real(0.5))],
            seed=7,
        ))
        assert parsed == expected

    def test_round_trip_is_exact_not_approximate(self):
        records = stability_sweep(SweepConfig(
            families=["RandomSmooth"], n_grid=[37], delta_grid=[0.013],
            measures=[("renyi", embed_real(0.5))], seed=123,
        ))
        assert records_from_csv(records_to_csv(records)) == records

    def test_json_format(self, capsys):
        code = main(self.ARGS + ["--format", "json"])
        assert code == EXIT_OK
        rows = json.loads(capsys.readouterr().out)
        assert len(rows) == 8
        assert {row["family"] for row in rows} \
            == {"CertaintySpread", "RandomSmooth"}

    def test_header(self, capsys):
        assert main(self.ARGS) == EXIT_OK
        header = capsys.readouterr().out.splitlines()[0]
        assert header == ("family,measure,order_e1,order_e2,N,delta,"
                          "norm_e1,norm_e2,ratio_e1,ratio_e2,error")

    def test_empty_grid_exits_2(self):
        code = main(["stability", "--family", "CertaintySpread",
                     "--N-grid", "", "--delta-grid", "0.01",
                     "--measure", "shannon"])
        assert code == EXIT_VALIDATION


class TestLimitsCommand:
    def test_fixture_converges(self, hyp_path, capsys):
        code = main(["limits", "--input", hyp_path])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert "0.69314718055994529" in out
        assert "0.56233514461880829" in out

    def test_real_input_embeds(self, real_path, capsys):
        code = main(["limits", "--input", real_path])
        assert code == EXIT_OK
        assert "0.69314718055994529" in capsys.readouterr().out

    def test_zero_component_exits_2(self, tmp_path):
        path = tmp_path / "zero.json"
        path.write_text("[1.0, 0.0]")
        assert main(["limits", "--input", str(path)]) == EXIT_VALIDATION


class TestVerifyCommand:
    def test_clean_build_passes(self, capsys):
        code = main(["verify"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "FAIL" not in out
        assert out.strip().splitlines()[-1].startswith("OK")

    def test_deterministic_report(self, tmp_path):
        out1 = tmp_path / "v1.txt"
        out2 = tmp_path / "v2.txt"
        assert main(["verify", "--seed", "12345", "--output", str(out1)]) == EXIT_OK
        assert main(["verify", "--seed", "12345", "--output", str(out2)]) == EXIT_OK
        assert out1.read_bytes() == out2.read_bytes()

    def test_good_fixture_validates(self, hyp_path, capsys):
        code = main(["verify", "--input", hyp_path])
        assert code == EXIT_OK
        assert "PASS input-validates" in capsys.readouterr().out

    def test_fault_fixture_exits_4(self, bad_path, capsys):
        code = main(["verify", "--input", bad_path])
        out = capsys.readouterr().out
        assert code == EXIT_INVARIANT
        assert "FAIL input-validates" in out
        assert "SumInvalid" in out


class TestExitCodeContract:
    def test_codes_are_distinct(self):
        codes = {EXIT_OK, EXIT_IO, EXIT_VALIDATION, EXIT_NONCONVERGENT,
                 EXIT_INVARIANT}
        assert codes == {0, 1, 2, 3, 4}
