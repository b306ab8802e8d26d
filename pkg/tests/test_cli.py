import csv

import pytest
from click.testing import CliRunner

from application.dto.scan_dto import SCAN_HEADER
from application.dto.verify_dto import VERIFY_HEADER
from presentation.cli.commands import cli


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, ["--no-cache", *args])


def read_rows(path):
    with open(path, newline="", encoding="utf-8") as handle:
        return list(csv.reader(handle))


class TestClassnum:
    def test_value(self, runner):
        result = invoke(runner, "classnum", "-d", "-23")
        assert result.exit_code == 0
        assert result.output == "3\n"

    def test_invalid_discriminant(self, runner):
        result = invoke(runner, "classnum", "-d", "-6")
        assert result.exit_code == 2
        assert "error:" in result.output

    def test_cache_file_is_written(self, runner, tmp_path):
        path = tmp_path / "classnum.tsv"
        result = runner.invoke(cli, ["--cache", str(path), "classnum", "-d", "-23"])
        assert result.exit_code == 0
        assert path.read_text(encoding="utf-8") == "-23\t3\n"

    def test_corrupt_cache(self, runner, tmp_path):
        path = tmp_path / "classnum.tsv"
        path.write_text("abc\n", encoding="utf-8")
        result = runner.invoke(cli, ["--cache", str(path), "classnum", "-d", "-23"])
        assert result.exit_code == 2
        assert "line 1" in result.output

    def test_database_cache(self, runner, tmp_path):
        path = tmp_path / "classnum.db"
        result = runner.invoke(cli, ["--cache", str(path), "classnum", "-d", "-47"])
        assert result.exit_code == 0
        assert result.output == "5\n"
        assert path.exists()


class TestSelfint:
    def test_exact(self, runner):
        result = invoke(runner, "selfint", "-p", "13", "-N", "3")
        assert result.exit_code == 0
        assert result.output == "-2/3\n"

    def test_with_ip(self, runner):
        result = invoke(runner, "selfint", "-p", "5", "-N", "11", "--include-ip", "--tol", "1e-8")
        assert result.exit_code == 0
        assert result.output.strip().endswith("+/- 1e-08")

    @pytest.mark.parametrize("p", ["193", "229"])
    def test_with_ip_large_units(self, runner, p):
        result = invoke(runner, "selfint", "-p", p, "-N", "3", "--include-ip")
        assert result.exit_code == 0
        assert "nan" not in result.output
        assert "inf" not in result.output

    def test_invalid_prime(self, runner):
        result = invoke(runner, "selfint", "-p", "7", "-N", "3")
        assert result.exit_code == 2
        assert "p must be a prime ≡ 1 mod 4" in result.output

    def test_ineligible(self, runner):
        result = invoke(runner, "selfint", "-p", "13", "-N", "2")
        assert result.exit_code == 2

    def test_non_squarefree(self, runner):
        assert invoke(runner, "selfint", "-p", "5", "-N", "4").exit_code == 2
        assert invoke(runner, "selfint", "-p", "5", "-N", "4", "--allow-non-squarefree").exit_code == 0


class TestScan:
    def test_table(self, runner, tmp_path):
        out = tmp_path / "scan.csv"
        result = invoke(runner, "scan", "-p", "13", "--n-max", "20", "-o", str(out))
        assert result.exit_code == 0
        assert result.output.startswith("p=13 n_max=20 rows=2 ")
        rows = read_rows(out)
        assert rows[0] == SCAN_HEADER
        assert rows[1][:3] == ["3", "true", "-2/3"]
        assert out.read_bytes().count(b"\r") == 0

    def test_empty_table(self, runner, tmp_path):
        out = tmp_path / "scan.csv"
        result = invoke(runner, "scan", "-p", "13", "--n-max", "2", "-o", str(out))
        assert result.exit_code == 0
        assert "no eligible N" in result.output
        assert read_rows(out) == [SCAN_HEADER]

    def test_same_bytes_for_any_worker_count(self, runner, tmp_path):
        serial, parallel = tmp_path / "serial.csv", tmp_path / "parallel.csv"
        invoke(runner, "scan", "-p", "13", "--n-max", "60", "--workers", "1", "-o", str(serial))
        invoke(runner, "scan", "-p", "13", "--n-max", "60", "--workers", "2", "-o", str(parallel))
        assert serial.read_bytes() == parallel.read_bytes()

    def test_unwritable_output(self, runner, tmp_path):
        out = tmp_path / "missing" / "scan.csv"
        result = invoke(runner, "scan", "-p", "13", "--n-max", "20", "-o", str(out))
        assert result.exit_code == 3


class TestVerify:
    def test_claims(self, runner, tmp_path):
        out = tmp_path / "claims.csv"
        result = invoke(runner, "verify", "-p", "13", "--n-max", "20", "--d-max", "100", "-o", str(out))
        assert result.exit_code == 0
        assert result.output.startswith("12 claims checked, ")
        rows = read_rows(out)
        assert rows[0] == VERIFY_HEADER
        assert len(rows) == 13
        assert all(row[0] == "1" for row in rows[1:])

    def test_published_robin_constant(self, runner, tmp_path):
        out = tmp_path / "claims.csv"
        result = invoke(runner, "verify", "-p", "13", "--n-max", "20", "--d-max", "100",
                        "--robin-constant", "0.6483", "-o", str(out))
        assert result.exit_code == 0
        robin = next(row for row in read_rows(out) if row[1] == "a-robin")
        assert robin[3] == "PASS"


class TestChern:
    def test_p5(self, runner):
        result = invoke(runner, "chern", "-p", "5")
        assert result.exit_code == 0
        assert "zeta_K(-1) = 1/30" in result.output

    def test_invalid_prime(self, runner):
        result = invoke(runner, "chern", "-p", "6")
        assert result.exit_code == 2
        assert "p must be a prime ≡ 1 mod 4" in result.output


class TestSurfaceBound:
    def test_constants(self, runner):
        result = invoke(runner, "surface-bound", "--c2", "4", "--ksq", "2")
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "d2 = 10"
        assert lines[1] == "-9 d2 = -90"
        assert lines[2].startswith("exact-constant bound = -86.05")

    def test_chain(self, runner):
        result = invoke(runner, "surface-bound", "--c2", "1", "--ksq", "2",
                        "--delta", "0", "--sc", "0", "--rho", "0")
        assert result.exit_code == 0
        assert "chain lower bound = -4" in result.output

    def test_partial_curve_data(self, runner):
        result = invoke(runner, "surface-bound", "--c2", "4", "--ksq", "2", "--delta", "1")
        assert result.exit_code == 2
