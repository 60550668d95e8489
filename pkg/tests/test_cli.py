import csv
import io
import json
from fractions import Fraction

import pytest
from mpmath import mpf

from conftest import AIRY_ZEROS, AIRY_ZETA, BESSEL0_FIRST_ZERO, ref
from szeta.cli import RunConfig, main, parse_range, resolve_digits
from szeta.errors import ParameterError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def records(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_values_bessel_half(capsys):
    rows = records(capsys, "values", "bessel", "--nu", "0.5", "--quantity", "mzv2n", "--n", "0..4")
    expected = [1, Fraction(1, 6), Fraction(1, 120), Fraction(1, 5040), Fraction(1, 362880)]
    assert [row["n"] for row in rows] == [0, 1, 2, 3, 4]
    for row, exact in zip(rows, expected):
        assert set(row) == {"quantity", "parameters", "n", "k", "value", "error_bound", "provenance"}
        assert row["error_bound"] == "exact" and row["provenance"] == "closed-form"
        assert abs(mpf(row["value"]) - mpf(exact.numerator) / exact.denominator) < mpf(10) ** -49


def test_values_airy_zeta(capsys):
    rows = records(capsys, "values", "airy", "--quantity", "zeta", "--n", "2..4")
    for row in rows:
        assert abs(mpf(row["value"]) - ref(AIRY_ZETA[row["n"]])) < mpf(10) ** -40
        assert row["error_bound"] != "exact"


def test_values_hyper(capsys):
    (row,) = records(capsys, "values", "hyper", "--a", "1", "--b", "1", "--quantity", "mzv2n", "--n", "1")
    assert row["value"].startswith("-0.08333333")


def test_zeros(capsys):
    rows = records(capsys, "zeros", "airy", "--count", "3")
    for row, text in zip(rows, AIRY_ZEROS):
        assert abs(mpf(row["value"]) - ref(text)) < mpf(10) ** -40
    rows = records(capsys, "zeros", "bessel", "--nu", "0.5", "--count", "2")
    assert rows[0]["value"].startswith("3.14159") and rows[1]["value"].startswith("6.28318")
    (row,) = records(capsys, "zeros", "bessel", "--nu", "0", "--count", "1")
    assert abs(mpf(row["value"]) - ref(BESSEL0_FIRST_ZERO)) < mpf(10) ** -40


def test_csv_has_header(capsys):
    code, out, _ = run(capsys, "values", "bessel", "--nu", "1/2", "--quantity", "mzv2n", "--n", "0..1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["quantity", "parameters", "n", "k", "value", "error_bound", "provenance"]
    assert len(rows) == 3


def test_byte_determinism(capsys, tmp_path):
    argv = ["values", "airy", "--quantity", "mzv4n", "--n", "0..3"]
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(argv + ["--out", str(first)]) == 0
    assert main(argv + ["--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "gessel-viennot", "--max", "6")
    assert code == 0
    assert all(report["passed"] for report in json.loads(out))
    code, _, _ = run(capsys, "verify", "krein", "--nu", "0.5", "--n", "1..2")
    assert code == 0
    code, _, err = run(capsys, "verify", "lommel", "--nu", "3/2", "--max", "1")
    assert code == 1
    assert "lommel" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["values", "bessel", "--quantity", "mzv2n", "--n", "3..1"])
    assert exc.value.code != 0
    code, _, err = run(capsys, "values", "bessel", "--nu", "1/2", "--quantity", "nope", "--n", "1")
    assert code != 0 and err
    code, _, _ = run(capsys, "values", "bessel", "--nu", "1/2", "--quantity", "mzv2n", "--n", "1", "--digits", "10")
    assert code == 2


def test_digits_precedence(monkeypatch):
    monkeypatch.delenv("SZETA_DIGITS", raising=False)
    assert resolve_digits(None) == 50
    monkeypatch.setenv("SZETA_DIGITS", "30")
    assert resolve_digits(None) == 30
    assert resolve_digits(40) == 40
    monkeypatch.setenv("SZETA_DIGITS", "many")
    with pytest.raises(ParameterError):
        resolve_digits(None)


def test_env_digits_shorten_output(capsys, monkeypatch):
    monkeypatch.setenv("SZETA_DIGITS", "20")
    (row,) = records(capsys, "values", "bessel", "--nu", "1/2", "--quantity", "mzv2n", "--n", "1")
    assert len(row["value"].rstrip("7").split(".")[1]) < 25


def test_config_validation():
    with pytest.raises(ParameterError):
        RunConfig(zero_count=5)
    with pytest.raises(ParameterError):
        RunConfig(max_depth=7)
    assert parse_range("0..2") == [0, 1, 2]
    assert parse_range("3") == [3]
