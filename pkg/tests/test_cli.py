"""
Tests for the command-line runner
"""
import json

import pytest

from src.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, UsageError, parse_substitutions, run_command
from src.config import settings
from src.scalar import Scalar

FAILING = """
hdga 1
presentation A
  gen x deg 0
  rel: d(x)*x = q^2*x*d(x)
end
expect dga A pass
"""


@pytest.fixture
def gl1_file():
    return str(settings.catalog_dir / "gl1.hdga")


def test_check_passes_on_a_shipped_document(gl1_file, capsys):
    assert run_command(["check", gl1_file]) == EXIT_OK
    out = capsys.readouterr().out
    assert "3/3 checks passed" in out


def test_check_json_output(gl1_file, capsys):
    assert run_command(["check", gl1_file, "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema"] == "hdga-report/1"
    assert all(r["status"] == "pass" for r in payload["records"])


def test_mismatch_exit_status(tmp_path, capsys):
    path = tmp_path / "failing.hdga"
    path.write_text(FAILING, encoding="utf-8")
    assert run_command(["check", str(path)]) == EXIT_MISMATCH
    assert "FAIL expect.dga [A]" in capsys.readouterr().out


def test_parse_errors_are_usage_errors(tmp_path, capsys):
    path = tmp_path / "bad.hdga"
    path.write_text("hdga 1\npresentation A\n  gen x deg 0\n  rel: x*y = 1\nend\n", encoding="utf-8")
    assert run_command(["check", str(path)]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "bad.hdga" in err
    assert "4:10" in err


def test_missing_file_and_bad_arguments(tmp_path, gl1_file):
    assert run_command(["check", str(tmp_path / "absent.hdga")]) == EXIT_USAGE
    assert run_command(["check", gl1_file, "--subst", "q"]) == EXIT_USAGE
    assert run_command(["frobnicate"]) == EXIT_USAGE
    assert run_command(["catalog", "gl3_frt"]) == EXIT_USAGE


def test_reduce_prints_the_normal_form(capsys):
    path = str(settings.catalog_dir / "gl2.hdga")
    assert run_command(["reduce", path, "-e", "d(a)*d"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "d*d(a)"


def test_reduce_with_substitution(gl1_file, capsys):
    assert run_command(["reduce", gl1_file, "-e", "d(t)*t", "--subst", "q=2"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "4*t*d(t)"


def test_build_writes_the_recipe_result(tmp_path):
    output = tmp_path / "built.hdga"
    path = str(settings.catalog_dir / "Uqb.hdga")
    assert run_command(["build", path, "-o", str(output)]) == EXIT_OK
    text = output.read_text(encoding="utf-8")
    assert text.startswith("hdga 1")
    assert "coproduct y" in text


def test_catalog_listing_and_schema(capsys):
    assert run_command(["catalog"]) == EXIT_OK
    listing = capsys.readouterr().out
    assert "borel_bplus" in listing
    assert "su2_mirror" in listing
    assert run_command(["schema"]) == EXIT_OK
    schema = json.loads(capsys.readouterr().out)
    assert "records" in schema["properties"]


def test_parse_substitutions():
    assert parse_substitutions(["q=1", "lam = 1/2"]) == {"q": Scalar.one(), "lam": Scalar.parse("1/2")}
    with pytest.raises(UsageError):
        parse_substitutions(["=2"])
