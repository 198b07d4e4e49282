import json

import pytest

import cli
from utils import config

SAMPLE = "16x^7-12x^5+5x^4+3x^2"


def test_matrix_text(capsys) -> None:
    assert cli.main(["matrix", "--from", "monomial", "--to", "laguerre", "--n", "3", "--m", "1"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines() == [
        "# monomial[1..3] -> laguerre:desc[1..3]",
        " -1  -4 -18",
        "  0   2  18",
        "  0   0  -6",
    ]


def test_matrix_csv_and_json(capsys) -> None:
    args = ["matrix", "--from", "x", "--to", "l", "--n", "3", "--m", "1"]
    cli.main(args + ["--format", "csv"])
    assert capsys.readouterr().out == "-1,-4,-18\n0,2,18\n0,0,-6\n"
    cli.main(args + ["--format", "json", "--decimal", "1"])
    document = json.loads(capsys.readouterr().out)
    assert document["shape"] == "upper"
    assert document["entries"][0] == ["-1", "-4", "-18"]
    assert document["decimal"][2] == ["0.0", "0.0", "-6.0"]


def test_matrix_compose_route(capsys) -> None:
    args = ["matrix", "--from", "p*", "--to", "b:asc", "--n", "4", "--format", "csv"]
    cli.main(args)
    hub = capsys.readouterr().out
    cli.main(args + ["--route", "compose"])
    assert capsys.readouterr().out == hub


def test_matrix_with_descriptor_window(capsys) -> None:
    args = ["matrix", "--from", "chebyshev_t@5,3", "--to", "monomial", "--format", "json"]
    assert cli.main(args + ["--n", "5", "--m", "3"]) == cli.EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["entries"] == [["4", "-20"], ["0", "16"]]
    assert cli.main(args) == cli.EXIT_OK
    assert json.loads(capsys.readouterr().out) == document


def test_convert_splits_parity(capsys) -> None:
    assert cli.main(["convert", SAMPLE, "--to", "zernike"]) == cli.EXIT_OK
    assert capsys.readouterr().out.splitlines() == [
        "zernike:desc[2..4 step 2]: (27/4, 5/4)",
        "zernike:desc[5..7 step 2]: (12/7, 16/7)",
    ]


def test_convert_json(capsys) -> None:
    cli.main(["convert", SAMPLE, "--to", "b:asc", "--format", "json", "--decimal", "2"])
    document = json.loads(capsys.readouterr().out)
    assert document["polynomial"] == SAMPLE
    (part,) = document["parts"]
    assert part["basis"] == "bernstein:asc[2..7]"
    assert part["coords"] == ["1/7", "3/7", "1", "11/7", "6/7", "12"]
    assert part["decimal"][0] == "0.14"


def test_convert_without_split_fails(capsys) -> None:
    assert cli.main(["convert", SAMPLE, "--to", "zernike", "--no-split"]) == cli.EXIT_USAGE
    assert "error:" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["convert", "3y", "--to", "b"],
        ["convert", "x^2", "--to", "w"],
        ["matrix", "--from", "b", "--to", "l", "--n", "3", "--m", "4"],
        ["matrix", "--from", "t:alt:neg", "--to", "x", "--n", "3"],
        ["matrix", "--from", "b", "--to", "l"],
        ["matrix", "--from", "t@5,3", "--to", "x", "--n", "7"],
    ],
)
def test_domain_errors_exit_with_usage(argv, capsys) -> None:
    assert cli.main(argv) == cli.EXIT_USAGE
    assert capsys.readouterr().err.startswith("error:")


def test_degree_limit(monkeypatch, capsys) -> None:
    monkeypatch.setattr(config, "MAX_DEGREE", 5)
    assert cli.main(["matrix", "--from", "b", "--to", "l", "--n", "10"]) == cli.EXIT_USAGE
    assert cli.main(["verify", "oracle", "--max-n", "6"]) == cli.EXIT_USAGE
    assert "POLYBASIS_MAX_DEGREE" in capsys.readouterr().err


def test_missing_arguments() -> None:
    with pytest.raises(SystemExit):
        cli.main(["matrix", "--from", "b", "--n", "3"])
    with pytest.raises(SystemExit):
        cli.main(["verify", "everything"])


def test_verify(capsys) -> None:
    assert cli.main(["verify", "fixtures"]) == cli.EXIT_OK
    assert capsys.readouterr().out.startswith("fixtures: passed, ")


def test_list(capsys) -> None:
    assert cli.main(["list"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "bernstein" in out and "[p*]" in out
    assert "orientations: asc, desc" in out
    assert "case-studies" in out
