"""Tests for the pyrsc command-line interface"""

import json

import pytest

from pyrsc import __version__
from pyrsc.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from pyrsc.simplicial import load_complex


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])

    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_missing_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])

    assert exc.value.code == EXIT_USAGE


def test_analyze_bundled_torus(capsys):
    assert main(["analyze", "torus", "--json"]) == EXIT_OK

    report = json.loads(capsys.readouterr().out)
    assert report["f_vector"] == [7, 21, 14]
    assert report["betti"] == [1, 2, 1]
    assert report["cup_length"] == 2
    assert report["field"] == "Q"


def test_analyze_steenrod_and_components(capsys):
    assert main(["analyze", "rp2", "--sq", "--components", "2"]) == EXIT_OK

    out = capsys.readouterr().out
    assert "Sq1->H2: nonzero" in out
    assert "strong 2-components: 1" in out


def test_analyze_failed_collapse_exits_one(capsys):
    assert main(["analyze", "dunce_hat", "--collapse", "1", "--restarts", "2"]) == EXIT_FAILURE

    assert "failure" in capsys.readouterr().out


def test_thresholds(capsys):
    assert main(["thresholds", "--alpha", "0.6,0.5", "--fn", "--json"]) == EXIT_OK

    data = json.loads(capsys.readouterr().out)
    assert len(data["fowler"]) == 3
    assert data["farber_nowik"]["l"] == 2


def test_collapse(tmp_path, capsys):
    out = tmp_path / "point.cplx"
    simplex = tmp_path / "simplex.cplx"
    simplex.write_text("n 4\n0 1 2 3\n")

    assert main(["collapse", "--in", str(simplex), "--d", "0", "--out", str(out)]) == EXIT_OK
    assert load_complex(out).f_vector[0] == 1
    assert main(["collapse", "--in", "torus", "--d", "1", "--restarts", "2"]) == EXIT_FAILURE
    assert "failure" in capsys.readouterr().out


def test_count(capsys):
    assert main(["count", "--pattern", "empty_triangle", "--host", "torus"]) == EXIT_OK

    assert capsys.readouterr().out.strip() == "210 6 35"


def test_suspend(tmp_path):
    out = tmp_path / "s_rp2.cplx"

    assert main(["suspend", "--in", "rp2", "--out", str(out)]) == EXIT_OK
    assert tuple(load_complex(out).f_vector) == (7, 21, 35, 25)


def test_sample(tmp_path, capsys):
    out = tmp_path / "sample.cplx"

    args = ["sample", "--n", "12", "--alpha", "0.5,0.6", "--seed", "3", "--out", str(out)]
    assert main(args + ["--json"]) == EXIT_OK

    data = json.loads(capsys.readouterr().out)
    K = load_complex(out)
    assert K.n_vertices == 12
    assert data["f_vector"] == list(K.f_vector)


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "no_such_complex"],
        ["sample", "--n", "5"],
        ["sample", "--n", "5", "--alpha", "0.5", "--p", "0.5"],
        ["sample", "--n", "5", "--alpha", "-1"],
        ["analyze", "torus", "--field", "f4"],
    ],
)
def test_input_errors_exit_two(argv, capsys):
    assert main(argv) == EXIT_USAGE
    assert "pyrsc: error:" in capsys.readouterr().err


def test_parse_errors_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.cplx"
    bad.write_text("n 3\n0 1 7\n")

    assert main(["analyze", str(bad)]) == EXIT_USAGE
    assert "bad.cplx" in capsys.readouterr().err


def test_experiment(tmp_path, capsys):
    config = tmp_path / "exp.json"
    config.write_text(json.dumps({
        "name": "cli",
        "model": "lower",
        "n_values": [6, 8],
        "trials": 2,
        "master_seed": 5,
        "params": {"alphas": [0.5]},
        "measurements": [{"kind": "euler"}, {"kind": "betti", "field": "f2", "degree": 0}],
    }))
    out_dir = tmp_path / "out"

    assert main(["experiment", str(config), "--out-dir", str(out_dir), "--plots"]) == EXIT_OK
    assert (out_dir / "cli.csv").exists()
    assert json.loads((out_dir / "cli.json").read_text())["config"]["name"] == "cli"
    assert (out_dir / "cli_euler.svg").exists()
    assert "betti[f2,0]" in capsys.readouterr().out
    assert main(["experiment", str(config), "--check"]) == EXIT_OK


def test_experiment_with_bad_config(tmp_path):
    config = tmp_path / "exp.json"
    config.write_text(json.dumps({"model": "lower"}))

    assert main(["experiment", str(config)]) == EXIT_USAGE
    assert main(["experiment", str(tmp_path / "missing.json")]) == EXIT_USAGE


if __name__ == "__main__":
    pytest.main([__file__])
