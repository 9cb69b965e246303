"""Test the command line frontend end to end"""
import io
import json

import pytest

from cli import RunConfig, main, run
from data.corpus import ACCEPTANCE_POLYNOMIALS


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out_stream=out, err_stream=err)
    return code, out.getvalue(), err.getvalue()


def test_classify_json():
    code, out, _ = call(["classify", "t^3 - 2t^2 - t + 2", "--json"])
    payload = json.loads(out)

    assert code == 0
    assert payload["numerical"] == "SpectrallyPerron"
    assert payload["theorem"] is None
    assert abs(payload["rho"] - 2.0) < 1e-9
    assert len(payload["spectrum"]["roots"]) == 3


@pytest.mark.parametrize(
    "text, expected",
    [
        ("t^5", "NotPerron (d = 0, nilpotent companion)"),
        ("t^3 - 2t^2 - t + 2", "SpectrallyPerron (theorems inapplicable, rho = 2)"),
        ("t - 3", "SpectrallyPerron (d = 1, rho = 3)"),
        ("t^2 - 1", "WeaklySpectrallyPerron (d = 2, rho = 1, 2 peripheral roots)"),
    ],
)
def test_classify_text(text, expected):
    code, out, _ = call(["classify", text])
    assert code == 0
    assert out == expected + "\n"


def test_crosscheck_coeffs():
    code, out, _ = call(["crosscheck", "--coeffs", "1,0,-2,0,-3"])
    assert code == 0
    assert out == "t^4 - 2t^2 - 3: theorem WeaklySpectrallyPerron, numerical WeaklySpectrallyPerron, agree = true\n"


def test_zero_eps_snaps_coefficients():
    code, out, _ = call(["crosscheck", "--coeffs", "1,1e-14,-1", "--zero-eps", "1e-12", "--json"])
    assert code == 0
    assert json.loads(out)["d"] == 2


def test_sweep_is_deterministic():
    argv = ["sweep", "--degree", "6", "--budget", "200", "--seed", "7", "--json"]
    first = call(argv)
    second = call(argv)

    assert first[0] == 0
    assert first[1] == second[1]
    payload = json.loads(first[1])
    assert payload["seed"] == 7
    assert payload["summary"]["disagreements"] == 0
    assert payload["summary"]["count"] == len(payload["instances"])


def test_sweep_text():
    code, out, _ = call(["sweep", "--degree", "2", "--grid", "0,1"])
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "t^2: NotPerron (d = 0, nilpotent companion)"
    assert lines[-1] == "4 instances, 0 disagreement(s)"


def test_search_json():
    code, out, _ = call(["search", "--degree", "3", "--grid=-2,-1,0,1,2", "--json"])
    payload = json.loads(out)

    assert code == 0
    assert "t^3 - 2t^2 - t + 2" in [instance["poly"] for instance in payload["instances"]]


def test_dump():
    code, out, _ = call(["dump", "t^2 - t - 1"])
    assert code == 0
    assert out == "0 1\n1 1\n# A^1 is nonneg\n"

    code, out, _ = call(["dump", "t^2 - t - 1", "--dump-digraph"])
    assert out == "1 -> 2\n2 -> 1\n2 -> 2\n"


@pytest.mark.parametrize("command", ["classify", "crosscheck"])
def test_json_includes_dumps(command):
    code, out, _ = call([command, "t^2 - t - 1", "--json", "--dump-matrix", "--dump-digraph"])
    payload = json.loads(out)

    assert code == 0
    assert payload["matrix"] == [[0.0, 1.0], [1.0, 1.0]]
    assert payload["digraph"] == [[1, 2], [2, 1], [2, 2]]

    _, out, _ = call([command, "t^2 - t - 1", "--json"])
    assert "matrix" not in json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [
        ["classify"],
        ["frobnicate", "t^2"],
        ["classify", "t^2 + y"],
        ["classify", "t^2", "--coeffs", "1,0"],
        ["sweep", "--degree", "0"],
        ["sweep", "--grid", "a,b"],
        ["sweep", "--seed", "-1"],
    ],
)
def test_usage_errors_exit_two(argv):
    code, _, _ = call(argv)
    assert code == 2


def test_run_reports_errors():
    err = io.StringIO()
    code = run(RunConfig(command="classify", poly_text="t^2 + $"), io.StringIO(), err)
    assert code == 2
    assert err.getvalue().startswith("error:")


def test_sweep_small_grid_exit_zero():
    code, out, _ = call(["sweep", "--degree", "4", "--grid", "0,1,2", "--json"])
    payload = json.loads(out)

    assert code == 0
    assert len(payload["instances"]) == 81
    assert all(instance["agree"] for instance in payload["instances"])


@pytest.mark.parametrize("text", ACCEPTANCE_POLYNOMIALS)
def test_crosscheck_acceptance_corpus_exit_zero(text):
    code, _, _ = call(["crosscheck", text])
    assert code == 0
