import json

import pytest

from app.cli import main
from app.cli.base import EXIT_FAILURE, EXIT_OK, EXIT_USAGE
from app.schemas.base import DefaultResponse
from app.schemas.orbit import SigmaCheckSchema


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _payload(out):
    return json.loads(out)["payload"]


def _w(rank):
    return json.dumps([0] * (rank - 1) + [1])


def test_orbit_count(capsys):
    code, out, _ = _run(capsys, "orbits", "count", "--n", "7")
    assert code == EXIT_OK
    payload = _payload(out)
    assert payload["formula"] == payload["enumerated"] == 2
    assert payload["agree"]


def test_orbit_enumerate_kummer(capsys):
    code, out, _ = _run(capsys, "orbits", "enumerate", "--n", "3", "--kind", "kummer")
    assert code == EXIT_OK
    assert all(c["kind"] == "kummer" for c in _payload(out))


def test_lattice_info(capsys):
    code, out, _ = _run(capsys, "lattice", "info", "--name", "KummerLambda", "--n", "3")
    assert code == EXIT_OK
    payload = _payload(out)
    assert payload["disc"] == [8]
    assert payload["rank"] == 7
    assert payload["signature"] == [3, 4]


def test_lattice_info_mukai(capsys):
    code, out, _ = _run(capsys, "lattice", "info", "--name", "Mukai", "--n", "4")
    assert code == EXIT_OK
    assert _payload(out)["mukai"]["verified"]


def test_sigma_check(capsys):
    code, out, _ = _run(capsys, "sigma", "check", "--n", "7", "--kind", "hilbert", "--vector", _w(23))
    assert code == EXIT_OK
    assert _payload(out)["in_sigma"]


def test_sigma_check_rejects(capsys):
    vector = json.dumps([0] * 16 + [1] + [0] * 6)
    code, out, _ = _run(capsys, "sigma", "check", "--n", "7", "--kind", "hilbert", "--vector", vector)
    assert code == EXIT_FAILURE
    payload = _payload(out)
    assert not payload["in_sigma"]
    assert payload["reasons"]


def test_f_invariant(capsys):
    code, out, _ = _run(capsys, "f-invariant", "--n", "3", "--kind", "kummer", "--vector", _w(7))
    assert code == EXIT_OK
    assert _payload(out)["orbit_class"]["n"] == 3


def test_bad_vector_is_a_usage_error(capsys):
    code, out, err = _run(capsys, "sigma", "check", "--n", "7", "--kind", "hilbert", "--vector", "[1, 2")
    assert code == EXIT_USAGE
    assert out == ""
    assert json.loads(err)["error"]


def test_wrong_length_is_a_usage_error(capsys):
    code, _, _ = _run(capsys, "sigma", "check", "--n", "7", "--kind", "hilbert", "--vector", "[1, 2]")
    assert code == EXIT_USAGE


def test_unknown_command(capsys):
    code, _, _ = _run(capsys, "frobnicate")
    assert code == EXIT_USAGE


def test_help(capsys):
    code, out, _ = _run(capsys, "--help")
    assert code == EXIT_OK
    assert "density" in out


def test_embed_found(capsys):
    code, out, _ = _run(capsys, "embed", "find", "--source", "[[-2]]", "--target", "E8m")
    assert code == EXIT_OK
    payload = _payload(out)
    assert payload["found"]
    assert payload["image_gram"] == [[-2]]
    assert payload["saturated"]


def test_embed_into_huge_parameter(capsys):
    n = str(10**19)
    code, out, _ = _run(capsys, "embed", "find", "--source", "[[2]]", "--target", "KummerLambda", "--n", n)
    assert code == EXIT_OK
    payload = _payload(out)
    assert payload["found"]
    assert payload["image_gram"] == [[2]]


def test_embed_absent(capsys):
    code, out, _ = _run(capsys, "embed", "find", "--source", "[[4]]", "--target", "E8m")
    assert code == EXIT_FAILURE
    assert not _payload(out)["found"]


def test_wedge_verify(capsys):
    code, out, _ = _run(capsys, "wedge", "verify", "--sweep", "50")
    assert code == EXIT_OK
    payload = _payload(out)
    assert payload["psi"]["det_psi"] == -1
    assert payload["tau"]["in_W"] and not payload["tau"]["in_N"]
    assert payload["psi"]["block_structure"]["identity_on_fixed"]
    assert payload["psi"]["block_structure"]["minus_identity_on_negated"]
    assert payload["psi"]["reverses_positive_cone"]
    assert payload["tau_witness_holds"]


def test_wedge_verify_positive_convention(capsys):
    code, out, _ = _run(capsys, "wedge", "verify", "--sign", "1", "--sweep", "10")
    assert code == EXIT_OK
    payload = _payload(out)
    assert payload["tau"]["sign"] == 1
    assert payload["tau_witness_holds"]


DENSITY = ["density", "run", "--n", "2", "--kind", "hilbert", "--trials", "2", "--epsilon", "1.0",
           "--kmax", "8", "--seed", "42", "--no-timing"]


def test_density_is_deterministic(capsys):
    first = _run(capsys, *DENSITY)
    second = _run(capsys, *DENSITY)
    assert first[0] == second[0] == EXIT_OK
    assert first[1] == second[1]
    lines = first[1].splitlines()
    assert lines[0].split(",")[0] == "trial"
    assert len(lines) == 3


def test_density_out_and_config(capsys, tmp_path):
    config = tmp_path / "density.yaml"
    config.write_text("n: 2\nkind: hilbert\ntrials: 2\nepsilon: 1.0\nkmax: 8\nseed: 42\n", encoding="utf-8")
    out_file = tmp_path / "rows.csv"
    code, out, _ = _run(capsys, "density", "run", "--config", str(config), "--out", str(out_file), "--no-timing")
    assert code == EXIT_OK
    assert out == ""
    reference = _run(capsys, *DENSITY)[1]
    assert out_file.read_text(encoding="utf-8") == reference


def test_density_bad_config(capsys, tmp_path):
    config = tmp_path / "density.yaml"
    config.write_text("n: 2\nkind: hilbert\ntrials: 1\nepsilon: 1.0\ncolour: red\n", encoding="utf-8")
    code, _, err = _run(capsys, "density", "run", "--config", str(config))
    assert code == EXIT_USAGE
    assert json.loads(err)["error"]


def test_density_missing_config(capsys, tmp_path):
    code, _, _ = _run(capsys, "density", "run", "--config", str(tmp_path / "absent.yaml"))
    assert code == EXIT_USAGE


def test_big_integers_serialize_as_strings():
    big = 2 ** 70
    check = SigmaCheckSchema(n=2, kind="hilbert", vector=[big, -big, 5], in_sigma=False)
    dumped = json.loads(DefaultResponse(payload=check).model_dump_json())
    assert dumped["payload"]["vector"] == [str(big), str(-big), 5]


@pytest.mark.slow
def test_selftest(capsys):
    code, out, _ = _run(capsys, "selftest")
    assert code == EXIT_OK
    assert _payload(out)["passed"]
