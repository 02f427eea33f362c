"""Command-line interface."""

import json

import pytest

from confsurf.cli import build_parser, main
from confsurf.surface import clear_space_cache


@pytest.fixture(autouse=True)
def fresh_cache():
    clear_space_cache()
    yield
    clear_space_cache()


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_basis_json(capsys):
    code, out = run(capsys, ["--json", "basis", "--n", "2", "--g", "1"])
    assert code == 0
    data = json.loads(out)
    assert data == {"n": 2, "g": 1, "ambient_dim": 6,
                    "kernel_rank": 1, "quotient_dim": 5}


def test_basis_n_zero(capsys):
    code, out = run(capsys, ["--json", "basis", "--n", "0", "--g", "2"])
    assert code == 0
    assert json.loads(out)["quotient_dim"] == 1


def test_delta_word_and_zeta(capsys):
    code, out = run(capsys, ["--json", "delta", "--n", "2", "--g", "1",
                             "--word", "1,-1"])
    assert code == 0
    data = json.loads(out)
    assert data["hclass"] and not data["surface_zero"]
    # the relator itself dies on the closed surface
    code, out = run(capsys, ["--json", "delta", "--n", "2", "--g", "1",
                             "--zeta"])
    assert json.loads(out)["surface_zero"]


def test_delta_mu_boundary(capsys):
    _, out = run(capsys, ["--json", "delta", "--n", "2", "--g", "2", "--mu"])
    assert json.loads(out)["surface_zero"]
    _, out = run(capsys, ["--json", "delta", "--n", "3", "--g", "2", "--mu"])
    assert not json.loads(out)["surface_zero"]


def test_kernel_and_weights(capsys):
    code, out = run(capsys, ["--json", "kernel", "--n", "3", "--g", "2",
                             "--k", "3"])
    assert code == 0
    assert json.loads(out)["kernel_rank"] == 4
    code, out = run(capsys, ["--json", "weights", "--n", "2", "--g", "1",
                             "--w", "0"])
    assert json.loads(out)["rank"] == 1


def test_verify_single_case_json(capsys):
    code, out = run(capsys, ["--json", "verify", "A", "--n", "2", "--g", "1"])
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "verified-equal"
    assert data["theorem"] == "A"


def test_verify_fast_tier_all_green(capsys):
    for theorem in ["A", "C", "vanishing", "independence", "pairing",
                    "cyclic"]:
        code, out = run(capsys, ["--json", "verify", theorem])
        assert code == 0, (theorem, out)
        for line in out.strip().splitlines():
            assert json.loads(line)["status"] != "refuted"


def test_verify_csv_format(capsys):
    code, out = run(capsys, ["--csv", "verify", "A", "--n", "2", "--g", "1"])
    assert code == 0
    assert out.startswith("A,g=1 n=2,verified-equal")


def test_pairing_alias(capsys):
    code, out = run(capsys, ["--json", "pairing", "--n", "3", "--g", "3"])
    assert code == 0
    assert json.loads(out)["theorem"] == "pairing"


def test_cache_dir_flag_persists_kernel(tmp_path, capsys):
    cache = str(tmp_path / "cache")
    run(capsys, ["--cache-dir", cache, "basis", "--n", "2", "--g", "2"])
    files = list((tmp_path / "cache").iterdir())
    assert len(files) == 1 and files[0].name.endswith(".sub")


def test_reports_deterministic_modulo_elapsed(capsys):
    first = []
    for _ in range(2):
        clear_space_cache()
        _, out = run(capsys, ["--json", "verify", "vanishing",
                              "--n", "2", "--g", "2"])
        data = json.loads(out)
        del data["elapsed"]
        first.append(json.dumps(data, sort_keys=True))
    assert first[0] == first[1]


def test_parser_rejects_unknown_theorem():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["verify", "Z", "--g", "1"])
