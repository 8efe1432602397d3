import json

import pytest

from e6cs import characters
from e6cs.characters import character_from_json
from e6cs.cli import main
from e6cs.ring import parse_polynomial
from e6cs.tensor import CGSeries, tensor_decompose


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_char_text(capsys):
    code, out, _ = run(capsys, "char", "2,0,0,0,0,0")
    assert code == 0
    assert out.strip() == "z1^2 - z3 - z6"


def test_char_trivial(capsys):
    code, out, _ = run(capsys, "char", "0,0,0,0,0,0")
    assert code == 0
    assert out.strip() == "1"


def test_char_example_with_constant_term(capsys):
    code, out, _ = run(capsys, "char", "1,0,1,0,0,0")
    assert code == 0
    assert out.strip() == "z1*z3 - z1*z6 - z4 + 1"


def test_char_json_round_trips(capsys):
    code, out, _ = run(capsys, "char", "1,1,0,0,0,0", "--format=json")
    assert code == 0
    ch = character_from_json(json.loads(out))
    assert ch.weight == (1, 1, 0, 0, 0, 0)
    assert ch.poly == parse_polynomial("z1*z2 - z1 - z5")


def test_char_annihilator_method(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(characters.CACHE_ENV, str(tmp_path))
    characters.clear_memory_cache()
    try:
        code, out, _ = run(capsys, "char", "0,2,0,0,0,0", "--method=annihilator", "--format=json")
        assert code == 0
        assert json.loads(out)["method"] == "annihilator"
    finally:
        characters.clear_memory_cache()


def test_dim(capsys):
    code, out, _ = run(capsys, "dim", "0,0,0,1,0,0")
    assert code == 0
    assert out.strip() == "2925"


def test_eig(capsys):
    code, out, _ = run(capsys, "eig", "0,0,1,0,0,0", "--kappa=1")
    assert code == 0
    assert out.strip() == "200/3"
    code, out, _ = run(capsys, "eig", "0,0,0,0,0,0", "--kappa=7")
    assert code == 0
    assert out.strip() == "0"
    code, out, _ = run(capsys, "eig", "1,0,0,0,0,0", "--kappa=1/2")
    assert code == 0
    assert out.strip() == "56/3"


def test_tensor_text(capsys):
    code, out, _ = run(capsys, "tensor", "1,0,0,0,0,0", "1,0,0,0,0,0")
    assert code == 0
    assert out.splitlines() == [
        "(2,0,0,0,0,0) x 1",
        "(0,0,1,0,0,0) x 1",
        "(0,0,0,0,0,1) x 1",
    ]


def test_tensor_json_round_trips(capsys):
    code, out, _ = run(capsys, "tensor", "0,1,0,0,0,0", "0,0,1,0,0,0", "--json")
    assert code == 0
    series = CGSeries.from_json(json.loads(out))
    assert series == tensor_decompose((0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0))


def test_monomial(capsys):
    code, out, _ = run(capsys, "monomial", "0,0,0,0,0,1")
    assert code == 0
    assert out.strip() == "(0,0,0,0,0,1) x 1"


def test_monomial_z1z2z3(capsys):
    code, out, _ = run(capsys, "monomial", "1,1,1,0,0,0")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 13
    assert "(1,0,0,0,0,1) x 5" in lines


def test_delta(capsys):
    code, out, _ = run(capsys, "delta", "z1")
    assert code == 0 and out.strip() == "104/3*z1"
    code, out, _ = run(capsys, "delta", "1")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "delta", "z1^2")
    assert code == 0 and out.strip() == "224/3*z1^2 - 8*z3 - 40*z6"


def test_usage_errors_exit_2(capsys):
    for argv in [("dim", "1,2,3"),
                 ("char", "1,0,0,0,0,x"),
                 ("char", "-1,0,0,0,0,0"),
                 ("eig", "1,0,0,0,0,0", "--kappa=z"),
                 ("delta", "z1 +"),
                 ("bogus",)]:
        with pytest.raises(SystemExit) as err:
            main(list(argv))
        assert err.value.code == 2


def test_computation_error_exits_1(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(characters.CACHE_ENV, str(tmp_path))
    characters.clear_memory_cache()
    try:
        assert main(["char", "2,0,0,0,0,0"]) == 0
        capsys.readouterr()
        path = characters.cache_path((2, 0, 0, 0, 0, 0))
        payload = json.loads(path.read_text())
        payload["terms"][0]["coef"] = "3"
        path.write_text(json.dumps(payload))
        characters.clear_memory_cache()
        code, _, err = run(capsys, "char", "2,0,0,0,0,0")
        assert code == 1
        assert "error:" in err
    finally:
        characters.clear_memory_cache()


def test_verify_roots_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite=roots")
    assert code == 0
    assert "FAIL" not in out
    assert "checks passed" in out


def test_verify_dims_suite_vacuous_on_empty_cache(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(characters.CACHE_ENV, str(tmp_path))
    characters.clear_memory_cache()
    try:
        code, out, _ = run(capsys, "verify", "--suite=dims")
        assert code == 0
        assert "cached entries swept: 0" in out
    finally:
        characters.clear_memory_cache()


def test_cache_admin(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(characters.CACHE_ENV, str(tmp_path))
    characters.clear_memory_cache()
    try:
        run(capsys, "char", "1,0,0,0,0,1")
        code, out, _ = run(capsys, "cache", "info")
        assert code == 0
        assert str(tmp_path) in out and "entries: 1" in out
        code, out, _ = run(capsys, "cache", "validate")
        assert code == 0 and "validated 1" in out
        code, out, _ = run(capsys, "cache", "clear")
        assert code == 0 and "removed 1" in out
        code, out, _ = run(capsys, "cache", "info")
        assert "entries: 0" in out
    finally:
        characters.clear_memory_cache()
