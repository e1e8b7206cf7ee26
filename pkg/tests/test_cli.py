import io
import json
import subprocess
import sys

import jsonschema
import pytest

from superjac.cli import EXIT_INPUT, EXIT_INTERNAL, EXIT_OK, load_schema, run

SCHEMA = load_schema()


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def report(*argv):
    code, out, err = call(*argv, "--json")
    assert code == EXIT_OK, err
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    return data


def test_schema_is_a_valid_schema():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)
    code, out, _ = call("--schema")
    assert code == EXIT_OK and json.loads(out) == SCHEMA


def test_analyze_flagship():
    r = report("analyze", "--p", "3", "--f", "x^5-x-1")
    c = r["conclusions"]
    assert c["maximal_commutative"] and c["fermat_full_ring"] and c["hodge_flag"]
    assert c["jacobian_dimension"] == 4 == r["genus"]
    assert r["galois"]["source"] == "Certified" and r["galois"]["group"] == "S_n"
    assert r["schema_version"] == "1.0"


def test_analyze_over_finite_field_warns():
    r = report("analyze", "--p", "3", "--f", "x^6 + x + 1 mod 7")
    assert r["warnings"] and r["conclusions"]["failing_gates"][0] == "base_char_zero"


def test_module_command():
    r = report("module", "--n", "5", "--p", "3")
    m = r["module"]
    assert m["dim"] == 4 and m["absolutely_simple"] and m["submodules"]["dims"] == [0, 4]
    assert m["very_simple"]["status"] == "VerySimple" and m["very_simple"]["route"] == "superp(iv)"


def test_basis_command():
    r = report("basis", "--n", "5", "--p", "3")
    assert [(e["a"], e["b"], e["eigen_exponent"]) for e in r["curve"]["basis"]] == [(0, 1, 2), (0, 2, 1), (1, 2, 1), (2, 2, 1)]


def test_galois_and_reduce_commands():
    g = report("galois", "--f", "x^5 - x - 1")
    assert g["galois"]["verdict"] == "SymmetricGroup" and g["galois"]["disc"] == "2869"
    r = report("reduce", "--p", "3", "--f", "x^6+x+1 mod 7", "--alpha", "5")
    assert r["reduction"]["degree"] == 5 and r["reduction"]["genus_after"] == r["genus"] == 4


def test_byte_identical_output():
    for argv in (("analyze", "--p", "3", "--f", "x^5-x-1", "--seed", "7"), ("module", "--n", "7", "--p", "5")):
        assert call(*argv, "--json")[1] == call(*argv, "--json")[1]


@pytest.mark.parametrize(
    "argv",
    [
        ("analyze", "--p", "3"),
        ("analyze", "--p", "3", "--f", "x^^2"),
        ("analyze", "--p", "4", "--f", "x^5-x-1"),
        ("basis", "--n", "3", "--p", "3"),
        ("basis", "--n", "5", "--p", "2"),
        ("reduce", "--p", "3", "--f", "x^5-x-1"),
        ("galois", "--f", "x^5 mod 7"),
        ("module", "--n", "5"),
        ("bogus",),
        (),
    ],
)
def test_input_errors_exit_2(argv):
    code, _, err = call(*argv)
    assert code == EXIT_INPUT and err


def test_internal_failure_exit_3(monkeypatch):
    import superjac.cli as cli

    def boom(args):
        raise AssertionError("invariant broken")

    monkeypatch.setitem(cli.COMMANDS, "basis", boom)
    code, _, err = call("basis", "--n", "5", "--p", "3")
    assert code == EXIT_INTERNAL and "invariant broken" in err


def test_text_output_is_aligned():
    code, out, _ = call("basis", "--n", "5", "--p", "3")
    lines = out.splitlines()
    assert code == EXIT_OK and lines
    col = {len(line) - len(line.split("  ", 1)[1].lstrip()) for line in lines if "  " in line}
    assert len(lines) > 3 and min(col) > 0


def test_version_and_basis_warning():
    code, out, _ = call("--version")
    assert code == EXIT_OK and out.startswith("superjac ")
    r = report("basis", "--n", "6", "--p", "3")
    assert r["warnings"] and r["curve"]["multiplicities"]["computed_on_degree"] == 5


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "superjac", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and "superjac" in out.stdout
