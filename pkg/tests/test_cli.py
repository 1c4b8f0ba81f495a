import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from algslice.cli import run
from algslice.errors import DimensionMismatch, ParseError
from algslice.exactmat import IntMatrix
from algslice.matrixio import format_matrix, parse_matrix
from algslice.torus import torus_seifert_matrix


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p
    return write


# -- matrix files --------------------------------------------------------------------

def test_parse_with_comments_and_blank_lines():
    text = "# a Seifert matrix\n\n2 2\n# row one\n-1 1\n0 -1\n"
    assert parse_matrix(text) == IntMatrix.from_rows([[-1, 1], [0, -1]])


def test_parse_row_vector():
    assert parse_matrix("1 3\n1 -2 +3\n") == IntMatrix.row_vector((1, -2, 3))


def test_parse_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        parse_matrix("2 3\n1 2 3\n4 5\n")
    with pytest.raises(DimensionMismatch):
        parse_matrix("2 2\n1 2\n")


def test_parse_error_location():
    with pytest.raises(ParseError) as info:
        parse_matrix("# c\n2 2\n1 x\n3 4\n")
    assert (info.value.line, info.value.column) == (3, 3)
    with pytest.raises(ParseError):
        parse_matrix("")
    with pytest.raises(ParseError):
        parse_matrix("2\n")


def test_format_canonical():
    assert format_matrix(IntMatrix.from_rows([[0, 1], [-1, 0]])) == "2 2\n0 1\n-1 0\n"
    assert format_matrix(IntMatrix.zeros(0)) == "0 0\n"


@given(st.integers(0, 5), st.integers(0, 5), st.data())
def test_roundtrip_byte_identical(r, c, data):
    rows = data.draw(st.lists(st.lists(st.integers(-10 ** 12, 10 ** 12), min_size=c, max_size=c),
                              min_size=r, max_size=r))
    M = IntMatrix.from_rows(rows, c) if c else IntMatrix.zeros(r, 0)
    text = format_matrix(M)
    assert parse_matrix(text) == M
    assert format_matrix(parse_matrix(text)) == text


# -- subcommands ---------------------------------------------------------------------

def test_torus_writes_matrix_file(tmp_path):
    out = tmp_path / "V.mat"
    code, stdout, _ = call("torus", 4, 5, "--out", out)
    assert code == 0 and stdout == ""
    assert parse_matrix(out.read_text()) == torus_seifert_matrix(4, 5).matrix


def test_torus_json():
    code, stdout, _ = call("torus", 5, 4, "--json")
    doc = json.loads(stdout)
    assert code == 0 and (doc["p"], doc["q"], doc["genus"]) == (4, 5, 6)


def test_torus_not_coprime_is_input_error():
    code, _, err = call("torus", 4, 6)
    assert code == 2 and "invalid input" in err


def test_invariants_json(tmp_path):
    V = tmp_path / "V.mat"
    call("torus", 4, 5, "--out", V)
    code, stdout, _ = call("invariants", V, "--json", "--omega", "-1", "--omega", "1/3")
    doc = json.loads(stdout)
    assert code == 0
    assert doc["signature"] == -8 and doc["genus"] == 6 and doc["arf"] == 1
    assert doc["det_intersection"] == 1
    assert doc["tristram_levine"] == {"-1": -8, "exp(2*pi*i*1/3)": -8}


def test_invariants_text(files):
    code, stdout, _ = call("invariants", files("k.mat", "2 2\n-1 1\n0 -1\n"))
    assert code == 0
    assert "alexander=t - 1 + t^-1" in stdout
    assert "signature=-2" in stdout


def test_signature_singular_omega(files):
    code, _, err = call("signature", files("k.mat", "2 2\n-1 1\n0 -1\n"), "--omega", "1/6")
    assert code == 2


def test_signature_unsupported_omega(files):
    code, _, _ = call("signature", files("k.mat", "2 2\n-1 1\n0 -1\n"), "--omega", "1")
    assert code == 3


def test_isotropic_examples(files):
    code, stdout, _ = call("isotropic", files("h.mat", "2 2\n0 1\n1 0\n"))
    assert code == 0 and parse_matrix(stdout) == IntMatrix.row_vector((1, 0))
    code, _, err = call("isotropic", files("d.mat", "2 2\n1 0\n0 1\n"))
    assert code == 3 and "definite" in err


def test_isotropic_time_budget(files):
    code, _, _ = call("isotropic", files("a.mat", "4 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 -7\n"),
                      "--max-norm", 1000000, "--time-budget", 0.1)
    assert code == 3


def test_complete_example(files):
    J = files("J.mat", "2 2\n0 1\n-1 0\n")
    code, stdout, _ = call("complete", J, files("z.mat", "1 2\n0 1\n"))
    assert code == 0 and parse_matrix(stdout) == IntMatrix.from_rows([[0, 1], [-1, 0]])
    code, _, _ = call("complete", J, files("z2.mat", "1 2\n2 0\n"))
    assert code == 2


def test_pipeline_reverifies(tmp_path):
    V, D, S = tmp_path / "V.mat", tmp_path / "derived.json", tmp_path / "slice.json"
    assert call("torus", 4, 5, "--out", V)[0] == 0
    assert call("derive", V, "--json", "--out", D)[0] == 0
    derived = json.loads(D.read_text())
    assert derived["V_star"][0][0] == 0 and derived["g4_bound"] == 5
    assert call("certify-slice", D, "--json", "--out", S)[0] == 0
    code, stdout, _ = call("verify-certificate", S, "--json")
    assert code == 0 and json.loads(stdout)["valid"] is True
    code, stdout, _ = call("verify-certificate", D, "--json")
    assert code == 0 and json.loads(stdout)["valid"] is True
    code, stdout, _ = call("verify-metabolizer", S)
    assert code == 0 and "valid=true" in stdout


def test_verify_metabolizer_matrix_files(files):
    W = files("W.mat", "2 2\n1 0\n0 1\n")
    code, stdout, err = call("verify-metabolizer", W, files("M.mat", "1 2\n1 0\n"))
    assert code == 2 and "valid=false" in stdout
    code, _, _ = call("verify-metabolizer", W, files("M2.mat", "2 2\n1 0\n0 1\n"))
    assert code == 2


def test_verify_certificate_rejects_tampering(tmp_path):
    C = tmp_path / "chain.json"
    call("paper-chain", 4, 5, "--json", "--out", C)
    doc = json.loads(C.read_text())
    doc["derived"]["P"][0][0] += 1
    C.write_text(json.dumps(doc))
    code, stdout, _ = call("verify-certificate", C, "--json")
    assert code == 2 and json.loads(stdout)["valid"] is False


def test_paper_chain_text():
    code, stdout, _ = call("paper-chain", 4, 5)
    assert code == 0
    for line in ("tau_T=6", "g4_star_bound=5", "tau_difference_lower_bound=1",
                 "conclusion=SUMMAND_ESTABLISHED", "V_star_corner=0", "slice_certificate_valid=true"):
        assert line in stdout.splitlines()


def test_paper_chain_inconclusive():
    code, stdout, err = call("paper-chain", 2, 3)
    assert code == 3 and "conclusion=INCONCLUSIVE" in stdout and "inconclusive" in err


def test_paper_chain_deterministic():
    assert call("paper-chain", 4, 5, "--json") == call("paper-chain", 4, 5, "--json")


# -- errors --------------------------------------------------------------------------

def test_usage_errors():
    assert call("bogus")[0] == 1
    assert call()[0] == 1
    assert call("torus", "four", 5)[0] == 1
    assert call("paper-chain", 4, 5, "--max-norm", 0)[0] == 1


def test_input_errors(files, tmp_path):
    assert call("invariants", tmp_path / "missing.mat")[0] == 2
    assert call("invariants", files("bad.mat", "2 3\n1 2 3\n4 5\n"))[0] == 2
    assert call("invariants", files("sym.mat", "2 2\n1 2\n2 1\n"))[0] == 2
    assert call("verify-certificate", files("x.json", "{not json"))[0] == 2
    assert call("verify-certificate", files("y.json", '{"kind": "other"}'))[0] == 2


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "algslice.cli", "paper-chain", "4", "5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "conclusion=SUMMAND_ESTABLISHED" in proc.stdout
