import json
import subprocess
import sys

import pytest

from hypertree_lab.complex_io import (
    emit_complex,
    parse_complex_text,
    write_complex_file,
)
from hypertree_lab.errors import (
    ParseError,
    UnrepresentableComplex,
    VertexOutOfRange,
)
from hypertree_lab.reports import CSV_COLUMNS
from hypertree_lab.simplexes import (
    VOID,
    GeneralComplex,
    SkeletonComplex,
    as_general,
    closure,
    full_skeleton,
)
from _registry import track


def run_cli(*args, stdin=None):
    proc = subprocess.run(
        [sys.executable, "-m", "hypertree_lab.cli", *args],
        capture_output=True,
        input=stdin,
    )
    return proc.returncode, proc.stdout.decode(), proc.stderr.decode()


# ---------------------------------------------------------------- file format

def test_round_trip_skeleton_complex():
    X = SkeletonComplex(6, 2, frozenset({(0, 1, 2), (3, 4, 5)}))
    text = emit_complex(X)
    back = parse_complex_text(text).complex
    assert back == X
    assert emit_complex(back) == text  # canonical form is a fixed point


def test_round_trip_general_complex():
    X = closure([(0, 1, 2), (2, 3)], 5)
    back = parse_complex_text(emit_complex(X)).complex
    assert as_general(back).faces == X.faces


def test_emit_void_and_empty():
    assert "facets 0" in emit_complex(VOID)
    with pytest.raises(UnrepresentableComplex):
        emit_complex(GeneralComplex(frozenset(), frozenset({()})))


def test_emit_requires_contiguous_ground():
    sparse = GeneralComplex(frozenset({1, 5}), frozenset({(), (1,), (5,)}))
    with pytest.raises(UnrepresentableComplex):
        emit_complex(sparse)


def test_parse_reports_line_numbers():
    bad = "skeleton 5 2\n0 1 9\n"
    with pytest.raises(VertexOutOfRange) as e:
        parse_complex_text(bad)
    assert "line 2" in str(e.value)
    with pytest.raises(ParseError):
        parse_complex_text("facets\n")  # malformed header


def test_parse_with_comments_and_blank_lines():
    text = "# a complex\nfacets 4\n\n0 1 2  # triangle\n3\n"
    X = parse_complex_text(text).complex
    assert as_general(X).faces >= {(0, 1, 2), (3,)}


def test_parse_relabel_compacts_vertices():
    text = "facets 3\n5 9\n12\n"
    parsed = parse_complex_text(text, relabel=True)
    assert parsed.relabel_map == {5: 0, 9: 1, 12: 2}
    assert as_general(parsed.complex).faces >= {(0, 1), (2,)}
    with pytest.raises(VertexOutOfRange):
        parse_complex_text(text)  # without relabel the ids overflow n


def test_write_and_reread(tmp_path):
    X = track(full_skeleton(5, 1))
    p = tmp_path / "k5.cplx"
    write_complex_file(str(p), X)
    from hypertree_lab.complex_io import parse_complex_file
    back = parse_complex_file(str(p)).complex
    assert back == X


# ----------------------------------------------------------------- exit codes

def test_cli_exit_zero_on_success():
    code, out, err = run_cli(
        "betti", "--in", "random(seed=1,n=6,k=2,q=0.5)", "--out", "json")
    assert code == 0, err
    payload = json.loads(out)
    assert payload["command"] == "betti"


def test_cli_exit_two_on_missing_file():
    code, out, err = run_cli("betti", "--in", "/nonexistent/x.cplx")
    assert code == 2
    assert err.strip()


def test_cli_exit_two_on_bad_parameters():
    code, _, err = run_cli(
        "verify-bound", "--ell", "5", "--in", "random(seed=1,n=6,k=2,q=0.5)")
    assert code == 2
    assert err.strip()


def test_cli_exit_two_on_parse_error(tmp_path):
    p = tmp_path / "bad.cplx"
    p.write_text("skeleton 4 1\n0 9\n")
    code, _, err = run_cli("betti", "--in", str(p))
    assert code == 2
    assert "line 2" in err


# ---------------------------------------------------------------- json output

def test_json_key_order_is_stable():
    code, out, _ = run_cli(
        "verify-bound", "--ell", "0", "--in", "random(seed=7,n=7,k=2,q=0.5)",
        "--out", "json")
    assert code == 0
    payload = json.loads(out)
    assert list(payload.keys()) == [
        "command", "n", "k", "ell", "field", "f_vector", "betti",
        "lambda_km2", "lambda_km1", "B", "F",
        "eq1_holds", "eq5_holds", "eq6_holds", "eq8_holds",
        "trichotomy", "seed", "elapsed_ms",
    ]
    assert payload["eq1_holds"] is True
    assert payload["eq6_holds"] is True
    assert payload["B"] is not None and set(payload["B"]) == {"num", "den"}
    assert payload["elapsed_ms"] is None  # no --timing flag given


def test_json_bytes_are_deterministic():
    args = ("lambda", "--ell", "0", "--in", "random(seed=3,n=6,k=2,q=0.6)",
            "--out", "json")
    _, a, _ = run_cli(*args)
    _, b, _ = run_cli(*args)
    assert a == b


def test_timing_flag_fills_elapsed():
    code, out, _ = run_cli(
        "betti", "--in", "random(seed=1,n=5,k=1,q=0.5)", "--out", "json",
        "--timing")
    assert code == 0
    assert json.loads(out)["elapsed_ms"] is not None


# ----------------------------------------------------------------- csv output

def test_csv_header_and_row_count():
    code, out, _ = run_cli(
        "sweep", "--check", "bound", "--count", "3", "--n", "6", "--k", "2",
        "--seed", "5", "--out", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 4


def test_sweep_json_is_an_array():
    code, out, _ = run_cli(
        "sweep", "--check", "dual", "--count", "2", "--n", "6", "--k", "2",
        "--seed", "9", "--out", "json")
    assert code == 0
    rows = json.loads(out)
    assert isinstance(rows, list) and len(rows) == 2
    assert all(r["eq5_holds"] for r in rows)


def test_sweep_is_seed_deterministic():
    args = ("sweep", "--check", "bound", "--count", "2", "--n", "6",
            "--k", "2", "--seed", "11", "--out", "json")
    _, a, _ = run_cli(*args)
    _, b, _ = run_cli(*args)
    assert a == b


# ------------------------------------------------------------- subcommand io

def test_betti_text_output_mentions_table():
    code, out, _ = run_cli("betti", "--in", "random(seed=2,n=5,k=1,q=0.7)")
    assert code == 0
    assert "betti" in out.lower()


def test_links_lists_every_face(tmp_path):
    code, out, _ = run_cli(
        "links", "--ell", "0", "--in", "random(seed=4,n=5,k=2,q=0.8)")
    assert code == 0
    # one line per vertex
    assert sum("(" in line for line in out.splitlines()) >= 5


def test_relabel_echo(tmp_path):
    p = tmp_path / "sparse.cplx"
    p.write_text("facets 3\n5 9\n12\n")
    code, out, _ = run_cli("betti", "--in", str(p), "--relabel")
    assert code == 0
    assert "relabeled: 5->0 9->1 12->2" in out


def test_construct_sum_writes_default_file(tmp_path):
    code, out, _ = run_cli(
        "construct", "sum", "5", "0", "1", "--out-file",
        str(tmp_path / "s.cplx"))
    assert code == 0
    text = (tmp_path / "s.cplx").read_text()
    X = parse_complex_text(text).complex
    assert X.top_faces == frozenset({(1, 4), (2, 3)})


def test_construct_steiner_from_blocks(tmp_path):
    blocks = tmp_path / "fano.blocks"
    blocks.write_text("\n".join(
        " ".join(map(str, ((1 + i) % 7, (2 + i) % 7, (4 + i) % 7)))
        for i in range(7)) + "\n")
    out_file = tmp_path / "fano.cplx"
    code, out, _ = run_cli(
        "construct", "steiner", str(blocks), "--out-file", str(out_file))
    assert code == 0
    X = parse_complex_text(out_file.read_text()).complex
    assert len(X.top_faces) == 7


def test_construct_jnk(tmp_path):
    out_file = tmp_path / "j.cplx"
    code, out, _ = run_cli(
        "construct", "jnk", "8", "2", "--out-file", str(out_file))
    assert code == 0
    X = parse_complex_text(out_file.read_text()).complex
    assert len(X.top_faces) == 16
    code2, _, err = run_cli("construct", "jnk", "7", "2")
    assert code2 == 2 and err.strip()


def test_trichotomy_subcommand_json():
    code, out, _ = run_cli(
        "trichotomy", "--ell", "0", "--in", "random(seed=6,n=6,k=2,q=0.7)",
        "--out", "json")
    assert code == 0
    payload = json.loads(out)
    tri = payload["trichotomy"]
    assert set(tri) == {"a", "b", "c"}


def test_garland_subcommand_reports_premise():
    code, out, _ = run_cli("garland", "--ell", "0", "--in",
                           "random(seed=1,n=6,k=2,q=1.0)")
    assert code == 0
    assert "premise" in out.lower()


def test_collapse_subcommand():
    code, out, _ = run_cli("collapse", "--in", "random(seed=8,n=5,k=1,q=0.4)")
    assert code == 0
    assert "core" in out.lower()
