import csv
import io
import json

import pytest

from heckeiso.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def csv_rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_faces_gl3_row_count(capsys):
    code, out, _ = run(capsys, "faces", "--factors", "3", "--q", "3", "--format", "csv")
    assert code == 0
    rows = csv_rows(out)
    assert rows[0] == ["id", "nodes", "size", "closure_ids"]
    assert len(rows) - 1 == 7


def test_faces_gl2x2_csv(capsys):
    code, out, _ = run(capsys, "faces", "--factors", "2,2", "--q", "3", "--format", "csv")
    assert code == 0
    assert len(csv_rows(out)) - 1 == 9


def test_invalid_q_is_domain_error(capsys):
    code, out, err = run(capsys, "faces", "--factors", "3", "--q", "6")
    assert code == 2
    assert not out
    assert "prime power" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["faces", "--q", "3"])  # missing --factors
    assert exc.value.code == 1


def test_chars_json_schema(capsys):
    code, out, _ = run(capsys, "chars", "--factors", "2", "--q", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["columns"][0] == "exponents"
    assert payload["rows"]


def test_classify_exceptional_pair(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(
        json.dumps(
            {
                "chi": {"exponents": [[0, 0, 0]], "torus_exponents": [], "J": ["s1_0", "s1_1"]},
                "lambda": [1],
                "nu": [],
                "field": {"p": 3, "m": 1},
            }
        )
    )
    b.write_text(
        json.dumps(
            {
                "chi": {"exponents": [[0, 0, 0]], "torus_exponents": [], "J": ["s1_1"]},
                "lambda": [1],
                "nu": [],
                "field": {"p": 3, "m": 1},
            }
        )
    )
    code, out, _ = run(
        capsys, "classify", "--factors", "3", "--q", "3", "--format", "json", str(a), str(b)
    )
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row[0] == "False" and row[1] == "True"
    # Identical inputs are isomorphic both ways.
    code, out, _ = run(
        capsys, "classify", "--factors", "3", "--q", "3", "--format", "json", str(a), str(a)
    )
    assert json.loads(out)["rows"][0][:2] == ["True", "True"]


def test_classify_finite_pd_is_domain_error(tmp_path, capsys):
    a = tmp_path / "a.json"
    a.write_text(
        json.dumps(
            {
                "chi": {"exponents": [[0, 0]], "torus_exponents": [], "J": ["s1_0"]},
                "lambda": [1],
                "nu": [],
                "field": {"p": 3, "m": 1},
            }
        )
    )
    code, _, err = run(
        capsys, "classify", "--factors", "2", "--q", "3", str(a), str(a)
    )
    assert code == 2
    assert "projective dimension" in err


def test_sweep_gl2_columns_agree(capsys):
    code, out, _ = run(capsys, "sweep", "--factors", "2", "--q", "3", "--format", "csv")
    assert code == 0
    rows = csv_rows(out)
    assert rows[0] == ["id_a", "id_b", "mod_iso", "ho_iso", "witness"]
    for row in rows[1:]:
        assert row[2] == row[3]


def test_oracle_check_gl3_all_agree(capsys):
    code, out, _ = run(
        capsys, "oracle-check", "--factors", "3", "--q", "3", "--format", "csv"
    )
    assert code == 0
    rows = csv_rows(out)
    assert rows[0] == ["instance", "predicate_value", "oracle_value", "agree"]
    assert all(row[3] == "True" for row in rows[1:])


def test_byte_identical_output(tmp_path, capsys):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    for path in (out1, out2):
        code, _, _ = run(
            capsys,
            "sweep", "--factors", "3", "--q", "3", "--format", "csv", "--out", str(path),
        )
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_out_writes_file_and_keeps_stdout_clean(tmp_path, capsys):
    target = tmp_path / "faces.json"
    code, out, _ = run(
        capsys, "faces", "--factors", "3", "--q", "3", "--format", "json", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["schema"] == 1


def test_cap_exceeded_is_domain_error(capsys):
    code, _, err = run(capsys, "chars", "--factors", "4", "--q", "5", "--cap", "10")
    assert code == 2
    assert "cap" in err
