"""Command line behavior: formats, defaults, routes, exit codes."""

import csv
import io
import json

from trinom.cli import main

from frozen import A_ROWS, B_ROWS, CENTRAL_A, CENTRAL_B


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.reader(io.StringIO(text)))


def test_triangle_csv_round_trip(capsys):
    code, out, _ = run(capsys, "triangle", "--kind", "a", "--rows", "13", "--format", "csv")
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["n", "k", "value"]
    got = {}
    for n, k, value in rows[1:]:
        got.setdefault(int(n), {})[int(k)] = int(value)
    for n, row in enumerate(A_ROWS):
        assert [got[n][k] for k in range(n + 1)] == row


def test_triangle_json(capsys):
    code, out, _ = run(capsys, "triangle", "--kind", "b", "--rows", "13", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "b"
    assert data["route"] == "pascal-b"
    assert [[int(v) for v in row] for row in data["rows"]] == B_ROWS
    # exactness survives JSON: values are decimal strings, not numbers
    assert data["rows"][12][0] == "4213"


def test_triangle_text_default_kind(capsys):
    code, out, _ = run(capsys, "triangle", "--rows", "3")
    assert code == 0
    lines = [line.split() for line in out.strip().splitlines()]
    assert lines == [["1"], ["1", "1"], ["3", "2", "1"]]


def test_triangle_routes_agree_byte_for_byte(capsys):
    outputs = set()
    for route in ("oracle-a", "pascal-a", "column-a", "descending-a"):
        code, out, _ = run(capsys, "triangle", "--rows", "9", "--route", route)
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_seq_csv(capsys):
    code, out, _ = run(capsys, "seq", "--kind", "a", "--count", "13", "--format", "csv")
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["n", "value"]
    assert [int(v) for _, v in rows[1:]] == CENTRAL_A[:13]


def test_seq_routes_agree(capsys):
    _, central, _ = run(capsys, "seq", "--kind", "b", "--count", "12", "--format", "csv")
    _, oracle, _ = run(capsys, "seq", "--kind", "b", "--count", "12", "--route",
                       "oracle-b", "--format", "csv")
    assert central == oracle
    assert [int(r[1]) for r in parse_csv(central)[1:]] == CENTRAL_B[:12]


def test_series_f_and_g(capsys):
    code, out, _ = run(capsys, "series", "--kind", "f", "--order", "12", "--format", "csv")
    assert code == 0
    assert [int(r[1]) for r in parse_csv(out)[1:]] == CENTRAL_A[:13]
    code, out, _ = run(capsys, "series", "--kind", "g", "--order", "12",
                       "--route", "newton", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["method"] == "newton"
    assert [int(c) for c in data["coefficients"]] == CENTRAL_B[:13]


def test_qpoly_rendered(capsys):
    code, out, _ = run(capsys, "qpoly", "--max-k", "4")
    assert code == 0
    assert "Q_2 = n^2 + n" in out
    assert "Q_0 = 1" in out


def test_qpoly_eval(capsys):
    code, out, _ = run(capsys, "qpoly", "--max-k", "3", "--eval-at", "5", "--format", "csv")
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["k", "value"]
    # Q_k(5) = k! a(5, 5-k)
    assert [int(r[1]) for r in rows[1:]] == [1, 5, 30, 180]


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "4", "--format", "csv")
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["k", "value"]
    assert [int(r[1]) for r in rows[1:]] == [3, 6, 6, 3, 1]
    code, out, _ = run(capsys, "decompose", "11", "--format", "json")
    assert code == 0
    assert [int(v) for v in json.loads(out)["multiplicities"]] == B_ROWS[11]


def test_verify_text_documents_expected_failure(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "12")
    assert code == 0
    lines = out.splitlines()
    assert any(
        line.startswith("XFAIL b4-fourth-difference-variant") and "(n=5, k=4)" in line
        for line in lines
    )
    assert any(line == "PASS  b4-fourth-difference" for line in lines)
    assert lines[-1].startswith("ok:")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "12", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--max-n", "40", "--route", "pascal-a",
                       "--route", "descending-b", "--format", "csv")
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["route", "max_n", "seconds"]
    assert [r[0] for r in rows[1:]] == ["pascal-a", "descending-b"]
    assert all(float(r[2]) >= 0 for r in rows[1:])


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "triangle", "--route", "no-such")[0] == 2
    assert run(capsys, "triangle", "--kind", "b", "--route", "oracle-a")[0] == 2
    assert run(capsys, "triangle", "--rows", "0")[0] == 2
    assert run(capsys, "seq", "--count", "-3")[0] == 2
    assert run(capsys, "decompose", "-1")[0] == 2
    assert run(capsys, "verify", "--max-n", "5")[0] == 2
    assert run(capsys, "qpoly", "--max-k", "-2")[0] == 2
    assert run(capsys, "bench", "--route", "wat")[0] == 2
    assert run(capsys, "triangle", "--format", "yaml")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_error_messages_go_to_stderr(capsys):
    code, out, err = run(capsys, "triangle", "--route", "no-such")
    assert code == 2
    assert out == ""
    assert "no-such" in err
