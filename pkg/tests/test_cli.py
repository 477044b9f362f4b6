"""CLI contract: exit codes, CSV/JSON shapes, golden rows."""

from __future__ import annotations

import csv
import dataclasses
import io
import json

from crankq import cli, identities
from crankq.series import monomial


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def test_table_crank_golden_rows(capsys):
    code, out = run(capsys, "table", "--stat", "crank", "--n-max", "4")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["n", "m", "count"]
    assert ["4", "0", "1"] in rows
    assert ["1", "0", "-1"] in rows


def test_table_rank_golden_row(capsys):
    code, out = run(capsys, "table", "--stat", "rank", "--n-max", "3")
    assert code == 0
    _, rows = parse_csv(out)
    assert ["3", "2", "1"] in rows


def test_table_csv_round_trip(capsys):
    from crankq.statistics import crank_table

    code, out = run(capsys, "table", "--stat", "crank", "--n-max", "9")
    assert code == 0
    _, rows = parse_csv(out)
    table = crank_table(9)
    rebuilt = {}
    for n_s, m_s, c_s in rows:
        rebuilt[(int(n_s), int(m_s))] = int(c_s)
    for n in range(10):
        for m in table.m_range(n):
            assert rebuilt[(n, m)] == table.get(m, n)
    assert len(rows) == sum(2 * n + 1 for n in range(10))


def test_verify_pass_and_violation_exit_codes(capsys):
    code, _ = run(capsys, "verify", "--theorem", "THM1.7", "--n-max", "80")
    assert code == 0
    code, out = run(
        capsys, "verify", "--theorem", "THM1.9", "--n-max", "120", "--from", "2"
    )
    assert code == 1
    assert "fail" in out


def test_verify_json_schema(capsys):
    code, out = run(
        capsys, "verify", "--theorem", "THM1.6", "--n-max", "40", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"id", "params", "range", "checked", "violations", "status"}
    assert payload["id"] == "THM1.6"
    assert payload["status"] == "pass"
    assert payload["violations"] == []
    assert payload["range"]["n_from"] == 14


def test_verify_suite_small(capsys):
    code, out = run(capsys, "verify", "--suite", "paper", "--n-max", "60")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["id", "n_from", "n_to", "checked", "violations", "status"]
    assert all(row[5] == "pass" for row in rows)


def test_verify_usage_errors(capsys):
    assert cli.main(["verify"]) == 2
    capsys.readouterr()
    assert cli.main(["verify", "--suite", "bogus"]) == 2
    capsys.readouterr()
    assert cli.main(["verify", "--theorem", "NOPE"]) == 2
    capsys.readouterr()
    assert cli.main(["verify", "--theorem", "THM1.7", "--n-max", "10"]) == 2


def test_corrupted_registry_entry_yields_exit_1(monkeypatch, capsys):
    entry = identities.REGISTRY["T6.1"]
    orig = entry.sides[1]

    def bad(order):
        return orig(order) + monomial(1, 12, order)

    mutated = dataclasses.replace(entry, sides=(entry.sides[0], bad))
    monkeypatch.setitem(identities.REGISTRY, "T6.1", mutated)
    code, out = run(capsys, "identity", "--id", "T6.1", "--order", "60")
    assert code == 1
    assert "fail" in out
    assert ",12" in out  # mismatch exponent is reported


def test_identity_pass_and_param_grid(capsys):
    code, out = run(capsys, "identity", "--id", "T6.1", "--order", "150")
    assert code == 0
    code, out = run(capsys, "identity", "--id", "T5.4", "--order", "80", "--m", "3")
    assert code == 0
    code, out = run(capsys, "identity", "--id", "PK-FORMS", "--order", "60")
    assert code == 0
    _, rows = parse_csv(out)
    assert len(rows) == 14  # grid k = 2..15


def test_identity_errors(capsys):
    assert cli.main(["identity", "--id", "NOPE"]) == 2
    capsys.readouterr()
    assert cli.main(["identity", "--id", "T5.5", "--m", "1"]) == 2


def test_family_row(capsys):
    code, out = run(capsys, "family", "--name", "pk", "--k", "4", "--n-max", "20")
    assert code == 0
    _, rows = parse_csv(out)
    assert ["12", "7"] in rows
    assert cli.main(["family", "--name", "pk", "--k", "1", "--n-max", "5"]) == 2
    capsys.readouterr()
    code, out = run(capsys, "family", "--name", "gk", "--k", "0", "--n-max", "4")
    assert code == 0
    _, rows = parse_csv(out)
    assert rows == [["0", "1"], ["1", "0"], ["2", "0"], ["3", "0"], ["4", "0"]]


def test_io_error_exit_code(capsys):
    code = cli.main(
        ["table", "--stat", "crank", "--n-max", "3", "--out", "/no/such/dir/x.csv"]
    )
    assert code == 1


def test_ospt_rows(capsys):
    code, out = run(capsys, "ospt", "--n-max", "50")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["n", "ospt", "p"]
    assert rows[2] == ["3", "1", "3"]
    assert len(rows) == 50


def test_threshold_output(capsys):
    code, out = run(capsys, "threshold", "--theorem", "THM1.9", "--n-max", "120")
    assert code == 0
    _, rows = parse_csv(out)
    assert rows[0][0] == "THM1.9"
    assert int(rows[0][1]) <= 39
    assert rows[0][2] == "39"


def test_plot_unimodal(tmp_path, capsys):
    out_path = tmp_path / "row44.csv"
    code = cli.main(["plot-unimodal", "--n", "44", "--out", str(out_path)])
    assert code == 0
    header, rows = parse_csv(out_path.read_text())
    assert header == ["m", "count"]
    assert len(rows) == 87
    counts = [int(c) for _, c in rows]
    ms = [int(m) for m, _ in rows]
    peak = max(counts)
    assert counts[ms.index(0)] == peak
    # weakly unimodal: nondecreasing up to the peak of m = 0, then nonincreasing
    zero_idx = ms.index(0)
    assert all(counts[i] <= counts[i + 1] for i in range(zero_idx))
    assert all(counts[i] >= counts[i + 1] for i in range(zero_idx, len(counts) - 1))


def test_plot_unimodal_small_n(tmp_path, capsys):
    assert cli.main(["plot-unimodal", "--n", "1"]) == 2
    capsys.readouterr()
    out_path = tmp_path / "row2.csv"
    assert cli.main(["plot-unimodal", "--n", "2", "--out", str(out_path)]) == 0
    _, rows = parse_csv(out_path.read_text())
    assert rows == [["-1", "0"], ["0", "0"], ["1", "0"]]


def test_byte_stable_output(capsys):
    _, first = run(capsys, "table", "--stat", "crank", "--n-max", "15")
    _, second = run(capsys, "table", "--stat", "crank", "--n-max", "15")
    assert first == second
    _, j1 = run(capsys, "verify", "--theorem", "THM1.2", "--n-max", "50",
                "--format", "json")
    _, j2 = run(capsys, "verify", "--theorem", "THM1.2", "--n-max", "50",
                "--format", "json")
    assert j1 == j2


def test_out_flag_writes_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code = cli.main(["table", "--stat", "rank", "--n-max", "5", "--out", str(path)])
    assert code == 0
    assert capsys.readouterr().out == ""
    header, rows = parse_csv(path.read_text())
    assert header == ["n", "m", "count"]


def test_bad_flag_exits_2(capsys):
    assert cli.main(["table", "--stat", "bogus"]) == 2
    capsys.readouterr()
    assert cli.main(["bogus-command"]) == 2
