import json

from zetakit.cli import build_parser, cmd_eval, cmd_order_cmp, cmd_sum, main
from zetakit.shared_types import FunctionId
from zetakit.values import evaluate


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_exact(capsys):
    code, out, _ = run(capsys, "eval", "zeta", "-1", "--format", "exact")
    assert code == 0
    assert out.strip() == "-1/12"


def test_eval_pi_value(capsys):
    code, out, _ = run(capsys, "eval", "eta", "4")
    assert code == 0
    assert out.strip() == "(7/720)*pi^4"


def test_eval_float_formats(capsys):
    code, out, _ = run(capsys, "eval", "zeta", "2", "--format", "float", "--digits", "6")
    assert code == 0
    assert out.strip() == "1.64493"
    code, out, _ = run(capsys, "eval", "beta", "1", "--format", "both")
    assert out.strip() == "(1/4)*pi^1 ≈ 0.785398163397448"


def test_eval_pole(capsys):
    code, out, _ = run(capsys, "eval", "zeta", "1")
    assert code == 3
    assert "pole" in out


def test_eval_no_closed_form_json(capsys):
    code, out, _ = run(capsys, "eval", "beta", "2", "--json")
    assert code == 3
    record = json.loads(out)
    assert record["status"] == "unsupported"
    assert record["reason"] == "no-closed-form"
    assert record["exact"] is None


def test_eval_json_matches_text(capsys):
    _, text, _ = run(capsys, "eval", "lambda", "2")
    _, out, _ = run(capsys, "eval", "lambda", "2", "--json")
    record = json.loads(out)
    assert record["status"] == "ok"
    assert record["exact"]["text"] == text.strip()
    assert record["exact"]["terms"] == [{"pi_power": 2, "coeff": "1/8"}]


def test_sum_wrapping_segment(capsys):
    code, out, _ = run(capsys, "sum", "--poly", "u", "--from", "1", "--to", "-1")
    assert code == 0
    assert out.strip() == "0"


def test_sum_ordinary_and_infinite(capsys):
    code, out, _ = run(capsys, "sum", "--poly", "u^2", "--from", "1", "--to", "10")
    assert out.strip() == "385"
    code, out, _ = run(capsys, "sum", "--poly", "u", "--from", "1", "--to", "inf", "--json")
    record = json.loads(out)
    assert record["exact"]["text"] == "-1/12"
    assert record["arguments"] == {"poly": "u", "from": 1, "to": "inf"}


def test_sum_syntax_error(capsys):
    code, out, err = run(capsys, "sum", "--poly", "u^^2", "--from", "1", "--to", "3")
    assert code == 2
    assert out == ""
    assert "column 3" in err


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "zeta", "--from", "-2", "--to", "2", "--json")
    assert code == 0
    rows = json.loads(out)
    assert [r["arguments"]["s"] for r in rows] == [-2, -1, 0, 1, 2]
    assert [r["status"] for r in rows] == ["ok", "ok", "ok", "unsupported", "ok"]
    assert rows[3]["reason"] == "pole"
    assert rows[0]["exact"]["text"] == "0"


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "beta", "--from", "0", "--to", "3")
    assert code == 0
    assert "(1/32)*pi^3" in out
    assert "no-closed-form" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "functional-equation", "--json")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 40
    assert all(r["passed"] for r in reports)


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "values", "--max-terms", "10", "--tol", "1e-15")
    assert code == 1
    assert "failed" in out


def test_order_cmp(capsys):
    assert run(capsys, "order", "cmp", "7", "-5")[1].strip() == "7 ≺ -5"
    assert run(capsys, "order", "cmp", "-1", "0")[1].strip() == "0 ≺ -1"
    assert run(capsys, "order", "cmp", "3", "3")[1].strip() == "3 = 3"


def test_usage_errors(capsys):
    assert run(capsys, "eval", "gamma", "2")[0] == 2
    assert run(capsys, "eval", "zeta", "2", "--digits", "16")[0] == 2
    assert run(capsys, "sum", "--poly", "u", "--from", "1", "--to", "many")[0] == 2
    assert run(capsys)[0] == 2


def test_command_functions():
    assert cmd_order_cmp(0, 1) == "0 ≺ 1"
    record = cmd_eval(FunctionId.ETA, 2)
    assert record.to_dict()["exact"]["text"] == "(1/12)*pi^2"
    assert cmd_sum("u", 0, -1).to_text() == "0"


def test_parser_has_all_commands():
    parser = build_parser()
    for argv in (["eval", "zeta", "2"], ["order", "cmp", "1", "2"], ["verify"]):
        assert parser.parse_args(argv).command == argv[0]


def test_eval_beyond_float_range(capsys):
    code, out, _ = run(capsys, "eval", "zeta", "-301")
    assert code == 0
    assert out.strip() == evaluate("zeta", -301).to_text()
    code, out, _ = run(capsys, "eval", "zeta", "-301", "--format", "float")
    assert code == 0
    assert out.strip() in ("inf", "-inf")
    code, out, _ = run(capsys, "table", "zeta", "--from", "-400", "--to", "0", "--json")
    assert code == 0
    assert len(json.loads(out)) == 401


def test_sum_beyond_float_range(capsys):
    code, out, _ = run(capsys, "sum", "--poly", "u^200", "--from", "1", "--to", "100", "--json")
    assert code == 0
    record = json.loads(out)
    assert record["float"] == "inf"
    assert int(record["exact"]["text"]) == sum(u ** 200 for u in range(1, 101))
