import json
import re

import pytest

from pbern.cli import cli


def test_cli_table_csv(runner):
    """Test the table command with CSV output."""
    result = runner.invoke(
        cli, ["table", "--max-n", "2", "--max-p", "0", "--format", "csv"]
    )
    assert result.exit_code == 0
    assert result.output == "n,p=0\n0,1\n1,-1/2\n2,1/6\n"


def test_cli_table_single_cell(runner):
    result = runner.invoke(cli, ["table", "--max-n", "0", "--max-p", "0"])
    assert result.exit_code == 0
    assert json.loads(result.output) == {
        "max_n": 0,
        "max_p": 0,
        "route": "recurrence",
        "values": [["1"]],
    }


def test_cli_table_routes_agree(runner):
    args = ["table", "--max-n", "6", "--max-p", "4", "--format", "csv"]
    egf = runner.invoke(cli, args + ["--route", "egf"])
    recurrence = runner.invoke(cli, args + ["--route", "recurrence"])
    assert egf.exit_code == 0
    assert recurrence.exit_code == 0
    assert egf.output == recurrence.output


def test_cli_table_is_deterministic(runner):
    args = ["table", "--max-n", "16", "--max-p", "8", "--format", "json"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == 0
    assert first.output == second.output


def test_cli_table_out_file(runner, temp_dir):
    output_path = temp_dir / "nested" / "table.tex"
    result = runner.invoke(
        cli,
        [
            "table",
            "--max-n",
            "2",
            "--max-p",
            "1",
            "--format",
            "latex",
            "--out",
            str(output_path),
        ],
    )
    assert result.exit_code == 0
    assert result.output == ""
    text = output_path.read_bytes().decode("utf-8")
    assert text.startswith("\\begin{tabular}")
    assert text.endswith("\\end{tabular}\n")
    assert "\r\n" not in text


@pytest.mark.parametrize(
    "args",
    [
        ["table", "--max-n", "-1", "--max-p", "0"],
        ["table", "--max-n", "1", "--max-p", "0", "--format", "xml"],
        ["table", "--max-n", "1", "--max-p", "0", "--route", "magic"],
        ["egf", "--p", "0", "--order", "0"],
        ["egf", "--p", "-2"],
        ["verify", "--max-n", "-3", "--max-p", "0"],
        ["bench", "--max-n", "1", "--max-p", "-1"],
    ],
)
def test_cli_usage_errors_exit_2(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 2


def test_cli_invalid_command(runner):
    result = runner.invoke(cli, ["invalid_command"])
    assert result.exit_code != 0


def test_cli_egf(runner):
    result = runner.invoke(cli, ["egf", "--p", "0", "--order", "3", "--format", "csv"])
    assert result.exit_code == 0
    assert result.output == "n,B\n0,1\n1,-1/2\n2,1/6\n"

    result = runner.invoke(cli, ["egf", "--p", "1", "--order", "2"])
    assert result.exit_code == 0
    assert json.loads(result.output)["coefficients"] == ["1", "-1/3"]

    result = runner.invoke(cli, ["egf", "--p", "0", "--order", "1"])
    assert json.loads(result.output)["coefficients"] == ["1"]


def test_cli_verify(runner):
    result = runner.invoke(cli, ["verify", "--max-n", "8", "--max-p", "4"])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["passed"] is True
    assert all(r["passed"] for r in report["reports"])
    assert len(report["reports"]) == 4 + 2 * 5


def test_cli_verify_base_case(runner):
    result = runner.invoke(cli, ["verify", "--max-n", "0", "--max-p", "0"])
    assert result.exit_code == 0
    assert json.loads(result.output)["passed"] is True


def test_cli_verify_acceptance_bounds(runner):
    result = runner.invoke(cli, ["verify", "--max-n", "32", "--max-p", "12"])
    assert result.exit_code == 0
    assert json.loads(result.output)["passed"] is True


def test_cli_verify_failure_exits_1(runner, monkeypatch):
    from pbern import cli as cli_module
    from pbern.verify import Mismatch, VerifyKind, VerifyReport

    def failing_suite(max_n, max_p, **kwargs):
        return [VerifyReport(VerifyKind.THEOREM, max_n, max_p, Mismatch(0, 0, 1, 2))]

    monkeypatch.setattr(cli_module, "run_suite", failing_suite)
    result = runner.invoke(cli, ["verify", "--max-n", "1", "--max-p", "1"])
    assert result.exit_code == 1
    assert "Verification failed" in result.output


def test_cli_bench(runner):
    result = runner.invoke(cli, ["bench", "--max-n", "4", "--max-p", "2"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert len(lines) == 2
    assert re.fullmatch(r"recurrence: \d+\.\d{3} ms", lines[0])
    assert re.fullmatch(r"egf: \d+\.\d{3} ms", lines[1])


def test_cli_set_defaults(runner, config_dir):
    result = runner.invoke(cli, ["set-defaults", "--workers", "2"])
    assert result.exit_code == 0
    assert "workers=2" in result.output
    assert json.loads((config_dir / "defaults").read_text()) == {"workers": 2}

    result = runner.invoke(cli, ["table", "--max-n", "1", "--max-p", "0"])
    assert result.exit_code == 0
    assert json.loads(result.output)["values"] == [["1"], ["-1/2"]]

    result = runner.invoke(cli, ["set-defaults", "--format", "csv"])
    assert result.exit_code == 2

    result = runner.invoke(cli, ["set-defaults"])
    assert result.exit_code == 2


def test_cli_default_format_is_json(runner):
    result = runner.invoke(cli, ["egf", "--p", "2", "--order", "3"])
    assert result.exit_code == 0
    assert json.loads(result.output) == {
        "p": 2,
        "order": 3,
        "coefficients": ["1", "-1/4", "-1/20"],
    }


def test_cli_commands_leave_config_untouched(runner, config_dir):
    for command in (
        ["table", "--max-n", "2", "--max-p", "1"],
        ["verify", "--max-n", "1", "--max-p", "1"],
        ["bench", "--max-n", "1", "--max-p", "1"],
    ):
        result = runner.invoke(cli, command)
        assert result.exit_code == 0
    assert not config_dir.exists() or not any(config_dir.iterdir())


def test_cli_verify_reports_leftover_pole(runner, monkeypatch, temp_dir):
    from pbern import pbernoulli
    from pbern.series import Series, add

    original = pbernoulli.closed_form_laurent

    def with_pole(p, max_n):
        total = original(p, max_n)
        return add(total, Series([3], -1, total.order)) if p == 1 else total

    monkeypatch.setattr(pbernoulli, "closed_form_laurent", with_pole)
    output_path = temp_dir / "report.json"
    result = runner.invoke(
        cli, ["verify", "--max-n", "4", "--max-p", "2", "--out", str(output_path)]
    )
    assert result.exit_code == 1
    assert "Verification failed" in result.output
    report = json.loads(output_path.read_text())
    assert report["passed"] is False
    assert [r["kind"] for r in report["reports"]] == ["recurrence", "pole_cancellation"]
    assert report["reports"][1]["first_mismatch"] == {
        "n": -1,
        "p": 1,
        "left": "3",
        "right": "0",
    }


def test_cli_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "pbern" in result.output
