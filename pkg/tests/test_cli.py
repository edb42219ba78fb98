"""Command-line interface: subcommands, pipelines, and exit codes."""

import io

import pytest

from middom import (
    TheoremId,
    is_total_dominating,
    middle_graph,
    path,
    read_graph,
    star,
    write_graph,
)
from middom.cli import main


def run(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_writes_to_stdout(self, monkeypatch, capsys):
        code, out, err = run(monkeypatch, capsys, ["gen", "path", "6"])
        assert code == 0 and err == ""
        assert read_graph(out) == path(6)

    def test_writes_to_file(self, monkeypatch, capsys, tmp_path):
        target = tmp_path / "g.txt"
        code, out, _ = run(monkeypatch, capsys,
                           ["gen", "star", "3", "-o", str(target)])
        assert code == 0 and out == ""
        assert read_graph(target.read_text()) == star(3)

    def test_bipartite_takes_two_params(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys,
                           ["gen", "complete-bipartite", "2", "3"])
        assert code == 0
        assert read_graph(out).size == 6

    def test_wrong_parameter_count(self, monkeypatch, capsys):
        code, _, err = run(monkeypatch, capsys, ["gen", "path", "3", "4"])
        assert code == 2
        assert "takes 1 parameter" in err

    def test_invalid_parameter_value(self, monkeypatch, capsys):
        code, _, err = run(monkeypatch, capsys, ["gen", "wheel", "3"])
        assert code == 2
        assert "wheel needs order n >= 4" in err

    def test_unknown_family_is_usage_error(self, monkeypatch, capsys):
        with pytest.raises(SystemExit) as exc:
            run(monkeypatch, capsys, ["gen", "blob", "3"])
        assert exc.value.code == 2


class TestPipelines:
    def test_gamma_t_of_path6(self, monkeypatch, capsys):
        _, graph_text, _ = run(monkeypatch, capsys, ["gen", "path", "6"])
        code, out, _ = run(monkeypatch, capsys, ["gamma-t"],
                           stdin=graph_text)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "gamma_t = 4"
        witness = [int(tok) for tok in lines[1].split()[1:]]
        assert is_total_dominating(path(6), witness)

    def test_middle_then_gamma_t(self, monkeypatch, capsys):
        _, graph_text, _ = run(monkeypatch, capsys, ["gen", "star", "3"])
        code, mid_text, _ = run(monkeypatch, capsys, ["middle"],
                                stdin=graph_text)
        assert code == 0
        assert read_graph(mid_text) == middle_graph(star(3)).graph
        code, out, _ = run(monkeypatch, capsys, ["gamma-t"], stdin=mid_text)
        assert code == 0
        assert out.splitlines()[0] == "gamma_t = 3"

    def test_gamma(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["gamma"],
                           stdin=write_graph(star(5)))
        assert code == 0
        assert out.splitlines()[0] == "gamma = 1"

    def test_file_argument(self, monkeypatch, capsys, tmp_path):
        source = tmp_path / "in.txt"
        source.write_text(write_graph(path(3)))
        code, out, _ = run(monkeypatch, capsys, ["gamma-t", str(source)])
        assert code == 0 and out.splitlines()[0] == "gamma_t = 2"

    def test_isolated_vertex_fails(self, monkeypatch, capsys):
        code, out, err = run(monkeypatch, capsys, ["gamma-t"], stdin="2 0\n")
        assert code == 1 and out == ""
        assert "total domination undefined" in err

    def test_malformed_input_fails_with_line_number(self, monkeypatch,
                                                    capsys):
        code, _, err = run(monkeypatch, capsys, ["gamma-t"],
                           stdin="2 1\n1 0\n")
        assert code == 1
        assert "line 2" in err

    def test_missing_file(self, monkeypatch, capsys, tmp_path):
        code, _, err = run(monkeypatch, capsys,
                           ["gamma-t", str(tmp_path / "nope.txt")])
        assert code == 1 and "nope.txt" in err


class TestVerifyCommand:
    def test_single_statement_verbose(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys,
                           ["verify", "star-formula", "--max-n", "4"])
        assert code == 0
        assert "ALL PASS" in out and "n=2" in out

    def test_unknown_statement(self, monkeypatch, capsys):
        code, _, err = run(monkeypatch, capsys, ["verify", "bogus"])
        assert code == 2 and "unknown statement" in err

    def test_bad_worker_count(self, monkeypatch, capsys):
        code, _, err = run(monkeypatch, capsys,
                           ["verify", "star-formula", "--workers", "0"])
        assert code == 2 and "--workers must be positive" in err

    def test_csv_output_to_file(self, monkeypatch, capsys, tmp_path):
        target = tmp_path / "report.csv"
        code, out, _ = run(monkeypatch, capsys,
                           ["verify", "path-formula", "--max-n", "5",
                            "--csv", "-o", str(target)])
        assert code == 0 and out == ""
        lines = target.read_text().splitlines()
        assert lines[0] == "theorem,params,expected,got,witness_size,status"
        assert lines[1] == "path-formula,n=3,2,2,2,pass"

    def test_all_small(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys,
                           ["verify", "all", "--max-n", "4"])
        assert code == 0
        assert "ALL PASS" in out
        assert out.count("\n") >= len(TheoremId)


class TestNgScanCommand:
    def test_summary(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["ng-scan", "--n", "4"])
        assert code == 0
        assert "12 complement pairs" in out and "0 violations" in out

    def test_csv(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys,
                           ["ng-scan", "--n", "4", "--csv"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("n,encoding")
        assert len(lines) == 19

    def test_out_of_range(self, monkeypatch, capsys):
        code, _, err = run(monkeypatch, capsys, ["ng-scan", "--n", "9"])
        assert code == 2 and "scan supports 2 <= n <= 6" in err


class TestTableCommand:
    def test_markdown(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys,
                           ["table", "path", "--range", "3:8"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "| n | formula | solver | status |"
        assert "| 6 | 4 | 4 | ok |" in lines

    def test_csv(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys,
                           ["table", "friendship", "--range", "2:3",
                            "--csv"])
        assert code == 0
        assert out.splitlines()[1] == "friendship,2,4,4,ok"

    def test_bipartite_requires_n1(self, monkeypatch, capsys):
        code, _, err = run(monkeypatch, capsys,
                           ["table", "complete-bipartite", "--range", "3:4"])
        assert code == 2 and "--n1" in err

    def test_bipartite_with_n1(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys,
                           ["table", "complete-bipartite", "--range", "2:4",
                            "--n1", "2"])
        assert code == 0
        assert "| 2 | 3 | 3 | ok |" in out.splitlines()

    def test_n1_rejected_elsewhere(self, monkeypatch, capsys):
        code, _, err = run(monkeypatch, capsys,
                           ["table", "path", "--range", "3:4", "--n1", "2"])
        assert code == 2 and "only applies" in err

    def test_range_validation(self, monkeypatch, capsys):
        code, _, err = run(monkeypatch, capsys,
                           ["table", "path", "--range", "5"])
        assert code == 2 and "must look like A:B" in err
        code, _, err = run(monkeypatch, capsys,
                           ["table", "path", "--range", "5:3"])
        assert code == 2 and "is empty" in err

    def test_hypothesis_violation_in_range(self, monkeypatch, capsys):
        code, _, err = run(monkeypatch, capsys,
                           ["table", "path", "--range", "1:4"])
        assert code == 2 and "requires n >= 3" in err


class TestUsage:
    def test_unknown_subcommand(self, monkeypatch, capsys):
        with pytest.raises(SystemExit) as exc:
            run(monkeypatch, capsys, ["frobnicate"])
        assert exc.value.code == 2

    def test_no_arguments(self, monkeypatch, capsys):
        with pytest.raises(SystemExit) as exc:
            run(monkeypatch, capsys, [])
        assert exc.value.code == 2
