import io

import pytest

from lttcheck.automaton import complete_automaton, parse_automaton
from lttcheck.checker import GraphCheckRun, Verdict
from lttcheck.cli import main
from lttcheck.report import RunReport
from lttcheck.semigroup import build_semigroup, parse_cayley, serialize_cayley

MOD2_TEXT = "2 1\na\n1\n0\n"
AB_TEXT = "3 2\na b\n1 0\n1 2\n2 2\n"
PARTIAL_TEXT = "2 1\na\n1\n-\n"


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_check_ltt_exit_zero(tmp_path, capsys):
    path = write(tmp_path, "ab.txt", AB_TEXT)
    assert main(["check", path, "--mode", "both"]) == 0
    report = RunReport.from_text(capsys.readouterr().out)
    assert report.exit_status == 0
    assert report.source == path
    assert report.n_states == 3 and report.n_labels == 2
    assert not report.sink_added
    assert [d.decider for d in report.deciders] == ["graph", "semigroup"]
    assert all(d.is_ltt for d in report.deciders)
    assert report.deciders[0].stats["table_defined"] > 0
    assert report.deciders[1].stats["size"] == 4


def test_check_not_ltt_exit_one(tmp_path, capsys):
    path = write(tmp_path, "mod2.txt", MOD2_TEXT)
    assert main(["check", path, "--mode", "both"]) == 1
    report = RunReport.from_text(capsys.readouterr().out)
    assert report.agree
    assert report.deciders[0].failed_condition == "C1"
    assert report.deciders[1].failed_condition == "APERIODICITY"


def test_check_default_mode_is_graph(tmp_path, capsys):
    path = write(tmp_path, "mod2.txt", MOD2_TEXT)
    assert main(["check", path]) == 1
    report = RunReport.from_text(capsys.readouterr().out)
    assert [d.decider for d in report.deciders] == ["graph"]


def test_check_backend_flag(tmp_path, capsys):
    path = write(tmp_path, "mod2.txt", MOD2_TEXT)
    assert main(["check", path, "--backend", "python"]) == 1
    capsys.readouterr()
    with pytest.raises(SystemExit):
        main(["check", path, "--backend", "no-such-backend"])


def test_check_partial_input_gets_sink(tmp_path, capsys):
    path = write(tmp_path, "partial.txt", PARTIAL_TEXT)
    assert main(["check", path, "--mode", "both"]) == 0
    report = RunReport.from_text(capsys.readouterr().out)
    assert report.sink_added
    assert report.n_states == 3


def test_check_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(MOD2_TEXT))
    assert main(["check", "-"]) == 1
    assert RunReport.from_text(capsys.readouterr().out).exit_status == 1


def test_check_parse_error_exit_two(tmp_path, capsys):
    path = write(tmp_path, "bad.txt", "not an automaton\n")
    assert main(["check", path]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error:")


def test_check_missing_file_exit_two(tmp_path, capsys):
    assert main(["check", str(tmp_path / "absent.txt")]) == 2
    assert "error:" in capsys.readouterr().err


def test_check_disagreement_exit_three(tmp_path, capsys, monkeypatch):
    import lttcheck.cli as cli

    monkeypatch.setattr(
        cli,
        "check_ltt_detailed",
        lambda a, backend=None: GraphCheckRun(Verdict(True), {}, {}, None, None),
    )
    path = write(tmp_path, "mod2.txt", MOD2_TEXT)
    assert main(["check", path, "--mode", "both"]) == 3
    report = RunReport.from_text(capsys.readouterr().out)
    assert not report.agree
    assert report.exit_status == 3


def test_check_capacity_exit_two(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("LTTCHECK_CAP", "1")
    path = write(tmp_path, "mod2.txt", MOD2_TEXT)
    assert main(["check", path, "--mode", "semigroup"]) == 2
    assert "exceeds 1 elements" in capsys.readouterr().err


def test_bad_cap_env_exit_two(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("LTTCHECK_CAP", "zero")
    path = write(tmp_path, "mod2.txt", MOD2_TEXT)
    assert main(["check", path, "--mode", "semigroup"]) == 2
    assert "LTTCHECK_CAP" in capsys.readouterr().err


def test_cap_flag_overrides_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("LTTCHECK_CAP", "1")
    path = write(tmp_path, "mod2.txt", MOD2_TEXT)
    assert main(["check", path, "--mode", "semigroup", "--cap", "10"]) == 1
    capsys.readouterr()


def test_check_cayley(tmp_path, capsys):
    sg = build_semigroup(complete_automaton(((1,), (0,))))
    path = write(tmp_path, "cayley.txt", serialize_cayley(sg))
    assert main(["check", path, "--cayley", "--mode", "semigroup"]) == 1
    out = capsys.readouterr().out
    assert "elements=2" in out
    assert "failed_condition=APERIODICITY" in out

    trivial = write(tmp_path, "one.txt", "1 1\n0\n")
    assert main(["check", trivial, "--cayley", "--mode", "semigroup"]) == 0
    assert "is_ltt=1" in capsys.readouterr().out


def test_check_cayley_rejects_graph_mode(tmp_path, capsys):
    path = write(tmp_path, "one.txt", "1 1\n0\n")
    assert main(["check", path, "--cayley"]) == 2
    assert "no transition graph" in capsys.readouterr().err


def test_random_stdout_deterministic(capsys):
    assert main(["random", "--n", "3", "--g", "2", "--count", "2", "--seed", "7"]) == 0
    first = capsys.readouterr().out
    assert main(["random", "--n", "3", "--g", "2", "--count", "2", "--seed", "7"]) == 0
    assert capsys.readouterr().out == first
    assert first.count("# automaton") == 2
    body = "\n".join(l for l in first.splitlines() if not l.startswith("#"))
    chunks = body.split("3 2")
    assert len(chunks) == 3


def test_random_out_dir(tmp_path, capsys):
    out = tmp_path / "batch"
    assert (
        main(
            ["random", "--n", "2", "--g", "1", "--count", "3", "--seed", "5",
             "--out", str(out)]
        )
        == 0
    )
    printed = capsys.readouterr().out.splitlines()
    names = sorted(p.name for p in out.iterdir())
    assert names == [
        "random_n2_g1_s5_0000.txt",
        "random_n2_g1_s5_0001.txt",
        "random_n2_g1_s5_0002.txt",
    ]
    assert sorted(printed) == sorted(str(out / n) for n in names)
    for n in names:
        parse_automaton((out / n).read_text())


def test_random_rejects_bad_arguments(capsys):
    assert main(["random", "--n", "0", "--g", "1"]) == 2
    assert "error:" in capsys.readouterr().err


def test_diff_exhaustive(capsys):
    assert main(["diff", "--exhaustive", "--n-max", "2", "--g-max", "2"]) == 0
    out = capsys.readouterr().out
    assert "total=22" in out
    assert "disagreements=0" in out


def test_diff_random(capsys):
    assert main(["diff", "--n-max", "3", "--g-max", "2", "--trials", "50",
                 "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert "total=50" in out
    assert "# diff random seed=3" in out


def test_semigroup_export(tmp_path, capsys):
    path = write(tmp_path, "mod2.txt", MOD2_TEXT)
    assert main(["semigroup", path]) == 0
    out = capsys.readouterr().out
    expected = serialize_cayley(build_semigroup(complete_automaton(((1,), (0,)))))
    assert out == expected
    parsed = parse_cayley(out)
    assert parsed.size == 2

    dest = tmp_path / "cayley.txt"
    assert main(["semigroup", path, "--out", str(dest)]) == 0
    assert dest.read_text() == expected


def test_export_then_check_round_trip(tmp_path, capsys):
    path = write(tmp_path, "ab.txt", AB_TEXT)
    dest = tmp_path / "ab_cayley.txt"
    assert main(["semigroup", path, "--out", str(dest)]) == 0
    capsys.readouterr()
    assert main(["check", str(dest), "--cayley", "--mode", "semigroup"]) == 0
    out = capsys.readouterr().out
    assert "elements=4" in out
    assert "is_ltt=1" in out
