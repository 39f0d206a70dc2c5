import pytest

from lttcheck.automaton import complete_automaton
from lttcheck.checker import Verdict, check_ltt_detailed
from lttcheck.report import DeciderReport, ReportParseError, RunReport
from lttcheck.semigroup import semigroup_check_detailed

MOD2 = complete_automaton(((1,), (0,)))
CONTAINS_AB = complete_automaton(((1, 0), (1, 2), (2, 2)))


def run_report(a, source="test"):
    run = check_ltt_detailed(a)
    graph = DeciderReport.from_verdict("graph", run.verdict, run.timings, run.peaks)
    sv, st, ss = semigroup_check_detailed(a)
    semi = DeciderReport.from_verdict("semigroup", sv, st, ss)
    return RunReport(source, a.n_states, a.n_labels, False, (graph, semi))


@pytest.mark.parametrize("a", [MOD2, CONTAINS_AB])
def test_round_trip(a):
    report = run_report(a)
    parsed = RunReport.from_text(report.to_text())
    assert parsed == report
    assert RunReport.from_text(parsed.to_text()) == parsed


def test_exit_status_and_agreement():
    ltt = run_report(CONTAINS_AB)
    assert ltt.agree and ltt.exit_status == 0
    not_ltt = run_report(MOD2)
    assert not_ltt.agree and not_ltt.exit_status == 1

    split = RunReport(
        "x", 2, 1, False,
        (DeciderReport("graph", True), DeciderReport("semigroup", False, "IDENTITY")),
    )
    assert not split.agree
    assert split.exit_status == 3
    assert RunReport.from_text(split.to_text()) == split


def test_verdict_reconstruction():
    v = Verdict(False, "C1", {"p": 0, "q": 1})
    rep = DeciderReport.from_verdict("graph", v)
    assert rep.verdict() == v
    assert DeciderReport.from_verdict("graph", Verdict(True)).verdict() == Verdict(True)


def test_times_round_to_microseconds():
    rep = DeciderReport("graph", True, times={"c1": 0.123456789, "scc": 2e-9})
    assert rep.times == {"c1": 0.123457, "scc": 0.0}
    line = [l for l in rep.to_lines() if l.startswith("graph.time.c1")]
    assert line == ["graph.time.c1=0.123457"]


def test_witness_encoding():
    rep = DeciderReport(
        "semigroup", False, "IDENTITY",
        {"e": 0, "f": 0, "a": 0, "u": 1, "b": 2},
        {"e": "a", "f": "a", "a": "a", "u": "b", "b": "c"},
        stats={"size": 5},
    )
    lines = rep.to_lines()
    assert "semigroup.witness=e=0,f=0,a=0,u=1,b=2" in lines
    assert "semigroup.witness_words=e=a;f=a;a=a;u=b;b=c" in lines
    assert "semigroup.stat.size=5" in lines

    none = DeciderReport("graph", True).to_lines()
    assert "graph.witness=-" in none
    assert "graph.witness_words=-" in none


def test_comment_lines_are_commentary():
    report = run_report(MOD2)
    text = report.to_text()
    comments = [l for l in text.splitlines() if l.startswith("#")]
    assert any("graph:" in c for c in comments)
    assert any("agree" in c for c in comments)
    stripped = "\n".join(l for l in text.splitlines() if not l.startswith("#"))
    assert RunReport.from_text(stripped) == report


@pytest.mark.parametrize(
    "mangle,fragment",
    [
        (lambda t: t.replace("agree=1", "agree=0"), "agree flag"),
        (lambda t: t.replace("exit_status=1", "exit_status=0"), "exit_status"),
        (lambda t: t.replace("n_states=2", "n_states=two"), "malformed report"),
        (lambda t: t.replace("n_states=2\n", ""), "malformed report"),
        (lambda t: t + "n_states=2\n", "duplicate key"),
        (lambda t: t + "just some words\n", "not a key=value line"),
    ],
)
def test_parse_errors(mangle, fragment):
    text = run_report(MOD2).to_text()
    with pytest.raises(ReportParseError) as info:
        RunReport.from_text(mangle(text))
    assert fragment in str(info.value)
