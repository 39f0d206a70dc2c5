"""Machine-readable check reports.

A report is a block of ``key=value`` lines; ``#`` lines and blank lines are
human-oriented commentary that parsers skip.  Decider-specific keys are
prefixed ``graph.`` or ``semigroup.``.  Times are rounded to microseconds at
construction so that emitted reports parse back to equal objects.  Witness
word strings are emitted verbatim (labels never contain whitespace or ``#``,
so the encoding stays line-safe).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .checker import Verdict

__all__ = ["DeciderReport", "RunReport", "ReportParseError"]


class ReportParseError(ValueError):
    pass


def _round_times(times: dict[str, float]) -> dict[str, float]:
    return {k: round(v, 6) for k, v in times.items()}


def _encode_witness(w: dict[str, int] | None) -> str:
    if not w:
        return "-"
    return ",".join(f"{k}={v}" for k, v in w.items())


def _decode_witness(s: str) -> dict[str, int] | None:
    if s == "-":
        return None
    out = {}
    for part in s.split(","):
        k, _, v = part.partition("=")
        out[k] = int(v)
    return out


def _encode_words(w: dict[str, str] | None) -> str:
    if not w:
        return "-"
    return ";".join(f"{k}={v}" for k, v in w.items())


def _decode_words(s: str) -> dict[str, str] | None:
    if s == "-":
        return None
    out = {}
    for part in s.split(";"):
        k, _, v = part.partition("=")
        out[k] = v
    return out


@dataclass(frozen=True)
class DeciderReport:
    decider: str  # "graph" or "semigroup"
    is_ltt: bool
    failed_condition: str | None = None
    witness: dict[str, int] | None = None
    witness_words: dict[str, str] | None = None
    times: dict[str, float] = field(default_factory=dict)
    stats: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "times", _round_times(self.times))

    @classmethod
    def from_verdict(
        cls,
        decider: str,
        v: Verdict,
        times: dict[str, float] | None = None,
        stats: dict[str, int] | None = None,
    ) -> "DeciderReport":
        return cls(
            decider, v.is_ltt, v.failed_condition, v.witness, v.witness_words,
            times or {}, stats or {},
        )

    def verdict(self) -> Verdict:
        return Verdict(self.is_ltt, self.failed_condition, self.witness, self.witness_words)

    def to_lines(self) -> list[str]:
        p = self.decider
        lines = [
            f"{p}.is_ltt={int(self.is_ltt)}",
            f"{p}.failed_condition={self.failed_condition or '-'}",
            f"{p}.witness={_encode_witness(self.witness)}",
            f"{p}.witness_words={_encode_words(self.witness_words)}",
        ]
        lines += [f"{p}.time.{k}={v:.6f}" for k, v in self.times.items()]
        lines += [f"{p}.stat.{k}={v}" for k, v in self.stats.items()]
        return lines


@dataclass(frozen=True)
class RunReport:
    source: str
    n_states: int
    n_labels: int
    sink_added: bool
    deciders: tuple[DeciderReport, ...]

    @property
    def agree(self) -> bool:
        return len({d.is_ltt for d in self.deciders}) <= 1

    @property
    def exit_status(self) -> int:
        if not self.agree:
            return 3
        return 0 if self.deciders and self.deciders[0].is_ltt else 1

    def describe(self) -> list[str]:
        """Human commentary, emitted as # lines alongside the machine keys."""
        out = []
        for d in self.deciders:
            out.append(f"# {d.decider}: {d.verdict().describe()}")
        if len(self.deciders) > 1:
            out.append(f"# deciders {'agree' if self.agree else 'DISAGREE'}")
        return out

    def to_lines(self) -> list[str]:
        lines = self.describe()
        lines += [
            f"source={self.source}",
            f"n_states={self.n_states}",
            f"n_labels={self.n_labels}",
            f"sink_added={int(self.sink_added)}",
        ]
        for d in self.deciders:
            lines += d.to_lines()
        lines.append(f"agree={int(self.agree)}")
        lines.append(f"exit_status={self.exit_status}")
        return lines

    def to_text(self) -> str:
        return "\n".join(self.to_lines()) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RunReport":
        fields: dict[str, str] = {}
        order: list[str] = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, eq, value = line.partition("=")
            if not eq:
                raise ReportParseError(f"not a key=value line: {raw!r}")
            if key in fields:
                raise ReportParseError(f"duplicate key {key!r}")
            fields[key] = value
            prefix = key.split(".", 1)[0]
            if prefix in ("graph", "semigroup") and prefix not in order:
                order.append(prefix)
        try:
            deciders = []
            for p in order:
                times = {}
                stats = {}
                for k, v in fields.items():
                    if k.startswith(f"{p}.time."):
                        times[k[len(p) + 6:]] = float(v)
                    elif k.startswith(f"{p}.stat."):
                        stats[k[len(p) + 6:]] = int(v)
                cond = fields[f"{p}.failed_condition"]
                deciders.append(DeciderReport(
                    p,
                    fields[f"{p}.is_ltt"] == "1",
                    None if cond == "-" else cond,
                    _decode_witness(fields[f"{p}.witness"]),
                    _decode_words(fields[f"{p}.witness_words"]),
                    times,
                    stats,
                ))
            report = cls(
                fields["source"],
                int(fields["n_states"]),
                int(fields["n_labels"]),
                fields["sink_added"] == "1",
                tuple(deciders),
            )
        except (KeyError, ValueError) as err:
            raise ReportParseError(f"malformed report: {err}") from None
        if fields.get("agree") != str(int(report.agree)):
            raise ReportParseError("agree flag does not match verdicts")
        if fields.get("exit_status") != str(report.exit_status):
            raise ReportParseError("exit_status does not match verdicts")
        return report
