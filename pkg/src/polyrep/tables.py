"""Reader/writer for the proof-table constants file.

The file is line oriented (see the header of ``data/proof_tables.txt``).
Records keep their raw text so that ``dump(load(text)) == text``; typed
accessors parse on demand.

Run ``python -m polyrep.tables --write`` to regenerate the derived block.
"""

from __future__ import annotations

import argparse
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable

_LIN = re.compile(r"^([+-]?\d*)m([+-]\d+)?$|^([+-]?\d+)$")
DERIVED_BEGIN = "# BEGIN DERIVED r1cert"
DERIVED_END = "# END DERIVED r1cert"


@dataclass(frozen=True)
class Lin:
    """a*m + b."""

    a: int
    b: int

    def __call__(self, m: int) -> int:
        return self.a * m + self.b

    def __str__(self) -> str:
        if self.a == 0:
            return str(self.b)
        head = {1: "m", -1: "-m"}.get(self.a, f"{self.a}m")
        if self.b == 0:
            return head
        return f"{head}{self.b:+d}"


def parse_lin(text: str) -> Lin:
    hit = _LIN.match(text.strip())
    if not hit:
        raise ValueError(f"not a linear expression in m: {text!r}")
    if hit.group(3) is not None:
        return Lin(0, int(hit.group(3)))
    coef = hit.group(1)
    a = {"": 1, "+": 1, "-": -1}.get(coef)
    if a is None:
        a = int(coef)
    return Lin(a, int(hit.group(2) or 0))


def _split_items(text: str) -> list[str]:
    if text == "-":
        return []
    return text.split(",")


@dataclass(frozen=True)
class Record:
    kind: str
    fields: tuple[tuple[str, str], ...]
    line: str

    def __getitem__(self, key: str) -> str:
        for k, v in self.fields:
            if k == key:
                return v
        raise KeyError(key)

    def get(self, key: str, default: str | None = None) -> str | None:
        try:
            return self[key]
        except KeyError:
            return default

    def int(self, key: str) -> int:
        return int(self[key])

    def ints(self, key: str) -> list[int]:
        return [int(t) for t in _split_items(self[key])]

    def lin(self, key: str) -> Lin:
        return parse_lin(self[key])

    def span(self, key: str) -> tuple[Lin, Lin]:
        """A single range lo..hi."""
        lo, _, hi = self[key].partition("..")
        return parse_lin(lo), parse_lin(hi or lo)

    def values(self, key: str, m: int) -> list[int]:
        """Expand a list of expressions and ranges at a concrete m."""
        out: list[int] = []
        for item in _split_items(self[key]):
            lo, sep, hi = item.partition("..")
            a = parse_lin(lo)(m)
            b = parse_lin(hi)(m) if sep else a
            out.extend(range(a, b + 1))
        return out

    def quotient(self, key: str, m: int) -> int:
        """``(expr)/q`` floored, or a plain expression."""
        text = self[key]
        if text.startswith("("):
            num, _, den = text[1:].partition(")/")
            return parse_lin(num)(m) // int(den)
        return parse_lin(text)(m)


def parse_line(line: str) -> Record | None:
    body = line.strip()
    if not body or body.startswith("#"):
        return None
    kind, *rest = body.split()
    fields = []
    for tok in rest:
        key, sep, val = tok.partition("=")
        if not sep:
            raise ValueError(f"malformed field {tok!r} in line {line!r}")
        fields.append((key, val))
    return Record(kind, tuple(fields), line)


def format_record(kind: str, **fields: object) -> str:
    parts = [kind]
    for k, v in fields.items():
        if isinstance(v, (list, tuple)):
            v = ",".join(map(str, v)) if v else "-"
        parts.append(f"{k}={v}")
    return " ".join(parts)


def loads(text: str) -> list[Record]:
    out = []
    for line in text.splitlines():
        rec = parse_line(line)
        if rec is not None:
            out.append(rec)
    return out


def dumps(records: Iterable[Record]) -> str:
    return "".join(format_record(r.kind, **dict(r.fields)) + "\n" for r in records)


def table_path() -> Path:
    return Path(str(resources.files("polyrep") / "data" / "proof_tables.txt"))


def read_text() -> str:
    return table_path().read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def load() -> tuple[Record, ...]:
    return tuple(loads(read_text()))


def records(kind: str) -> list[Record]:
    return [r for r in load() if r.kind == kind]


# ---------------------------------------------------------------------------
# derived block

def r1_finite_cases() -> list[tuple[int, int]]:
    """(m, n) pairs the r=1 ladder leaves to explicit certificates.

    These are 10 <= m < k+9 with 2 <= k <= 6 and 0 <= k1 < (k^2+k)/2 - 1,
    where n = (m-2)k1 + (m-2-k).
    """
    out = []
    for m in range(10, 15):
        for k in range(max(2, m - 8), 7):
            for k1 in range((k * k + k) // 2 - 1):
                out.append((m, (m - 2) * k1 + m - 2 - k))
    return sorted(set(out))


def derive_r1_lines() -> list[str]:
    from .gonal import WeightedForm
    from .oracle import find_representation

    lines = []
    for m, n in r1_finite_cases():
        rep = find_representation(WeightedForm(m, (1,) * (m - 4)), n)
        if rep is None:
            raise RuntimeError(f"no representation of {n} with {m - 4} {m}-gonal numbers")
        lines.append(format_record("r1cert", m=m, n=n, args=rep.args))
    return lines


def render_with_derived(text: str, derived: list[str]) -> str:
    head, sep, rest = text.partition(DERIVED_BEGIN + "\n")
    if not sep:
        raise ValueError("derived block markers missing")
    _, sep2, tail = rest.partition(DERIVED_END)
    if not sep2:
        raise ValueError("derived block end marker missing")
    return head + DERIVED_BEGIN + "\n" + "".join(s + "\n" for s in derived) + DERIVED_END + tail


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="python -m polyrep.tables")
    ap.add_argument("--write", action="store_true", help="rewrite the derived block in place")
    ap.add_argument("--check", action="store_true", help="exit 1 if the derived block is stale")
    args = ap.parse_args(argv)
    text = read_text()
    fresh = render_with_derived(text, derive_r1_lines())
    if args.write:
        table_path().write_text(fresh, encoding="utf-8")
        load.cache_clear()
        return 0
    if args.check:
        return 0 if fresh == text else 1
    print(fresh, end="")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
