"""Plain-text coefficient tables.

Format (UTF-8, ``\\n`` line endings)::

    #series=<name>
    #trunc=<N>
    #version=1
    0<TAB><coefficient>
    ...
    N<TAB><coefficient>

Coefficients are canonical decimal integers. Parsing is strict, so that
``dumps(loads(text)) == text`` for every accepted input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .series import TruncatedSeries

__all__ = ["CorruptTable", "CoefficientTable", "table_filename", "read_table", "write_table"]

VERSION = 1
_INT = re.compile(r"(0|-?[1-9][0-9]*)\Z")
_NAME = re.compile(r"[A-Za-z0-9_\[\]=,.+-]+\Z")


class CorruptTable(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class CoefficientTable:
    name: str
    coeffs: tuple[int, ...]

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_series(cls, name: str, s: TruncatedSeries) -> "CoefficientTable":
        return cls(name, tuple(s.coeffs))

    def to_series(self) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, self.trunc)

    def dumps(self) -> str:
        if not _NAME.match(self.name):
            raise ValueError(f"unsupported series name {self.name!r}")
        head = f"#series={self.name}\n#trunc={self.trunc}\n#version={VERSION}\n"
        return head + "".join(f"{n}\t{c}\n" for n, c in enumerate(self.coeffs))

    @classmethod
    def loads(cls, text: str) -> "CoefficientTable":
        lines = text.split("\n")
        if lines[-1] != "":
            raise CorruptTable("missing newline at end of file (truncated line?)", len(lines))
        lines.pop()

        def header(idx: int, key: str) -> str:
            if idx >= len(lines):
                raise CorruptTable(f"missing #{key} header", idx + 1)
            prefix = f"#{key}="
            if not lines[idx].startswith(prefix):
                raise CorruptTable(f"expected {prefix}...", idx + 1)
            return lines[idx][len(prefix):]

        name = header(0, "series")
        if not _NAME.match(name):
            raise CorruptTable(f"bad series name {name!r}", 1)
        trunc_s = header(1, "trunc")
        if not re.fullmatch(r"0|[1-9][0-9]*", trunc_s):
            raise CorruptTable(f"bad trunc {trunc_s!r}", 2)
        version = header(2, "version")
        if version != str(VERSION):
            raise CorruptTable(f"unsupported version {version!r}", 3)
        trunc = int(trunc_s)
        rows = lines[3:]
        coeffs = []
        for n, row in enumerate(rows):
            lineno = n + 4
            fields = row.split("\t")
            if len(fields) != 2:
                raise CorruptTable("expected '<n>\\t<coefficient>'", lineno)
            if fields[0] != str(n):
                raise CorruptTable(f"expected index {n}, got {fields[0]!r}", lineno)
            if not _INT.match(fields[1]):
                raise CorruptTable(f"bad coefficient {fields[1]!r}", lineno)
            coeffs.append(int(fields[1]))
        if len(coeffs) != trunc + 1:
            raise CorruptTable(f"expected {trunc + 1} rows, found {len(coeffs)}", len(lines))
        return cls(name, tuple(coeffs))


def table_filename(name: str, N: int) -> str:
    """``b_2i[i=4]`` at N=2000 becomes ``b_2i[i=4][N=2000].tsv``."""
    return f"{name}[N={N}].tsv"


def write_table(path, table: CoefficientTable) -> Path:
    path = Path(path)
    path.write_bytes(table.dumps().encode("utf-8"))
    return path


def read_table(path) -> CoefficientTable:
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CorruptTable(f"not UTF-8: {exc}") from exc
    return CoefficientTable.loads(text)
