"""Serialization of results: JSON, CSV and Markdown.

Coefficient lists are always little-endian in ``q`` and carry an explicit
``grading`` field, since Serre polynomials grade by dimension while Chow
groups grade by codegree.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Optional, Sequence

from .qalgebra import QPoly

__all__ = [
    "FORMATS",
    "OutputRecord",
    "load_fixture",
    "table_rows",
    "render_table",
    "render_rows",
    "render_json",
]

FORMATS = ("json", "csv", "md")
SPACES = ("M02", "M01", "M00", "stratum")


@dataclass(frozen=True)
class OutputRecord:
    space: str
    r: int
    method: str
    coefficients: tuple[int, ...]
    euler: int
    d: Optional[int] = None
    grading: str = "dimension"
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if self.space not in SPACES:
            raise ValueError(f"unknown space {self.space!r}")
        if self.coefficients and self.coefficients[-1] == 0:
            raise ValueError("coefficients must not end in zero")
        if self.euler != sum(self.coefficients):
            raise ValueError("euler must equal the sum of the coefficients")

    @classmethod
    def from_poly(cls, space: str, r: int, method: str, poly: QPoly, **kw) -> OutputRecord:
        return cls(space, r, method, poly.coeffs, poly(1), **kw)

    @property
    def poly(self) -> QPoly:
        return QPoly(self.coefficients)

    def to_dict(self) -> dict:
        out = {"space": self.space, "r": self.r}
        if self.d is not None:
            out["d"] = self.d
        if self.label is not None:
            out["label"] = self.label
        out.update(
            method=self.method,
            grading=self.grading,
            coefficients=list(self.coefficients),
            euler=self.euler,
        )
        return out

    @classmethod
    def from_dict(cls, data: dict) -> OutputRecord:
        return cls(
            space=data["space"],
            r=data["r"],
            method=data["method"],
            coefficients=tuple(data["coefficients"]),
            euler=data["euler"],
            d=data.get("d"),
            grading=data.get("grading", "dimension"),
            label=data.get("label"),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        return cls.from_dict(json.loads(text))

    def render(self, fmt: str) -> str:
        return render_records([self], fmt)


def render_records(records: Sequence[OutputRecord], fmt: str) -> str:
    if fmt == "json":
        if len(records) == 1:
            return render_json(records[0].to_dict())
        return render_json([r.to_dict() for r in records])
    width = max((len(r.coefficients) for r in records), default=0)
    header = ["space", "r", "d", "label", "method", "grading", "euler"]
    header += [f"c{i}" for i in range(width)]
    rows = []
    for rec in records:
        cells = [rec.space, rec.r, rec.d, rec.label, rec.method, rec.grading, rec.euler]
        cells += list(rec.coefficients) + [None] * (width - len(rec.coefficients))
        rows.append(cells)
    return render_rows(header, rows, fmt)


def render_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (list, tuple)):
        return " ".join(str(v) for v in x)
    return str(x)


def render_rows(header: Sequence[str], rows: Iterable[Sequence], fmt: str) -> str:
    """Render a header and rows as CSV or a Markdown pipe table."""
    rows = [[_cell(c) for c in row] for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "md":
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(row) + " |" for row in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"tabular output not available for format {fmt!r}")


# -- Tables of Poincare polynomials ----------------------------------------

def table_rows(which: int, r_max: int) -> list[tuple[int, int, QPoly]]:
    """``(r, chi, polynomial)`` for ``r = 1 .. r_max``."""
    from .closedform import serre_m01_closed, serre_m02_closed

    fn = {1: serre_m01_closed, 2: serre_m02_closed}[which]
    out = []
    for r in range(1, r_max + 1):
        p = fn(r)
        out.append((r, p(1), p))
    return out


def render_table(which: int, r_max: int, fmt: str) -> str:
    rows = table_rows(which, r_max)
    if fmt == "json":
        space = {1: "M01", 2: "M02"}[which]
        return render_json(
            [OutputRecord.from_poly(space, r, "closed", p).to_dict() for r, _, p in rows]
        )
    if fmt == "md":
        return render_rows(["r", "chi", "Serre"], [(r, chi, str(p)) for r, chi, p in rows], "md")
    width = max(len(p) for _, _, p in rows)
    header = ["r", "chi"] + [f"c{i}" for i in range(width)]
    body = [[r, chi] + list(p.coeffs) + [None] * (width - len(p)) for r, chi, p in rows]
    return render_rows(header, body, "csv")


def load_fixture(which: int) -> dict[int, tuple[int, QPoly]]:
    """Stored reference table (1: one marked point, 2: two): ``{r: (chi, polynomial)}``."""
    text = fixture_text(which)
    out = {}
    for row in csv.DictReader(io.StringIO(text)):
        r = int(row.pop("r"))
        chi = int(row.pop("chi"))
        coeffs = [int(v) for k, v in sorted(row.items(), key=lambda kv: int(kv[0][1:])) if v != ""]
        out[r] = (chi, QPoly(coeffs))
    return out


def fixture_text(which: int) -> str:
    name = {1: "m01_table.csv", 2: "m02_table.csv"}[which]
    return resources.files("stablemaps").joinpath("data").joinpath(name).read_text(encoding="utf-8")
