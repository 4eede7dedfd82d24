"""Structured pass/fail records for identity checks.

A report covers one identity at one parameter point over one index range.
FAIL always carries the first failing index and the exact nonzero residual
(lhs - rhs); SKIPPED always carries a machine-readable reason.  Exactness is
preserved on the wire: every rational serializes as the string "p/q" (or
"p" when the denominator is 1), never as floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Optional, Union

from .exact import Mat2, format_rational

if TYPE_CHECKING:  # pragma: no cover - import cycle guard, typing only
    from .scalar import BiParams

CASSINI = "CASSINI"
DET = "DET"
DOUBLING = "DOUBLING"
LUCAS_RELATIONS = "LUCAS_RELATIONS"
SUM_T5 = "SUM_T5"
WEIGHTED_SUM_T6 = "WEIGHTED_SUM_T6"
ROOT_IDENTITIES = "ROOT_IDENTITIES"
SERIES_MATCH = "SERIES_MATCH"
CROSS_METHOD = "CROSS_METHOD"

ALL_IDENTITIES = (
    CASSINI,
    DET,
    DOUBLING,
    LUCAS_RELATIONS,
    SUM_T5,
    WEIGHTED_SUM_T6,
    ROOT_IDENTITIES,
    SERIES_MATCH,
    CROSS_METHOD,
)

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"

CSV_HEADER = (
    "identity,a,b,x,n_max,status,first_failure,"
    "residual_e11,residual_e12,residual_e21,residual_e22"
)

Residual = Union[Mat2, Fraction, None]


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    params: "BiParams"
    index_range: tuple[int, int]
    status: str
    x: Optional[Fraction] = None
    skip_reason: Optional[str] = None
    first_failure: Optional[int] = None
    residual: Residual = None
    note: Optional[str] = None

    def __post_init__(self) -> None:
        if self.status == FAIL:
            if self.first_failure is None or self.residual is None:
                raise ValueError("FAIL reports need first_failure and residual")
            zero = self.residual.is_zero() if isinstance(self.residual, Mat2) \
                else self.residual == 0
            if zero:
                raise ValueError("FAIL reports need a nonzero residual")
        if self.status == SKIPPED and not self.skip_reason:
            raise ValueError("SKIPPED reports need a reason")

    @property
    def n_max(self) -> int:
        return self.index_range[1]

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def status_label(self) -> str:
        if self.status == SKIPPED:
            return f"SKIPPED({self.skip_reason})"
        return self.status

    def to_json_dict(self) -> dict:
        out: dict = {
            "identity": self.identity,
            "a": format_rational(self.params.a),
            "b": format_rational(self.params.b),
        }
        if self.x is not None:
            out["x"] = format_rational(self.x)
        out["n_max"] = self.n_max
        out["status"] = self.status_label()
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure
        if self.residual is not None:
            if isinstance(self.residual, Mat2):
                out["residual"] = {
                    "e11": format_rational(self.residual.e11),
                    "e12": format_rational(self.residual.e12),
                    "e21": format_rational(self.residual.e21),
                    "e22": format_rational(self.residual.e22),
                }
            else:
                out["residual"] = format_rational(self.residual)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def to_csv_row(self) -> str:
        if isinstance(self.residual, Mat2):
            res = [format_rational(e) for e in self.residual.entries()]
        elif self.residual is not None:
            res = [format_rational(self.residual), "", "", ""]
        else:
            res = ["", "", "", ""]
        fields = [
            self.identity,
            format_rational(self.params.a),
            format_rational(self.params.b),
            format_rational(self.x) if self.x is not None else "",
            str(self.n_max),
            self.status_label(),
            str(self.first_failure) if self.first_failure is not None else "",
            *res,
        ]
        return ",".join(fields)

    def to_plain(self) -> str:
        head = (
            f"{self.identity} a={format_rational(self.params.a)}"
            f" b={format_rational(self.params.b)}"
        )
        if self.x is not None:
            head += f" x={format_rational(self.x)}"
        head += f" n_max={self.n_max} {self.status_label()}"
        if self.status == FAIL:
            res = str(self.residual) if isinstance(self.residual, Mat2) \
                else format_rational(self.residual)
            head += f" first_failure={self.first_failure} residual={res}"
        if self.note:
            head += f"  [{self.note}]"
        return head


def passed(identity: str, params: "BiParams", index_range: tuple[int, int],
           x: Optional[Fraction] = None, note: Optional[str] = None) -> IdentityReport:
    return IdentityReport(identity, params, index_range, PASS, x=x, note=note)


def failed(identity: str, params: "BiParams", index_range: tuple[int, int],
           first_failure: int, residual: Residual,
           x: Optional[Fraction] = None, note: Optional[str] = None) -> IdentityReport:
    return IdentityReport(
        identity, params, index_range, FAIL, x=x,
        first_failure=first_failure, residual=residual, note=note,
    )


def skipped(identity: str, params: "BiParams", index_range: tuple[int, int],
            reason: str, x: Optional[Fraction] = None) -> IdentityReport:
    return IdentityReport(identity, params, index_range, SKIPPED,
                          x=x, skip_reason=reason)


def reports_to_csv(reports: list[IdentityReport]) -> str:
    return "\n".join([CSV_HEADER, *(r.to_csv_row() for r in reports)])
