"""Canonical text and JSON rendering of payloads."""

import json
from typing import Dict, List, Sequence

from pydantic import BaseModel

from algebra.rational_functions import QLaurent, QRational
from cli.schemas import (
    DynkinPayload,
    HNPayload,
    KroneckerPayload,
    LaurentPayload,
    RationalPayload,
    VerifyPayload,
    WallcrossPayload,
)
from quivers.quiver import Quiver
from services.reports import Report


def rational_payload(f: QRational) -> RationalPayload:
    shift, numerator, denominator = f.laurent_parts()
    return RationalPayload(
        numerator=numerator, denominator=denominator, laurent_shift=shift
    )


def laurent_payload(p: QLaurent) -> LaurentPayload:
    return LaurentPayload(laurent_shift=p.valuation, coefficients=p.coefficient_list())


def dim_payload(quiver: Quiver, d: Sequence[int]) -> Dict[str, int]:
    """Dimension vectors travel as maps keyed by vertex name."""
    return quiver.as_mapping(d)


def render_json(model: BaseModel) -> str:
    """Sorted keys and fixed indentation; parsing and re-dumping is byte-identical."""
    return json.dumps(model.model_dump(mode="json"), sort_keys=True, indent=2)


def _polynomial_text(coefficients: Sequence[int], shift: int) -> str:
    terms: List[str] = []
    for k in reversed(range(len(coefficients))):
        c = coefficients[k]
        if not c:
            continue
        e = k + shift
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if e == 0:
            body = str(magnitude)
        else:
            power = "q" if e == 1 else f"q^{e}"
            body = power if magnitude == 1 else f"{magnitude}*{power}"
        terms.append(f"{sign} {body}")
    if not terms:
        return "0"
    text = " ".join(terms)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _wrap(text: str) -> str:
    return f"({text})" if any(op in text[1:] for op in "+-") else text


def rational_text(payload: RationalPayload) -> str:
    """numerator/denominator with expanded integer coefficients, e.g. 1/(q - 1)."""
    shift = payload.laurent_shift
    num_shift, den_shift = (shift, 0) if shift >= 0 else (0, -shift)
    numerator = _polynomial_text(payload.numerator, num_shift)
    if payload.denominator == [1] and den_shift == 0:
        return numerator
    denominator = _polynomial_text(payload.denominator, den_shift)
    return f"{_wrap(numerator)}/{_wrap(denominator)}"


def laurent_text(payload: LaurentPayload) -> str:
    return _polynomial_text(payload.coefficients, payload.laurent_shift)


def _dim_text(dim: Dict[str, int]) -> str:
    return "(" + ", ".join(f"{v}={k}" for v, k in dim.items()) + ")"


def report_text(report: Report) -> List[str]:
    status = "ok" if report.ok else "FAILED"
    failures = len(report.discrepancies)
    lines = [
        f"[{report.suite}] {report.subject}: "
        f"{report.checks} checks, {failures} failures ({status})"
    ]
    for item in report.discrepancies:
        lines.append(
            f"  {item.check} at {item.location}: "
            f"expected {item.expected}, got {item.actual}"
        )
    for key in sorted(report.details):
        lines.append(f"  {key}: {report.details[key]}")
    return lines


def hn_text(payload: HNPayload) -> str:
    lines = [f"quiver {payload.vertices} theta {payload.theta} N={payload.order}"]
    for row in payload.rows:
        lines.append(f"d={_dim_text(row.dim)} slope={row.slope}")
        lines.append(f"  e = {rational_text(row.e)}")
        lines.append(f"  p = {rational_text(row.p)}")
    return "\n".join(lines)


def wallcross_text(payload: WallcrossPayload) -> str:
    lines = [f"quiver {payload.vertices} theta {payload.theta} N={payload.order}"]
    current = None
    for row in payload.rows:
        if row.slope != current:
            current = row.slope
            lines.append(f"slope {current}")
        lines.append(
            f"  d={_dim_text(row.dim)} n={_dim_text(row.framing)} "
            f"poincare = {laurent_text(row.poincare)} euler = {row.euler}"
        )
    return "\n".join(lines)


def kronecker_text(payload: KroneckerPayload) -> str:
    lines = [f"Kronecker quiver m={payload.m} N={payload.order}"]
    for row in payload.rows:
        exponents = (
            ", ".join(f"d{key}={value}" for key, value in row.d.items()) or "none"
        )
        lines.append(f"({row.a},{row.b}) slope {row.slope}: {exponents}")
    lines.extend(report_text(payload.report))
    return "\n".join(lines)


def dynkin_text(payload: DynkinPayload) -> str:
    roots = payload.report.details.get("roots", [])
    lines = [
        f"{payload.type} ({payload.orientation}) N={payload.order}: "
        f"{len(roots)} factors"
    ]
    for mu, alpha in zip(payload.report.details.get("slopes", []), roots):
        lines.append(f"  T_{alpha} at slope {mu}")
    lines.extend(report_text(payload.report))
    return "\n".join(lines)


def verify_text(payload: VerifyPayload) -> str:
    lines: List[str] = []
    for report in payload.reports:
        lines.extend(report_text(report))
    lines.append("all checks passed" if payload.ok else f"{payload.failures} failures")
    return "\n".join(lines)
