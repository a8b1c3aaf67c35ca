"""Serialization of reports and tables.

JSON documents carry ``"schema": "transit-spectra/1"`` and write every float with 17
significant digits, so a value read back is the same binary64 number. Non-finite floats are
written as null. CSV and plain tables go through pandas.
"""

import json
import math
import re
from typing import Any, Iterable

import pandas as pd
from pydantic import BaseModel

from transit_spectra.core.constants import FLOAT_FORMAT, SCHEMA_VERSION, OutputFormat
from transit_spectra.core.schemas import VerificationReport

_PLACEHOLDER = re.compile(r'"\\u0000(\d+)\\u0000"')


def format_float(x: float) -> str:
    """17 significant digits, always recognisable as a float."""
    text = format(x, FLOAT_FORMAT)
    if re.fullmatch(r"-?\d+", text):
        text += ".0"
    return text


def _tokenize(value: Any, floats: list[str]) -> Any:
    """Replace floats by placeholder strings that ``json.dumps`` leaves intact."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return None
        floats.append(format_float(value))
        return f"\x00{len(floats) - 1}\x00"
    if isinstance(value, dict):
        return {key: _tokenize(item, floats) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_tokenize(item, floats) for item in value]
    return value


def dumps_json(payload: Any) -> str:
    """JSON text with the schema tag and 17-significant-digit floats.

    ``payload`` is a model, a list of models, or plain JSON-ready data.
    """
    if isinstance(payload, BaseModel):
        body: Any = payload.model_dump(mode="json")
    elif isinstance(payload, list):
        body = [p.model_dump(mode="json") if isinstance(p, BaseModel) else p for p in payload]
    else:
        body = payload

    document = {"schema": SCHEMA_VERSION}
    if isinstance(body, dict):
        document.update(body)
    else:
        document["records"] = body

    floats: list[str] = []
    text = json.dumps(_tokenize(document, floats), indent=2)
    return _PLACEHOLDER.sub(lambda m: floats[int(m.group(1))], text)


def _flatten(value: Any) -> Any:
    if isinstance(value, float):
        return value
    if isinstance(value, (list, tuple)):
        return " ".join(str(_flatten(v)) for v in value)
    if isinstance(value, dict):
        return ";".join(f"{k}={_flatten(v)}" for k, v in value.items())
    return value


def records_frame(records: Iterable[BaseModel | dict]) -> pd.DataFrame:
    """One row per record; nested fields are flattened into text cells."""
    rows = []
    for record in records:
        data = record.model_dump(mode="json") if isinstance(record, BaseModel) else record
        rows.append({key: _flatten(value) for key, value in data.items()})
    return pd.DataFrame(rows)


def report_frame(report: VerificationReport) -> pd.DataFrame:
    """A verification report as a single row; checks become ``check:<name>`` columns."""
    data = report.model_dump(mode="json", exclude={"checks", "witnesses"})
    row = {key: _flatten(value) for key, value in data.items()}
    row["witnesses"] = " ".join(w.graph6 for w in report.witnesses)
    for name, check in report.checks.items():
        row[f"check:{name}"] = check.passed
    return pd.DataFrame([row])


def render_frame(frame: pd.DataFrame, fmt: OutputFormat) -> str:
    """CSV or aligned plain text."""
    if fmt == "csv":
        return frame.to_csv(index=False, float_format="%" + FLOAT_FORMAT)
    return frame.to_string(index=False)


def render_reports(reports: list[VerificationReport], fmt: OutputFormat) -> str:
    """Several verification reports as one document or one table."""
    if fmt == "json":
        return dumps_json({"reports": [r.model_dump(mode="json") for r in reports]})
    return render_frame(pd.concat([report_frame(r) for r in reports], ignore_index=True), fmt)


def render(payload: BaseModel | list, fmt: OutputFormat) -> str:
    """Serialize a report or a list of records in the requested format."""
    if fmt == "json":
        return dumps_json(payload)
    if isinstance(payload, VerificationReport):
        frame = report_frame(payload)
    elif isinstance(payload, BaseModel):
        frame = records_frame([payload])
    else:
        frame = records_frame(payload)
    return render_frame(frame, fmt)
