"""
Helper script for some utilities
"""
import json
import re
from typing import Any, Optional
import numpy as np
import pandas as pd
from pydantic.json import pydantic_encoder

COMPACT_DATE: str = r"\d{8}"


def parse_dates(raw: pd.Series) -> pd.Series:
    """
    Parse ISO (YYYY-MM-DD) or compact (YYYYMMDD) date strings
    :param raw: date strings
    :type raw: pd.Series
    :return: timestamps, NaT where a value does not parse
    :rtype: pd.Series
    """
    text: pd.Series = raw.astype(str).str.strip()
    compact: pd.Series = text.str.fullmatch(COMPACT_DATE)
    parsed: pd.Series = pd.Series(pd.NaT, index=text.index,
                                  dtype="datetime64[ns]")
    parsed[compact] = pd.to_datetime(text[compact], format="%Y%m%d",
                                     errors="coerce")
    parsed[~compact] = pd.to_datetime(text[~compact], format="%Y-%m-%d",
                                      errors="coerce")
    return parsed


def first_invalid(mask: pd.Series) -> Optional[int]:
    """
    Position of the first True entry
    :param mask: flags
    :type mask: pd.Series
    :return: zero based position, None when nothing is flagged
    :rtype: Optional[int]
    """
    hits: np.ndarray = np.flatnonzero(mask.to_numpy())
    return int(hits[0]) if hits.size else None


def to_json(content: Any) -> str:
    """
    Serialize models and plain containers with stable formatting
    :param content: pydantic model, dict or list
    :type content: Any
    :return: indented JSON text ending in a newline
    :rtype: str
    """
    if hasattr(content, "json"):
        content = json.loads(content.json())
    return json.dumps(content, indent=2, default=pydantic_encoder) + "\n"


def file_tag(label: str) -> str:
    """
    Directory-safe name for a series label
    :param label: free text
    :type label: str
    :return: label with runs of unsafe characters replaced by "_"
    :rtype: str
    """
    return re.sub(r"[^A-Za-z0-9._()-]+", "_", label.strip()) or "series"
