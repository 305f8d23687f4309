"""
CRUD Series operations
"""
import logging
from datetime import date
from pathlib import Path
from typing import Optional
import numpy as np
import pandas as pd
from pydantic import ValidationError
from core.exceptions import ConfigurationError, DataError, IngestionError
from crud import Filter, Specification
from helper.helper import first_invalid, parse_dates
from schemas import DatedSeries
from schemas.forecast import ForecastTrack
from schemas.timeseries import PriceSeries, ReturnSeries
from services.timeseries import TimeSeriesService

logger: logging.Logger = logging.getLogger(__name__)

DATE_COLUMN: str = "date"
HEADER_LINE: int = 1


class ColumnSpecification(Specification):
    """
    Column Specification class based on Specification
    """

    def __init__(self, columns: Optional[list[str]] = None):
        super().__init__(columns)
        self.columns: list[str] = list(columns or [])


class DateRangeSpecification(Specification):
    """
    Date range Specification class based on Specification
    """

    def __init__(self, start: Optional[date] = None,
                 end: Optional[date] = None):
        super().__init__((start, end))
        self.start: Optional[date] = start
        self.end: Optional[date] = end


class ColumnFilter(Filter):
    """
    Column Filter class based on Filter.
    """

    def filter(self, frame: pd.DataFrame, spec: ColumnSpecification
               ) -> pd.DataFrame:
        if not spec.columns:
            return frame
        missing: list[str] = [c for c in spec.columns
                              if c not in frame.columns]
        if missing:
            raise ConfigurationError(
                f"unknown column(s) {', '.join(missing)}; available:"
                f" {', '.join(frame.columns)}")
        return frame[spec.columns]


class DateRangeFilter(Filter):
    """
    Date range Filter class based on Filter, bounds inclusive.
    """

    def filter(self, frame: pd.DataFrame, spec: DateRangeSpecification
               ) -> pd.DataFrame:
        if spec.start and spec.end and spec.start > spec.end:
            raise ConfigurationError(
                f"start {spec.start} is after end {spec.end}")
        keep: pd.Series = pd.Series(True, index=frame.index)
        if spec.start:
            keep &= frame.index >= pd.Timestamp(spec.start)
        if spec.end:
            keep &= frame.index <= pd.Timestamp(spec.end)
        return frame[keep.to_numpy()]


def read_frame(path: Path, encoding: str = "utf-8") -> pd.DataFrame:
    """
    Read a dated CSV: a date column (ISO or YYYYMMDD) followed by one
     numeric column per series
    :param path: CSV file
    :type path: Path
    :param encoding: file encoding
    :type encoding: str
    :return: float columns indexed by strictly increasing dates
    :rtype: pd.DataFrame
    """
    try:
        raw: pd.DataFrame = pd.read_csv(
            path, dtype=str, keep_default_na=False, skipinitialspace=True,
            encoding=encoding)
    except FileNotFoundError as exc:
        raise IngestionError(f"{path} does not exist") from exc
    except (pd.errors.ParserError, pd.errors.EmptyDataError,
            UnicodeDecodeError) as exc:
        raise IngestionError(f"{path} is not a readable CSV: {exc}") from exc
    raw.columns = [str(c).strip() for c in raw.columns]
    if raw.columns[0].lower() != DATE_COLUMN:
        raise IngestionError("the first column must be named 'date'",
                             HEADER_LINE)
    if raw.shape[1] < 2:
        raise IngestionError("no value columns after 'date'", HEADER_LINE)
    if raw.columns.duplicated().any():
        raise IngestionError("column names must be unique", HEADER_LINE)
    dates: pd.Series = parse_dates(raw.iloc[:, 0])
    position: Optional[int] = first_invalid(dates.isna())
    if position is not None:
        raise IngestionError(
            f"unparseable date {raw.iloc[position, 0]!r}",
            position + HEADER_LINE + 1)
    position = first_invalid(dates.diff().dt.days.fillna(1) <= 0)
    if position is not None:
        raise IngestionError("dates must be strictly increasing",
                             position + HEADER_LINE + 1)
    frame: pd.DataFrame = pd.DataFrame(index=pd.DatetimeIndex(dates.values))
    for column in raw.columns[1:]:
        values: pd.Series = pd.to_numeric(raw[column].str.strip(),
                                          errors="coerce")
        position = first_invalid(~np.isfinite(values))
        if position is not None:
            raise IngestionError(
                f"column {column!r} holds non-numeric value"
                f" {raw[column].iloc[position]!r}",
                position + HEADER_LINE + 1)
        frame[column] = values.to_numpy(dtype=np.float64)
    logger.info("read %d rows and %d series from %s", len(frame),
                frame.shape[1], path)
    return frame


def load_returns(
        path: Path, columns: Optional[list[str]] = None,
        prices: bool = False, percent: bool = False,
        start: Optional[date] = None, end: Optional[date] = None,
        encoding: str = "utf-8") -> dict[str, ReturnSeries]:
    """
    Load return series from a dated CSV
    :param path: CSV file
    :type path: Path
    :param columns: columns to keep; all when empty
    :type columns: list[str]
    :param prices: columns hold price levels to convert into returns
    :type prices: bool
    :param percent: columns hold returns in percent
    :type percent: bool
    :param start: first date kept
    :type start: date
    :param end: last date kept
    :type end: date
    :param encoding: file encoding
    :type encoding: str
    :return: one series per column, in file order
    :rtype: dict[str, ReturnSeries]
    """
    if prices and percent:
        raise ConfigurationError("--prices and --percent are exclusive")
    frame: pd.DataFrame = read_frame(path, encoding)
    frame = ColumnFilter().filter(frame, ColumnSpecification(columns))
    frame = DateRangeFilter().filter(frame,
                                     DateRangeSpecification(start, end))
    dates: list[date] = list(frame.index.date)
    series: dict[str, ReturnSeries] = {}
    for column in frame.columns:
        values: np.ndarray = frame[column].to_numpy(dtype=np.float64)
        try:
            if prices:
                series[column] = TimeSeriesService.compute_returns(
                    PriceSeries(dates=dates, values=values.tolist(),
                                label=column))
            else:
                scaled: np.ndarray = values / 100.0 if percent else values
                series[column] = ReturnSeries(
                    dates=dates, values=scaled.tolist(), label=column)
        except ValidationError as exc:
            raise DataError(f"column {column!r}: {exc}") from exc
    return series


def series_frame(named: dict[str, DatedSeries]) -> pd.DataFrame:
    """
    Frame in the ingestion schema: a date column and one column per series
    :param named: series sharing their dates
    :type named: dict[str, DatedSeries]
    :return: frame ready for CSV export
    :rtype: pd.DataFrame
    """
    first: DatedSeries = next(iter(named.values()))
    frame: pd.DataFrame = pd.DataFrame(
        {DATE_COLUMN: [d.isoformat() for d in first.dates]})
    for name, series in named.items():
        frame[name] = series.values
    return frame


def track_frame(track: ForecastTrack) -> pd.DataFrame:
    """
    Forecast track as date, predicted, realized columns
    :param track: forecasts
    :type track: ForecastTrack
    :return: frame ready for CSV export
    :rtype: pd.DataFrame
    """
    return pd.DataFrame({
        DATE_COLUMN: [d.isoformat() for d in track.dates],
        "predicted": track.predicted, "realized": track.realized})


def load_track(path: Path) -> ForecastTrack:
    """
    Read a track written as forecast_<model>.csv
    :param path: CSV file
    :type path: Path
    :return: forecasts named after the file
    :rtype: ForecastTrack
    """
    frame: pd.DataFrame = read_frame(path)
    if list(frame.columns) != ["predicted", "realized"]:
        raise IngestionError(
            f"{path.name} must hold date, predicted and realized columns",
            HEADER_LINE)
    model_id: str = path.stem.removeprefix("forecast_")
    try:
        return ForecastTrack(
            dates=list(frame.index.date),
            predicted=frame["predicted"].tolist(),
            realized=frame["realized"].tolist(), model_id=model_id)
    except ValidationError as exc:
        raise DataError(f"{path.name}: {exc}") from exc
