"""
CRUD Artifact operations
"""
import logging
from pathlib import Path
from typing import Any
import pandas as pd
from helper.helper import to_json
from schemas.ann import LearningCurve

logger: logging.Logger = logging.getLogger(__name__)

ERROR_RECORD: str = "error.json"


class ArtifactStore:
    """
    Staged output files. Content accumulates in memory and reaches the
     disk only on commit, so a failed run leaves no partial artifacts.
    """

    def __init__(self, directory: Path, encoding: str = "utf-8"):
        self.directory: Path = directory
        self.encoding: str = encoding
        self.staged: dict[str, str] = {}

    def add_json(self, name: str, content: Any) -> None:
        """
        Stage a JSON document
        :param name: path relative to the output directory
        :type name: str
        :param content: pydantic model or plain container
        :type content: Any
        :return: None
        :rtype: NoneType
        """
        self.staged[name] = to_json(content)

    def add_csv(self, name: str, frame: pd.DataFrame) -> None:
        """
        Stage a CSV file
        :param name: path relative to the output directory
        :type name: str
        :param frame: table without index
        :type frame: pd.DataFrame
        :return: None
        :rtype: NoneType
        """
        self.staged[name] = frame.to_csv(index=False, lineterminator="\n")

    def add_text(self, name: str, text: str) -> None:
        """
        Stage a plain text file
        :param name: path relative to the output directory
        :type name: str
        :param text: content
        :type text: str
        :return: None
        :rtype: NoneType
        """
        self.staged[name] = text

    def merge(self, other: "ArtifactStore", prefix: str = "") -> None:
        """
        Stage another store's files under a sub-directory
        :param other: store to take files from
        :type other: ArtifactStore
        :param prefix: sub-directory name
        :type prefix: str
        :return: None
        :rtype: NoneType
        """
        for name, text in other.staged.items():
            self.staged[f"{prefix}/{name}" if prefix else name] = text

    def commit(self) -> list[Path]:
        """
        Write every staged file
        :return: written paths
        :rtype: list[Path]
        """
        written: list[Path] = []
        for name, text in self.staged.items():
            path: Path = self.directory / name
            path.parent.mkdir(parents=True, exist_ok=True)
            with path.open("w", encoding=self.encoding, newline="") as file:
                file.write(text)
            written.append(path)
            logger.info("wrote %s", path)
        self.staged.clear()
        return written


def write_error(directory: Path, record: dict[str, Any],
                encoding: str = "utf-8") -> Path:
    """
    Write the machine readable record of a failed run
    :param directory: output directory
    :type directory: Path
    :param record: code, message, exit code and details
    :type record: dict[str, Any]
    :param encoding: file encoding
    :type encoding: str
    :return: path of error.json
    :rtype: Path
    """
    directory.mkdir(parents=True, exist_ok=True)
    path: Path = directory / ERROR_RECORD
    path.write_text(to_json(record), encoding=encoding)
    return path


def curve_frame(curve: LearningCurve) -> pd.DataFrame:
    """
    Learning curve as epoch, train_loss, val_loss columns
    :param curve: per-epoch losses
    :type curve: LearningCurve
    :return: frame ready for CSV export
    :rtype: pd.DataFrame
    """
    return pd.DataFrame({
        "epoch": range(1, len(curve.train_loss) + 1),
        "train_loss": curve.train_loss, "val_loss": curve.val_loss})
