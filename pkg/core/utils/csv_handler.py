# ==============================================================================
# csv_handler.py — Deterministic CSV emission
# ==============================================================================
# Purpose: Render report tables to byte-stable CSV files
# Sections: Imports, Rendering, File Output
# ==============================================================================

# Standard Library --------------------------------------------------------------
import hashlib
from pathlib import Path
from typing import Sequence, Union

# Third Party -------------------------------------------------------------------
import aiofiles
import pandas as pd


def render_csv(frame: pd.DataFrame, sort_by: Sequence[str] = ()) -> str:
    """Sort by the leading id columns and format floats with six fraction digits."""
    if sort_by and not frame.empty:
        frame = frame.sort_values(list(sort_by), kind="mergesort").reset_index(drop=True)
    return frame.to_csv(index=False, lineterminator="\n", float_format="%.6f")


async def save_csv(frame: pd.DataFrame, path: Union[str, Path], sort_by: Sequence[str] = ()) -> str:
    """Write `frame` to `path`; returns the sha256 digest of the bytes written."""
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    content = render_csv(frame, sort_by)

    try:
        async with aiofiles.open(file_path, "w", encoding="utf-8", newline="") as file:
            await file.write(content)
    except OSError as e:
        raise OSError(f"Failed to save CSV file {file_path}: {str(e)}")

    return hashlib.sha256(content.encode("utf-8")).hexdigest()


def file_digest(path: Union[str, Path]) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()
