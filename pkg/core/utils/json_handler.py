# ==============================================================================
# json_handler.py — JSON report serialization
# ==============================================================================
# Purpose: Write validation reports and run manifests as stable, sorted JSON
# Sections: Imports, Serialization, File Output
# ==============================================================================

# Standard Library --------------------------------------------------------------
import json
from pathlib import Path
from typing import Any, Dict, Union

# Third Party -------------------------------------------------------------------
import aiofiles


def dump_json(data: Dict[str, Any]) -> str:
    """Serialize with sorted keys so identical data yields identical bytes."""
    return json.dumps(data, indent=2, sort_keys=True, default=str) + "\n"


async def save_json(data: Dict[str, Any], path: Union[str, Path]) -> str:
    """Save JSON data to `path`, creating parent directories."""
    # 1️⃣ Ensure the output directory exists ----
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)

    # 2️⃣ Write asynchronously ----
    try:
        async with aiofiles.open(file_path, "w", encoding="utf-8") as file:
            await file.write(dump_json(data))
    except (OSError, TypeError) as e:
        raise OSError(f"Failed to save JSON file {file_path}: {str(e)}")

    return str(file_path)
