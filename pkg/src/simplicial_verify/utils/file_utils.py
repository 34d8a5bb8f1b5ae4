import json
from pathlib import Path
from typing import Any

import structlog

from simplicial_verify.errors import DocumentParseError

logger = structlog.get_logger(__name__)


def load_txt(file_path: Path) -> str:
    """Load a txt file from a specified path."""
    try:
        with file_path.open(encoding="utf-8") as f:
            return f.read().strip()
    except FileNotFoundError as e:
        msg = f"{file_path}: no such file"
        raise DocumentParseError(msg) from e
    except (OSError, UnicodeDecodeError) as e:
        msg = f"{file_path}: {e}"
        raise DocumentParseError(msg) from e


def load_json(file_path: Path) -> dict[str, Any]:
    """
    Read a JSON document.

    Raises:
        DocumentParseError: The file is missing or unreadable, is not valid JSON (with the
            line and column of the problem), or is not a JSON object.
    """
    try:
        with file_path.open(encoding="utf-8") as f:
            contents = json.load(f)
    except FileNotFoundError as e:
        msg = f"{file_path}: no such file"
        raise DocumentParseError(msg) from e
    except json.JSONDecodeError as e:
        msg = f"{file_path}: {e.msg}"
        raise DocumentParseError(msg, line=e.lineno, column=e.colno) from e
    except (OSError, UnicodeDecodeError) as e:
        msg = f"{file_path}: {e}"
        raise DocumentParseError(msg) from e
    if not isinstance(contents, dict):
        msg = f"{file_path}: top level must be an object"
        raise DocumentParseError(msg, line=1, column=1)
    return contents


def save_json(contents: dict[str, Any], file_path: Path) -> None:
    """Save json files to specified path, creating parent directories."""
    file_path.parent.mkdir(parents=True, exist_ok=True)
    with file_path.open("w", encoding="utf-8") as f:
        json.dump(contents, f, indent=2, ensure_ascii=False)
        f.write("\n")
    logger.info("Data has been saved.", file_path=str(file_path))
