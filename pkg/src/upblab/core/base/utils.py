from pathlib import Path
from typing import Optional

from upblab.core.base.config import CONFIG_FILENAME


def find_config(path: Path) -> Optional[Path]:
    """
    Ascend from path looking for upblab.toml.

    Stops at the first directory holding the file or at a repository
    boundary (.git); returns None when nothing is found.
    """
    path = path.resolve()
    if path.is_file():
        path = path.parent

    current = path
    while True:
        candidate = current / CONFIG_FILENAME
        if candidate.exists():
            return candidate
        if (current / ".git").exists() or current == current.parent:
            return None
        current = current.parent
