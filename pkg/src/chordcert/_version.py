"""Version information for chordcert."""

import os
import subprocess
from importlib import metadata
from typing import Dict, Optional

try:
    import tomllib
except ImportError:
    import tomli as tomllib


def get_version() -> str:
    """Get version string from pyproject.toml, installed metadata, or the static fallback."""
    try:
        # src/chordcert -> project root
        current_dir = os.path.dirname(os.path.abspath(__file__))
        project_root = os.path.dirname(os.path.dirname(current_dir))
        toml_path = os.path.join(project_root, "pyproject.toml")

        if os.path.exists(toml_path):
            with open(toml_path, "rb") as f:
                pyproject = tomllib.load(f)
                version = pyproject.get("project", {}).get("version")
                if version:
                    return version
    except (OSError, tomllib.TOMLDecodeError):
        pass

    try:
        return metadata.version("chordcert")
    except metadata.PackageNotFoundError:
        pass

    return "0.1.0"


def _git(*args: str) -> Optional[str]:
    try:
        result = subprocess.run(
            ["git", *args],
            capture_output=True,
            text=True,
            cwd=os.path.dirname(os.path.abspath(__file__)),
        )
    except (subprocess.CalledProcessError, FileNotFoundError):
        return None
    return result.stdout.strip() if result.returncode == 0 else None


def get_build_info() -> Dict[str, str]:
    """Version plus the git commit the package was run from, when available."""
    return {
        "version": get_version(),
        "commit_hash": _git("rev-parse", "HEAD") or "unknown",
        "commit_date": _git("log", "-1", "--format=%ci") or "unknown",
    }


__version__ = get_version()
