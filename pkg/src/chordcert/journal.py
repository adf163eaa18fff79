"""
JSON-lines event journal for certification sweeps.
"""

import json
import logging
import os
from datetime import datetime
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)


class SweepJournal:
    """Appends one JSON object per sweep event to ``log_file``.

    The journal carries wall-clock timestamps and is therefore kept apart from
    the deterministic report.
    """

    def __init__(self, log_file: str):
        self.log_file = log_file
        directory = os.path.dirname(log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)

    def _write(self, entry: Dict[str, Any]) -> None:
        entry = {"timestamp": datetime.now().isoformat(), **entry}
        with open(self.log_file, "a", encoding="utf-8") as f:
            f.write(json.dumps(entry, sort_keys=True) + "\n")

    def log_sweep_start(self, fields: List[str], config_hash: str = "") -> None:
        """Log the fields a sweep is about to cover."""
        self._write({"action": "sweep_start", "fields": fields, "config_hash": config_hash})

    def log_curve_done(self, field: str, curve: str, triples: int, paths: Dict[str, int]) -> None:
        self._write({
            "action": "curve_done",
            "field": field,
            "curve": curve,
            "triples": triples,
            "paths": paths,
        })

    def log_failure(self, field: str, curve: str, kind: str,
                    details: Optional[Dict[str, Any]] = None):
        """Log an axiom or certification failure."""
        logger.error(f"Sweep failure on {curve} over {field}: {kind}")
        self._write({
            "action": "failure",
            "field": field,
            "curve": curve,
            "kind": kind,
            "details": details or {},
        })

    def log_sweep_finish(self, curves: int, triples: int, failures: int) -> None:
        self._write({
            "action": "sweep_finish",
            "curves": curves,
            "triples": triples,
            "failures": failures,
        })

    def read_entries(self) -> List[Dict[str, Any]]:
        """All entries written so far, oldest first."""
        if not os.path.exists(self.log_file):
            return []
        with open(self.log_file, encoding="utf-8") as f:
            return [json.loads(line) for line in f if line.strip()]
