"""Machine-readable run reports emitted by the command-line tool."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .snapshots import OpCounter

__all__ = ["RunReport", "input_digest"]


def input_digest(data: str | bytes) -> str:
    """Hex SHA-256 of the raw input document."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()


@dataclass
class RunReport:
    """One run's outcome plus its exact operation counts."""

    command: str
    algorithm: str
    input_sha256: str
    result: object
    intersections: int
    connectivity_tests: int
    wall_time_s: float
    schema: int = 1

    @classmethod
    def build(
        cls,
        command: str,
        algorithm: str,
        digest: str,
        result,
        counter: OpCounter,
        wall_time_s: float,
    ) -> "RunReport":
        return cls(
            command=command,
            algorithm=algorithm,
            input_sha256=digest,
            result=result,
            intersections=counter.intersections,
            connectivity_tests=counter.connectivity_tests,
            wall_time_s=wall_time_s,
        )

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "command": self.command,
            "algorithm": self.algorithm,
            "input_sha256": self.input_sha256,
            "result": self.result,
            "intersections": self.intersections,
            "connectivity_tests": self.connectivity_tests,
            "wall_time_s": self.wall_time_s,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())
