"""Shared pytest wiring: the acceptance verdict log and its summary section."""

from __future__ import annotations

import sys

_acceptance_lines: list[str] = []


def verdict(num: int, ok: bool, detail: str):
    """Record and assert one acceptance-criterion outcome."""
    line = f"ACCEPTANCE {num:02d} {'PASS' if ok else 'FAIL'} {detail}"
    _acceptance_lines.append(line)
    print(line, file=sys.__stdout__, flush=True)  # visible under -s
    assert ok, line


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines):
            terminalreporter.write_line(line)
