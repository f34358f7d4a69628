# -*- coding: utf-8 -*-
"""
Error hierarchy shared by all library modules.

Each error carries a machine-readable ``code`` and a ``details`` dict; the CLI
turns them into JSON error objects and exit codes (2 for domain errors, 3 for
budget errors).
"""

from typing import Any, Dict, Optional


class BierError(Exception):
    """Base class for every error raised on purpose by the library."""

    code = "BIER_ERROR"
    exit_code = 2

    def __init__(self, code: str, message: str = "", details: Optional[Dict[str, Any]] = None):
        super().__init__(message or code)
        self.code = code
        self.message = message or code
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.code, "message": self.message, "details": self.details}


class DomainError(BierError):
    """Input violates a mathematical precondition (improper complex, point off H_0, ...)."""

    exit_code = 2


class BudgetError(BierError):
    """An enumeration or pivot budget would be exceeded."""

    exit_code = 3

    def __init__(self, message: str = "", details: Optional[Dict[str, Any]] = None):
        super().__init__("BUDGET_EXCEEDED", message, details)


def check_budget(name: str, value: int, limit: int) -> None:
    """Raise ``BudgetError`` when ``value`` exceeds ``limit``."""
    if value > limit:
        raise BudgetError(
            f"{name}={value} exceeds the budget {limit}",
            {"name": name, "value": value, "limit": limit},
        )
