"""
Run context using contextvars.

Provides thread-safe context storage for:
- CLI command
- Audit suite
- PRNG seed
"""

import contextvars
from typing import Any

# Context variables
command_var: contextvars.ContextVar[str | None] = contextvars.ContextVar(
    "command", default=None
)
suite_var: contextvars.ContextVar[str | None] = contextvars.ContextVar(
    "suite", default=None
)
seed_var: contextvars.ContextVar[int | None] = contextvars.ContextVar(
    "seed", default=None
)


def set_run_context(
    command: str | None = None,
    suite: str | None = None,
    seed: int | None = None,
) -> None:
    """Set run context variables."""
    if command:
        command_var.set(command)
    if suite:
        suite_var.set(suite)
    if seed is not None:
        seed_var.set(seed)


def get_run_context() -> dict[str, Any]:
    """Get the populated run context as a dictionary."""
    context = {
        "command": command_var.get(),
        "suite": suite_var.get(),
        "seed": seed_var.get(),
    }
    return {key: value for key, value in context.items() if value is not None}


def clear_run_context() -> None:
    """Clear all context variables."""
    command_var.set(None)
    suite_var.set(None)
    seed_var.set(None)
