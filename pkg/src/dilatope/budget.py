"""Resource caps shared by the enumeration-heavy routines.

Caps are scoped with :func:`limits`::

    with limits(points=10**6, seconds=30):
        mu_profile(P)

Inside the block every enumeration checks the active caps and raises
:class:`BudgetExceeded` instead of running away.
"""

from __future__ import annotations

import contextlib
import contextvars
import time
from dataclasses import dataclass, replace

from .errors import BudgetExceeded


@dataclass(frozen=True)
class Budget:
    points: int = 10**7
    subsets: int = 10**7
    seconds: float | None = None
    deadline: float | None = None


DEFAULT = Budget()
_current: contextvars.ContextVar[Budget] = contextvars.ContextVar("dilatope_budget", default=DEFAULT)


def current() -> Budget:
    return _current.get()


@contextlib.contextmanager
def limits(points: int | None = None, subsets: int | None = None, seconds: float | None = None):
    b = current()
    if points is not None:
        if points <= 0:
            raise ValueError("points budget must be positive")
        b = replace(b, points=points)
    if subsets is not None:
        if subsets <= 0:
            raise ValueError("subsets budget must be positive")
        b = replace(b, subsets=subsets)
    if seconds is not None:
        if seconds <= 0:
            raise ValueError("time budget must be positive")
        deadline = time.monotonic() + seconds
        if b.deadline is not None:
            deadline = min(deadline, b.deadline)
        b = replace(b, seconds=seconds, deadline=deadline)
    token = _current.set(b)
    try:
        yield b
    finally:
        _current.reset(token)


def check_deadline() -> None:
    deadline = _current.get().deadline
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceeded("time budget exhausted")


def check_points(n: int) -> None:
    cap = _current.get().points
    if n > cap:
        raise BudgetExceeded(f"more than {cap} lattice points")
    check_deadline()


def check_subsets(n: int) -> None:
    cap = _current.get().subsets
    if n > cap:
        raise BudgetExceeded(f"more than {cap} candidate subsets")
    check_deadline()
