"""Opt-in call counting for coverage checks of the public operations.

Counting is off by default so the hot paths stay cheap; tests switch it on
with `enable()` and then assert that a full verification run touched every
registered operation at least once.
"""
from __future__ import annotations

import functools
from collections import Counter

REGISTERED: set[str] = set()
counts: Counter[str] = Counter()
_enabled = False


def enable() -> None:
    global _enabled
    _enabled = True


def disable() -> None:
    global _enabled
    _enabled = False


def reset() -> None:
    counts.clear()


def traced(fn):
    """Register `fn` as a public operation and count its calls when enabled."""
    name = f"{fn.__module__.rsplit('.', 1)[-1]}.{fn.__name__}"
    REGISTERED.add(name)

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        if _enabled:
            counts[name] += 1
        return fn(*args, **kwargs)

    return wrapper
