"""Global limits. Values are read once from the environment and may be
overridden per process (the CLI does so from its flags)."""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass

DEFAULT_ORDER_CAP = 4096
DEFAULT_ENUMERATION_CAP = 256
DEFAULT_SEARCH_BUDGET = 10**6


@dataclass
class Limits:
    order_cap: int = int(os.environ.get("RINGLAB_ORDER_CAP", DEFAULT_ORDER_CAP))
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    search_budget: int = DEFAULT_SEARCH_BUDGET


limits = Limits()


@contextmanager
def override(**kwargs):
    saved = {k: getattr(limits, k) for k in kwargs}
    for k, v in kwargs.items():
        setattr(limits, k, v)
    try:
        yield limits
    finally:
        for k, v in saved.items():
            setattr(limits, k, v)
