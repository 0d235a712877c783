"""Enumeration budgets.

Every brute-force routine takes a :class:`Budget`.  Running past a limit raises
:class:`~coalglab.errors.BudgetExceeded`; nothing is silently truncated.
The defaults can be overridden with ``COALGLAB_BUDGET="key=value,..."``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import BudgetExceeded, InputError

ENV_VAR = "COALGLAB_BUDGET"


@dataclass(frozen=True)
class Budget:
    max_coalgebra_dim: int = 8      # oracles refuse larger coalgebras
    max_total_dim: int = 3          # |d| for comodule enumeration
    max_prime: int = 101            # oracles run over GF(p) with p <= this
    max_candidates: int = 1 << 20   # raw points visited by one brute-force loop
    max_basis: int = 4096           # path coalgebra basis cap
    max_classes: int = 200_000      # candidate comodules before iso reduction

    def check(self, what: str, value: int, limit_name: str) -> None:
        limit = getattr(self, limit_name)
        if value > limit:
            raise BudgetExceeded(f"{what}: {value} exceeds {limit_name}={limit}")

    def with_overrides(self, text: str | None) -> "Budget":
        if not text:
            return self
        known = {f.name for f in fields(self)}
        changes = {}
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            key, sep, val = item.partition("=")
            key = key.strip()
            if not sep or key not in known:
                raise InputError(f"bad budget entry {item!r}; known keys: {sorted(known)}")
            try:
                changes[key] = int(val)
            except ValueError:
                raise InputError(f"budget value for {key} must be an integer") from None
        return replace(self, **changes)


def default_budget() -> Budget:
    return Budget().with_overrides(os.environ.get(ENV_VAR))
