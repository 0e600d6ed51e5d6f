"""Outcome records for identity sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

Number = Union[int, Fraction]


@dataclass
class IdentityReport:
    """Result of checking one identity over a finite parameter grid.

    ``checked`` counts the non-degenerate tuples.  Degenerate tuples (those
    violating a hypothesis of the identity) are still evaluated; they are
    listed in ``degenerate`` and any nonzero residual among them goes to
    ``degenerate_failures`` rather than ``failures``.
    """

    identity: str
    checked: int = 0
    failures: list[tuple[tuple, Number]] = field(default_factory=list)
    degenerate: list[tuple] = field(default_factory=list)
    degenerate_failures: list[tuple[tuple, Number]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, params: tuple, residual: Number, degenerate: bool = False) -> None:
        if degenerate:
            self.degenerate.append(params)
            if residual != 0:
                self.degenerate_failures.append((params, residual))
        else:
            self.checked += 1
            if residual != 0:
                self.failures.append((params, residual))

    def skip(self, params: tuple) -> None:
        """List a degenerate tuple that was not evaluated at all."""
        self.degenerate.append(params)

    def merge(self, other: "IdentityReport") -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)
        self.degenerate.extend(other.degenerate)
        self.degenerate_failures.extend(other.degenerate_failures)

    def canonicalize(self) -> "IdentityReport":
        """Sort every list by parameter tuple so output is order independent."""
        self.failures.sort(key=lambda item: _sort_key(item[0]))
        self.degenerate.sort(key=_sort_key)
        self.degenerate_failures.sort(key=lambda item: _sort_key(item[0]))
        return self

    def to_dict(self) -> dict[str, Any]:
        return {
            "identity": self.identity,
            "checked": self.checked,
            "failures": [
                {"params": _jsonable(p), "residual": str(r)} for p, r in self.failures
            ],
            "degenerate": [_jsonable(p) for p in self.degenerate],
            "degenerate_failures": [
                {"params": _jsonable(p), "residual": str(r)}
                for p, r in self.degenerate_failures
            ],
        }


def _sort_key(params: tuple) -> tuple:
    # Fractions and specs mix with ints inside tuples; compare via a stable form.
    return tuple(_key_atom(v) for v in params)


def _key_atom(v: Any) -> tuple:
    if isinstance(v, (int, Fraction)):
        return (0, v, "")
    if isinstance(v, tuple):
        return (1, 0, repr(_sort_key(v)))
    return (2, 0, str(v))


def _jsonable(params: tuple) -> list:
    out = []
    for v in params:
        if isinstance(v, bool) or isinstance(v, int):
            out.append(v)
        elif isinstance(v, tuple):
            out.append(_jsonable(v))
        else:
            out.append(str(v))
    return out
