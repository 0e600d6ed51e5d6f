"""Residual evaluators (LHS - RHS) for the finite square identities.

Every function here returns an exact int that should be zero.  The
``fuzz_identity`` driver sweeps a Cartesian grid and collects nonzero
residuals into an :class:`~fiblike.report.IdentityReport`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .report import IdentityReport
from .sequence import SequenceSpec, fib, g_at, lucas, sign

__all__ = [
    "CATALOG",
    "IDENTITIES",
    "Identity",
    "residual_main",
    "residual_catalog",
    "main_coefficients",
    "find_instantiations",
    "fuzz_identity",
    "STANDARD_SPECS",
]

STANDARD_SPECS = (
    SequenceSpec(0, 1),
    SequenceSpec(2, 1),
    SequenceSpec(1, 1),
    SequenceSpec(3, -5),
)

F = fib
L = lucas


def residual_main(spec: SequenceSpec, j: int, k: int, m: int, s: int) -> int:
    """Residual of the four-square relation linking G_j, G_{j+k}, G_{j+s}, G_{j+m}."""
    G = lambda i: g_at(spec, i)  # noqa: E731
    e = sign(s + k)
    lhs = F(s) * F(m) * F(m - s) * G(j + k) ** 2
    rhs = (
        F(m - s) * F(m - k) * F(s - k) * G(j) ** 2
        + e * F(k) * F(m) * F(m - k) * G(j + s) ** 2
        - e * F(k) * F(s) * F(s - k) * G(j + m) ** 2
    )
    return lhs - rhs


def main_coefficients(m: int, k: int, s: int, shift: int = 0) -> dict[int, int]:
    """The main relation as ``{offset: coefficient}`` with all terms on one side.

    The relation is ``sum(c * G_{j+offset}^2) = 0``; ``shift`` re-centres j.
    Zero coefficients are dropped and equal offsets are combined.
    """
    e = sign(s + k)
    terms = [
        (shift + k, F(s) * F(m) * F(m - s)),
        (shift, -F(m - s) * F(m - k) * F(s - k)),
        (shift + s, -e * F(k) * F(m) * F(m - k)),
        (shift + m, e * F(k) * F(s) * F(s - k)),
    ]
    out: dict[int, int] = {}
    for off, c in terms:
        out[off] = out.get(off, 0) + c
    return {off: c for off, c in out.items() if c != 0}


def find_instantiations(
    target: dict[int, int], bound: int = 4, shifts: Iterable[int] = range(-4, 5)
) -> list[tuple[int, int, int, int, int]]:
    """Search (m, k, s, shift) in a box for instances proportional to ``target``.

    ``target`` maps offsets to coefficients of a square identity written as
    ``sum(c * G_{j+offset}^2) = 0``.  Returns tuples ``(m, k, s, shift, scale)``
    with ``main_coefficients(m, k, s, shift) == scale * target`` for an
    integer ``scale``.
    """
    hits = []
    rng = range(-bound, bound + 1)
    shifts = list(shifts)
    for m, k, s in itertools.product(rng, rng, rng):
        for shift in shifts:
            coeffs = main_coefficients(m, k, s, shift)
            if coeffs.keys() != target.keys():
                continue
            off0 = next(iter(target))
            scale, rem = divmod(coeffs[off0], target[off0])
            if rem or scale == 0:
                continue
            if all(coeffs[o] == scale * target[o] for o in target):
                hits.append((m, k, s, shift, scale))
    return hits


def _brousseau(spec, j):
    G = lambda i: g_at(spec, i)  # noqa: E731
    return G(j - 1) ** 2 + G(j + 2) ** 2 - 2 * G(j) ** 2 - 2 * G(j + 1) ** 2


def _three_six(spec, j):
    G = lambda i: g_at(spec, i)  # noqa: E731
    return G(j + 2) ** 2 + 2 * G(j - 2) ** 2 - 3 * G(j - 1) ** 2 - 6 * G(j) ** 2


def _sixteen_twelve(spec, j):
    G = lambda i: g_at(spec, i)  # noqa: E731
    return 3 * G(j + 3) ** 2 + G(j - 3) ** 2 - 16 * G(j + 1) ** 2 - 12 * G(j) ** 2


def _fk_shift(spec, j, k):
    G = lambda i: g_at(spec, i)  # noqa: E731
    lhs = F(k) * F(k + 1) * G(j + 1) ** 2 - F(k) * F(k - 1) * G(j - 1) ** 2
    return lhs - (G(j + k) ** 2 - F(k + 1) * F(k - 1) * G(j) ** 2)


def _addition_3term(spec, j, k, m, s):
    G = lambda i: g_at(spec, i)  # noqa: E731
    return (
        F(s - k) * G(j + m)
        - F(m - k) * G(j + s)
        - sign(s + k + 1) * F(m - s) * G(j + k)
    )


def _m0_special(spec, j, k, s):
    G = lambda i: g_at(spec, i)  # noqa: E731
    return sign(k) * F(s - k) * G(j) - F(s) * G(j + k) + F(k) * G(j + s)


def _cross_term(spec, j, k, s):
    G = lambda i: g_at(spec, i)  # noqa: E731
    lhs = 2 * F(s) * F(k) * G(j + k) * G(j + s)
    rhs = F(s) ** 2 * G(j + k) ** 2 + F(k) ** 2 * G(j + s) ** 2 - F(s - k) ** 2 * G(j) ** 2
    return lhs - rhs


def _mult_formula(spec, m, n):
    return 5 * F(m) * F(n) - (L(m + n) - sign(n) * L(m - n))


def _sq_3term(spec, j, k):
    G = lambda i: g_at(spec, i)  # noqa: E731
    rhs = (
        F(k + 1) * F(k - 1) * G(j) ** 2
        + F(k + 1) * F(k) * G(j + 1) ** 2
        - F(k - 1) * F(k) * G(j - 1) ** 2
    )
    return G(j + k) ** 2 - rhs


def _cassini_prod(spec, j):
    return F(j) * F(j - 1) - (F(j) ** 2 - F(j - 1) ** 2 + sign(j))


def _spread_lk(spec, j, k):
    G = lambda i: g_at(spec, i)  # noqa: E731
    return L(k) * G(j) - G(j + k) - sign(k) * G(j - k)


def _spread_lk_sq(spec, j, k):
    G = lambda i: g_at(spec, i)  # noqa: E731
    a, b = G(j + k), G(j - k)
    return L(k) ** 2 * G(j) ** 2 - a * a - b * b - 2 * sign(k) * a * b


def _f2k_comb(spec, j, k, r):
    G = lambda i: g_at(spec, i)  # noqa: E731
    return F(2 * k) * G(j + r) - F(r + k) * G(j + k) + F(r - k) * G(j - k)


def _neg_index(spec, j):
    # Left side through the addition formula G_n = F_{n-1} G_0 + F_n G_1, which
    # holds for every integer n, so g_at's own use of the reflection rule is
    # not involved.
    lhs = F(-j - 1) * spec.g0 + F(-j) * spec.g1
    gj = F(j - 1) * spec.g0 + F(j) * spec.g1
    return lhs - sign(j) * (spec.g0 * L(j) - gj)


@dataclass(frozen=True)
class Identity:
    name: str
    params: tuple[str, ...]
    residual: Callable[..., int]
    uses_spec: bool = True
    statement: str = ""


IDENTITIES: dict[str, Identity] = {
    ident.name: ident
    for ident in (
        Identity("MAIN", ("j", "k", "m", "s"), residual_main, True,
                 "F_s F_m F_{m-s} G_{j+k}^2 = F_{m-s}F_{m-k}F_{s-k} G_j^2"
                 " + (-1)^{s+k} F_k F_m F_{m-k} G_{j+s}^2"
                 " - (-1)^{s+k} F_k F_s F_{s-k} G_{j+m}^2"),
        Identity("BROUSSEAU_SQ", ("j",), _brousseau, True,
                 "G_{j-1}^2 + G_{j+2}^2 = 2G_j^2 + 2G_{j+1}^2"),
        Identity("THREE_SIX", ("j",), _three_six, True,
                 "G_{j+2}^2 + 2G_{j-2}^2 = 3G_{j-1}^2 + 6G_j^2"),
        Identity("SIXTEEN_TWELVE", ("j",), _sixteen_twelve, True,
                 "3G_{j+3}^2 + G_{j-3}^2 = 16G_{j+1}^2 + 12G_j^2"),
        Identity("FK_SHIFT", ("j", "k"), _fk_shift, True,
                 "F_k F_{k+1} G_{j+1}^2 - F_k F_{k-1} G_{j-1}^2"
                 " = G_{j+k}^2 - F_{k+1} F_{k-1} G_j^2"),
        Identity("ADDITION_3TERM", ("j", "k", "m", "s"), _addition_3term, True,
                 "F_{s-k} G_{j+m} = F_{m-k} G_{j+s} + (-1)^{s+k+1} F_{m-s} G_{j+k}"),
        Identity("M0_SPECIAL", ("j", "k", "s"), _m0_special, True,
                 "(-1)^k F_{s-k} G_j = F_s G_{j+k} - F_k G_{j+s}"),
        Identity("CROSS_TERM", ("j", "k", "s"), _cross_term, True,
                 "2 F_s F_k G_{j+k} G_{j+s} = F_s^2 G_{j+k}^2 + F_k^2 G_{j+s}^2"
                 " - F_{s-k}^2 G_j^2"),
        Identity("MULT_FORMULA", ("m", "n"), _mult_formula, False,
                 "5 F_m F_n = L_{m+n} - (-1)^n L_{m-n}"),
        Identity("SQ_3TERM", ("j", "k"), _sq_3term, True,
                 "G_{j+k}^2 = F_{k+1}F_{k-1} G_j^2 + F_{k+1}F_k G_{j+1}^2"
                 " - F_{k-1}F_k G_{j-1}^2"),
        Identity("CASSINI_PROD", ("j",), _cassini_prod, False,
                 "F_j F_{j-1} = F_j^2 - F_{j-1}^2 + (-1)^j"),
        Identity("SPREAD_LK", ("j", "k"), _spread_lk, True,
                 "L_k G_j = G_{j+k} + (-1)^k G_{j-k}"),
        Identity("SPREAD_LK_SQ", ("j", "k"), _spread_lk_sq, True,
                 "L_k^2 G_j^2 = G_{j+k}^2 + G_{j-k}^2 + 2(-1)^k G_{j+k} G_{j-k}"),
        Identity("F2K_COMB", ("j", "k", "r"), _f2k_comb, True,
                 "F_{2k} G_{j+r} = F_{r+k} G_{j+k} - F_{r-k} G_{j-k}"),
        Identity("NEG_INDEX", ("j",), _neg_index, True,
                 "G_{-j} = (-1)^j (G_0 L_j - G_j)"),
    )
}

CATALOG = tuple(name for name in IDENTITIES if name != "MAIN")


def residual_catalog(identity: str, spec: SequenceSpec | None, params: Sequence[int]) -> int:
    """Residual of the catalog identity named ``identity`` at ``params``."""
    try:
        ident = IDENTITIES[identity]
    except KeyError:
        raise KeyError(f"unknown identity {identity!r}") from None
    if len(params) != len(ident.params):
        raise ValueError(
            f"{identity} takes {len(ident.params)} parameters "
            f"{ident.params}, got {len(params)}"
        )
    if spec is None:
        if ident.uses_spec:
            raise ValueError(f"{identity} needs a sequence spec")
        spec = SequenceSpec(0, 1)
    return ident.residual(spec, *params)


def _grid_chunk(identity: str, spec: SequenceSpec, head: tuple[int, ...], tails) -> IdentityReport:
    report = IdentityReport(identity)
    fn = IDENTITIES[identity].residual
    for tail in tails:
        params = head + tail
        report.record((spec.g0, spec.g1) + params, fn(spec, *params))
    return report


def fuzz_identity(
    identity: str,
    specs: Iterable[SequenceSpec],
    grid: Sequence[Iterable[int]],
    executor=None,
) -> IdentityReport:
    """Evaluate ``identity`` over every spec and every tuple of ``grid``.

    ``grid`` holds one iterable of values per parameter.  With an
    ``executor`` (anything with ``map``), work is split on the first
    parameter; the merged report is sorted, so it does not depend on how the
    work was split.
    """
    ident = IDENTITIES[identity]
    if len(grid) != len(ident.params):
        raise ValueError(f"{identity} expects {len(ident.params)} ranges, got {len(grid)}")
    axes = [list(axis) for axis in grid]
    specs = list(specs) if ident.uses_spec else [SequenceSpec(0, 1)]
    tails = list(itertools.product(*axes[1:]))
    jobs = [(identity, spec, (first,), tails) for spec in specs for first in axes[0]]

    report = IdentityReport(identity)
    mapper = executor.map if executor is not None else map
    for part in mapper(_run_job, jobs):
        report.merge(part)
    return report.canonicalize()


def _run_job(job) -> IdentityReport:
    return _grid_chunk(*job)
