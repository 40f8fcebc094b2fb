"""Exact feasibility of homogeneous linear systems via Fourier-Motzkin.

Decides whether a system of constraints ``a . x >= 0`` / ``a . x > 0`` has a
solution and, when it does, produces an exact rational witness by back
substitution through the elimination steps.  The systems in this library are
tiny (a handful of variables), which is the regime where Fourier-Motzkin is
both exact and fast.  Constraints are rescaled to coprime integers and
deduplicated between rounds to keep intermediate systems small.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Constraint:
    """``coeffs . x > 0`` when strict, else ``coeffs . x >= 0``."""

    coeffs: tuple[int, ...]
    strict: bool = False


class _Infeasible(Exception):
    """Internal signal: a constraint reduced to 0 > 0."""


def _normalized(coeffs: Sequence, strict: bool) -> Constraint:
    """Rescale to coprime integer coefficients (positive multiplier only)."""
    fracs = [Fraction(c) for c in coeffs]
    scale = 1
    for f in fracs:
        scale = scale * f.denominator // gcd(scale, f.denominator)
    ints = [int(f * scale) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return Constraint(tuple(ints), strict)


def _deduped(constraints: Iterable[Constraint]) -> list[Constraint]:
    by_coeffs: dict[tuple[int, ...], bool] = {}
    for c in constraints:
        if all(x == 0 for x in c.coeffs):
            if c.strict:
                raise _Infeasible
            continue
        # a >= 0 together with a > 0 collapses to the strict form
        by_coeffs[c.coeffs] = by_coeffs.get(c.coeffs, False) or c.strict
    return [Constraint(k, s) for k, s in by_coeffs.items()]


def _pick_variable(constraints: list[Constraint], remaining: list[int]) -> int:
    """Pick the variable whose elimination produces the fewest new rows."""
    best = remaining[0]
    best_cost = None
    for var in remaining:
        pos = sum(1 for c in constraints if c.coeffs[var] > 0)
        neg = sum(1 for c in constraints if c.coeffs[var] < 0)
        cost = pos * neg - (pos + neg)
        if best_cost is None or cost < best_cost:
            best, best_cost = var, cost
    return best


def find_solution(
    constraints: Iterable[Constraint | tuple[Sequence, bool]],
    n_vars: int,
) -> tuple[Fraction, ...] | None:
    """Exact solution of the homogeneous system, or None when infeasible.

    Accepts Constraint instances or plain ``(coeffs, strict)`` pairs; the
    coefficients may be ints or Fractions.
    """
    rows = []
    for c in constraints:
        if not isinstance(c, Constraint):
            c = Constraint(tuple(c[0]), bool(c[1]))
        if len(c.coeffs) != n_vars:
            raise ValueError(f"constraint has {len(c.coeffs)} coefficients, expected {n_vars}")
        rows.append(_normalized(c.coeffs, c.strict))

    try:
        active = _deduped(rows)
        steps: list[tuple[int, list[Constraint], list[Constraint]]] = []
        remaining = list(range(n_vars))
        while remaining:
            var = _pick_variable(active, remaining)
            remaining.remove(var)
            lowers = [c for c in active if c.coeffs[var] > 0]
            uppers = [c for c in active if c.coeffs[var] < 0]
            kept = [c for c in active if c.coeffs[var] == 0]
            combined = []
            for lo in lowers:
                for hi in uppers:
                    a, b = lo.coeffs[var], -hi.coeffs[var]
                    coeffs = tuple(b * x + a * y for x, y in zip(lo.coeffs, hi.coeffs))
                    combined.append(_normalized(coeffs, lo.strict or hi.strict))
            steps.append((var, lowers, uppers))
            active = _deduped(kept + combined)
    except _Infeasible:
        return None

    # Back-substitute in reverse elimination order.  At the step where a
    # variable was eliminated, its bounding constraints only mention that
    # variable and variables eliminated later, which already have values.
    values: list[Fraction] = [Fraction(0)] * n_vars
    for var, lowers, uppers in reversed(steps):
        lo_bound = lo_strict = None
        for c in lowers:
            rest = sum(c.coeffs[u] * values[u] for u in range(n_vars) if u != var)
            bound = Fraction(-rest, c.coeffs[var])
            if lo_bound is None or bound > lo_bound:
                lo_bound, lo_strict = bound, c.strict
            elif bound == lo_bound:
                lo_strict = lo_strict or c.strict
        hi_bound = hi_strict = None
        for c in uppers:
            rest = sum(c.coeffs[u] * values[u] for u in range(n_vars) if u != var)
            bound = Fraction(rest, -c.coeffs[var])
            if hi_bound is None or bound < hi_bound:
                hi_bound, hi_strict = bound, c.strict
            elif bound == hi_bound:
                hi_strict = hi_strict or c.strict
        if lo_bound is None and hi_bound is None:
            values[var] = Fraction(0)
        elif hi_bound is None:
            values[var] = lo_bound + 1 if lo_strict else lo_bound
        elif lo_bound is None:
            values[var] = hi_bound - 1 if hi_strict else hi_bound
        else:
            # Elimination already certified the interval is nonempty.
            assert lo_bound < hi_bound or (
                lo_bound == hi_bound and not lo_strict and not hi_strict
            ), "back-substitution found an empty interval"
            values[var] = (lo_bound + hi_bound) / 2
    return tuple(values)


def feasible(constraints: Iterable[Constraint | tuple[Sequence, bool]], n_vars: int) -> bool:
    """True iff the homogeneous system admits a solution."""
    return find_solution(constraints, n_vars) is not None


def satisfies(solution: Sequence[Fraction], constraint: Constraint) -> bool:
    """Check one constraint against a candidate solution, exactly."""
    value = sum(c * x for c, x in zip(constraint.coeffs, solution))
    return value > 0 if constraint.strict else value >= 0
