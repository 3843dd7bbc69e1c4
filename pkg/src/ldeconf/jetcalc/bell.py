"""Incomplete exponential Bell polynomials and Faa di Bruno's formula.

``B_{i,n}(z_1, ..., z_{i-n+1})`` is the sum over all non-negative integer
sequences ``j_1, ..., j_{i-n+1}`` with ``sum j_m = n`` and ``sum m j_m = i`` of

    i! / prod(j_m! (m!)^{j_m}) * prod(z_m^{j_m}).

Arguments may be ints (exact arithmetic), complex numbers or
:class:`~ldeconf.jetcalc.jet.ComplexJet` values; only ``+``, ``*`` and
non-negative integer ``**`` are used.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from typing import Any

from ldeconf.jetcalc.exceptions import BellIndexError

# Integer coefficients are computed exactly up to this index.
MAX_EXACT_INDEX = 20


def _check_indices(i: int, n: int, count: int) -> None:
    if n < 0 or i < n:
        raise BellIndexError("Bell polynomial needs i >= n >= 0", details={"i": i, "n": n})
    if i > MAX_EXACT_INDEX:
        raise BellIndexError(
            "Bell polynomial index exceeds exact factorial range",
            details={"i": i, "max": MAX_EXACT_INDEX},
        )
    if count != i - n + 1:
        raise BellIndexError(
            "Bell polynomial B_{i,n} takes i - n + 1 arguments",
            details={"i": i, "n": n, "given": count},
        )


def bell_index_sequences(i: int, n: int) -> Iterator[tuple[int, ...]]:
    """Yield every ``(j_1, ..., j_{i-n+1})`` solving the index equations.

    ``j_{i-n+1}`` is iterated outermost; sequences come out in lexicographic
    order of ``(j_{i-n+1}, ..., j_1)``.
    """
    width = i - n + 1

    def fill(m: int, blocks: int, weight: int) -> Iterator[list[int]]:
        # choose j_m for m = width..1 with the remaining block count/weight
        if m == 0:
            if blocks == 0 and weight == 0:
                yield []
            return
        for j in range(min(blocks, weight // m) + 1):
            for rest in fill(m - 1, blocks - j, weight - m * j):
                yield [*rest, j]

    for seq in fill(width, n, i):
        yield tuple(seq)


def bell_coefficient(seq: Sequence[int]) -> int:
    """Exact ``i! / prod(j_m! (m!)^{j_m})`` for an index sequence."""
    i = sum(m * j for m, j in enumerate(seq, start=1))
    denominator = 1
    for m, j in enumerate(seq, start=1):
        denominator *= math.factorial(j) * math.factorial(m) ** j
    return math.factorial(i) // denominator


def bell_polynomial(i: int, n: int, z: Sequence[Any]) -> Any:
    """Evaluate ``B_{i,n}(z_1, ..., z_{i-n+1})`` by explicit enumeration.

    Args:
        i: Derivative order (``i >= n``)
        n: Number of blocks (``n >= 0``)
        z: Exactly ``i - n + 1`` arguments

    Returns:
        The polynomial value, in the arithmetic of the arguments

    Raises:
        BellIndexError: Invalid indices or argument count
    """
    _check_indices(i, n, len(z))
    total: Any = 0
    for seq in bell_index_sequences(i, n):
        term: Any = bell_coefficient(seq)
        for zm, j in zip(z, seq, strict=True):
            if j:
                term = term * zm**j
        total = total + term
    return total


def bell_polynomial_recurrence(i: int, n: int, z: Sequence[Any]) -> Any:
    """Evaluate ``B_{i,n}`` through ``B_{i,n} = sum C(i-1, m-1) z_m B_{i-m,n-1}``."""
    _check_indices(i, n, len(z))
    table = _recurrence_table(i, list(z) + [0] * (i - len(z)))
    return table[i][n]


def _recurrence_table(i_max: int, z: Sequence[Any]) -> list[list[Any]]:
    table: list[list[Any]] = [[0] * (i_max + 1) for _ in range(i_max + 1)]
    table[0][0] = 1
    for i in range(1, i_max + 1):
        for n in range(1, i + 1):
            total: Any = 0
            for m in range(1, i - n + 2):
                previous = table[i - m][n - 1]
                if isinstance(previous, int) and previous == 0:
                    continue
                total = total + math.comb(i - 1, m - 1) * z[m - 1] * previous
            table[i][n] = total
    return table


def bell_polynomial_table(i_max: int, z: Sequence[Any]) -> list[list[Any]]:
    """All ``B_{i,n}`` for ``0 <= n <= i <= i_max``.

    ``z`` holds ``z_1, ..., z_{i_max}``; row ``i`` of the result has entries
    for ``n = 0..i``.
    """
    if i_max < 0 or i_max > MAX_EXACT_INDEX:
        raise BellIndexError("Bell table size out of range", details={"i_max": i_max})
    if len(z) < i_max:
        raise BellIndexError(
            "Bell table needs i_max arguments",
            details={"i_max": i_max, "given": len(z)},
        )
    table = _recurrence_table(i_max, z)
    return [row[: i + 1] for i, row in enumerate(table)]


def faa_di_bruno(outer_derivs: Sequence[Any], inner_derivs: Sequence[Any]) -> list[Any]:
    """Derivatives of ``f(g(z))`` at a point from those of ``f`` and ``g``.

    Args:
        outer_derivs: ``f(g(z0)), f'(g(z0)), ..., f^(N)(g(z0))``
        inner_derivs: ``g(z0), g'(z0), ..., g^(N)(z0)``

    Returns:
        ``(f o g)^(i)(z0)`` for ``i = 0..N``
    """
    order = min(len(outer_derivs), len(inner_derivs)) - 1
    if order < 0:
        return []
    table = bell_polynomial_table(order, list(inner_derivs[1 : order + 1]))
    result: list[Any] = [outer_derivs[0]]
    for i in range(1, order + 1):
        total: Any = 0
        for n in range(1, i + 1):
            total = total + outer_derivs[n] * table[i][n]
        result.append(total)
    return result
