"""Determinants and linear solves over jets.

Matrices are nested sequences of :class:`ComplexJet` sharing one center.
Elimination pivots on the modulus of the constant term; when a column has no
usable pivot the determinant falls back to cofactor expansion.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ldeconf.jetcalc.exceptions import JetError
from ldeconf.jetcalc.jet import ComplexJet

PIVOT_TOLERANCE = 1e-14

JetMatrix = Sequence[Sequence[ComplexJet]]


def _square(matrix: JetMatrix) -> list[list[ComplexJet]]:
    rows = [list(row) for row in matrix]
    size = len(rows)
    if size == 0 or any(len(row) != size for row in rows):
        raise JetError("Jet matrix must be square and non-empty", details={"rows": size})
    return rows


def _scale(rows: list[list[ComplexJet]]) -> float:
    return max(abs(entry.coeffs[0]) for row in rows for entry in row)


def _laplace(rows: list[list[ComplexJet]]) -> ComplexJet:
    size = len(rows)
    if size == 1:
        return rows[0][0]
    total = rows[0][0] * 0.0
    for col in range(size):
        minor = [row[:col] + row[col + 1 :] for row in rows[1:]]
        term = rows[0][col] * _laplace(minor)
        total = total + term if col % 2 == 0 else total - term
    return total


def jet_det(matrix: JetMatrix) -> ComplexJet:
    """Determinant of a square jet matrix.

    Raises:
        JetError: Matrix is empty or not square
    """
    rows = _square(matrix)
    size = len(rows)
    threshold = PIVOT_TOLERANCE * max(_scale(rows), 1e-300)
    det: ComplexJet | None = None
    sign = 1.0
    for col in range(size):
        pivot_row = max(range(col, size), key=lambda r: abs(rows[r][col].coeffs[0]))
        if abs(rows[pivot_row][col].coeffs[0]) <= threshold:
            # remaining block has no invertible entry in this column
            rest = [row[col:] for row in rows[col:]]
            tail = _laplace(rest)
            det = tail if det is None else det * tail
            return det * sign
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            sign = -sign
        pivot = rows[col][col]
        det = pivot if det is None else det * pivot
        for r in range(col + 1, size):
            factor = rows[r][col] / pivot
            rows[r] = [rows[r][c] - factor * rows[col][c] for c in range(size)]
    assert det is not None
    return det * sign


def jet_solve(matrix: JetMatrix, rhs: Sequence[ComplexJet]) -> list[ComplexJet]:
    """Solve ``matrix @ x = rhs`` by Gaussian elimination with partial pivoting.

    Raises:
        JetError: Matrix is singular at the constant term or shapes disagree
    """
    rows = _square(matrix)
    size = len(rows)
    if len(rhs) != size:
        raise JetError(
            "Right-hand side length does not match matrix",
            details={"size": size, "rhs": len(rhs)},
        )
    augmented = [row + [b] for row, b in zip(rows, rhs, strict=True)]
    threshold = PIVOT_TOLERANCE * max(_scale(rows), 1e-300)
    for col in range(size):
        pivot_row = max(range(col, size), key=lambda r: abs(augmented[r][col].coeffs[0]))
        if abs(augmented[pivot_row][col].coeffs[0]) <= threshold:
            raise JetError("Jet matrix is singular at its constant term", details={"column": col})
        augmented[col], augmented[pivot_row] = augmented[pivot_row], augmented[col]
        pivot = augmented[col][col]
        for r in range(col + 1, size):
            factor = augmented[r][col] / pivot
            augmented[r] = [augmented[r][c] - factor * augmented[col][c] for c in range(size + 1)]
    solution: list[ComplexJet] = [augmented[0][0]] * size
    for r in range(size - 1, -1, -1):
        acc = augmented[r][size]
        for c in range(r + 1, size):
            acc = acc - augmented[r][c] * solution[c]
        solution[r] = acc / augmented[r][r]
    return solution


def constant_terms(matrix: JetMatrix) -> np.ndarray:
    """Matrix of constant terms (values at the common center)."""
    return np.array([[entry.coeffs[0] for entry in row] for row in matrix], dtype=np.complex128)
