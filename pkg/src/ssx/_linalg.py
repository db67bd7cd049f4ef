"""Small dense linear solves that stay exact for Fraction input."""

from __future__ import annotations

from fractions import Fraction

import numpy as np


class SingularSystem(ArithmeticError):
    """Raised when the coefficient matrix has no unique solution."""


def _all_exact(rows) -> bool:
    return all(isinstance(v, Fraction) for row in rows for v in row)


def solve(matrix, rhs, rcond: float = 1e-13):
    """Solve ``matrix @ x = rhs``.

    Fraction input is eliminated exactly (Gauss with pivot search on nonzero
    entries); anything else goes through numpy and is rejected when the
    reciprocal condition number falls below ``rcond``.
    """
    n = len(rhs)
    if n == 0:
        return []
    if _all_exact(list(matrix) + [list(rhs)]):
        aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise SingularSystem("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    factor = aug[r][col] / p
                    aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
        return [aug[i][n] / aug[i][i] for i in range(n)]
    a = np.array([[complex(v) for v in row] for row in matrix])
    b = np.array([complex(v) for v in rhs])
    if np.all(a.imag == 0) and np.all(b.imag == 0):
        a, b = a.real, b.real
    sv = np.linalg.svd(a, compute_uv=False)
    if sv[0] == 0 or sv[-1] / sv[0] < rcond:
        raise SingularSystem(f"matrix is numerically singular (rcond={sv[-1] / sv[0] if sv[0] else 0:.2e})")
    return list(np.linalg.solve(a, b))
