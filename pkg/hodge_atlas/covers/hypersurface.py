"""
Hodge numbers of smooth degree-d hypersurfaces in P^N from the Jacobian ring of the
Fermat polynomial.
"""

from typing import List

import sympy
from loguru import logger

from hodge_atlas.exceptions import DegenerateSpec
from hodge_atlas.models.domain_models import GradedHodgeStructure, HodgeDiamondFamily

_x = sympy.Symbol("x")


def _jacobian_ring_series(d: int, N: int) -> sympy.Poly:
    # Hilbert series of C[x_0..x_N]/(x_i^{d-1}): (1 + x + ... + x^{d-2})^{N+1}
    return sympy.Poly(sum(_x ** i for i in range(d - 1)), _x) ** (N + 1)


def hypersurface_hodge_oracle(d: int, N: int) -> List[int]:
    """
    Middle Hodge numbers (h^{n,0}, ..., h^{0,n}) of a smooth hypersurface X_d in P^N, n = N - 1.

    h^{n-q,q}_prim is the dimension of the degree (q+1)d - N - 1 part of the Jacobian ring;
    the hyperplane class adds 1 to h^{n/2,n/2} when n is even.
    """
    if d < 2 or N < 2:
        raise DegenerateSpec(f"need degree >= 2 and ambient dimension >= 2, got d={d}, N={N}")
    n = N - 1
    series = _jacobian_ring_series(d, N)
    row = []
    for q in range(n + 1):
        t = (q + 1) * d - N - 1
        row.append(int(series.coeff_monomial(_x ** t)) if t >= 0 else 0)
    if n % 2 == 0:
        row[n // 2] += 1
    logger.debug(f"hypersurface d={d} in P^{N}: middle row {row}")
    return row


def hypersurface_diamond(d: int, N: int) -> HodgeDiamondFamily:
    """The full diamond: the oracle's middle row plus the powers of the hyperplane class."""
    n = N - 1
    row = hypersurface_hodge_oracle(d, N)
    levels = []
    for k in range(n):
        levels.append(GradedHodgeStructure(k, {(k // 2, k // 2): 1} if k % 2 == 0 else {}))
    levels.append(GradedHodgeStructure(n, {(n - q, q): h for q, h in enumerate(row)}))
    return HodgeDiamondFamily(n, tuple(levels))
