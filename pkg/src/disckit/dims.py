"""Closed-form dimension counts for jet-bundle sheaves on projective space.

Everything here is a binomial-coefficient identity: the bundle of
order-k jets of O(d) on P^N restricted to degree considerations only.
The two families are the ext groups of exterior powers of the jet
bundle against the structure sheaf (h_ext_jet) and their Serre duals
(h_ext_jet_dual); the Koszul-type complex built from them has one rank
per exterior power, tabulated by complex_table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True)
class DimReport:
    N: int
    d: int
    k: int
    j: int
    i: int
    value: int
    object: str


@dataclass(frozen=True)
class ComplexTerm:
    """One term of the dual resolution complex: a twist and its rank."""

    twist: int
    module_dim: int


def dim_sym(n: int, dimV: int) -> int:
    """Dimension of Sym^n of a dimV-dimensional space; 0 for n < 0."""
    if dimV < 1:
        raise ParameterError(f"the space dimension must be positive, got {dimV}")
    if n < 0:
        return 0
    return math.comb(n + dimV - 1, dimV - 1)


def rank_jet(k: int, N: int) -> int:
    """Rank of the bundle of order-k jets of a line bundle on P^N."""
    if k < 0 or N < 1:
        raise ParameterError(f"rank_jet needs k >= 0 and N >= 1, got k={k}, N={N}")
    return math.comb(k + N, N)


def _check_common(N: int, d: int, k: int, j: int, i: int):
    if N < 1:
        raise ParameterError(f"the ambient dimension N must be at least 1, got {N}")
    if not 1 <= k < d:
        raise ParameterError(f"the jet order must satisfy 1 <= k < d, got k={k}, d={d}")
    r = rank_jet(k, N)
    if not 1 <= j <= r:
        raise ParameterError(
            f"the exterior power must satisfy 1 <= j <= {r}, got j={j}"
        )
    if not 0 <= i <= N:
        raise ParameterError(f"the cohomological degree must satisfy 0 <= i <= {N}, got i={i}")
    return r


def h_ext_jet(N: int, d: int, k: int, j: int, i: int) -> int:
    """Ext dimension in degree i for the j-th exterior power of the jet bundle.

    The twist j(d-k) is globally generated, so all higher cohomology
    vanishes and only i = 0 contributes.
    """
    r = _check_common(N, d, k, j, i)
    if i > 0:
        return 0
    return dim_sym(j * (d - k), N + 1) * math.comb(r, j)


def h_ext_jet_dual(N: int, d: int, k: int, j: int, i: int) -> int:
    """Serre-dual family: only the top degree i = N can be nonzero.

    The value pairs with sections of the twist j(d-k) - N - 1; when
    that twist is negative the group vanishes entirely.
    """
    r = _check_common(N, d, k, j, i)
    if i < N:
        return 0
    n = j * (d - k) - N - 1
    if n < 0:
        return 0
    return dim_sym(n, N + 1) * math.comb(r, j)


def _check_stable_range(N: int, d: int, k: int) -> int:
    if N < 1:
        raise ParameterError(f"the ambient dimension N must be at least 1, got {N}")
    if not 1 <= k < d:
        raise ParameterError(f"the jet order must satisfy 1 <= k < d, got k={k}, d={d}")
    if d - k - N - 1 < 0:
        raise ParameterError(
            f"the stable-range inequality d - k - N - 1 >= 0 fails: "
            f"d={d}, k={k}, N={N} give {d - k - N - 1}"
        )
    return rank_jet(k, N)


def complex_term_rank(N: int, d: int, k: int, j: int) -> ComplexTerm:
    """The j-th term of the dual resolution complex, as (twist, rank).

    The complex exists only in the stable range d - k - N - 1 >= 0; its
    j-th term sits in twist -j and carries the dual dimension in top
    degree.  The index runs over 1 <= j <= rank_jet(k, N); the j = 0
    term is the trivial line and is supplied by complex_table.
    """
    r = _check_stable_range(N, d, k)
    if not 1 <= j <= r:
        raise ParameterError(f"the term index must satisfy 1 <= j <= {r}, got j={j}")
    return ComplexTerm(twist=-j, module_dim=h_ext_jet_dual(N, d, k, j, N))


def complex_table(N: int, d: int, k: int) -> tuple[ComplexTerm, ...]:
    """Every term of the dual resolution complex, j = 0 through the rank."""
    r = _check_stable_range(N, d, k)
    head = ComplexTerm(twist=0, module_dim=1)
    return (head,) + tuple(complex_term_rank(N, d, k, j) for j in range(1, r + 1))
