"""Finite-index subgroups of Z^2 and the local shape of a cover at a crossing.

Near a point where two branch components cross, an abelian cover is
determined up to isomorphism by a finite-index subgroup ``Gamma`` of ``Z^2``
(the image of the local fundamental group of the cover).  Every such
subgroup has a unique basis of the form ``(n', 0), (q', m2)`` with
``0 <= q' < n'`` and ``m2 > 0``; splitting off ``m1 = gcd(n', q')`` leaves a
primitive pair ``(n, q)`` and the point upstairs looks like ``m1 * m2``-to-1
smooth data glued onto a cyclic quotient singularity ``A_{n,q}`` (smooth
exactly when ``n = 1``).

Coordinate convention: the first lattice coordinate is the winding number
around the first local branch, so ``e1 = n * m1`` is the ramification index
over that branch and ``m2`` is the degree of the upstairs curve over it.
Swapping the two coordinates fixes ``n``, exchanges ``m1`` and ``m2``, and
replaces ``q`` by its inverse mod ``n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import EnumerationLimitError, InvalidInputError
from .hj import SingularityType

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "LatticeSubgroup",
    "LocalCoverType",
    "canonical_basis",
    "local_type",
    "enumerate_subgroups",
]

#: Largest ``max_index`` accepted by :func:`enumerate_subgroups` unless the
#: caller supplies an explicit cap (the CLI reads ``RAMCOV_MAX_ENUM``).
DEFAULT_ENUMERATION_CAP = 1000


@dataclass(frozen=True)
class LatticeSubgroup:
    """A finite-index subgroup of Z^2 given by two generators."""

    g1: tuple[int, int]
    g2: tuple[int, int]

    def __post_init__(self) -> None:
        for g in (self.g1, self.g2):
            if (
                not isinstance(g, tuple)
                or len(g) != 2
                or not all(isinstance(c, int) and not isinstance(c, bool) for c in g)
            ):
                raise InvalidInputError(f"generators must be integer pairs (got {g!r})")
        if self.det == 0:
            raise InvalidInputError(
                f"generators must be linearly independent (got {self.g1}, {self.g2})"
            )

    @property
    def det(self) -> int:
        return self.g1[0] * self.g2[1] - self.g1[1] * self.g2[0]

    @property
    def index(self) -> int:
        """Index of the subgroup in Z^2, i.e. ``|det|``."""
        return abs(self.det)

    def swapped(self) -> "LatticeSubgroup":
        """The subgroup with the two coordinate axes exchanged."""
        return LatticeSubgroup((self.g1[1], self.g1[0]), (self.g2[1], self.g2[0]))

    def contains(self, v: tuple[int, int]) -> bool:
        """Membership test by Cramer's rule over the integers."""
        d = self.det
        s_num = v[0] * self.g2[1] - v[1] * self.g2[0]
        t_num = self.g1[0] * v[1] - self.g1[1] * v[0]
        return s_num % d == 0 and t_num % d == 0


@dataclass(frozen=True)
class LocalCoverType:
    """Classified local data of a cover at a crossing point.

    ``n, q`` is the primitive singularity pair (``n = 1``, ``q = 0`` for a
    smooth point), ``m1`` and ``m2`` are the degrees of the upstairs branch
    curves over the second and first downstairs branch respectively.  The
    derived quantities are total local degree ``d_y = n*m1*m2`` and
    ramification indices ``e1 = n*m1``, ``e2 = n*m2`` over the first and
    second branch.

    Instances built from a :class:`LatticeSubgroup` always satisfy the
    range/gcd constraints; instances built from raw numbers in an input file
    may not, and :meth:`invariant_problems` reports what fails (the model
    validator surfaces these as V5 findings).
    """

    n: int
    q: int
    m1: int
    m2: int

    @property
    def d_y(self) -> int:
        return self.n * self.m1 * self.m2

    @property
    def e1(self) -> int:
        return self.n * self.m1

    @property
    def e2(self) -> int:
        return self.n * self.m2

    @property
    def singular(self) -> bool:
        return self.n > 1

    def invariant_problems(self) -> list[str]:
        """Range and gcd constraints, reported rather than raised."""
        problems = []
        if self.n < 1:
            problems.append(f"n must be >= 1 (got {self.n})")
        if self.m1 < 1:
            problems.append(f"m1 must be >= 1 (got {self.m1})")
        if self.m2 < 1:
            problems.append(f"m2 must be >= 1 (got {self.m2})")
        if self.n >= 1 and not 0 <= self.q < self.n:
            problems.append(f"q must satisfy 0 <= q < n (got n={self.n}, q={self.q})")
        if self.n > 1 and self.q == 0:
            problems.append(f"q = 0 forces n = 1 (got n={self.n})")
        if self.n >= 1 and 0 <= self.q < self.n and math.gcd(self.n, self.q) != 1:
            problems.append(
                f"n and q must be coprime (got gcd({self.n}, {self.q}) = {math.gcd(self.n, self.q)})"
            )
        return problems

    def singularity(self) -> Optional[SingularityType]:
        """The quotient singularity sitting at this point, or None if smooth."""
        if self.n == 1:
            return None
        return SingularityType(self.n, self.q)


def _xgcd(b: int, d: int) -> tuple[int, int, int]:
    """Extended gcd returning ``(g, u, v)`` with ``g = u*b + v*d >= 0``."""
    old_r, r = b, d
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_u, u = u, old_u - qt * u
        old_v, v = v, old_v - qt * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def canonical_basis(gamma: LatticeSubgroup) -> tuple[int, int, int]:
    """Reduce a subgroup to its unique basis ``(n', 0), (q', m2)``.

    Returns ``(n', q', m2)`` with ``n' > 0``, ``m2 > 0`` and
    ``0 <= q' < n'``; the index of the subgroup is ``n' * m2``.
    """
    (a, b), (c, d) = gamma.g1, gamma.g2
    g, u, v = _xgcd(b, d)
    # Second coordinates generate gZ; the combination below realizes g.
    m2 = g
    x = u * a + v * c
    n_prime = gamma.index // g
    q_prime = x % n_prime
    return n_prime, q_prime, m2


def local_type(gamma: LatticeSubgroup) -> LocalCoverType:
    """Classify a subgroup into its local cover type.

    Splits the canonical basis ``(n', 0), (q', m2)`` as ``n' = n*m1``,
    ``q' = q*m1`` with ``m1 = gcd(n', q')`` (so ``gcd(n, q) = 1``); note
    ``gcd(n', 0) = n'`` makes the product case come out as ``n = 1``.
    """
    n_prime, q_prime, m2 = canonical_basis(gamma)
    m1 = math.gcd(n_prime, q_prime)
    return LocalCoverType(n=n_prime // m1, q=q_prime // m1, m1=m1, m2=m2)


def enumerate_subgroups(
    max_index: int, *, cap: Optional[int] = None
) -> list[LatticeSubgroup]:
    """All subgroups of Z^2 of index at most ``max_index``, one per subgroup.

    Each subgroup is produced exactly once, as its Hermite-form
    representative with generators ``(a, 0), (c, m)`` where ``a*m`` is the
    index and ``0 <= c < a``; for fixed index ``k`` this yields ``sigma(k)``
    (sum of divisors) subgroups.  Output order is deterministic: by index,
    then ``a`` ascending, then ``c`` ascending.

    Raises :class:`EnumerationLimitError` when ``max_index`` exceeds the cap
    (``DEFAULT_ENUMERATION_CAP`` unless overridden).
    """
    if max_index < 1:
        raise InvalidInputError(f"max_index must be >= 1 (got {max_index})")
    limit = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if max_index > limit:
        raise EnumerationLimitError(
            f"max_index {max_index} exceeds the enumeration cap {limit}"
        )
    out = []
    for k in range(1, max_index + 1):
        for a in range(1, k + 1):
            if k % a:
                continue
            m = k // a
            for c in range(a):
                out.append(LatticeSubgroup((a, 0), (c, m)))
    return out
