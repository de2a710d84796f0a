"""Hilbert function combinatorics.

Sequences and partitions are plain tuples of ints.  The codimension-three
Gorenstein test runs two independent characterisations (Macaulay growth of
the first difference, and the direct codimension-two condition on it) and
insists that they agree.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Sequence

from .errors import InternalConsistencyError, PreconditionError

# theorem_coverage tags
SL_33 = "SL-char0-Thm3.3"
SL_36 = "SL-char0-Thm3.6"
SL_38 = "SL-char0-Thm3.8"
OPEN_STAR = "open-*"
OPEN_STAR2 = "open-**"
OUTSIDE = "outside-tables"


def validate_hf(T: Sequence[int]) -> tuple[int, ...]:
    """Check the shape of a Hilbert function: starts with 1, positive entries."""
    T = tuple(int(t) for t in T)
    if not T or T[0] != 1:
        raise ValueError(f"Hilbert function must start with 1: {T}")
    if any(t <= 0 for t in T):
        raise ValueError(f"Hilbert function has zero or negative interior entries: {T}")
    return T


@dataclass(frozen=True)
class HFInvariants:
    j: int
    s: int
    nu: int
    tau: int
    k: int
    symmetric: bool
    unimodal: bool

    def as_dict(self) -> dict:
        return asdict(self)


def is_symmetric(T: Sequence[int]) -> bool:
    return tuple(T) == tuple(reversed(T))


def is_unimodal(T: Sequence[int]) -> bool:
    i, n = 0, len(T)
    while i + 1 < n and T[i] <= T[i + 1]:
        i += 1
    while i + 1 < n and T[i] >= T[i + 1]:
        i += 1
    return i == n - 1


def order(T: Sequence[int], r: int = 3) -> int:
    """Least degree where T drops below dim R_i; len(T) if it never does."""
    i = 0
    while True:
        t = T[i] if i < len(T) else 0
        if t != comb(i + r - 1, r - 1):
            return i
        i += 1


def invariants(T: Sequence[int], r: int = 3) -> HFInvariants:
    T = validate_hf(T)
    s = max(T)
    tau = T.index(s)
    return HFInvariants(
        j=len(T) - 1,
        s=s,
        nu=order(T, r),
        tau=tau,
        k=T.count(s),
        symmetric=is_symmetric(T),
        unimodal=is_unimodal(T),
    )


def macaulay_representation(h: int, d: int) -> list[tuple[int, int]]:
    """Greedy d-binomial expansion ``h = C(a_d, d) + C(a_{d-1}, d-1) + ...``.

    Returns the list of ``(a_i, i)`` pairs with ``a_d > a_{d-1} > ... >= i >= 1``.
    """
    if h < 0 or d < 1:
        raise ValueError("need h >= 0 and d >= 1")
    out = []
    i = d
    while h > 0 and i >= 1:
        a = i
        while comb(a + 1, i) <= h:
            a += 1
        out.append((a, i))
        h -= comb(a, i)
        i -= 1
    return out


def macaulay_bound(h: int, d: int) -> int:
    """Maximal growth ``h^<d>`` of a Hilbert function from degree d to d+1."""
    return sum(comb(a + 1, i + 1) for a, i in macaulay_representation(h, d))


def is_O_sequence(h: Sequence[int]) -> bool:
    h = list(h)
    if not h or h[0] != 1 or any(x < 0 for x in h):
        return False
    for d in range(1, len(h) - 1):
        if h[d + 1] > macaulay_bound(h[d], d):
            return False
    return True


def first_difference(T: Sequence[int]) -> tuple[int, ...]:
    """``(1, t_1 - t_0, ..., t_j' - t_{j'-1})`` with ``j' = floor(j/2)``."""
    half = (len(T) - 1) // 2
    return (1,) + tuple(T[i] - T[i - 1] for i in range(1, half + 1))


def is_SI_sequence(T: Sequence[int]) -> bool:
    T = tuple(T)
    if not T or T[0] != 1 or not is_symmetric(T):
        return False
    return is_O_sequence(first_difference(T))


def _codim2_difference_test(T: tuple[int, ...]) -> bool:
    # delta_i = i+1 below the order, then weakly decreasing and non-negative
    delta = first_difference(T)
    nu = order(T, 3)
    for i in range(1, len(delta)):
        if delta[i] < 0:
            return False
        if i < nu:
            if delta[i] != i + 1:
                return False
        elif delta[i] > delta[i - 1]:
            return False
    return True


def is_codim3_gorenstein_sequence(T: Sequence[int]) -> bool:
    T = tuple(T)
    if len(T) < 2 or T[0] != 1 or T[1] != 3 or not is_symmetric(T):
        return False
    si = is_SI_sequence(T)
    direct = _codim2_difference_test(T)
    if si != direct:
        raise InternalConsistencyError(f"SI test ({si}) and difference test ({direct}) disagree on {T}")
    return si


def mirror(half: Sequence[int], j: int) -> tuple[int, ...]:
    """Symmetric sequence of socle degree j from its entries in degrees 0..floor(j/2)."""
    half = tuple(half)
    return tuple(half[min(i, j - i)] for i in range(j + 1))


def enumerate_gorenstein_sequences(max_sperner: int, max_socle: int) -> list[tuple[int, ...]]:
    """All codimension-three Gorenstein sequences with s <= max_sperner and j <= max_socle.

    Brute force over symmetric sequences whose increasing half is weakly
    increasing with entries in ``1..max_sperner``; the filter is
    :func:`is_codim3_gorenstein_sequence`.
    """
    if max_sperner < 1 or max_socle < 1:
        raise ValueError("bounds must be positive")
    found = []
    for j in range(1, max_socle + 1):
        half_len = j // 2
        for rest in combinations_with_replacement(range(1, max_sperner + 1), half_len):
            T = mirror((1,) + rest, j)
            if max(T) <= max_sperner and is_codim3_gorenstein_sequence(T):
                found.append(T)
    return sorted(set(found), key=lambda t: (len(t), t))


def conjugate_partition(T: Sequence[int]) -> tuple[int, ...]:
    parts = sorted((t for t in T if t > 0), reverse=True)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= m) for m in range(1, parts[0] + 1))


# ------------------------------------------------------------ table families

def _plateau(rise: Sequence[int], s: int, k: int) -> tuple[int, ...]:
    """``(1, rise..., s^k, reversed(rise)..., 1)``."""
    up = (1,) + tuple(rise)
    return up + (s,) * k + tuple(reversed(up))


def sperner_six_families(max_socle: int) -> list[tuple[int, ...]]:
    """Instances of the seven families of Gorenstein sequences with s <= 6, for all k >= 1."""
    shapes = [
        ((), 3),
        ((3,), 4),
        ((3, 4), 5),
        ((3, 4, 5), 6),
        ((3,), 5),
        ((3, 5), 6),
        ((3,), 6),
    ]
    out = []
    for rise, s in shapes:
        k = 1
        while True:
            T = _plateau(rise, s, k)
            if len(T) - 1 > max_socle:
                break
            out.append(T)
            k += 1
    return out


def _positive_difference(T: tuple[int, ...]) -> tuple[int, ...]:
    delta = first_difference(T)
    end = len(delta)
    while end > 1 and delta[end - 1] == 0:
        end -= 1
    return delta[:end]


def theorem_coverage(T: Sequence[int]) -> str:
    """Which family of the coverage tables, if any, a Gorenstein sequence belongs to."""
    T = tuple(T)
    if not is_codim3_gorenstein_sequence(T):
        raise PreconditionError(f"{T} is not a codimension three Gorenstein sequence")
    d = _positive_difference(T)
    if d in ((1, 2), (1, 2, 1), (1, 2, 2), (1, 2, 3)):
        # (1,3^k,1), (1,3,4^k,3,1), (1,3,5^k,3,1), (1,3,6^k,3,1)
        return SL_33
    if len(d) >= 4 and d[:3] == (1, 2, 1) and all(x == 1 for x in d[3:]):
        # (1,3,4,5,...,s^k,...,4,3,1)
        return SL_36
    if d == (1, 2, 2, 1):
        return SL_38
    if len(d) >= 5 and d[:4] == (1, 2, 2, 1) and all(x == 1 for x in d[4:]):
        # (1,3,5,6,7,...,s^k,...)
        return OPEN_STAR
    t = 0
    while 1 + t < len(d) and d[1 + t] == 2:
        t += 1
    if d[0] == 1 and t >= 3 and all(x == 1 for x in d[1 + t:]):
        # (1,3,5,7,...,2t+1,2t+2,...,s^k,...)
        return OPEN_STAR2
    return OUTSIDE
