"""Lefschetz properties, Jordan types and higher Hessians.

All ranks come from exact matrices that are valid in every characteristic:
in dual mode the pairing ``(m_u * m_v * l^k) o F`` between R_i and
R_{j-i-k}, whose rank equals that of ``l^k: A_i -> A_{i+k}`` by Gorenstein
duality; in monomial mode the multiplication matrix on standard monomials.
Hessians are a diagnostic only and need characteristic 0 or p > j.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product
from math import factorial

from .apolarity import ArtinAlgebra, DualGenerator, _as_dual, catalecticant
from .errors import (
    DomainMismatchError,
    InternalConsistencyError,
    PreconditionError,
    UnsupportedCharacteristicError,
)
from .fields import DenseMatrix, Scalar, det_eval, rank, row_echelon
from .polyring import LinearForm, Polynomial, contract, monomial_basis, multiply
from .sequences import conjugate_partition

EXHAUSTIVE_LIMIT = 10_000
SAMPLE_RANGE = (1, 101)


def _check_form(A: ArtinAlgebra, ell: LinearForm):
    if ell.field != A.field:
        raise DomainMismatchError(f"linear form over {ell.field!r}, algebra over {A.field!r}")
    if ell.nvars != A.nvars:
        raise DomainMismatchError(f"linear form in {ell.nvars} variables, algebra in {A.nvars}")
    if ell.is_zero():
        raise PreconditionError("linear form must be nonzero")


@lru_cache(maxsize=128)
def power_images(A: ArtinAlgebra, ell: LinearForm) -> tuple[Polynomial, ...]:
    """Dual mode: ``l^k o F`` for k = 0..j.  Monomial mode: ``l^k`` reduced mod I."""
    j = A.socle_degree
    lp = ell.polynomial()
    out = []
    if A.mode == "dual":
        cur = A.dual.form
        for _ in range(j + 1):
            out.append(cur)
            cur = contract(lp, cur)
    else:
        cur = Polynomial.constant(A.field, A.nvars, 1)
        for _ in range(j + 1):
            out.append(cur)
            cur = multiply(cur, lp)
            cur = Polynomial(A.field, A.nvars, {m: c for m, c in cur.terms.items() if A.is_standard(m)})
    return tuple(out)


def pairing_matrix(A: ArtinAlgebra, ell: LinearForm, i: int, k: int) -> DenseMatrix:
    """Matrix whose rank is ``rank(l^k: A_i -> A_{i+k})``.

    Dual mode: rows ``monomial_basis(i)``, columns ``monomial_basis(j-i-k)``,
    entry ``(m_u m_v l^k) o F``.  Monomial mode: the multiplication matrix from
    degree-i to degree-(i+k) standard monomials (row u holds the image of
    the u-th source monomial).
    """
    _check_form(A, ell)
    j = A.socle_degree
    if i < 0 or k < 0 or i + k > j:
        raise ValueError(f"need 0 <= i, 0 <= k and i + k <= {j}; got i={i}, k={k}")
    f = A.field
    G = power_images(A, ell)[k]
    if A.mode == "dual":
        rows = monomial_basis(i, A.nvars)
        cols = monomial_basis(j - i - k, A.nvars)
        entries = [G.coefficient(tuple(a + b for a, b in zip(u, v))) for u in rows for v in cols]
        return DenseMatrix(f, len(rows), len(cols), entries)
    src = A.degree_bases[i]
    tgt = A.degree_bases[i + k]
    data = [[f.zero] * len(tgt) for _ in src]
    for u, m in enumerate(src):
        for t, c in G.terms.items():
            prod = tuple(a + b for a, b in zip(m, t))
            if A.is_standard(prod):
                col = A.index_of(prod)
                data[u][col] = f.add(data[u][col], c)
    return DenseMatrix.from_rows(f, data, cols=len(tgt))


def mult_rank(A: ArtinAlgebra, ell: LinearForm, i: int, k: int) -> int:
    return rank(pairing_matrix(A, ell, i, k))


@dataclass(frozen=True)
class RankEntry:
    """Rank of ``l^k: A_i -> A_{i+k}`` against the full-rank value."""

    i: int
    k: int
    rank: int
    expected: int

    @property
    def full(self) -> bool:
        return self.rank == self.expected

    def as_dict(self) -> dict:
        return {"i": self.i, "k": self.k, "rank": self.rank, "full": self.full}


@dataclass
class LefschetzVerdict:
    witness: LinearForm
    strong_ranks: list          # RankEntry for l^{j-2i}: A_i -> A_{j-i}, i = 0..j//2
    weak_ranks: list            # RankEntry for l: A_i -> A_{i+1}, i = 0..j-1
    wl: bool
    sl: bool | None             # None when the Hilbert function is not symmetric
    almost_sl: bool | None
    mode: str = "at_form"
    trials_used: int = 1
    decisive: bool = True
    notes: list = dc_field(default_factory=list)

    def failing_strong(self) -> list[int]:
        return [e.i for e in self.strong_ranks if not e.full]

    def as_dict(self) -> dict:
        return {
            "witness": [str(c) for c in self.witness.coefficients],
            "witness_text": str(self.witness),
            "mode": self.mode,
            "trials_used": self.trials_used,
            "decisive": self.decisive,
            "wl": self.wl,
            "sl": self.sl,
            "almost_sl": self.almost_sl,
            "strong_ranks": [e.as_dict() for e in self.strong_ranks],
            "weak_ranks": [e.as_dict() for e in self.weak_ranks],
            "notes": list(self.notes),
        }


def _rank_tables(A: ArtinAlgebra, ell: LinearForm):
    T = A.hilbert
    j = A.socle_degree
    strong = [RankEntry(i, j - 2 * i, mult_rank(A, ell, i, j - 2 * i), min(T[i], T[j - i]))
              for i in range(j // 2 + 1)]
    weak = [RankEntry(i, 1, mult_rank(A, ell, i, 1), min(T[i], T[i + 1])) for i in range(j)]
    return strong, weak


def _judge(A, strong, weak):
    wl = all(e.full for e in weak)
    if A.hilbert != tuple(reversed(A.hilbert)):
        return wl, None, None
    sl = all(e.full for e in strong)
    almost = all(e.full for e in strong if e.i != 1)
    return wl, sl, almost


def verdict_at(A: ArtinAlgebra, ell: LinearForm) -> LefschetzVerdict:
    """Weak, strong and almost-strong Lefschetz verdicts for one linear form."""
    _check_form(A, ell)
    strong, weak = _rank_tables(A, ell)
    wl, sl, almost = _judge(A, strong, weak)
    notes = [] if sl is not None else ["Hilbert function not symmetric: sl/almost_sl not applicable"]
    return LefschetzVerdict(ell, strong, weak, wl, sl, almost, notes=notes)


def _candidates(A: ArtinAlgebra, trials: int, seed: int):
    f, r = A.field, A.nvars
    ones = (1,) * r
    yield ones
    p = f.characteristic
    if p and p ** r <= EXHAUSTIVE_LIMIT:
        for v in product(range(p), repeat=r):
            if any(v) and v != ones:
                yield v
        return
    rng = random.Random(seed)
    for _ in range(trials - 1):
        if p:
            v = (0,) * r
            while not any(v):
                v = tuple(rng.randrange(p) for _ in range(r))
        else:
            v = tuple(rng.randint(*SAMPLE_RANGE) for _ in range(r))
        yield v


def _score(v: LefschetzVerdict):
    return (bool(v.sl), bool(v.almost_sl), v.wl,
            sum(e.full for e in v.strong_ranks) + sum(e.full for e in v.weak_ranks))


def generic_verdict(A: ArtinAlgebra, trials: int = 20, seed: int = 0) -> LefschetzVerdict:
    """Lefschetz verdict for a general linear form.

    Full rank is an open condition, so a single witness certifies each
    property generically.  The all-ones form is tried first; for monomial
    ideals it is equivalent to a general form up to torus scaling, so its
    verdict is final.  Dual mode over Q samples coefficients from 1..101;
    over F_p all of F_p^r is scanned when it has at most 10^4 elements,
    otherwise ``trials`` seeded samples are drawn.  Sampling stops at the
    first form with every map of full rank.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    best = None
    best_key = None
    any_wl = any_sl = any_almost = False
    max_strong: dict = {}
    max_weak: dict = {}
    used = 0
    for coeffs in _candidates(A, trials, seed):
        used += 1
        v = verdict_at(A, LinearForm(A.field, coeffs))
        any_wl |= v.wl
        any_sl |= bool(v.sl)
        any_almost |= bool(v.almost_sl)
        for e in v.strong_ranks:
            max_strong[e.i] = max(max_strong.get(e.i, 0), e.rank)
        for e in v.weak_ranks:
            max_weak[e.i] = max(max_weak.get(e.i, 0), e.rank)
        key = _score(v)
        if best is None or key > best_key:
            best, best_key = v, key
        if A.mode == "monomial":
            break
        if v.wl and v.sl is not False:
            break
    symmetric = best.sl is not None
    notes = list(best.notes)
    decisive = A.mode == "monomial"
    if decisive:
        notes.append("monomial ideal: the all-ones form is a general form up to torus scaling (decisive)")
    elif not (any_wl and (not symmetric or any_sl)):
        failing = [f"l^{A.socle_degree - 2 * i}: A_{i} -> A_{A.socle_degree - i} (max rank {max_strong[i]})"
                   for i in sorted(max_strong)
                   if max_strong[i] < best.strong_ranks[i].expected]
        failing += [f"l: A_{i} -> A_{i + 1} (max rank {max_weak[i]})"
                    for i in sorted(max_weak) if max_weak[i] < best.weak_ranks[i].expected]
        notes.append(f"no witness found in {used} trials for: " + "; ".join(failing))
        if A.field.characteristic:
            notes.append("finite field: only F_p-rational forms were tried; a general form over an "
                         "extension field may still succeed")
    else:
        decisive = True
    return LefschetzVerdict(
        witness=best.witness,
        strong_ranks=best.strong_ranks,
        weak_ranks=best.weak_ranks,
        wl=any_wl,
        sl=any_sl if symmetric else None,
        almost_sl=any_almost if symmetric else None,
        mode="generic",
        trials_used=used,
        decisive=decisive,
        notes=notes,
    )


def jordan_type(A: ArtinAlgebra, ell: LinearForm) -> tuple[int, ...]:
    """Jordan block sizes of multiplication by ``ell`` on A, largest first."""
    _check_form(A, ell)
    j = A.socle_degree
    # r[k] = rank of l^k on all of A
    r = [A.dim] + [sum(mult_rank(A, ell, i, k) for i in range(j - k + 1)) for k in range(1, j + 1)]
    r += [0, 0]
    parts = []
    for size in range(1, j + 2):
        count = r[size - 1] - 2 * r[size] + r[size + 1]
        if count < 0:
            raise InternalConsistencyError(f"negative number of Jordan blocks of size {size}")
        parts.extend([size] * count)
    parts.sort(reverse=True)
    if sum(parts) != A.dim:
        raise InternalConsistencyError("Jordan type does not sum to dim A")
    return tuple(parts)


# ------------------------------------------------------------------ Hessians

def _check_hessian_char(F: DualGenerator):
    p = F.field.characteristic
    if p and p <= F.socle_degree:
        raise UnsupportedCharacteristicError(
            f"characteristic {p} <= socle degree {F.socle_degree}: factorials are not invertible")


def _dp_eval(G: Polynomial, point) -> Scalar:
    """Evaluate with X^e -> prod(a_i^e_i) / prod(e_i!)."""
    f = G.field
    total = f.zero
    for mono, c in G.terms.items():
        num = f.one
        den = 1
        for a, e in zip(point, mono):
            if e:
                num = f.mul(num, f(a ** e) if f.characteristic == 0 else pow(a, e, f.characteristic))
                den *= factorial(e)
        total = f.add(total, f.mul(c, f.div(num, f(den))))
    return total


def quotient_basis(F, i: int) -> list[tuple]:
    """Monomials of degree i whose classes form a basis of A_i (first independent ones in grlex)."""
    F = _as_dual(F)
    cat = catalecticant(F, i)
    _, piv = row_echelon(F.field, cat.transpose().to_rows(), cat.rows)
    basis = monomial_basis(i, F.nvars)
    return [basis[p] for p in piv]


def hessian_matrix_at(F, i: int, point, basis=None) -> DenseMatrix:
    """i-th Hessian of F evaluated at ``point`` in the divided-power convention.

    ``basis`` defaults to the full monomial basis of R_i; pass
    :func:`quotient_basis` to get a basis of A_i instead.
    """
    F = _as_dual(F)
    j = F.socle_degree
    if not 0 <= 2 * i <= j:
        raise ValueError(f"need 0 <= 2i <= {j}, got i={i}")
    _check_hessian_char(F)
    f = F.field
    point = [f(a) for a in point]
    if len(point) != F.nvars:
        raise DomainMismatchError(f"point has {len(point)} coordinates, need {F.nvars}")
    mons = monomial_basis(i, F.nvars) if basis is None else [tuple(m) for m in basis]
    form = F.form
    entries = []
    cache: dict = {}
    for u in mons:
        for v in mons:
            key = tuple(a + b for a, b in zip(u, v))
            if key not in cache:
                G = Polynomial._raw(f, F.nvars, {
                    tuple(a - b for a, b in zip(m, key)): c
                    for m, c in form.terms.items() if all(a >= b for a, b in zip(m, key))})
                cache[key] = _dp_eval(G, point)
            entries.append(cache[key])
    return DenseMatrix(f, len(mons), len(mons), entries)


def hessian_det_at(F, i: int, point, basis=None) -> Scalar:
    return det_eval(hessian_matrix_at(F, i, point, basis))


def is_cone(F) -> bool:
    """True when some nonzero linear form annihilates F."""
    F = _as_dual(F)
    if F.socle_degree == 0:
        return True
    return rank(catalecticant(F, 1)) < F.nvars


def sl_matches_conjugate(A: ArtinAlgebra, ell: LinearForm) -> bool:
    return jordan_type(A, ell) == conjugate_partition(A.hilbert)
