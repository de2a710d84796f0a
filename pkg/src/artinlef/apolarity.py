"""Artinian Gorenstein algebras from Macaulay dual generators or monomial ideals.

An :class:`ArtinAlgebra` is presented either by a dual form F (the algebra is
R/Ann(F), Ann taken for the contraction action) or by monomial generators
of an m-primary ideal.  Everything is computed degree by degree with exact
linear algebra; no Groebner machinery is involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .errors import DomainMismatchError, InternalConsistencyError, PreconditionError
from .fields import DenseMatrix, FieldSpec, kernel_basis, rank, row_echelon
from .polyring import (
    LinearForm,
    Polynomial,
    contract,
    format_polynomial,
    monomial_basis,
)
from . import sequences


@dataclass(frozen=True)
class DualGenerator:
    """A nonzero homogeneous form F in the divided-power variables."""

    form: Polynomial

    def __post_init__(self):
        if self.form.is_zero():
            raise PreconditionError("dual generator must be nonzero")
        if not self.form.is_homogeneous():
            raise PreconditionError("dual generator must be homogeneous")

    @property
    def socle_degree(self) -> int:
        return self.form.degree

    @property
    def field(self) -> FieldSpec:
        return self.form.field

    @property
    def nvars(self) -> int:
        return self.form.nvars

    def __str__(self):
        return format_polynomial(self.form, dual=True)


def _as_dual(F) -> DualGenerator:
    return F if isinstance(F, DualGenerator) else DualGenerator(F)


def _divides(g: tuple, m: tuple) -> bool:
    return all(a <= b for a, b in zip(g, m))


def minimalize_monomials(gens: Iterable[tuple]) -> tuple[tuple, ...]:
    """Drop generators divisible by another generator; sorted grlex-ascending."""
    gens = sorted(set(tuple(g) for g in gens), key=lambda m: (sum(m), tuple(-a for a in m)))
    out: list[tuple] = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return tuple(out)


class ArtinAlgebra:
    """Graded Artinian quotient of k[x_1..x_r] with cached Hilbert function.

    Build with :meth:`from_dual` or :meth:`from_monomial_ideal`.  In dual mode
    ``degree_bases[d]`` is the full monomial basis of R_d; in monomial mode it
    is the list of standard monomials of degree d.
    """

    def __init__(self, *, field: FieldSpec, nvars: int, mode: str,
                 dual: DualGenerator | None = None, ideal_gens: tuple = (),
                 hilbert: tuple, degree_bases: tuple):
        self.field = field
        self.nvars = nvars
        self.mode = mode
        self.dual = dual
        self.ideal_gens = ideal_gens
        self.hilbert = hilbert
        self.degree_bases = degree_bases
        self._index = tuple({m: n for n, m in enumerate(b)} for b in degree_bases)

    @classmethod
    def from_dual(cls, F) -> "ArtinAlgebra":
        F = _as_dual(F)
        j = F.socle_degree
        T = tuple(rank(catalecticant(F, i)) for i in range(j + 1))
        if T != tuple(reversed(T)):
            raise InternalConsistencyError(f"Hilbert function {T} of R/Ann(F) is not symmetric")
        bases = tuple(monomial_basis(i, F.nvars) for i in range(j + 1))
        return cls(field=F.field, nvars=F.nvars, mode="dual", dual=F, hilbert=T, degree_bases=bases)

    @classmethod
    def from_monomial_ideal(cls, gens: Sequence, field: FieldSpec = FieldSpec(0),
                            nvars: int | None = None) -> "ArtinAlgebra":
        """``gens`` are exponent tuples or single-term polynomials."""
        monos = []
        for g in gens:
            if isinstance(g, Polynomial):
                if len(g) != 1:
                    raise PreconditionError(f"{g} is not a monomial")
                monos.append(next(iter(g.terms)))
            else:
                monos.append(tuple(g))
        if not monos:
            raise PreconditionError("monomial ideal needs generators")
        r = nvars if nvars is not None else len(monos[0])
        if any(len(m) != r for m in monos):
            raise DomainMismatchError("generators have inconsistent numbers of variables")
        gens_min = minimalize_monomials(monos)
        pure = {}
        for g in gens_min:
            support = [i for i, a in enumerate(g) if a]
            if len(support) == 1:
                pure[support[0]] = g[support[0]]
        missing = [i for i in range(r) if i not in pure]
        if missing:
            raise PreconditionError(
                "quotient is not Artinian: no pure power of variable(s) "
                + ", ".join("xyzw"[i] for i in missing))
        bases = []
        d = 0
        while True:
            std = [m for m in monomial_basis(d, r) if not any(_divides(g, m) for g in gens_min)]
            if not std:
                break
            bases.append(std)
            d += 1
        T = tuple(len(b) for b in bases)
        return cls(field=field, nvars=r, mode="monomial", ideal_gens=gens_min,
                   hilbert=T, degree_bases=tuple(bases))

    @property
    def socle_degree(self) -> int:
        return len(self.hilbert) - 1

    @property
    def dim(self) -> int:
        return sum(self.hilbert)

    @property
    def is_gorenstein(self) -> bool:
        """Dual mode always; monomial mode exactly for complete intersections."""
        if self.mode == "dual":
            return True
        return len(self.ideal_gens) == self.nvars and all(
            sum(1 for a in g if a) == 1 for g in self.ideal_gens)

    def is_standard(self, mono: tuple) -> bool:
        d = sum(mono)
        return d < len(self._index) and mono in self._index[d]

    def index_of(self, mono: tuple) -> int:
        return self._index[sum(mono)][mono]

    def describe(self) -> str:
        if self.mode == "dual":
            return f"R/Ann({self.dual})"
        gens = ", ".join(format_polynomial(Polynomial.monomial(self.field, g)) for g in self.ideal_gens)
        return f"R/({gens})"

    def __repr__(self):
        return f"ArtinAlgebra({self.describe()} over {self.field!r}, T={self.hilbert})"


def catalecticant(F, i: int) -> DenseMatrix:
    """Matrix of ``r -> r o F`` from R_i to S_{j-i} in monomial bases.

    Entry (u, v) is the coefficient of X^(u+v) in F.
    """
    F = _as_dual(F)
    j = F.socle_degree
    if not 0 <= i <= j:
        raise ValueError(f"catalecticant degree {i} outside 0..{j}")
    rows = monomial_basis(i, F.nvars)
    cols = monomial_basis(j - i, F.nvars)
    form = F.form
    entries = [form.coefficient(tuple(a + b for a, b in zip(u, v))) for u in rows for v in cols]
    return DenseMatrix(F.field, len(rows), len(cols), entries)


def hilbert_function(A: ArtinAlgebra) -> tuple[int, ...]:
    return A.hilbert


def _vectors_to_polys(field, nvars, d, vectors) -> list[Polynomial]:
    basis = monomial_basis(d, nvars)
    return [Polynomial(field, nvars, {m: c for m, c in zip(basis, v) if c}) for v in vectors]


def _poly_to_vector(p: Polynomial, d: int) -> list:
    return [p.coefficient(m) for m in monomial_basis(d, p.nvars)]


def ann_slice(F, d: int) -> list[Polynomial]:
    """Basis of Ann(F)_d, read off the left kernel of the degree-d catalecticant."""
    F = _as_dual(F)
    j = F.socle_degree
    if not 0 <= d <= j + 1:
        raise ValueError(f"degree {d} outside 0..{j + 1}")
    if d == j + 1:
        return [Polynomial.monomial(F.field, m) for m in monomial_basis(d, F.nvars)]
    ker = kernel_basis(catalecticant(F, d).transpose())
    return _vectors_to_polys(F.field, F.nvars, d, ker)


def colon_dual(omega: Polynomial, F) -> DualGenerator:
    """Dual generator ``omega o F`` of R/(Ann(F) : omega)."""
    F = _as_dual(F)
    if omega.is_zero() or not omega.is_homogeneous():
        raise PreconditionError("omega must be a nonzero homogeneous form")
    if omega.degree > F.socle_degree:
        raise PreconditionError(f"deg omega = {omega.degree} exceeds socle degree {F.socle_degree}")
    G = contract(omega, F.form)
    if G.is_zero():
        raise PreconditionError("omega o F = 0, so Ann(F) : omega is the unit ideal")
    return DualGenerator(G)


def quotient_by_linear_hf(A: ArtinAlgebra, v: LinearForm) -> tuple[int, ...]:
    """Hilbert function of A/(v): ``T_i - rank(v: A_{i-1} -> A_i)``."""
    from .lefschetz import mult_rank

    if v.is_zero():
        raise PreconditionError("linear form must be nonzero")
    T = A.hilbert
    out = [T[0]]
    for i in range(1, len(T)):
        out.append(T[i] - mult_rank(A, v, i - 1, 1))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


# ------------------------------------------------------------------ ideals

@dataclass
class GradedIdealSlice:
    """Graded pieces J_d of a homogeneous ideal, each stored in reduced echelon form.

    ``rows[d]`` holds coordinate vectors over ``monomial_basis(d, nvars)``.
    """

    field: FieldSpec
    nvars: int
    rows: dict = dc_field(default_factory=dict)

    @classmethod
    def from_polynomials(cls, field: FieldSpec, nvars: int, polys_by_degree: dict) -> "GradedIdealSlice":
        J = cls(field, nvars)
        for d, polys in polys_by_degree.items():
            vecs = []
            for p in polys:
                if not p.is_zero() and (not p.is_homogeneous() or p.degree != d):
                    raise PreconditionError(f"{p} is not homogeneous of degree {d}")
                vecs.append(_poly_to_vector(p, d))
            J.rows[d] = _echelon(field, vecs, len(monomial_basis(d, nvars)))
        return J

    def dim(self, d: int) -> int:
        return len(self.rows.get(d, ()))

    def basis(self, d: int) -> list[Polynomial]:
        return _vectors_to_polys(self.field, self.nvars, d, self.rows.get(d, ()))

    def quotient_hf(self, up_to: int) -> tuple[int, ...]:
        return tuple(len(monomial_basis(d, self.nvars)) - self.dim(d) for d in range(up_to + 1))

    def same_slice(self, d: int, polys: Sequence[Polynomial]) -> bool:
        other = _echelon(self.field, [_poly_to_vector(p, d) for p in polys], len(monomial_basis(d, self.nvars)))
        return other == self.rows.get(d, [])


def _echelon(field, vectors, ncols) -> list[list]:
    if not vectors:
        return []
    return row_echelon(field, vectors, ncols)[0]


def _times_variable_map(nvars: int, d: int) -> list[list[int]]:
    """For each variable, the index in R_{d+1} of x_i * m for m in R_d."""
    target = {m: n for n, m in enumerate(monomial_basis(d + 1, nvars))}
    out = []
    for i in range(nvars):
        idx = []
        for m in monomial_basis(d, nvars):
            e = list(m)
            e[i] += 1
            idx.append(target[tuple(e)])
        out.append(idx)
    return out


def grow_ideal_slices(seed: GradedIdealSlice, up_to: int) -> GradedIdealSlice:
    """Graded pieces up to ``up_to`` of the ideal generated by ``seed``."""
    f, r = seed.field, seed.nvars
    out = GradedIdealSlice(f, r)
    prev: list = []
    for d in range(up_to + 1):
        n = len(monomial_basis(d, r))
        vecs = [list(v) for v in seed.rows.get(d, ())]
        if prev:
            for idx in _times_variable_map(r, d - 1):
                for row in prev:
                    w = [f.zero] * n
                    for src, c in enumerate(row):
                        if c:
                            w[idx[src]] = c
                    vecs.append(w)
        prev = _echelon(f, vecs, n)
        if prev:
            out.rows[d] = prev
    return out


def _normal_form_matrix(field, rows, ncols):
    """Linear map killing span(rows): returns (pivots, function reducing a vector)."""
    pivots = [next(t for t, c in enumerate(row) if c) for row in rows]

    def reduce(vec):
        vec = list(vec)
        for row, p in zip(rows, pivots):
            c = vec[p]
            if c:
                for t, a in enumerate(row):
                    if a:
                        vec[t] = field.sub(vec[t], field.mul(c, a))
        return [vec[t] for t in range(ncols) if t not in set(pivots)]

    return pivots, reduce


def colon_by_maximal_slice(J: GradedIdealSlice, d: int) -> list[Polynomial]:
    """Basis of (J : m)_d = {f in R_d : x_i f in J_{d+1} for every i}."""
    if d < 0:
        raise ValueError("negative degree")
    f, r = J.field, J.nvars
    n_src = len(monomial_basis(d, r))
    n_tgt = len(monomial_basis(d + 1, r))
    rows_next = J.rows.get(d + 1, [])
    _, reduce = _normal_form_matrix(f, rows_next, n_tgt)
    maps = _times_variable_map(r, d)
    # one column per source monomial: stacked normal forms of x_i * m
    columns = []
    for src in range(n_src):
        col = []
        for idx in maps:
            w = [f.zero] * n_tgt
            w[idx[src]] = f.one
            col.extend(reduce(w))
        columns.append(col)
    nrows = len(columns[0]) if columns else 0
    if nrows == 0:
        vecs = [[f.one if t == s else f.zero for t in range(n_src)] for s in range(n_src)]
    else:
        M = DenseMatrix(f, nrows, n_src, [columns[c][rr] for rr in range(nrows) for c in range(n_src)])
        vecs = kernel_basis(M)
    vecs = _echelon(f, vecs, n_src)
    return _vectors_to_polys(f, r, d, vecs)


@dataclass
class ProbeReport:
    hilbert: tuple
    s: int
    tau: int
    j: int
    generators: dict          # degree -> list of minimal generators of J (as text)
    ideal_dims: tuple         # dim J_d, d = 0..j+2
    quotient_hf: tuple        # HF(R/J), d = 0..j+2
    hf_stable: bool
    saturated_degrees: tuple  # degrees d in [tau+1, j+2] where (J:m)_d = J_d
    degreewise_saturated: bool
    middle_zone: tuple        # (first, last) degree of the comparison window
    agrees_with_ann: bool

    @property
    def saturation_bound(self) -> int:
        return self.j + 2

    def as_dict(self) -> dict:
        return {
            "hilbert": list(self.hilbert),
            "s": self.s,
            "tau": self.tau,
            "j": self.j,
            "generators": {str(d): g for d, g in self.generators.items()},
            "ideal_dims": list(self.ideal_dims),
            "quotient_hf": list(self.quotient_hf),
            "hf_stable": self.hf_stable,
            "degreewise_saturated_up_to": self.saturation_bound if self.degreewise_saturated else None,
            "saturated_degrees": list(self.saturated_degrees),
            "middle_zone": list(self.middle_zone),
            "agrees_with_ann_in_middle_zone": self.agrees_with_ann,
        }


def _has_triple_plateau(T, s) -> bool:
    return any(T[i] == T[i + 1] == T[i + 2] == s for i in range(len(T) - 2))


def annihilating_scheme_probe(F) -> ProbeReport:
    """Degreewise check that J = (Ann(F)_{<= tau+1}) behaves like the ideal of s points.

    Saturation is tested only in degrees up to j+2.
    """
    F = _as_dual(F)
    if F.nvars != 3:
        raise PreconditionError(f"probe needs 3 variables, got {F.nvars}")
    A = ArtinAlgebra.from_dual(F)
    T = A.hilbert
    inv = sequences.invariants(T)
    s, tau, j = inv.s, inv.tau, inv.j
    if not _has_triple_plateau(T, s):
        raise PreconditionError(f"Hilbert function {T} has no consecutive (s,s,s) with s = {s}")
    fld, r = F.field, F.nvars
    seed = GradedIdealSlice.from_polynomials(fld, r, {d: ann_slice(F, d) for d in range(tau + 2)})
    top = j + 2
    J = grow_ideal_slices(seed, top + 1)

    generators = {}
    below = GradedIdealSlice(fld, r)
    for d in range(tau + 2):
        gens = []
        span = grow_ideal_slices(below, d).rows.get(d, [])
        current = [list(v) for v in span]
        n = len(monomial_basis(d, r))
        for p in ann_slice(F, d):
            v = _poly_to_vector(p, d)
            if len(_echelon(fld, current + [v], n)) > len(_echelon(fld, current, n)):
                current.append(v)
                gens.append(str(p))
        if gens:
            generators[d] = gens
        if d in seed.rows:
            below.rows[d] = seed.rows[d]

    qhf = J.quotient_hf(top)
    expected = tuple(T[d] if d <= tau else s for d in range(top + 1))
    hf_stable = qhf == expected

    sat = tuple(d for d in range(tau + 1, top + 1)
                if len(colon_by_maximal_slice(J, d)) == J.dim(d))
    degreewise_saturated = len(sat) == top - tau

    lo, hi = tau + 1, j - tau - 1
    agrees = all(J.same_slice(t, ann_slice(F, t)) for t in range(lo, hi + 1))
    return ProbeReport(
        hilbert=T, s=s, tau=tau, j=j, generators=generators,
        ideal_dims=tuple(J.dim(d) for d in range(top + 1)),
        quotient_hf=qhf, hf_stable=hf_stable,
        saturated_degrees=sat, degreewise_saturated=degreewise_saturated,
        middle_zone=(lo, hi), agrees_with_ann=agrees,
    )
