"""Numerical invariants of a resolved branched cover and its degree bounds.

Given a validated base-plus-cover description this module walks the chain

    branch divisor B  ->  (R,R)  ->  K_Y^2  ->  K_{Y'}^2
    Euler data        ->  e_c(Y) ->  e_c(Y')
    chi = (K_{Y'}^2 + e_c(Y'))/12
    deg_det = chi-part + fibration part

entirely in exact rational arithmetic, where Y is the cover compactified
over the branch configuration and Y' its minimal resolution along the
cyclic quotient points sitting over the crossings.  The final quantity is
the degree, on the base curve, of the determinant of cohomology of the
structure sheaf pushed down the fibration: a height-like measure of the
cover.

On top of the chain sit two bound evaluators: a certificate that the
computed degree is linearly bounded in the cover degree, with one receipt
per estimate so a failure localizes, and an Arakelov-type bound for
semistable fibrations.  A third, logarithmic height bound for plane models
is the single place the package leaves exact arithmetic (flagged as such).
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .errors import InvalidInputError
from .hj import ResolutionData, SingularityType, resolve
from .model import BaseGeometry, CoverDescription, derived_euler_data

__all__ = [
    "InvariantReport",
    "BoundTerm",
    "BoundCertificate",
    "FibrationInputs",
    "branch_divisor",
    "rr_breakdown",
    "r_self_intersection",
    "k2_chain",
    "euler_chain",
    "deg_det",
    "invariant_report",
    "degree_linear_certificate",
    "arakelov_degree_bound",
    "plane_model_height_log",
    "height_log_decimal",
    "HEIGHT_LOG_PRECISION",
]


@lru_cache(maxsize=None)
def _resolution(n: int, q: int) -> ResolutionData:
    return resolve(SingularityType(n, q))


def branch_divisor(base: BaseGeometry, cover: CoverDescription) -> dict[str, int]:
    """Multiplicity of each component in the branch divisor downstairs.

    The pushforward of the ramification divisor hits ``D_i`` with
    multiplicity ``sum_j (e_ij - 1) f_ij``, which for a valid cover lies in
    ``[0, d-1]``.
    """
    return {
        comp.id: sum((s.e - 1) * s.f for s in cover.sheets_for(comp.id))
        for comp in base.components
    }


def rr_breakdown(
    base: BaseGeometry, cover: CoverDescription
) -> tuple[dict[str, Fraction], dict[int, Fraction]]:
    """Per-part breakdown of the ramification self-intersection (R,R).

    Returns ``(diagonal_factor, cross)`` where ``diagonal_factor[i]`` is
    ``sum_j (e_ij - 1)^2 f_ij / e_ij`` (to be weighted by ``(D_i, D_i)``)
    and ``cross[x]`` is the *unordered* per-crossing sum
    ``sum_y (e_1(y) - 1)(e_2(y) - 1) / n_y``; the total counts every
    crossing with both orders, i.e. twice.
    """
    diagonal = {
        comp.id: sum(
            (Fraction((s.e - 1) ** 2 * s.f, s.e) for s in cover.sheets_for(comp.id)),
            Fraction(0),
        )
        for comp in base.components
    }
    cross = {}
    for crossing in base.crossings:
        first = cover.sheets_for(crossing.pair[0])
        second = cover.sheets_for(crossing.pair[1])
        total = Fraction(0)
        for pt in cover.points_for(crossing.index):
            lt = pt.local_cover_type()
            if lt.n < 1:
                raise InvalidInputError(
                    f"crossing {crossing.index}: local type has n={lt.n}, cannot weight by 1/n"
                )
            total += Fraction((first[pt.j].e - 1) * (second[pt.jp].e - 1), lt.n)
        cross[crossing.index] = total
    return diagonal, cross


def r_self_intersection(base: BaseGeometry, cover: CoverDescription) -> Fraction:
    """Self-intersection (R,R) of the ramification divisor on the cover."""
    diagonal, cross = rr_breakdown(base, cover)
    total = sum(
        (diagonal[comp.id] * comp.self_int for comp in base.components), Fraction(0)
    )
    total += 2 * sum(cross.values(), Fraction(0))
    return total


def _point_resolutions(
    base: BaseGeometry, cover: CoverDescription
) -> dict[int, list[Optional[ResolutionData]]]:
    """Resolution data of each point above each crossing (None if smooth)."""
    out: dict[int, list[Optional[ResolutionData]]] = {}
    for crossing in base.crossings:
        row = []
        for pt in cover.points_for(crossing.index):
            lt = pt.local_cover_type()
            problems = lt.invariant_problems()
            if problems:
                raise InvalidInputError(
                    f"crossing {crossing.index}: invalid local type: {problems[0]}"
                )
            row.append(_resolution(lt.n, lt.q) if lt.singular else None)
        out[crossing.index] = row
    return out


def k2_chain(
    base: BaseGeometry, cover: CoverDescription
) -> tuple[Fraction, Fraction, Fraction]:
    """Canonical self-intersection on the cover and on its resolution.

    ``K_Y^2 = d*K_X^2 + 2*sum_i B_mult(i)*(K_X . D_i) + (R,R)``; resolving
    the quotient singularities adds, per singular point, the correction
    ``sum_i a_i (b_i - 2)`` of its exceptional chain.  Returns the triple
    ``(K_Y^2, correction_total, K_{Y'}^2)``.
    """
    bmult = branch_divisor(base, cover)
    ky_sq = Fraction(cover.degree * base.KX_sq)
    ky_sq += 2 * sum(bmult[c.id] * c.KX_dot for c in base.components)
    ky_sq += r_self_intersection(base, cover)
    correction = sum(
        (
            rd.correction
            for row in _point_resolutions(base, cover).values()
            for rd in row
            if rd is not None
        ),
        Fraction(0),
    )
    return ky_sq, correction, ky_sq + correction


def euler_chain(base: BaseGeometry, cover: CoverDescription) -> tuple[int, int, int]:
    """Euler characteristics of the cover before and after resolution.

    Stratifies the base into the divisor complement, the punctured branch
    components, and the crossing points; the cover contributes with local
    degree ``d``, ``d_i = sum_j f_ij``, and one point per listed point.
    Resolution glues in ``s`` rational curves in total, one per exceptional
    chain entry.  Returns ``(e_c(Y), s, e_c(Y'))``.
    """
    euler = derived_euler_data(base)
    total = cover.degree * euler.e_c_U
    for comp in base.components:
        d_i = sum(s.f for s in cover.sheets_for(comp.id))
        total += d_i * euler.open_component(comp.id)
    n_points = sum(len(points) for _, points in cover.points_above)
    total += n_points
    s = sum(
        rd.chain.length
        for row in _point_resolutions(base, cover).values()
        for rd in row
        if rd is not None
    )
    return total, s, total + s


def deg_det(base: BaseGeometry, cover: CoverDescription) -> Fraction:
    """Degree of the determinant of cohomology on the base curve.

    Riemann-Roch on the resolved cover, pushed to the curve, collapses to

        (1/12)(K_{Y'}^2 + e_c(Y')) + (1/2)(1 - g_C)(d*(K_X.F) + (B.F))

    once every divisor class is paired with the fibre class.  All terms are
    exact rationals; for geometrically consistent input the result is an
    integer.
    """
    _, _, kyprime_sq = k2_chain(base, cover)
    _, _, euler_yprime = euler_chain(base, cover)
    bmult = branch_divisor(base, cover)
    b_dot_f = sum(bmult[c.id] * c.fiber_deg for c in base.components)
    chi_part = Fraction(kyprime_sq + euler_yprime, 12)
    fib_part = Fraction(1 - base.genus_C, 2) * (cover.degree * base.KX_dot_F + b_dot_f)
    return chi_part + fib_part


@dataclass(frozen=True)
class InvariantReport:
    """All invariants of one cover, with the per-term breakdown.

    ``KYprime_sq = KY_sq + correction_total`` and ``euler_Yprime = euler_Y
    + exceptional_s`` are enforced; integrality of ``chi`` and ``deg_det``
    is surfaced as flags because non-integrality signals geometrically
    inconsistent input, not an arithmetic error.
    """

    B_mult: tuple[tuple[str, int], ...]
    KX_dot_B: int
    B_dot_F: int
    RR: Fraction
    KY_sq: Fraction
    correction_total: Fraction
    KYprime_sq: Fraction
    euler_Y: int
    exceptional_s: int
    euler_Yprime: int
    chi: Fraction
    deg_det: Fraction

    def __post_init__(self) -> None:
        if self.KYprime_sq != self.KY_sq + self.correction_total:
            raise InvalidInputError("KYprime_sq must equal KY_sq + correction_total")
        if self.euler_Yprime != self.euler_Y + self.exceptional_s:
            raise InvalidInputError("euler_Yprime must equal euler_Y + exceptional_s")

    @property
    def chi_is_integral(self) -> bool:
        return self.chi.denominator == 1

    @property
    def deg_det_is_integral(self) -> bool:
        return self.deg_det.denominator == 1


def invariant_report(base: BaseGeometry, cover: CoverDescription) -> InvariantReport:
    """Run the whole invariant chain once and package the results."""
    bmult = branch_divisor(base, cover)
    kx_dot_b = sum(bmult[c.id] * c.KX_dot for c in base.components)
    b_dot_f = sum(bmult[c.id] * c.fiber_deg for c in base.components)
    rr = r_self_intersection(base, cover)
    ky_sq, correction, kyprime_sq = k2_chain(base, cover)
    euler_y, s, euler_yprime = euler_chain(base, cover)
    chi = Fraction(kyprime_sq + euler_yprime, 12)
    dd = chi + Fraction(1 - base.genus_C, 2) * (
        cover.degree * base.KX_dot_F + b_dot_f
    )
    return InvariantReport(
        B_mult=tuple((c.id, bmult[c.id]) for c in sorted(base.components, key=lambda c: c.id)),
        KX_dot_B=kx_dot_b,
        B_dot_F=b_dot_f,
        RR=rr,
        KY_sq=ky_sq,
        correction_total=correction,
        KYprime_sq=kyprime_sq,
        euler_Y=euler_y,
        exceptional_s=s,
        euler_Yprime=euler_yprime,
        chi=chi,
        deg_det=dd,
    )


@dataclass(frozen=True)
class FibrationInputs:
    """Caller-asserted data for the semistable fibration bound.

    The hypotheses behind the bound (semistable fibration with connected
    fibres; branch divisor splits into an etale-over-C horizontal part and
    fibre components) cannot be checked from the numerical data, so they
    are asserted by whoever supplies these numbers and echoed in reports.
    """

    gF: int
    Dhor_dot_F: int
    gC: int
    nDC: int
    nS: int

    def __post_init__(self) -> None:
        for name in ("gF", "Dhor_dot_F", "gC", "nDC", "nS"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise InvalidInputError(f"{name} must be a non-negative integer (got {value!r})")


def arakelov_degree_bound(
    gF: int, Dhor_dot_F: int, gC: int, nDC: int, nS: int, d: int
) -> Fraction:
    """Upper bound for |deg_det| of a semistable fibred cover, exactly.

    Evaluates ``(gF + (Dhor.F)/2) * (gC + 2*nDC + (1 + nS)/2) * d`` as an
    exact rational.  ``gF`` is the fibre genus upstairs, ``Dhor.F`` the
    fibre degree of the horizontal branch part, ``nDC`` the number of base
    points under the vertical branch part, ``nS`` the number of singular
    fibres (set cardinality; inflating it only weakens the bound).  Weakly
    increasing in every argument.
    """
    FibrationInputs(gF=gF, Dhor_dot_F=Dhor_dot_F, gC=gC, nDC=nDC, nS=nS)
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise InvalidInputError(f"d must be a positive integer (got {d!r})")
    return (gF + Fraction(Dhor_dot_F, 2)) * (gC + 2 * nDC + Fraction(1 + nS, 2)) * d


#: Significant digits used for the logarithms in the plane-model height
#: bound; everything else in the package is exact.
HEIGHT_LOG_PRECISION = 50


def height_log_decimal(d: int, nB: int, h: Union[Fraction, int] = 0) -> decimal.Decimal:
    """Decimal evaluation of the plane-model height bound, natural log scale.

    Computes ``log(h + 1) + (5 d^2 nB + 12 d) log(d^3 nB)`` where ``d`` is
    the cover degree, ``nB`` the number of branch points on the line, and
    ``h`` the affine logarithmic height of the defining polynomial.  The
    logarithms of exact integers are taken at ``HEIGHT_LOG_PRECISION``
    significant digits; this is the package's only non-exact operation.
    """
    if not isinstance(d, int) or isinstance(d, bool) or d < 2:
        raise InvalidInputError(f"degree must be an integer >= 2 (got {d!r})")
    if not isinstance(nB, int) or isinstance(nB, bool) or nB < 1:
        raise InvalidInputError(f"branch point count must be a positive integer (got {nB!r})")
    h = Fraction(h)
    if h < 0:
        raise InvalidInputError(f"height must be non-negative (got {h})")
    coeff = 5 * d * d * nB + 12 * d
    base = d ** 3 * nB
    h1 = h + 1
    with decimal.localcontext() as ctx:
        ctx.prec = HEIGHT_LOG_PRECISION
        log_h1 = decimal.Decimal(h1.numerator).ln() - decimal.Decimal(h1.denominator).ln()
        return log_h1 + coeff * decimal.Decimal(base).ln()


def plane_model_height_log(d: int, nB: int, h: Union[Fraction, int] = 0) -> Fraction:
    """The plane-model height bound as an exact rational snapshot.

    Same quantity as :func:`height_log_decimal`, converted exactly from its
    fixed-precision decimal evaluation so downstream consumers stay in
    rational arithmetic.  The precision cutoff is inherited, and flagged,
    from the decimal step.
    """
    return Fraction(height_log_decimal(d, nB, h))


@dataclass(frozen=True)
class BoundTerm:
    """One receipt of the linear-bound certificate."""

    name: str
    value: Fraction
    bound: Fraction
    per_degree: Fraction

    @property
    def ok(self) -> bool:
        return abs(self.value) <= self.bound


@dataclass(frozen=True)
class BoundCertificate:
    """Receipts showing |deg_det| is linearly bounded in the cover degree.

    ``linear_coefficient`` is assembled from the base configuration alone,
    so one coefficient serves every cover of the same base; the terms
    instantiate the individual estimates that make the aggregate work, and
    ``satisfied`` holds exactly when every term's |value| is within its
    bound.  The optional fibration bound is carried along for comparison
    when its inputs are supplied.
    """

    terms: tuple[BoundTerm, ...]
    linear_coefficient: Fraction
    degree: int
    deg_det: Fraction
    fibration_inputs: Optional[FibrationInputs]
    fibration_bound: Optional[Fraction]

    @property
    def satisfied(self) -> bool:
        return all(t.ok for t in self.terms)

    @property
    def deg_det_within_linear(self) -> bool:
        return abs(self.deg_det) <= self.linear_coefficient * self.degree

    @property
    def deg_det_within_fibration(self) -> Optional[bool]:
        if self.fibration_bound is None:
            return None
        return abs(self.deg_det) <= self.fibration_bound


def linear_coefficient(base: BaseGeometry) -> Fraction:
    """The degree-free coefficient c with |deg_det| <= c * degree.

    Aggregates the worst case of every term in the invariant chain using
    only base data: canonical intersection numbers, component
    self-intersections, crossing counts, and the Euler stratification.
    Conservative by construction; the certificate's per-term receipts show
    where the slack lives.
    """
    euler = derived_euler_data(base)
    n_cross = len(base.crossings)
    twelfth = (
        abs(base.KX_sq)
        + 2 * sum(abs(c.KX_dot) for c in base.components)
        + sum(abs(c.self_int) for c in base.components)
        + 2 * n_cross  # cross part of (R,R)
        + 2 * n_cross  # resolution corrections
        + n_cross  # exceptional curve count s
        + abs(euler.e_c_U)
        + sum(abs(v) for _, v in euler.open_components)
        + n_cross  # points above the crossings
    )
    fib = Fraction(abs(1 - base.genus_C), 2) * (
        abs(base.KX_dot_F) + sum(c.fiber_deg for c in base.components)
    )
    return Fraction(twelfth, 12) + fib


def degree_linear_certificate(
    base: BaseGeometry,
    cover: CoverDescription,
    fibration: Optional[FibrationInputs] = None,
) -> BoundCertificate:
    """Instantiate the linear degree bound with per-term receipts.

    Emits one term per estimate: branch multiplicities are at most d, the
    diagonal (R,R) factors lie in [0, d), each crossing's ordered cross
    term is at most 2d in absolute value, per-crossing resolution
    corrections lie in (-d, 2 * points], per-crossing exceptional counts
    are at most d, and finally |deg_det| itself against
    ``linear_coefficient * d``.  When fibration inputs are supplied the
    comparison against the semistable bound is appended as a term as well.
    """
    d = cover.degree
    report = invariant_report(base, cover)
    diagonal, cross = rr_breakdown(base, cover)
    resolutions = _point_resolutions(base, cover)

    terms: list[BoundTerm] = []
    for cid, mult in report.B_mult:
        terms.append(
            BoundTerm(
                name=f"branch_mult[{cid}]",
                value=Fraction(mult),
                bound=Fraction(d),
                per_degree=Fraction(1),
            )
        )
    for comp in sorted(base.components, key=lambda c: c.id):
        terms.append(
            BoundTerm(
                name=f"rr_diagonal_factor[{comp.id}]",
                value=diagonal[comp.id],
                bound=Fraction(d),
                per_degree=Fraction(1),
            )
        )
    for crossing in sorted(base.crossings, key=lambda x: x.index):
        idx = crossing.index
        n_points = len(cover.points_for(idx))
        row = resolutions[idx]
        correction = sum((rd.correction for rd in row if rd is not None), Fraction(0))
        s_here = sum(rd.chain.length for rd in row if rd is not None)
        terms.append(
            BoundTerm(
                name=f"rr_cross[crossing {idx}]",
                value=2 * cross[idx],
                bound=Fraction(2 * d),
                per_degree=Fraction(2),
            )
        )
        terms.append(
            BoundTerm(
                name=f"correction[crossing {idx}]",
                value=correction,
                bound=Fraction(max(d, 2 * n_points)),
                per_degree=Fraction(2),
            )
        )
        terms.append(
            BoundTerm(
                name=f"exceptional_s[crossing {idx}]",
                value=Fraction(s_here),
                bound=Fraction(d),
                per_degree=Fraction(1),
            )
        )

    coeff = linear_coefficient(base)
    terms.append(
        BoundTerm(
            name="deg_det_vs_linear",
            value=report.deg_det,
            bound=coeff * d,
            per_degree=coeff,
        )
    )

    fib_bound = None
    if fibration is not None:
        fib_bound = arakelov_degree_bound(
            fibration.gF,
            fibration.Dhor_dot_F,
            fibration.gC,
            fibration.nDC,
            fibration.nS,
            d,
        )
        terms.append(
            BoundTerm(
                name="deg_det_vs_fibration",
                value=report.deg_det,
                bound=fib_bound,
                per_degree=Fraction(fib_bound, d),
            )
        )

    return BoundCertificate(
        terms=tuple(terms),
        linear_coefficient=coeff,
        degree=d,
        deg_det=report.deg_det,
        fibration_inputs=fibration,
        fibration_bound=fib_bound,
    )
