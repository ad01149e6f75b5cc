"""Report assembly and deterministic rendering.

Reports exist in two formats: a human-readable text form and a JSON form
validating against the shipped schema.  Both are deterministic: rationals
are rendered as ``p/q`` strings (plain ``n`` when the denominator is 1),
lists are canonically ordered, and JSON keys are sorted, so identical
inputs produce byte-identical output.  Floating point appears nowhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InvalidInputError
from .invariants import BoundCertificate, InvariantReport
from .model import EulerData, Violation

__all__ = [
    "fmt_rational",
    "parse_rational",
    "ReportDocument",
    "FIBRATION_HYPOTHESES",
]

#: Hypotheses behind the fibration bound that the data cannot certify;
#: supplying fibration inputs asserts them, and reports echo that.
FIBRATION_HYPOTHESES = (
    "fibration is semistable with connected fibres",
    "branch divisor splits into an etale-over-C horizontal part and fibre components",
)


def fmt_rational(x: Union[Fraction, int]) -> str:
    """Render an exact rational as ``p/q``, or ``p`` when integral."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or plain integer strings into an exact rational."""
    parts = text.strip().split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0], 10))
        if len(parts) == 2:
            return Fraction(int(parts[0], 10), int(parts[1], 10))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"not a rational number: {text!r} ({exc})") from None
    raise InvalidInputError(f"not a rational number: {text!r}")


@dataclass(frozen=True)
class ReportDocument:
    """Everything one invariants run produces, ready to render.

    ``invariants`` and ``certificate`` may be absent when the input is too
    broken to evaluate (the reason is then carried in ``error``); the
    validation findings are always present.
    """

    tool_version: str
    strict: bool
    input_echo: dict
    violations: tuple[Violation, ...]
    derived_base: EulerData
    invariants: Optional[InvariantReport]
    certificate: Optional[BoundCertificate]
    error: Optional[str] = None

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        doc: dict = {
            "tool": {"name": "ramcov", "version": self.tool_version},
            "strict": self.strict,
            "input": self.input_echo,
            "validation": {
                "valid": self.valid,
                "violations": [
                    {"code": v.code, "where": list(v.where), "message": v.message}
                    for v in self.violations
                ],
            },
            "derived_base": {
                "e_c_U": self.derived_base.e_c_U,
                "open_components": {k: v for k, v in self.derived_base.open_components},
                "n_crossings": self.derived_base.n_crossings,
            },
            "invariants": None,
            "certificate": None,
            "consistency": None,
            "error": self.error,
        }
        inv = self.invariants
        if inv is not None:
            doc["invariants"] = {
                "B_mult": {k: v for k, v in inv.B_mult},
                "KX_dot_B": inv.KX_dot_B,
                "B_dot_F": inv.B_dot_F,
                "RR": fmt_rational(inv.RR),
                "KY_sq": fmt_rational(inv.KY_sq),
                "correction_total": fmt_rational(inv.correction_total),
                "KYprime_sq": fmt_rational(inv.KYprime_sq),
                "euler_Y": inv.euler_Y,
                "exceptional_s": inv.exceptional_s,
                "euler_Yprime": inv.euler_Yprime,
                "chi": fmt_rational(inv.chi),
                "deg_det": fmt_rational(inv.deg_det),
            }
            doc["consistency"] = {
                "chi_integral": inv.chi_is_integral,
                "deg_det_integral": inv.deg_det_is_integral,
            }
        cert = self.certificate
        if cert is not None:
            cert_doc: dict = {
                "terms": [
                    {
                        "name": t.name,
                        "value": fmt_rational(t.value),
                        "bound": fmt_rational(t.bound),
                        "per_degree": fmt_rational(t.per_degree),
                        "ok": t.ok,
                    }
                    for t in cert.terms
                ],
                "linear_coefficient": fmt_rational(cert.linear_coefficient),
                "degree": cert.degree,
                "deg_det": fmt_rational(cert.deg_det),
                "deg_det_within_linear": cert.deg_det_within_linear,
                "satisfied": cert.satisfied,
                "fibration": None,
            }
            if cert.fibration_inputs is not None:
                fi = cert.fibration_inputs
                cert_doc["fibration"] = {
                    "inputs": {
                        "gF": fi.gF,
                        "Dhor_dot_F": fi.Dhor_dot_F,
                        "gC": fi.gC,
                        "nDC": fi.nDC,
                        "nS": fi.nS,
                    },
                    "bound": fmt_rational(cert.fibration_bound),
                    "deg_det_within": cert.deg_det_within_fibration,
                    "assumed_hypotheses": list(FIBRATION_HYPOTHESES),
                }
            doc["certificate"] = cert_doc
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"ramcov invariants report (version {self.tool_version})"]
        mode = "strict" if self.strict else "standard"
        lines.append(f"validation ({mode} mode): " + ("OK" if self.valid else f"{len(self.violations)} violation(s)"))
        for v in self.violations:
            lines.append(f"  {v.code} at {', '.join(v.where)}: {v.message}")

        eb = self.derived_base
        lines.append("derived base data:")
        lines.append(f"  e_c(complement of D) = {eb.e_c_U}")
        for cid, val in eb.open_components:
            lines.append(f"  e_c({cid} minus crossings) = {val}")
        lines.append(f"  crossings = {eb.n_crossings}")

        if self.error is not None:
            lines.append(f"invariants: not computed ({self.error})")
        inv = self.invariants
        if inv is not None:
            lines.append("invariants:")
            bm = ", ".join(f"{k}: {v}" for k, v in inv.B_mult)
            lines.append(f"  branch multiplicities: {bm}")
            lines.append(f"  (K_X . B) = {inv.KX_dot_B}   (B . F) = {inv.B_dot_F}")
            lines.append(f"  (R,R) = {fmt_rational(inv.RR)}")
            lines.append(
                f"  K_Y^2 = {fmt_rational(inv.KY_sq)}   correction = "
                f"{fmt_rational(inv.correction_total)}   K_Y'^2 = {fmt_rational(inv.KYprime_sq)}"
            )
            lines.append(
                f"  e_c(Y) = {inv.euler_Y}   s = {inv.exceptional_s}   "
                f"e_c(Y') = {inv.euler_Yprime}"
            )
            chi_tag = "integral" if inv.chi_is_integral else "NOT integral"
            dd_tag = "integral" if inv.deg_det_is_integral else "NOT integral"
            lines.append(f"  chi = {fmt_rational(inv.chi)} [{chi_tag}]")
            lines.append(f"  deg_det = {fmt_rational(inv.deg_det)} [{dd_tag}]")
        cert = self.certificate
        if cert is not None:
            lines.append("linear bound certificate:")
            for t in cert.terms:
                flag = "ok" if t.ok else "VIOLATED"
                lines.append(
                    f"  {t.name}: |{fmt_rational(t.value)}| <= {fmt_rational(t.bound)}  {flag}"
                )
            lines.append(
                f"  coefficient c = {fmt_rational(cert.linear_coefficient)}; "
                f"|deg_det| <= c*d = {fmt_rational(cert.linear_coefficient * cert.degree)}: "
                + ("ok" if cert.deg_det_within_linear else "VIOLATED")
            )
            lines.append(f"  satisfied: {'yes' if cert.satisfied else 'no'}")
            if cert.fibration_bound is not None:
                within = cert.deg_det_within_fibration
                lines.append(
                    f"  fibration bound = {fmt_rational(cert.fibration_bound)}; "
                    f"|deg_det| <= bound: " + ("ok" if within else "VIOLATED")
                )
                lines.append("  assumed (caller-asserted): " + "; ".join(FIBRATION_HYPOTHESES))
        return "\n".join(lines) + "\n"
