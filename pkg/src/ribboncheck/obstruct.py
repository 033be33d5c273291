"""
The divisibility obstruction to homotopy ribbon concordance.

If an m-component link J is homotopy ribbon concordant to an
m-component link L, the polynomial of L divides the polynomial of J.
The contrapositive is a certificate: whenever Delta_L does not divide
Delta_J, no homotopy ribbon concordance from J to L exists.

The verdict vocabulary is deliberately one-sided.  "obstructed" is a
theorem-backed impossibility certificate; "not_obstructed" only records
that this invariant is silent, never that a concordance exists (whether
the relation is a partial order is open).  A component-count mismatch is
outside the theorem's hypotheses and is raised as a distinct error, not
silently folded into a verdict.
"""

import json
from dataclasses import dataclass
from typing import Optional, Tuple

from . import laurent
from .laurent import LaurentPoly, exact_divide
from .alexander import AlexanderPolynomial, alexander_polynomial


class ComponentMismatch(ValueError):
    """Links with different component counts are never concordant."""


OBSTRUCTED = "obstructed"
NOT_OBSTRUCTED = "not_obstructed"


@dataclass(frozen=True)
class ObstructionReport:
    direction: Tuple[str, str]
    delta_j: AlexanderPolynomial
    delta_l: AlexanderPolynomial
    verdict: str
    quotient: Optional[LaurentPoly]  # witness with delta_l * quotient = delta_j
    gcd_value: LaurentPoly

    def to_dict(self):
        return {
            "direction": list(self.direction),
            "deltaJ": str(self.delta_j),
            "deltaL": str(self.delta_l),
            "verdict": self.verdict,
            "quotient": None if self.quotient is None else
                        laurent.poly_to_str(self.quotient),
            "gcd": laurent.poly_to_str(self.gcd_value),
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    def summary(self):
        if self.verdict == OBSTRUCTED:
            return ("OBSTRUCTED: Delta_L does not divide Delta_J; "
                    "no homotopy ribbon concordance %s >= %s" % self.direction)
        return "not obstructed (quotient: %s)" % laurent.poly_to_str(self.quotient)


def ribbon_obstruction(diagram_j, diagram_l, names=("J", "L")):
    """
    Apply the divisibility test to an ordered pair of diagrams.

    >>> from .linkcodec import parse_link_spec
    >>> r = ribbon_obstruction(parse_link_spec("braid:n=1:"),
    ...                        parse_link_spec("braid:n=2:1 1 1"))
    >>> r.verdict
    'obstructed'
    """
    if diagram_j.num_components != diagram_l.num_components:
        raise ComponentMismatch(
            "component counts differ (%d vs %d); concordance preserves them"
            % (diagram_j.num_components, diagram_l.num_components))
    dj = alexander_polynomial(diagram_j)
    dl = alexander_polynomial(diagram_l)
    return _report(dj, dl, names)


def _report(dj, dl, names):
    g = laurent.gcd(dj.value, dl.value)
    quotient = exact_divide(dj.value, dl.value)
    verdict = NOT_OBSTRUCTED if quotient is not None else OBSTRUCTED
    if quotient is not None and dl.value * quotient != dj.value:
        raise AssertionError("division witness failed verification")
    return ObstructionReport(tuple(names), dj, dl, verdict, quotient, g)


def obstruction_from_polynomials(delta_j, delta_l, names=("J", "L")):
    """Build a report from polynomials already computed (batch mode)."""
    if delta_j.nvars != delta_l.nvars:
        raise ComponentMismatch(
            "component counts differ (%d vs %d); concordance preserves them"
            % (delta_j.nvars, delta_l.nvars))
    return _report(delta_j, delta_l, names)


def coprimality_report(diagram_j, diagram_l):
    """
    gcd of the two polynomials, canonicalized.  A unit gcd obstructs in
    both directions as soon as both polynomials are nonunits.
    """
    if diagram_j.num_components != diagram_l.num_components:
        raise ComponentMismatch(
            "component counts differ (%d vs %d)"
            % (diagram_j.num_components, diagram_l.num_components))
    dj = alexander_polynomial(diagram_j)
    dl = alexander_polynomial(diagram_l)
    return laurent.gcd(dj.value, dl.value)
