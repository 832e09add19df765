"""Invariants, descent and quartic families over F_3(t).

Scalars, forms and points use the text grammar of the command line tool,
for example ``"(t^2+1)/(t+2)"``, ``"y^2*z - x^3"`` and ``"(0:r:1)"``.
Structured results are returned as dictionaries with the same keys as the
tool's JSON output.
"""

import json

from . import _nscurve
from ._nscurve import (
    DEFAULT_MAX_LEVEL,
    DEFAULT_SPAN_DEGREE,
    DEFAULT_TRUNCATION,
    NscurveError,
    descend,
    extend,
    is_invariant,
)

__all__ = [
    "DEFAULT_MAX_LEVEL",
    "DEFAULT_SPAN_DEGREE",
    "DEFAULT_TRUNCATION",
    "NscurveError",
    "are_equivalent",
    "descend",
    "equation",
    "extend",
    "invariants",
    "is_invariant",
    "make_member",
    "sample_members",
    "singular_points",
    "verify_member",
]


def _member_text(member):
    return member if isinstance(member, str) else json.dumps(member)


def invariants(curve, point, *, max_level=DEFAULT_MAX_LEVEL, truncation=DEFAULT_TRUNCATION,
               span_degree=DEFAULT_SPAN_DEGREE):
    """Invariants report of the plane curve ``curve`` at ``point``."""
    return json.loads(_nscurve.invariants_json(curve, point, max_level, truncation, span_degree))


def make_member(family, t1, t2, a, *, max_level=DEFAULT_MAX_LEVEL):
    """Family member as a dict with keys family, t1, t2, a, A, B, C."""
    return json.loads(_nscurve.make_member_json(family, str(t1), str(t2), str(a), max_level))


def equation(member, *, max_level=DEFAULT_MAX_LEVEL):
    """Defining quartic of a member, over K."""
    return _nscurve.equation(_member_text(member), max_level)


def singular_points(member, *, max_level=DEFAULT_MAX_LEVEL):
    return _nscurve.singular_points(_member_text(member), max_level)


def are_equivalent(first, second, *, max_level=DEFAULT_MAX_LEVEL):
    """Verdict dict; includes the witness map when the members are equivalent."""
    return json.loads(_nscurve.are_equivalent_json(_member_text(first), _member_text(second), max_level))


def verify_member(member, *, max_level=DEFAULT_MAX_LEVEL, truncation=DEFAULT_TRUNCATION,
                  span_degree=DEFAULT_SPAN_DEGREE):
    return json.loads(_nscurve.verify_member_json(_member_text(member), max_level, truncation, span_degree))


def sample_members(family, count, seed, *, max_level=DEFAULT_MAX_LEVEL):
    """Deterministic sample of ``count`` members; matches ``nscurve verify``."""
    return json.loads(_nscurve.sample_members_json(family, count, seed, max_level))
