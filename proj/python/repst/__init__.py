"""Exact diagram calculus for Rep(S_t), induced algebras and their fibers."""

import json

from . import _repst
from ._repst import (
    DomainError,
    RepstError,
    ResourceLimitError,
    classify,
    contains_times,
    dim_poly,
    run_criterion,
    sign_multiplicity,
)

__all__ = [
    "DomainError",
    "RepstError",
    "ResourceLimitError",
    "build_algebra",
    "certify_simple",
    "check_axioms",
    "classify",
    "compose",
    "contains_times",
    "dim_poly",
    "fiber_match",
    "hom_dimension",
    "run_criterion",
    "sign_multiplicity",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def compose(lhs, rhs):
    """lhs o rhs; morphisms as dicts or JSON text."""
    return json.loads(_repst.compose(_text(lhs), _text(rhs)))


def build_algebra(k, subgroup=""):
    """ind(C[S_k/H]) for H generated by `subgroup` (cycle notation)."""
    return json.loads(_repst.build_algebra(k, subgroup))


def check_axioms(algebra):
    return _repst.check_axioms(_text(algebra))


def certify_simple(algebra):
    return _repst.certify_simple(_text(algebra))


def hom_dimension(x, y):
    return _repst.hom_dimension(_text(x), _text(y))


def fiber_match(algebra, n):
    return _repst.fiber_match(_text(algebra), n)
