"""Exact Bernoulli/Euler numbers and polynomials, lacunary recurrences, identity checks."""

import json
from fractions import Fraction

from . import _lacuna
from ._lacuna import BadParity, DomainViolation, NonRealResidue, UnknownIdentity, identities

__all__ = [
    "BadParity",
    "DomainViolation",
    "NonRealResidue",
    "UnknownIdentity",
    "bernoulli",
    "bernoulli_poly",
    "euler",
    "euler_poly",
    "identities",
    "lucas",
    "run",
    "verify",
]


def bernoulli(n, method="classic"):
    return Fraction(_lacuna.bernoulli(n, method))


def euler(n, method="classic"):
    return Fraction(_lacuna.euler(n, method))


def bernoulli_poly(n):
    """Coefficients in ascending degree."""
    return [Fraction(c) for c in _lacuna.bernoulli_poly(n)]


def euler_poly(n):
    """Coefficients in ascending degree."""
    return [Fraction(c) for c in _lacuna.euler_poly(n)]


def lucas(kind, b, c, n, method="recurrence"):
    return Fraction(_lacuna.lucas(kind, str(Fraction(b)), str(Fraction(c)), n, method))


def verify(name, n_from=None, n_to=None, m_from=None, m_to=None, mode=None):
    return json.loads(_lacuna.verify(name, n_from, n_to, m_from, m_to, mode))


def run(*args):
    """Runs the command-line front end in-process; returns (exit code, stdout, stderr)."""
    return _lacuna.run([str(a) for a in args])
