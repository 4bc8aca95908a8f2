"""Exact quiver representation computations.

Algebras, modules, dimension vectors and weights are plain dicts in the same
JSON layout the command line tool reads and writes.
"""

import json

from . import _quiverforge as _qf
from ._quiverforge import CertificateError, UndecidedError, schema_version

__all__ = [
    "CertificateError",
    "UndecidedError",
    "schema_version",
    "hom_dim",
    "ext1_dim",
    "euler_form",
    "isotropic_root",
    "is_stable",
    "effective_cone",
    "theorem11",
    "verify",
    "zwara",
]


def _s(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def hom_dim(algebra, m, n):
    return _qf.hom_dim(_s(algebra), _s(m), _s(n))


def ext1_dim(algebra, m, n):
    return _qf.ext1_dim(_s(algebra), _s(m), _s(n))


def euler_form(algebra, d, e):
    return _qf.euler_form(_s(algebra), _s(d), _s(e))


def isotropic_root(algebra):
    return json.loads(_qf.isotropic_root(_s(algebra)))


def is_stable(algebra, module, theta, semistable_only=False):
    return json.loads(_qf.is_stable(_s(algebra), _s(module), _s(theta), semistable_only))


def effective_cone(algebra, d):
    return json.loads(_qf.effective_cone(_s(algebra), _s(d)))


def theorem11(algebra, seed=7):
    return json.loads(_qf.theorem11(_s(algebra), seed))


def verify(instance):
    return json.loads(_qf.verify(_s(instance)))


def zwara():
    return json.loads(_qf.zwara())
