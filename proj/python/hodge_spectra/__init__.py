"""Hodge Laplacian spectra of left-invariant metrics on SU(2) and SO(3)."""

import json

from ._core import (
    DomainError,
    UsageError,
    __version__,
    block_eigenvalues,
    lambda1,
)
from . import _core

__all__ = [
    "DomainError",
    "UsageError",
    "__version__",
    "block_eigenvalues",
    "geometry",
    "lambda1",
    "run",
]


def geometry(a, b, c, group="SU2"):
    """Christoffel symbols, curvature, C-nabla and volume as a dict."""
    return json.loads(_core.geometry(a, b, c, group))


def run(command, **options):
    """Run a CLI command in-process.

    Returns ``(report, exit_code)`` where ``report`` is the same dict the
    command-line tool prints with ``--format json``.
    """
    text, code = _core.execute(command, **options)
    return json.loads(text), code
