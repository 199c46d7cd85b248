"""Pipe dreams, bumpless pipe dreams and the bijections between them.

BPDs are lists of row strings over the tiles ``. | - r j +``; biwords are
``(rows, letters)`` pairs; tableaux are lists of rows.
"""

import json as _json

from ._bpdkit import (
    BpdkitError,
    bpd_permutation,
    eg_pq,
    enumerate_bpd,
    enumerate_flagged,
    enumerate_pd,
    gamma,
    huang_bump,
    is_grassmannian,
    is_vexillary,
    jdt,
    little_bump,
    ls_recording,
    permutation_length,
    phi,
    phi_inverse,
    pop,
    render_tikz,
    schubert,
)
from ._bpdkit import verify as _verify


def verify(theorem, n, threads=0):
    """Exhaustive check over S_n; returns the report as a dict."""
    return _json.loads(_verify(theorem, n, threads))


__all__ = [
    "BpdkitError",
    "bpd_permutation",
    "eg_pq",
    "enumerate_bpd",
    "enumerate_flagged",
    "enumerate_pd",
    "gamma",
    "huang_bump",
    "is_grassmannian",
    "is_vexillary",
    "jdt",
    "little_bump",
    "ls_recording",
    "permutation_length",
    "phi",
    "phi_inverse",
    "pop",
    "render_tikz",
    "schubert",
    "verify",
]
