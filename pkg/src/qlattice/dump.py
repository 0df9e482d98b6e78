"""Exact matrix dumps: one JSON document per matrix, entries as (denominator, coefficients)."""

from __future__ import annotations

import json
from pathlib import Path

from .arith import CycContext, CycRat, context
from .hkl import U_BASES, hkl_generator
from .linalg import RepMatrix
from .mcg import parse_generator
from .schroedinger import BASES, heisenberg_matrix, parse_heisenberg_word, psi_matrix

__all__ = ["REPS", "build_matrix", "normalization_note", "dump_matrix", "write_dump", "load_dump"]

REPS = ("psi", "hkl", "heisenberg")

_NOTES = {
    "psi": "Positive twists are normalized by 1/G_1 so that every matrix has unit determinant; "
           "inverse twists are exact matrix inverses. The action is projective: matrices are "
           "defined up to a scalar in Q(zeta)^x.",
    "hkl": "Integral and cointegral rescaled by sqrt(r) and 1/sqrt(r). tau_beta is the matrix of "
           "x -> lambda'(theta_(2) x) S(theta_(1)); tau_beta^-1 is represented by G_1 times the "
           "exact inverse. The action is projective: matrices are defined up to a scalar in Q(zeta)^x.",
    "heisenberg": "Linear action; sigma acts by -zeta^-2. Rightmost letter acts first.",
}


def normalization_note(rep: str) -> str:
    return _NOTES[rep]


def build_matrix(rep: str, gen: str, basis: str, r: int, genus: int) -> RepMatrix:
    """Freshly compute the requested matrix; raises ValueError on a bad combination."""
    ctx = context(r)
    if rep == "psi":
        _need(basis, BASES, rep)
        return psi_matrix(parse_generator(gen), genus, ctx, basis)
    if rep == "heisenberg":
        _need(basis, BASES, rep)
        return heisenberg_matrix(parse_heisenberg_word(gen), genus, ctx, basis)
    if rep == "hkl":
        _need(basis, U_BASES, rep)
        return hkl_generator(parse_generator(gen), genus, ctx, basis)
    raise ValueError(f"unknown representation {rep!r}; choose one of {', '.join(REPS)}")


def _need(basis, allowed, rep):
    if basis not in allowed:
        raise ValueError(f"basis {basis!r} is not available for {rep}; choose one of {', '.join(allowed)}")


def _enc_label(lab):
    return [_enc_label(x) for x in lab] if isinstance(lab, tuple) else lab


def _dec_label(lab):
    return tuple(_dec_label(x) for x in lab) if isinstance(lab, list) else lab


def dump_matrix(m: RepMatrix, rep: str, gen: str, basis: str, r: int, genus: int) -> dict:
    """Sparse row-major document: zero entries are omitted, each entry is [row, col, den, coeffs]."""
    entries = sorted((i, j, v) for i, j, v in m.entries())
    return {
        "r": r,
        "genus": genus,
        "representation": rep,
        "generator": gen,
        "basis": basis,
        "normalization": normalization_note(rep),
        "dimension": m.dim,
        "labels": [_enc_label(lab) for lab in m.labels],
        "entries": [[i, j, v.den, list(v.num)] for i, j, v in entries],
    }


def write_dump(doc: dict, path) -> None:
    Path(path).write_text(json.dumps(doc, indent=1) + "\n")


def load_dump(path_or_doc) -> tuple:
    """Return (header dict, RepMatrix) from a dump file or an already-parsed document."""
    doc = path_or_doc if isinstance(path_or_doc, dict) else json.loads(Path(path_or_doc).read_text())
    ctx: CycContext = context(doc["r"])
    labs = [_dec_label(lab) for lab in doc["labels"]]
    cols = [{} for _ in labs]
    for i, j, den, coeffs in doc["entries"]:
        cols[j][i] = CycRat(ctx, coeffs, den)
    header = {k: v for k, v in doc.items() if k not in ("labels", "entries")}
    return header, RepMatrix(ctx, labs, cols, doc["basis"])
