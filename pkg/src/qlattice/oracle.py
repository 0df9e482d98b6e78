"""Independent word-rewriting model of u_zeta(sl2), used to cross-check PBW multiplication.

Elements are linear combinations of words in the letters E, F, K.  The defining
relations are applied as a terminating rewrite system

    F E -> E F - K + K^(r-1),   K E -> zeta^2 E K,   F K -> zeta^2 K F,
    E^r -> 0,   F^r -> 0,   K^r -> 1,

until every word has the normal form E^a K^j F^b.  Nothing here shares code
with the PBW straightening in ``uqsl2``.
"""

from __future__ import annotations

from .arith import CycContext, CycRat
from .qcomb import qfactorial_at_zeta

__all__ = ["normal_form", "pbw_to_words", "words_to_pbw", "oracle_product"]


def _first_rewrite(w: str, r: int):
    """Index and kind of the leftmost reducible spot in ``w``, or None if normal."""
    for i in range(len(w) - 1):
        pair = w[i:i + 2]
        if pair in ("FE", "KE", "FK"):
            return i, pair
    for letter in "EFK":
        j = w.find(letter * r)
        if j >= 0:
            return j, letter * r
    return None


def normal_form(terms: dict, ctx: CycContext) -> dict:
    """Rewrite a dict word -> CycRat until every word is E^a K^j F^b."""
    r = ctx.r
    z2 = ctx.zeta_rat(2)
    out = {}
    todo = list(terms.items())
    while todo:
        w, c = todo.pop()
        if not c:
            continue
        hit = _first_rewrite(w, r)
        if hit is None:
            v = out.get(w)
            v = c if v is None else v + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
            continue
        i, kind = hit
        pre = w[:i]
        if kind == "FE":
            post = w[i + 2:]
            todo.append((pre + "EF" + post, c))
            todo.append((pre + "K" + post, -c))
            todo.append((pre + "K" * (r - 1) + post, c))
        elif kind == "KE":
            todo.append((pre + "EK" + w[i + 2:], c * z2))
        elif kind == "FK":
            todo.append((pre + "KF" + w[i + 2:], c * z2))
        elif kind == "K" * r:
            todo.append((pre + w[i + r:], c))
        # E^r and F^r vanish
    return out


def pbw_to_words(triple_terms: dict, ctx: CycContext) -> dict:
    """E^l 1_m F^(n) = (1/r) sum_j zeta^(2jm) E^l K^j F^n / [n]!."""
    r = ctx.r
    out = {}
    for (l, m, n), c in triple_terms.items():
        scale = c / ctx.rat(qfactorial_at_zeta(n, ctx)) / r
        for j in range(r):
            w = "E" * l + "K" * j + "F" * n
            v = scale * ctx.zeta_rat(2 * j * m)
            out[w] = out[w] + v if w in out else v
    return {w: c for w, c in out.items() if c}


def words_to_pbw(words: dict, ctx: CycContext) -> dict:
    """Inverse conversion for normal-form words: E^a K^j F^b = [b]! sum_n zeta^(-2jn) E^a 1_n F^(b)."""
    r = ctx.r
    out = {}
    for w, c in words.items():
        a, j, b = w.count("E"), w.count("K"), w.count("F")
        if w != "E" * a + "K" * j + "F" * b:
            raise ValueError(f"word {w!r} is not in normal form")
        scale = c * ctx.rat(qfactorial_at_zeta(b, ctx))
        for n in range(r):
            key = (a, n, b)
            v = scale * ctx.zeta_rat(-2 * j * n)
            out[key] = out[key] + v if key in out else v
    return {k: c for k, c in out.items() if c}


def oracle_product(x: dict, y: dict, ctx: CycContext) -> dict:
    """Product of two PBW combinations (dict triple -> coefficient) through the rewrite system."""
    wx = pbw_to_words(x, ctx)
    wy = pbw_to_words(y, ctx)
    prod: dict[str, CycRat] = {}
    for u, cu in wx.items():
        for v, cv in wy.items():
            w = u + v
            c = cu * cv
            prod[w] = prod[w] + c if w in prod else c
    return words_to_pbw(normal_form(prod, ctx), ctx)
