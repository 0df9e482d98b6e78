"""The projective twist action on U_g = u_zeta(sl2)^(x)g, its integral basis, and the coefficient map Phi.

U_g bases are labelled by g-tuples of PBW triples (l, m, n), lexicographic:

* ``E1F``       E^l 1_m F^(n) on each factor;
* ``E1primeF``  h(zeta)^(-floor(sum(m)/2)) (x)_j E^l_j T_(m_j) F^(n_j), with
                T_m = sum_k (-1)^(m-k) zeta^((m-k)(m-1)) [m, k] 1_k.

Generator formulas (theta the ribbon element, lambda' the rescaled integral):

    tau_alpha: x -> theta^-1 x
    tau_beta:  x -> lambda'(theta_(2) x) S(theta_(1))
    tau_gamma: x1 (x) x2 -> x1 S(theta^-1_(1)) (x) theta^-1_(2) x2
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .arith import CycContext, context, gauss_sum, h_valuation, is_unit
from .linalg import RepMatrix, SingularMatrix
from .mcg import MCGGenerator, generators, parse_generator
from .qcomb import qbinom_at_zeta
from .report import CheckReport
from .uqsl2 import (
    AlgebraElement,
    adjoint_action,
    coproduct,
    quantum_group,
    ribbon,
    ribbon_inv,
)

__all__ = [
    "U_BASES",
    "HomologicalIndex",
    "u_labels",
    "hkl_generator",
    "hkl_inverse",
    "u_basis_transition",
    "u_to_basis",
    "adjoint_matrix",
    "phi_coefficient",
    "phi_block",
    "check_hkl_integrality",
    "check_adjoint_equivariance",
    "check_idempotent_grading",
    "check_phi_lattice",
    "check_mcg_relations_hkl",
]

U_BASES = ("E1F", "E1primeF")


def _triples(r: int) -> list:
    return list(product(range(r), repeat=3))


def u_labels(r: int, g: int) -> list:
    return list(product(_triples(r), repeat=g))


def _single(qg, m: dict) -> dict:
    """Convert a dict keyed by 1-tuples of flat indices into one keyed by 1-tuples of triples."""
    return {(qg.triple(k[0]),): c for k, c in m.items()}


# ---------------------------------------------------------------------------
# Single-factor and two-factor matrices in the E1F basis


def _mat_from_images(ctx, labs, images) -> RepMatrix:
    """``images`` lists, per column, a dict label -> value."""
    index = {lab: i for i, lab in enumerate(labs)}
    cols = []
    for img in images:
        cols.append({index[lab]: ctx.rat(v) for lab, v in img.items() if v})
    return RepMatrix(ctx, labs, cols, "E1F", projective=True)


def _left_mult(qg, x: AlgebraElement) -> RepMatrix:
    labs = u_labels(qg.r, 1)
    images = []
    for i in range(qg.dim):
        out = {}
        for (a,), c in x.terms.items():
            for k, ck in qg.mul_basis(a, i).items():
                lab = (qg.triple(k),)
                v = out.get(lab)
                out[lab] = c * ck if v is None else v + c * ck
        images.append(out)
    return _mat_from_images(qg.ctx, labs, images)


def _tau_beta_single(qg) -> RepMatrix:
    ctx = qg.ctx
    dtheta = coproduct(ribbon(ctx))
    # lambda'(b x) S(a) summed over theta_(1) (x) theta_(2) = a (x) b
    labs = u_labels(qg.r, 1)
    images = []
    for i in range(qg.dim):
        out = {}
        for (a, b), c in dtheta.terms.items():
            w = None
            for k, ck in qg.mul_basis(b, i).items():
                lk = qg.lambda_basis(k)
                if lk:
                    w = ck * lk if w is None else w + ck * lk
            if not w:
                continue
            cw = c * w
            for (s,), cs in qg.antipode_basis(a).items():
                lab = (qg.triple(s),)
                v = out.get(lab)
                out[lab] = cw * cs if v is None else v + cw * cs
        images.append(out)
    return _mat_from_images(ctx, labs, images)


def _tau_gamma_pair(qg, twist: AlgebraElement) -> RepMatrix:
    """x1 (x) x2 -> sum x1 S(a) (x) b x2 over Delta(twist) = a (x) b."""
    ctx = qg.ctx
    grouped = {}
    for (a, b), c in coproduct(twist).terms.items():
        grouped.setdefault(a, {})
        v = grouped[a].get(b)
        grouped[a][b] = c if v is None else v + c
    # right multiplication by S(a) and left multiplication by beta_a as single-factor maps
    right = {}
    for a in grouped:
        sa = qg.antipode_basis(a)
        right[a] = [_acc_products(qg, [(i, qg.one_c)], sa) for i in range(qg.dim)]
    left = {}
    for a, beta in grouped.items():
        left[a] = [_acc_products(qg, beta.items(), {(i,): qg.one_c}) for i in range(qg.dim)]
    labs = u_labels(qg.r, 2)
    images = []
    for i1 in range(qg.dim):
        for i2 in range(qg.dim):
            out = {}
            for a in grouped:
                p1 = right[a][i1]
                if not p1:
                    continue
                p2 = left[a][i2]
                if not p2:
                    continue
                for k1, c1 in p1.items():
                    t1 = qg.triple(k1)
                    for k2, c2 in p2.items():
                        lab = (t1, qg.triple(k2))
                        c = c1 * c2
                        v = out.get(lab)
                        out[lab] = c if v is None else v + c
            images.append(out)
    return _mat_from_images(ctx, labs, images)


def _acc_products(qg, lefts, rights: dict) -> dict:
    """Sum of c_a c_b b_a b_b over (a, c_a) in ``lefts`` and ((b,), c_b) in ``rights``."""
    out = {}
    for a, ca in lefts:
        for (b,), cb in rights.items():
            for k, ck in qg.mul_basis(a, b).items():
                c = ca * cb * ck
                v = out.get(k)
                v = c if v is None else v + c
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
    return out


@lru_cache(maxsize=None)
def _building_block(kind: str, sign: int, r: int) -> RepMatrix:
    ctx = context(r)
    qg = quantum_group(ctx)
    if kind == "tau_alpha":
        return _left_mult(qg, ribbon_inv(ctx) if sign == 1 else ribbon(ctx))
    if kind == "tau_gamma":
        return _tau_gamma_pair(qg, ribbon_inv(ctx) if sign == 1 else ribbon(ctx))
    m = _tau_beta_single(qg)
    if sign == 1:
        return m
    # inverse of the unit-determinant representative m / G_1
    return m.inverse() * ctx.rat(gauss_sum(1, ctx))


def _embed(block: RepMatrix, j: int, g: int) -> RepMatrix:
    ctx = block.ctx
    r = ctx.r
    width = len(block.labels[0])
    out = block
    if j > 1:
        out = RepMatrix.identity(ctx, u_labels(r, j - 1)).kron(block)
    rest = g - (j - 1) - width
    if rest > 0:
        out = out.kron(RepMatrix.identity(ctx, u_labels(r, rest)))
    # kron flattens nested tuples of triples into one tuple of triples
    return RepMatrix(ctx, out.labels, out.cols, "E1F", projective=True)


def hkl_generator(gen, g: int, ctx: CycContext, basis: str = "E1F") -> RepMatrix:
    """Matrix of a twist generator (or its inverse) on U_g in the requested basis."""
    if isinstance(gen, str):
        gen = parse_generator(gen)
    gen.validate(g)
    block = _building_block(gen.kind, gen.sign, ctx.r)
    return u_to_basis(_embed(block, gen.index, g), basis, g)


def hkl_inverse(gen, g: int, ctx: CycContext, basis: str = "E1F") -> RepMatrix:
    if isinstance(gen, str):
        gen = parse_generator(gen)
    return hkl_generator(gen.inverse(), g, ctx, basis)


# ---------------------------------------------------------------------------
# Basis change E1F <-> E1primeF


def _T_single(ctx: CycContext, inverse: bool) -> RepMatrix:
    r = ctx.r
    labs = u_labels(r, 1)

    def image(lab):
        (l, m, n), = lab
        if inverse:
            # 1_m = sum_k zeta^(k(m-k)) [m, k] T_k
            return {((l, k, n),): qbinom_at_zeta(m, k, ctx) * ctx.zeta(k * (m - k)) for k in range(m + 1)}
        return {((l, k, n),): qbinom_at_zeta(m, k, ctx) * ctx.zeta((m - k) * (m - 1)) * (-1) ** (m - k)
                for k in range(m + 1)}

    return RepMatrix.from_function(ctx, labs, image)


@lru_cache(maxsize=None)
def _u_transition(src: str, dst: str, g: int, r: int) -> RepMatrix:
    ctx = context(r)
    labs = u_labels(r, g)
    if src == dst:
        return RepMatrix.identity(ctx, labs)
    f = [sum(t[1] for t in lab) // 2 for lab in labs]
    if (src, dst) == ("E1primeF", "E1F"):
        base = _T_single(ctx, inverse=False)
        hpow = ctx.h_inverse()
    elif (src, dst) == ("E1F", "E1primeF"):
        base = _T_single(ctx, inverse=True)
        hpow = ctx.rat(ctx.h())
    else:
        raise ValueError(f"unknown basis pair {src!r} -> {dst!r}")
    out = base
    for _ in range(g - 1):
        out = out.kron(base)
    cols = out.cols
    if src == "E1primeF":
        # scale column j by h^-f(j)
        cols = [{i: v * hpow ** f[j] for i, v in col.items()} for j, col in enumerate(cols)]
    else:
        # scale row i by h^f(i)
        cols = [{i: v * hpow ** f[i] for i, v in col.items()} for col in cols]
    return RepMatrix(ctx, labs, cols, dst)


def u_basis_transition(src: str, dst: str, g: int, ctx: CycContext) -> RepMatrix:
    """Column j holds the ``dst``-coordinates of the j-th ``src`` basis vector."""
    for b in (src, dst):
        if b not in U_BASES:
            raise ValueError(f"unknown U basis {b!r}")
    return _u_transition(src, dst, g, ctx.r)


def u_to_basis(m: RepMatrix, basis: str, g: int) -> RepMatrix:
    if basis == "E1F":
        return m.relabel("E1F")
    if basis not in U_BASES:
        raise ValueError(f"unknown U basis {basis!r}")
    ctx = m.ctx
    out = u_basis_transition("E1F", "E1primeF", g, ctx) @ m @ u_basis_transition("E1primeF", "E1F", g, ctx)
    return RepMatrix(ctx, out.labels, out.cols, basis, m.projective)


# ---------------------------------------------------------------------------
# Adjoint action as matrices


@lru_cache(maxsize=None)
def _ad_single(r: int, a: int) -> RepMatrix:
    ctx = context(r)
    qg = quantum_group(ctx)
    labs = u_labels(r, 1)
    images = [{(qg.triple(k),): c for k, c in qg.ad_basis(a, i).items()} for i in range(qg.dim)]
    return _mat_from_images(ctx, labs, images).as_projective(False)


def adjoint_matrix(x: AlgebraElement, g: int) -> RepMatrix:
    """Matrix of y -> x |> y on U_g (E1F basis) for x of degree 1."""
    from .uqsl2 import iterated_coproduct

    qg = x.qg
    ctx = qg.ctx
    dx = iterated_coproduct(x, g)
    total = None
    for key, c in dx.terms.items():
        m = _ad_single(qg.r, key[0])
        for a in key[1:]:
            m = m.kron(_ad_single(qg.r, a))
        m = m * c
        total = m if total is None else total + m
    if total is None:
        n = qg.dim ** g
        total = RepMatrix(ctx, u_labels(qg.r, g), [{} for _ in range(n)])
    return RepMatrix(ctx, u_labels(qg.r, g), total.cols, "E1F")


def _algebra_generators(qg) -> list:
    gens = [("E", qg.E()), ("F", qg.F())]
    gens += [(f"1_{m}", qg.idem(m)) for m in range(qg.r)]
    return gens


# ---------------------------------------------------------------------------
# The coefficient map Phi


@dataclass(frozen=True)
class HomologicalIndex:
    """Index (a, b, n) of the basis vector Gamma(a, b) (x) v_n."""

    a: tuple
    b: tuple
    n: tuple

    def __post_init__(self):
        if not (len(self.a) == len(self.b) == len(self.n)):
            raise ValueError("a, b, n must have the same length")

    @property
    def g(self) -> int:
        return len(self.a)

    def validate(self, r: int) -> None:
        for name in ("a", "b", "n"):
            for x in getattr(self, name):
                if not 0 <= x < r:
                    raise ValueError(f"{name} entries must lie in [0, {r - 1}]")


def bar(k: tuple) -> tuple:
    return tuple(reversed(k))


def iota(k: tuple, r: int) -> tuple:
    return tuple(r - x - 1 for x in k)


def phi_exponent(idx: HomologicalIndex, r: int) -> int:
    """Exponent e with N(a, b, n) = zeta^e."""
    a, b, n = idx.a, idx.b, idx.n
    g = idx.g
    e = 0
    for i in range(g):
        for j in range(i + 1, g):
            e += 2 * (a[i] + b[i]) * (a[j] + b[j])
    for k in range(1, g + 1):
        ak, bk, nk = a[k - 1], b[k - 1], n[k - 1]
        e += 2 * (ak + bk) * (k - 1) + ak * (ak - 1) // 2 + 2 * ak * bk - 2 * (bk - 1) * nk
    return e


def phi_coefficient(idx: HomologicalIndex, ctx: CycContext):
    """Scalar N(a, b, n) (a power of zeta) and the target PBW multi-index E^iota(bar b) 1_(bar n) F^(bar a)."""
    r = ctx.r
    idx.validate(r)
    ls = iota(bar(idx.b), r)
    ms = bar(idx.n)
    ns = bar(idx.a)
    target = tuple(zip(ls, ms, ns))
    return ctx.zeta_rat(phi_exponent(idx, r)), target


def phi_block(a: tuple, b: tuple, ctx: CycContext) -> RepMatrix:
    """Phi restricted to the span of Gamma(a, b) (x) v'_n, in E1primeF coordinates.

    Rows and columns are labelled by the V-index n; row n' stands for the
    E1primeF vector whose idempotent multi-index is bar(n').
    """
    from .schroedinger import labels as v_labels, transition_matrix

    r = ctx.r
    g = len(a)
    labs = v_labels(r, g)
    # D: v-coordinates -> coefficients of E^.. 1_(bar n) F^..  (zeta-power diagonal)
    diag = [phi_coefficient(HomologicalIndex(a, b, n), ctx)[0] for n in labs]
    D = RepMatrix.diagonal(ctx, labs, diag)
    # idempotent multi-index bar(n) -> T-coordinates: same coefficients as v -> t, reversed factors
    rev = {lab: bar(lab) for lab in labs}
    v_to_t = transition_matrix("v", "t", g, ctx)
    t_to_vp = transition_matrix("t", "vprime", g, ctx)
    vp_to_v = transition_matrix("vprime", "v", g, ctx)
    P = _reverse_conjugate(v_to_t, rev)
    # U-side rescale uses floor(sum m / 2), which is invariant under reversal
    out = t_to_vp @ P @ D @ vp_to_v
    return RepMatrix(ctx, labs, out.cols, "E1primeF")


def _reverse_conjugate(m: RepMatrix, rev: dict) -> RepMatrix:
    """Relabel both sides through the factor reversal (a permutation similarity)."""
    idx = m.index
    perm = [idx[rev[lab]] for lab in m.labels]
    inv = {p: i for i, p in enumerate(perm)}
    cols = []
    for j in range(m.dim):
        col = m.cols[perm[j]]
        cols.append({inv[i]: v for i, v in col.items()})
    return RepMatrix(m.ctx, m.labels, cols, m.basis)


# ---------------------------------------------------------------------------
# Checks

SUITE_INT = "hkl-integrality"
SUITE_EQ = "hkl-equivariance"
SUITE_GRADING = "grading"


def check_hkl_integrality(gen, g: int, ctx: CycContext) -> CheckReport:
    """Entries of the generator in E1primeF lie in Z[zeta]; a non-unit determinant is only a warning.

    The determinant is a unit exactly when the inverse is integral too; when it
    is not, the h-valuation of the determinant is reported.
    """
    if isinstance(gen, str):
        gen = parse_generator(gen)
    params = {"r": ctx.r, "g": g, "generator": str(gen)}
    m = hkl_generator(gen, g, ctx, "E1primeF")
    bad = m.first_nonintegral()
    detail = {"entries_checked": m.dim * m.dim, "nnz": m.nnz()}
    if bad is not None:
        return CheckReport.failed(SUITE_INT, "hkl_E1primeF_integral", params, m.witness(*bad), detail)
    inv = hkl_inverse(gen, g, ctx, "E1primeF")
    if gen.kind == "tau_beta":
        # the representatives of tau_beta and its inverse multiply to G_1
        inv = inv * ctx.rat(gauss_sum(1, ctx)).inverse()
    bad = inv.first_nonintegral()
    if bad is None:
        detail["determinant"] = "unit (matrix and inverse integral)"
        return CheckReport.passed(SUITE_INT, "hkl_E1primeF_integral", params, detail)
    block = _building_block(gen.kind, gen.sign, ctx.r)
    det = block.det()
    reps = ctx.r ** (3 * (g - len(block.labels[0])))
    detail["block_determinant_h_valuation"] = h_valuation(det)
    detail["determinant_h_valuation"] = h_valuation(det) * reps
    ginv = ctx.rat(gauss_sum(1, ctx)).inverse()
    normalized = m * ginv
    if gen.sign == 1:
        detail["unimodular_after_dividing_by_G1"] = (
            normalized.is_integral() and (inv * ctx.rat(gauss_sum(1, ctx))).is_integral())
    return CheckReport.warned(SUITE_INT, "hkl_E1primeF_integral", params,
                              {**inv.witness(*bad), "part": "inverse", "note": "determinant is not a unit"},
                              detail)


def check_adjoint_equivariance(gen, g: int, ctx: CycContext) -> CheckReport:
    """rho(f)(x |> u) = x |> rho(f)(u) for x in {E, F, 1_m}, all PBW basis u, exactly."""
    if isinstance(gen, str):
        gen = parse_generator(gen)
    params = {"r": ctx.r, "g": g, "generator": str(gen)}
    qg = quantum_group(ctx)
    m = hkl_generator(gen, g, ctx, "E1F")
    for name, x in _algebra_generators(qg):
        A = adjoint_matrix(x, g)
        lhs, rhs = m @ A, A @ m
        if lhs.cols != rhs.cols:
            from .schroedinger import _first_diff

            return CheckReport.failed(SUITE_EQ, "adjoint_equivariance", params,
                                      {"algebra_generator": name, **_first_diff(lhs, rhs)})
    return CheckReport.passed(SUITE_EQ, "adjoint_equivariance", params,
                              {"algebra_generators": len(_algebra_generators(qg))})


def check_idempotent_grading(g: int, ctx: CycContext) -> CheckReport:
    """1_m |> Phi(Gamma(a, b) (x) v_n) = [m = sum(a + b) + g mod r] Phi(...) for every index."""
    r = ctx.r
    qg = quantum_group(ctx)
    params = {"r": r, "g": g}
    count = 0
    for a in product(range(r), repeat=g):
        for b in product(range(r), repeat=g):
            for n in product(range(r), repeat=g):
                idx = HomologicalIndex(a, b, n)
                c, target = phi_coefficient(idx, ctx)
                y = AlgebraElement(qg, g, {tuple(qg.idx(*t) for t in target): c})
                want_m = (sum(a) + sum(b) + g) % r
                for m in range(r):
                    got = adjoint_action(qg.idem(m), y, g)
                    want = y if m == want_m else qg.zero_elem(g)
                    count += 1
                    if got != want:
                        return CheckReport.failed(SUITE_GRADING, "idempotent_grading", params,
                                                  {"a": list(a), "b": list(b), "n": list(n), "m": m})
    return CheckReport.passed(SUITE_GRADING, "idempotent_grading", params, {"checked": count})


def check_phi_lattice(g: int, ctx: CycContext) -> CheckReport:
    """Phi maps the Gamma (x) v' lattice onto the E1primeF lattice.

    Each (a, b) block of Phi, written from Gamma(a, b) (x) v'_n coordinates to
    E1primeF coordinates, must be in GL(Z[zeta]).  The report also records
    whether the blocks are literally diagonal with zeta-power entries.
    """
    r = ctx.r
    params = {"r": r, "g": g}
    all_diagonal = True
    zeta_powers = {ctx.zeta_rat(k) for k in range(r)} | {-ctx.zeta_rat(k) for k in range(r)}
    first_offdiag = None
    for a in product(range(r), repeat=g):
        for b in product(range(r), repeat=g):
            # the N factors are zeta powers, hence units
            for n in product(range(r), repeat=g):
                c, _ = phi_coefficient(HomologicalIndex(a, b, n), ctx)
                if not is_unit(c):
                    return CheckReport.failed(SUITE_GRADING, "phi_lattice", params,
                                              {"a": list(a), "b": list(b), "n": list(n), "N": str(c)})
            B = phi_block(a, b, ctx)
            bad = B.first_nonintegral()
            if bad is None:
                try:
                    inv = B.inverse()
                except SingularMatrix:
                    return CheckReport.failed(SUITE_GRADING, "phi_lattice", params,
                                              {"a": list(a), "b": list(b), "note": "singular block"})
                bad = inv.first_nonintegral()
                which = "inverse"
            else:
                which = "block"
            if bad is not None:
                return CheckReport.failed(SUITE_GRADING, "phi_lattice", params,
                                          {"a": list(a), "b": list(b), "part": which, **B.witness(*bad)})
            for i, j, v in B.entries():
                if i != j or v not in zeta_powers:
                    if first_offdiag is None:
                        first_offdiag = {"a": list(a), "b": list(b), **B.witness(i, j, v)}
                    all_diagonal = False
                    break
    detail = {"blocks": r ** (2 * g), "diagonal_zeta_power_rescale": all_diagonal}
    if first_offdiag is not None:
        detail["first_non_diagonal_entry"] = first_offdiag
    return CheckReport.passed(SUITE_GRADING, "phi_lattice", params, detail)


def check_mcg_relations_hkl(g: int, ctx: CycContext) -> CheckReport:
    from .schroedinger import check_relations

    mats = {gen: hkl_generator(gen, g, ctx, "E1F") for gen in generators(g)}
    return check_relations(mats, g, "mcg-relations", "hkl_relations", {"r": ctx.r, "g": g})
