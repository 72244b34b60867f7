"""Registry binding every verifiable statement to an executable check.

Each case builds one or more derived objects from a generated instance
(a Hermitian slack matrix, a spectrum pair, a scalar gap, ...) and reports a
per-part witness: the minimum slack eigenvalue, worst prefix-sum gap, or
worst per-index singular-value gap.  A case holds when every part does;
expected-failure cases hold when the violation is detected.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blocks import (
    BlockMatrix,
    block_diag,
    j_block,
    partial_trace_1,
    partial_trace_2,
    partial_transpose,
)
from .generate import GenSpec, gen, ginibre
from .linalg import hermitian_eigvals, matrix_abs, scale_of, singular_values
from .maps import apply_map_blockwise
from .orders import PSD_TOL, is_psd, majorizes, sv_dominates
from .rng import Stream, derive_seed

# ---------------------------------------------------------------------------
# result containers


@dataclass(frozen=True)
class Part:
    label: str
    witness: float
    holds: bool


@dataclass(frozen=True)
class SlackReport:
    case_id: str
    trial_seed: int
    m: int
    n: int
    parts: tuple
    premise_misses: int = 0

    @property
    def holds(self) -> bool:
        return all(p.holds for p in self.parts)

    @property
    def witness(self) -> float:
        return min((p.witness for p in self.parts), default=float("inf"))


# ---------------------------------------------------------------------------
# shared builders


def _eye(k: int) -> np.ndarray:
    return np.eye(k, dtype=np.complex128)


def _left(x, m: int) -> np.ndarray:
    """I_m (x) x"""
    return np.kron(_eye(m), x)


def _right(x, n: int) -> np.ndarray:
    """x (x) I_n"""
    return np.kron(x, _eye(n))


def _herm(x: np.ndarray) -> np.ndarray:
    return (x + x.conj().T) / 2


def _psd_part(label: str, slack: np.ndarray, tol: float) -> Part:
    v = is_psd(_herm(slack), tol)
    return Part(label, v.witness, v.holds)


def _maj_part(label: str, x, y, tol: float) -> Part:
    """x majorized by y."""
    v = majorizes(y, x, tol)
    return Part(label, v.witness, v.holds)


def _sv_part(label: str, lhs, rhs, factor: float, tol: float) -> Part:
    v = sv_dominates(lhs, rhs, factor, tol)
    return Part(label, v.witness, v.holds)


def _scalar_part(label: str, gap: float, tol: float, scale: float = 1.0) -> Part:
    return Part(label, float(gap), gap >= -tol * max(1.0, scale))


class Derived:
    """Common derived objects of a block instance, computed lazily."""

    def __init__(self, a: BlockMatrix):
        self.a = a
        self.m, self.n = a.m, a.n
        self.dense = a.dense
        self._cache = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def tau(self):
        return self._get("tau", lambda: partial_transpose(self.a).dense)

    @property
    def tr1(self):
        return self._get("tr1", lambda: partial_trace_1(self.a))

    @property
    def tr2(self):
        return self._get("tr2", lambda: partial_trace_2(self.a))

    @property
    def tr(self):
        return float(np.trace(self.dense).real)

    @property
    def d_a(self):
        return self._get("d_a", lambda: block_diag(self.a).dense)

    @property
    def jb(self):
        return self._get("jb", lambda: j_block(self.m, self.n).dense)

    @property
    def identity(self):
        return _eye(self.m * self.n)

    @property
    def lam(self):
        return self._get("lam", lambda: hermitian_eigvals(_herm(self.dense)))

    @property
    def lam_max(self):
        return float(self.lam.values[0])

    @property
    def lam_min(self):
        return float(self.lam.values[-1])

    @property
    def tr1_tau(self):
        return self._get("tr1_tau", lambda: partial_trace_1(partial_transpose(self.a)))

    @property
    def tr2_tau(self):
        return self._get("tr2_tau", lambda: partial_trace_2(partial_transpose(self.a)))


def _blocks_2x2(a: BlockMatrix):
    """(A, B, C) of a 2x2 block instance [[A, B], [B*, C]]."""
    if a.m != 2:
        raise ValueError("case needs a 2x2 block instance")
    return a.block(0, 0), a.block(0, 1), a.block(1, 1)


def ando_residual(a: BlockMatrix) -> np.ndarray:
    """R(A) = (tr A) I + A - I_m (x) tr_1 A - (tr_2 A) (x) I_n."""
    d = Derived(a)
    return _herm(d.tr * d.identity + d.dense - _left(d.tr1, d.m) - _right(d.tr2, d.n))


def eq18_slack(m: int, n: int) -> np.ndarray:
    """(m-2)n I + n J_m (x) I_n - J_m (x) J_n - (m-2) I_m (x) J_n."""
    jm, jn = np.ones((m, m)), np.ones((n, n))
    return _herm(
        (m - 2) * n * np.eye(m * n)
        + n * np.kron(jm, np.eye(n))
        - np.kron(jm, jn)
        - (m - 2) * np.kron(np.eye(m), jn)
    )


def symmetrize_offdiag(a: BlockMatrix, skew: bool) -> BlockMatrix:
    """Average a PSD 2x2 block matrix with a unitary conjugate so the
    off-diagonal block becomes exactly Hermitian (or skew-Hermitian) while
    positivity is preserved (average of two PSD matrices)."""
    if a.m != 2:
        raise ValueError("needs a 2x2 block matrix")
    n = a.n
    zero = np.zeros((n, n))
    eye = np.eye(n)
    u = np.block([[zero, eye], [-eye, zero]]) if skew else np.block([[zero, eye], [eye, zero]])
    avg = (a.dense + u @ a.dense @ u.conj().T) / 2
    return BlockMatrix(2, n, _herm(avg))


def lin_block(a: BlockMatrix) -> BlockMatrix:
    """[[ (tr A)I + A, (tr B)I + B ], [ (tr B*)I + B*, (tr C)I + C ]]."""
    ab, bb, cb = _blocks_2x2(a)
    eye = _eye(a.n)
    return BlockMatrix(2, a.n, np.block([
        [np.trace(ab) * eye + ab, np.trace(bb) * eye + bb],
        [np.trace(bb).conjugate() * eye + bb.conj().T, np.trace(cb) * eye + cb],
    ]))


def choi_block(a: BlockMatrix) -> BlockMatrix:
    """[[ (tr A)I + C, (tr B)I - B ], [ (tr B*)I - B*, (tr C)I + A ]]."""
    ab, bb, cb = _blocks_2x2(a)
    eye = _eye(a.n)
    return BlockMatrix(2, a.n, np.block([
        [np.trace(ab) * eye + cb, np.trace(bb) * eye - bb],
        [np.trace(bb).conjugate() * eye - bb.conj().T, np.trace(cb) * eye + ab],
    ]))


# ---------------------------------------------------------------------------
# slack builders: case id -> fn(Derived) -> [(label, slack matrix), ...]
# Every psd-slack case is defined by its builder; check and build_slack share.


def _sb_choi_tr1(d):
    return [("main", _left(d.tr1_tau, d.m) - d.tau)]


def _sb_li_tr1_improved(d):
    return [("main", _left(d.tr1_tau, d.m) + d.tau - 2 * d.d_a)]


def _sb_tr1_sandwich(d):
    mid = _left(d.tr1_tau, d.m) + d.tau
    return [
        ("upper", (d.m - 1) * d.lam_max * d.identity + 2 * d.d_a - mid),
        ("lower", mid - (d.m - 1) * d.lam_min * d.identity - 2 * d.d_a),
    ]


def _sb_tr1_lambda_min(d):
    return [("main", _left(d.tr1_tau, d.m) + d.tau - (d.m - 1) * d.lam_min * d.identity)]


def _sb_tr2_hadamard(d):
    return [("main", _right(d.tr2_tau, d.n) + d.tau - 2 * (d.tau * d.jb))]


def _sb_tr2_sandwich(d):
    mid = _right(d.tr2_tau, d.n) + d.tau
    had = d.tau * d.jb
    return [
        ("upper", (d.n - 1) * d.lam_max * d.identity + 2 * had - mid),
        ("lower", mid - (d.n - 1) * d.lam_min * d.identity - 2 * had),
    ]


def _sb_tr2_lambda_min(d):
    return [("main", _right(d.tr2_tau, d.n) + d.tau - (d.n - 1) * d.lam_min * d.identity)]


def _sb_choi_tr2_pm(d):
    base = _right(d.tr2_tau, d.n)
    return [("plus", base - d.tau), ("minus", base + d.tau)]


def _sb_horodecki(d):
    return [
        ("tr1", _left(d.tr1, d.m) - d.dense),
        ("tr2", _right(d.tr2, d.n) - d.dense),
    ]


def _sb_psi_copositive(d):
    return [("main", apply_map_blockwise("psi", d.a, transpose_blocks=True).dense)]


def _sb_ando(d):
    return [("main", ando_residual(d.a))]


def _sb_llh_minus(d):
    lhs = d.tr * d.identity - _right(d.tr2, d.n)
    g = _left(d.tr1, d.m) - d.dense
    return [("plus", lhs - g), ("minus", lhs + g)]


def _sb_llh_pm(d):
    t = d.tr * d.identity
    r2 = _right(d.tr2, d.n)
    l1 = _left(d.tr1, d.m)
    return [("plus", t + r2 - d.dense - l1), ("minus", t - r2 - d.dense + l1)]


def _sb_thm42(d):
    tr2_da = partial_trace_2(block_diag(d.a))
    return [("main",
             d.tr * d.identity + _right(d.tr2, d.n) - d.dense - _left(d.tr1, d.m)
             - 2 * _right(tr2_da, d.n) + 2 * d.d_a)]


def _sb_thm44(d):
    g = _left(d.tr1, d.m) - d.dense
    return [("main",
             d.tr * d.identity - _right(d.tr2, d.n) - d.dense + _left(d.tr1, d.m)
             - 2 * (g * d.jb))]


def _sb_thm4p4(d):
    tr2_da = partial_trace_2(block_diag(d.a))
    return [("main",
             d.tr * d.identity + _right(d.tr2, d.n) + _left(d.tr1, d.m) + d.dense
             - 2 * _right(tr2_da, d.n) - 2 * d.d_a)]


def _sb_choi_hermitian_ando(d):
    both = _left(d.tr1, d.m) + _right(d.tr2, d.n)
    rhs = d.dense + d.tr * d.identity
    k = (d.m - 1) * (d.n - 1)
    return [
        ("max", both - rhs + k * d.lam_max * d.identity),
        ("min", rhs - k * d.lam_min * d.identity - both),
    ]


def _sb_prop_hermitian_minus(d):
    lhs = d.tr * d.identity - _right(d.tr2, d.n)
    g = _left(d.tr1, d.m) - d.dense
    k_plus = (d.m - 1) * (d.n - 1)
    k_minus = (d.m - 1) * (d.n + 1)
    return [
        ("ge-plus", lhs - g - k_plus * d.lam_min * d.identity),
        ("ge-minus", lhs + g - k_minus * d.lam_min * d.identity),
        ("le-plus", g + k_plus * d.lam_max * d.identity - lhs),
        ("le-minus", -g + k_minus * d.lam_max * d.identity - lhs),
    ]


def _sb_prop_hermitian_plus(d):
    lhs = d.tr * d.identity + _right(d.tr2, d.n)
    rhs = _left(d.tr1, d.m) + d.dense
    k = (d.m + 1) * (d.n - 1)
    return [
        ("ge", lhs - rhs - k * d.lam_min * d.identity),
        ("le", rhs + k * d.lam_max * d.identity - lhs),
    ]


def _sb_eq18(d):
    return [("main", eq18_slack(d.m, d.n))]


def _sb_open_question(d):
    return [("ando-sanity", ando_residual(d.a))]


SLACK_BUILDERS = {
    "choi-tr1": _sb_choi_tr1,
    "li-tr1-improved": _sb_li_tr1_improved,
    "tr1-hermitian-sandwich": _sb_tr1_sandwich,
    "tr1-lambda-min": _sb_tr1_lambda_min,
    "tr2-hadamard": _sb_tr2_hadamard,
    "tr2-hermitian-sandwich": _sb_tr2_sandwich,
    "tr2-lambda-min": _sb_tr2_lambda_min,
    "choi-tr2-pm": _sb_choi_tr2_pm,
    "horodecki-reduction": _sb_horodecki,
    "psi-completely-copositive": _sb_psi_copositive,
    "ando": _sb_ando,
    "li-liu-huang-minus": _sb_llh_minus,
    "li-liu-huang-pm": _sb_llh_pm,
    "thm42-improved": _sb_thm42,
    "thm44-improved": _sb_thm44,
    "thm4p4-analogue": _sb_thm4p4,
    "choi-hermitian-ando": _sb_choi_hermitian_ando,
    "prop-hermitian-minus": _sb_prop_hermitian_minus,
    "prop-hermitian-plus": _sb_prop_hermitian_plus,
    "eq18-matrix": _sb_eq18,
    "open-question-residual": _sb_open_question,
}

# derived-block builders for the PPT-of-derived cases
DERIVED_BUILDERS = {
    "phi-completely-ppt": lambda d: apply_map_blockwise("phi", d.a),
    "lin-2x2-ppt": lambda d: lin_block(d.a),
    "choi-block-ppt": lambda d: choi_block(d.a),
}


# ---------------------------------------------------------------------------
# non-slack case checks


def _case_psi_not_2_positive(d: Derived, tol):
    w = apply_map_blockwise("psi", d.a).dense
    lam_min = float(hermitian_eigvals(_herm(w)).values[-1])
    return [Part("violation-detected", lam_min, lam_min <= -1.0 + tol)]


def _trace_terms(a: BlockMatrix):
    ab, bb, cb = _blocks_2x2(a)
    tr_a = float(np.trace(ab).real)
    tr_c = float(np.trace(cb).real)
    tr_b = complex(np.trace(bb))
    tr_ac = float(np.trace(ab @ cb).real)
    tr_bb = float(np.trace(bb.conj().T @ bb).real)
    scale = abs(tr_a * tr_c) + abs(tr_b) ** 2 + abs(tr_ac) + tr_bb
    return tr_a, tr_c, tr_b, tr_ac, tr_bb, scale


def _case_trace_besenyei(d: Derived, tol):
    tr_a, tr_c, tr_b, tr_ac, tr_bb, scale = _trace_terms(d.a)
    gap = tr_a * tr_c - abs(tr_b) ** 2 - (tr_ac - tr_bb)
    return [_scalar_part("main", gap, tol, scale)]


def _case_trace_kittaneh_lin(d: Derived, tol):
    tr_a, tr_c, tr_b, tr_ac, tr_bb, scale = _trace_terms(d.a)
    gap = tr_a * tr_c - abs(tr_b) ** 2 - (tr_bb - tr_ac)
    return [_scalar_part("main", gap, tol, scale)]


def _case_trace_plus(d: Derived, tol):
    tr_a, tr_c, tr_b, tr_ac, tr_bb, scale = _trace_terms(d.a)
    gap = tr_a * tr_c + abs(tr_b) ** 2 - tr_ac - tr_bb
    return [_scalar_part("main", gap, tol, scale)]


def _ck_sums(x: np.ndarray):
    """Exact integer aggregates of an integer matrix."""
    rows = [[int(v) for v in row] for row in x]
    total = sum(sum(r) for r in rows)
    sq = sum(v * v for r in rows for v in r)
    row_sq = sum(sum(r) ** 2 for r in rows)
    col_sq = sum(sum(r[j] for r in rows) ** 2 for j in range(len(rows[0])))
    return total, sq, row_sq, col_sq


def _case_ck_classical(x, tol):
    m, n = x.shape
    total, sq, row_sq, col_sq = _ck_sums(x)
    gap = total**2 + m * n * sq - m * row_sq - n * col_sq
    return [Part("main", float(gap), gap >= 0)]


def _case_ck_lih(x, tol):
    m, n = x.shape
    total, sq, row_sq, col_sq = _ck_sums(x)
    p1 = m * n * sq - n * col_sq - abs(m * row_sq - total**2)
    p2 = m * n * sq + n * col_sq - total**2 - m * row_sq
    p3 = m * n * sq - n * col_sq - total**2 + m * row_sq
    return [
        Part("abs", float(p1), p1 >= 0),
        Part("plus", float(p2), p2 >= 0),
        Part("minus", float(p3), p3 >= 0),
    ]


def _case_ck_improved(x, tol):
    m, n = x.shape
    total, sq, row_sq, col_sq = _ck_sums(x)
    p1 = (m - 2) * n * sq + n * col_sq - total**2 - (m - 2) * row_sq
    p2 = m * (n - 2) * sq + m * row_sq - total**2 - (n - 2) * col_sq
    return [
        Part("rows", float(p1), p1 >= 0),
        Part("cols", float(p2), p2 >= 0),
    ]


def _case_schur(d: Derived, tol):
    return [_maj_part("main", np.diag(d.dense).real, d.lam, tol)]


def _summed_block_spectra(d: Derived) -> np.ndarray:
    """Sorted-vector sum lambda(A_11) + ... + lambda(A_mm)."""
    acc = np.zeros(d.n)
    for i in range(d.m):
        acc += hermitian_eigvals(_herm(d.a.block(i, i))).values
    return acc


def _case_eqm1(d: Derived, tol):
    lam_da = hermitian_eigvals(d.d_a)
    return [
        _maj_part("lower", lam_da, d.lam, tol),
        _maj_part("upper", d.lam, _summed_block_spectra(d), tol),
    ]


def _case_eqm2(d: Derived, tol):
    lam_da = hermitian_eigvals(d.d_a)
    lam_tr1 = hermitian_eigvals(_herm(d.tr1))
    return [
        _maj_part("lower", lam_da, lam_tr1, tol),
        _maj_part("upper", lam_tr1, _summed_block_spectra(d), tol),
    ]


def _case_hiroshima(d: Derived, tol):
    parts, misses = [], 0
    if is_psd(_herm(_left(d.tr1, d.m) - d.dense), tol).holds:
        parts.append(_maj_part("tr1", d.lam, hermitian_eigvals(_herm(d.tr1)), tol))
    else:
        misses += 1
    if is_psd(_herm(_right(d.tr2, d.n) - d.dense), tol).holds:
        parts.append(_maj_part("tr2", d.lam, hermitian_eigvals(_herm(d.tr2)), tol))
    else:
        misses += 1
    return parts, misses


def _case_ppt_majorization(d: Derived, tol):
    lam_tau = hermitian_eigvals(_herm(d.tau))
    lam_tr1 = hermitian_eigvals(_herm(d.tr1))
    lam_tr2 = hermitian_eigvals(_herm(d.tr2))
    return [
        _maj_part("a-tr1", d.lam, lam_tr1, tol),
        _maj_part("a-tr2", d.lam, lam_tr2, tol),
        _maj_part("tau-tr1", lam_tau, lam_tr1, tol),
        _maj_part("tau-tr2", lam_tau, lam_tr2, tol),
    ]


def _offdiag_majorization(d: Derived, tol, skew: bool):
    h = symmetrize_offdiag(d.a, skew)
    msum = _herm(h.block(0, 0) + h.block(1, 1))
    return [_maj_part("main", hermitian_eigvals(h.dense), hermitian_eigvals(msum), tol)]


def _case_hermitian_offdiag(d: Derived, tol):
    return _offdiag_majorization(d, tol, skew=False)


def _case_skew_offdiag(d: Derived, tol):
    return _offdiag_majorization(d, tol, skew=True)


def _norm_sides(a: BlockMatrix):
    ab, bb, cb = _blocks_2x2(a)
    eye = _eye(a.n)
    rhs = float(np.trace(ab + cb).real) * eye + ab + cb
    lhs_plus = np.trace(bb) * eye + bb
    lhs_minus = np.trace(bb) * eye - bb
    return lhs_plus, lhs_minus, rhs


def _kyfan_gaps(lhs, rhs, factor: float) -> float:
    """min over k of kyfan_k(rhs) - factor * kyfan_k(lhs), zero-padded."""
    s_l = singular_values(lhs)
    s_r = singular_values(rhs)
    length = max(len(s_l), len(s_r))
    gaps = np.cumsum(s_r.padded(length)) - factor * np.cumsum(s_l.padded(length))
    return float(gaps.min())


def _case_coro55_norms(d: Derived, tol):
    lhs_plus, lhs_minus, rhs = _norm_sides(d.a)
    scale = scale_of(rhs)
    return [
        _scalar_part("plus", _kyfan_gaps(lhs_plus, rhs, 2.0), tol, scale),
        _scalar_part("minus", _kyfan_gaps(lhs_minus, rhs, 2.0), tol, scale),
    ]


def _case_coro_half(d: Derived, tol):
    ab, bb, cb = _blocks_2x2(d.a)
    lhs = np.trace(bb) * _eye(d.n) + bb
    traces = np.array([
        [np.trace(ab), np.trace(bb)],
        [np.trace(bb).conjugate(), np.trace(cb)],
    ])
    factor = 2.0 / (d.n + 1)
    gap = _kyfan_gaps(lhs, traces, factor) / factor  # rescale to the norm bound
    return [_scalar_part("main", gap, tol, scale_of(traces) * (d.n + 1))]


def _case_thm37_singular(d: Derived, tol):
    lhs_plus, lhs_minus, rhs = _norm_sides(d.a)
    return [
        _sv_part("plus", lhs_plus, rhs, 2.0, tol),
        _sv_part("minus", lhs_minus, rhs, 2.0, tol),
    ]


def _case_lem39(pair, tol):
    m_fac, n_fac = pair  # each of shape (n, q)
    lhs = m_fac @ n_fac.conj().T
    rhs = _herm(m_fac.conj().T @ m_fac + n_fac.conj().T @ n_fac)
    return [_sv_part("main", lhs, rhs, 2.0, tol)]


def _case_lem38(pair, tol):
    m_fac, n_fac = pair
    n_rows = m_fac.shape[0]
    star = hermitian_eigvals(_herm(m_fac.conj().T @ m_fac + n_fac.conj().T @ n_fac))
    plain = hermitian_eigvals(_herm(m_fac @ m_fac.conj().T + n_fac @ n_fac.conj().T))
    cross = m_fac.conj().T @ n_fac
    shift = 0.5 * float(np.trace(
        m_fac.conj().T @ m_fac + n_fac.conj().T @ n_fac - cross - cross.conj().T
    ).real)
    lhs = star.padded(max(len(star), n_rows))[:n_rows]
    rhs = plain.values[:n_rows] + shift
    witness = float(np.min(rhs - lhs))
    scale = scale_of(m_fac) ** 2 + scale_of(n_fac) ** 2
    return [_scalar_part("main", witness, tol, scale)]


def _case_abs_block(x, tol):
    n = x.shape[0]
    eye = _eye(n)
    abs_x = matrix_abs(x)
    abs_xs = matrix_abs(x.conj().T)
    rhs = float(np.trace(abs_x + abs_xs).real) * eye + abs_x + abs_xs
    return [
        _sv_part("plus", np.trace(x) * eye + x, rhs, 2.0, tol),
        _sv_part("minus", np.trace(x) * eye - x, rhs, 2.0, tol),
    ]


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class TheoremCase:
    id: str
    input_class: str
    check_kind: str
    description: str
    fn: object = None  # non-slack cases only; slack cases go through builders


def _registry():
    cases = [
        TheoremCase("choi-tr1", "psd", "psd-slack",
                    "I_m(x)tr1(A^tau) dominates A^tau"),
        TheoremCase("li-tr1-improved", "psd", "psd-slack",
                    "I_m(x)tr1(A^tau) + A^tau dominates 2 D_A"),
        TheoremCase("tr1-hermitian-sandwich", "hermitian", "psd-slack",
                    "eigenvalue sandwich for I_m(x)tr1(A^tau) + A^tau"),
        TheoremCase("tr1-lambda-min", "psd", "psd-slack",
                    "lambda_min variant of the tr1 bound"),
        TheoremCase("tr2-hadamard", "psd", "psd-slack",
                    "tr2 bound with Hadamard-J correction"),
        TheoremCase("tr2-hermitian-sandwich", "hermitian", "psd-slack",
                    "eigenvalue sandwich for (tr2 A^tau)(x)I_n + A^tau"),
        TheoremCase("tr2-lambda-min", "psd", "psd-slack",
                    "lambda_min variant of the tr2 bound"),
        TheoremCase("choi-tr2-pm", "psd", "psd-slack",
                    "(tr2 A^tau)(x)I_n dominates +-A^tau"),
        TheoremCase("horodecki-reduction", "ppt", "psd-slack",
                    "reduction criterion for PPT instances"),
        TheoremCase("phi-completely-ppt", "psd", "ppt-of-derived",
                    "blockwise (tr X)I + X yields a PPT block matrix"),
        TheoremCase("psi-completely-copositive", "psd", "psd-slack",
                    "blockwise (tr X)I - X on swapped blocks stays PSD"),
        TheoremCase("psi-not-2-positive", "fixed", "expected-failure",
                    "blockwise (tr X)I - X breaks positivity on the "
                    "matrix-unit block instance", _case_psi_not_2_positive),
        TheoremCase("trace-2x2-besenyei", "psd-2x2", "scalar",
                    "trA trC - |trB|^2 >= tr(AC) - tr(B*B)", _case_trace_besenyei),
        TheoremCase("trace-2x2-kittaneh-lin", "psd-2x2", "scalar",
                    "trA trC - |trB|^2 >= tr(B*B) - tr(AC)", _case_trace_kittaneh_lin),
        TheoremCase("trace-2x2-plus", "psd-2x2", "scalar",
                    "trA trC + |trB|^2 >= tr(AC) + tr(B*B)", _case_trace_plus),
        TheoremCase("ando", "psd", "psd-slack",
                    "(tr A)I - (tr2 A)(x)I_n dominates I_m(x)tr1 A - A"),
        TheoremCase("li-liu-huang-minus", "psd", "psd-slack",
                    "two-sided version of the Ando-type bound"),
        TheoremCase("li-liu-huang-pm", "psd", "psd-slack",
                    "(tr A)I +- (tr2 A)(x)I_n dominates A +- I_m(x)tr1 A"),
        TheoremCase("thm42-improved", "psd", "psd-slack",
                    "plus-side bound improved by 2(tr2 D_A)(x)I_n - 2 D_A"),
        TheoremCase("thm44-improved", "psd", "psd-slack",
                    "minus-side bound improved by a Hadamard-J correction"),
        TheoremCase("thm4p4-analogue", "psd", "psd-slack",
                    "all-plus analogue dominating 2(tr2 D_A)(x)I_n + 2 D_A"),
        TheoremCase("choi-hermitian-ando", "hermitian", "psd-slack",
                    "(m-1)(n-1) lambda sandwich around the Ando combination"),
        TheoremCase("prop-hermitian-minus", "hermitian", "psd-slack",
                    "(m-1)(n-+1) lambda bounds for the minus combination"),
        TheoremCase("prop-hermitian-plus", "hermitian", "psd-slack",
                    "(m+1)(n-1) lambda bounds for the plus combination"),
        TheoremCase("ck-classical", "real-int", "scalar",
                    "classical row/column sum-of-squares inequality "
                    "(exact integers)", _case_ck_classical),
        TheoremCase("ck-lih", "real-int", "scalar",
                    "two-sided extensions of the classical inequality "
                    "(exact integers)", _case_ck_lih),
        TheoremCase("ck-improved", "real-int", "scalar",
                    "improved row/column inequalities (exact integers)",
                    _case_ck_improved),
        TheoremCase("eq18-matrix", "fixed", "psd-slack",
                    "commuting-J matrix inequality behind the scalar improvements"),
        TheoremCase("schur-majorization", "hermitian", "majorization",
                    "diagonal majorized by eigenvalues", _case_schur),
        TheoremCase("eqm1-majorization", "psd", "majorization",
                    "lambda(D_A) < lambda(A) < sum of block spectra", _case_eqm1),
        TheoremCase("eqm2-rotfeld-thompson", "psd", "majorization",
                    "lambda(D_A) < lambda(tr1 A) < sum of block spectra",
                    _case_eqm2),
        TheoremCase("hiroshima-conditional", "psd", "conditional-majorization",
                    "domination premise implies spectrum majorized by "
                    "partial trace", _case_hiroshima),
        TheoremCase("ppt-majorization", "ppt", "majorization",
                    "spectra of A and A^tau majorized by both partial traces",
                    _case_ppt_majorization),
        TheoremCase("hermitian-offdiag-majorization", "psd-2x2", "majorization",
                    "Hermitian off-diagonal block: lambda(H) < lambda(M+N)",
                    _case_hermitian_offdiag),
        TheoremCase("skew-offdiag-majorization", "psd-2x2", "majorization",
                    "skew-Hermitian off-diagonal block: lambda(H) < lambda(M+N)",
                    _case_skew_offdiag),
        TheoremCase("lin-2x2-ppt", "psd-2x2", "ppt-of-derived",
                    "trace-augmented 2x2 block matrix is PPT"),
        TheoremCase("choi-block-ppt", "psd-2x2", "ppt-of-derived",
                    "cross-trace-augmented 2x2 block matrix is PPT"),
        TheoremCase("coro55-norms", "psd-2x2", "scalar",
                    "Ky Fan family: 2||(trB)I+-B|| <= ||(tr(A+C))I + A+C||",
                    _case_coro55_norms),
        TheoremCase("coro-n-plus-1-half", "psd-2x2", "scalar",
                    "Ky Fan family: ||(trB)I+B|| <= (n+1)/2 ||trace 2x2||",
                    _case_coro_half),
        TheoremCase("thm37-singular", "psd-2x2", "sv-dominance",
                    "per-index singular value domination for (trB)I+-B",
                    _case_thm37_singular),
        TheoremCase("lem39-singular", "gram-pair", "sv-dominance",
                    "2 s_j(MN*) <= s_j(M*M + N*N)", _case_lem39),
        TheoremCase("lem38-eigen", "gram-pair", "scalar",
                    "lambda_j(M*M+N*N) <= lambda_j(MM*+NN*) + trace shift",
                    _case_lem38),
        TheoremCase("abs-block-corollary", "fixed", "sv-dominance",
                    "2 s_j((trX)I+-X) <= s_j((tr(|X|+|X*|))I + |X|+|X*|)",
                    _case_abs_block),
        TheoremCase("open-question-residual", "psd", "psd-slack",
                    "scan residual (tr A)I + A - I_m(x)tr1 A - (tr2 A)(x)I_n"),
    ]
    return {c.id: c for c in cases}


REGISTRY = _registry()

EXPECTED_FAILURE_CASES = ("psi-not-2-positive",)


def case_ids() -> list:
    return list(REGISTRY)


# ---------------------------------------------------------------------------
# instances and case execution


def make_instance(case_id: str, m: int, n: int, seed: int):
    """Instance of the case's input class at the given dims.

    2x2-block cases fix the block count at 2 and use n as block size;
    gram-pair cases yield factors of shape (n, m); the fixed classes are
    deterministic constructions (the square-X corollary draws a seeded
    square matrix of size n)."""
    case = REGISTRY[case_id]
    cls = case.input_class
    if cls == "psd":
        rank = None
        if seed % 5 == 0:  # exercise boundary eigenvalues now and then
            rank = max(1, (m * n) // 2)
        return gen(GenSpec("psd", m=m, n=n, seed=seed, rank=rank))
    if cls == "hermitian":
        return gen(GenSpec("hermitian", m=m, n=n, seed=seed))
    if cls == "ppt":
        return gen(GenSpec("ppt", m=m, n=n, seed=seed))
    if cls == "psd-2x2":
        return gen(GenSpec("psd", m=2, n=n, seed=seed))
    if cls == "gram-pair":
        return gen(GenSpec("gram-pair", m=n, n=m, seed=seed))
    if cls == "real-int":
        return gen(GenSpec("real-int", m=m, n=n, seed=seed, int_bound=100))
    if cls == "fixed":
        if case_id == "psi-not-2-positive":
            return gen(GenSpec("matrix-unit-E", n=n))
        if case_id == "eq18-matrix":
            return BlockMatrix(m, n, np.zeros((m * n, m * n), dtype=np.complex128))
        if case_id == "abs-block-corollary":
            return ginibre(Stream(seed), n, n)
        raise ValueError(f"no fixed construction for case {case_id!r}")
    raise ValueError(f"unknown input class {cls!r}")


def build_slack(case_id: str, instance):
    """The Hermitian objects whose positivity the case asserts.

    psd-slack cases return their labeled slack matrices; ppt-of-derived
    cases return the derived block matrix and its partial transpose."""
    case = REGISTRY.get(case_id)
    if case is None:
        raise KeyError(f"unknown case id {case_id!r}")
    if case_id in SLACK_BUILDERS:
        d = Derived(instance)
        return [(label, _herm(s)) for label, s in SLACK_BUILDERS[case_id](d)]
    if case_id in DERIVED_BUILDERS:
        b = DERIVED_BUILDERS[case_id](Derived(instance))
        return [("derived", b.dense), ("derived-tau", partial_transpose(b).dense)]
    raise ValueError(f"case {case_id!r} has no slack-matrix form; use check_case")


def check_case(case_id: str, instance, tol: float = PSD_TOL, seed: int = 0) -> SlackReport:
    """Run one case on one instance."""
    case = REGISTRY.get(case_id)
    if case is None:
        raise KeyError(f"unknown case id {case_id!r}")
    if isinstance(instance, BlockMatrix):
        m, n = instance.m, instance.n
        payload = Derived(instance)
    elif isinstance(instance, tuple):
        payload = instance
        m, n = instance[0].shape
    else:
        payload = instance
        m, n = instance.shape
    misses = 0
    if case_id in SLACK_BUILDERS:
        parts = [_psd_part(label, s, tol) for label, s in SLACK_BUILDERS[case_id](payload)]
    elif case_id in DERIVED_BUILDERS:
        parts = [_psd_part(label, s, tol) for label, s in build_slack(case_id, instance)]
    else:
        out = case.fn(payload, tol)
        if isinstance(out, tuple):
            parts, misses = out
        else:
            parts = out
    return SlackReport(case_id, seed, m, n, tuple(parts), misses)


# ---------------------------------------------------------------------------
# suite runner


@dataclass(frozen=True)
class RunConfig:
    cases: tuple
    dims: tuple          # ((m, n), ...)
    trials: int
    seed: int
    tol: float = PSD_TOL

    def __post_init__(self):
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        if not self.dims:
            raise ValueError("dims must be nonempty")
        unknown = [c for c in self.cases if c not in REGISTRY]
        if unknown:
            raise KeyError(f"unknown case ids: {', '.join(unknown)}")


def run_case_trials(case_id: str, config: RunConfig) -> dict:
    """Aggregate config.trials trials of one case, cycling over dims."""
    trials = failures = premise_misses = 0
    worst_witness = worst_seed = worst_dims = None
    for t in range(config.trials):
        m, n = config.dims[t % len(config.dims)]
        seed = derive_seed(config.seed, case_id, t)
        instance = make_instance(case_id, m, n, seed)
        report = check_case(case_id, instance, config.tol, seed)
        trials += 1
        premise_misses += report.premise_misses
        if report.parts and not report.holds:
            failures += 1
        if report.parts and (worst_witness is None or report.witness < worst_witness):
            worst_witness, worst_seed, worst_dims = report.witness, seed, f"{m}x{n}"
    return {
        "trials": trials,
        "failures": failures,
        "premise_misses": premise_misses,
        "worst_witness": worst_witness,
        "worst_seed": worst_seed,
        "worst_dims": worst_dims,
    }


def run_suite(config: RunConfig, threads: int = 1) -> dict:
    """Deterministic aggregate report over all requested cases.

    The per-case merge is order-independent, so the thread count never
    changes the report."""
    ids = sorted(config.cases)
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = dict(zip(ids, pool.map(lambda c: run_case_trials(c, config), ids)))
    else:
        results = {c: run_case_trials(c, config) for c in ids}
    return {
        "config": {
            "cases": ids,
            "dims": [f"{m}x{n}" for m, n in config.dims],
            "trials": config.trials,
            "seed": config.seed,
            "tol": config.tol,
        },
        "cases": results,
    }


def total_failures(report: dict) -> int:
    return sum(entry["failures"] for entry in report["cases"].values())


def open_question_scan(dims, trials: int, seed: int, tol: float = PSD_TOL,
                       bins: int = 10) -> dict:
    """Empirical statistics of lambda_min of the residual
    (tr A)I + A - I_m(x)tr1 A - (tr2 A)(x)I_n over random PSD instances.

    The residual is provably PSD, which the scan asserts as a sanity
    invariant; the statistics are for human inspection of how much slack
    remains for a uniform PSD subtraction."""
    dims = tuple(dims)
    values, seeds = [], []
    sanity_violations = 0
    for t in range(trials):
        m, n = dims[t % len(dims)]
        trial_seed = derive_seed(seed, "open-question-scan", t)
        a = gen(GenSpec("psd", m=m, n=n, seed=trial_seed))
        residual = ando_residual(a)
        lam_min = float(hermitian_eigvals(residual).values[-1])
        values.append(lam_min)
        seeds.append(trial_seed)
        if lam_min < -tol * scale_of(residual):
            sanity_violations += 1
    if not values:
        return {
            "trials": 0,
            "min_lambda_min": None,
            "argmin_seed": None,
            "mean_lambda_min": None,
            "histogram": {"edges": [], "counts": []},
            "sanity_violations": 0,
        }
    arr = np.array(values)
    counts, edges = np.histogram(arr, bins=bins)
    argmin = int(np.argmin(arr))
    return {
        "trials": trials,
        "min_lambda_min": float(arr.min()),
        "argmin_seed": seeds[argmin],
        "mean_lambda_min": float(arr.mean()),
        "histogram": {
            "edges": [float(e) for e in edges],
            "counts": [int(c) for c in counts],
        },
        "sanity_violations": sanity_violations,
    }
