#!/usr/bin/env python3
"""Independent reference computations for the test suite.

Recomputes, from the textbook formulas and plain numpy/scipy, every numeric
value the C++ tests assert: triple products, relation verdicts for the
bundled fixtures, Peirce dimensions, spectral-factorization examples, hull
invariants and the phases used by the chain builders. The JSON printed on
stdout is frozen into tests/*.cpp; rerun this script to regenerate it.
"""

import json
import numpy as np
from scipy.linalg import schur

TOL = 1e-9

# ---------------------------------------------------------------- products


def tp_mat(a, b, c):
    return (a @ b.conj().T @ c + c @ b.conj().T @ a) / 2


def sdot(x, y):
    return complex(np.sum(x * y.conj()))


def tp_spin(x, y, z):
    return sdot(x, y) * z + sdot(z, y) * x - sdot(x, z.conj()) * y.conj()


def spin_norm(x):
    q = sdot(x, x).real
    d = abs(sdot(x, x.conj()))
    return float(np.sqrt(q + np.sqrt(max(q * q - d * d, 0.0))))


class Sys:
    def __init__(self, kind, tp):
        self.kind = kind
        self.tp = tp


FULL = Sys("matrix", tp_mat)
SYM = Sys("symmetric", tp_mat)
ASYM = Sys("antisymmetric", tp_mat)
SPIN = Sys("spin", tp_spin)


def nrm(x):
    return float(np.linalg.norm(x))


def is_tripotent(sys, x):
    return nrm(sys.tp(x, x, x) - x) <= TOL * max(1.0, nrm(x))


# --------------------------------------------------------------- relations


def phase_fit(lhs, u):
    # best unit beta with lhs = beta*u; residual of the fit
    n2 = np.vdot(u, u).real
    if n2 < 1e-30:
        return 1.0 + 0j, nrm(lhs)
    beta = np.vdot(u, lhs) / n2  # <lhs, u> in math order
    res = nrm(lhs - beta * u)
    return complex(beta), res


def relate(sys, kind, u, e):
    scale = max(1.0, nrm(u), nrm(e))
    t = sys.tp

    def ok(r):
        return bool(r <= TOL * scale)

    if kind == "LE":
        return ok(nrm(t(u, e, u) - u))
    if kind == "LE_R":
        q = t(u, e, u)
        return ok(min(nrm(q - u), nrm(q + u)))
    if kind == "LE_C":
        beta, res = phase_fit(t(u, e, u), u)
        return ok(res) and abs(abs(beta) - 1) <= TOL or nrm(u) <= TOL
    if kind == "LE_H":
        return ok(nrm(t(e, u, e) - u))
    if kind == "LE_HC":
        beta, res = phase_fit(t(e, u, e), u)
        return ok(res) and abs(abs(beta) - 1) <= TOL or nrm(u) <= TOL
    if kind == "LE_2":
        return ok(nrm(t(e, e, u) - u))
    if kind == "LE_N":
        w = t(u, u, e)
        return relate(sys, "LE_2", u, e) and is_tripotent(sys, w)
    if kind == "SIM_2" or kind == "SIM_N":
        return ok(max(nrm(t(e, e, u) - u), nrm(t(u, u, e) - e)))
    if kind == "SIM_H":
        return relate(sys, "LE_H", u, e) and relate(sys, "SIM_2", u, e)
    if kind == "SIM_HC":
        return relate(sys, "LE_HC", u, e) and relate(sys, "SIM_2", u, e)
    raise ValueError(kind)


# ---------------------------------------------------- peirce dims (matrix)


def basis_full(r, c):
    out = []
    for i in range(r):
        for j in range(c):
            m = np.zeros((r, c), complex)
            m[i, j] = 1
            out.append(m)
    return out


def basis_sym(n):
    out = []
    for i in range(n):
        m = np.zeros((n, n), complex)
        m[i, i] = 1
        out.append(m)
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n), complex)
            m[i, j] = m[j, i] = 1 / np.sqrt(2)
            out.append(m)
    return out


def basis_asym(n):
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n), complex)
            m[i, j] = 1 / np.sqrt(2)
            m[j, i] = -1 / np.sqrt(2)
            out.append(m)
    return out


def peirce_dims(sys, basis, u):
    def L(x):
        return sys.tp(u, u, x)

    projs = {
        2: lambda x: 2 * L(L(x)) - L(x),
        1: lambda x: 4 * (L(x) - L(L(x))),
        0: lambda x: x - 3 * L(x) + 2 * L(L(x)),
    }
    dims = {}
    D = len(basis)
    for k, P in projs.items():
        M = np.zeros((D, D), complex)
        for col, b in enumerate(basis):
            pb = P(b)
            for row, a in enumerate(basis):
                M[row, col] = np.vdot(a.reshape(-1), pb.reshape(-1))
        sv = np.linalg.svd(M, compute_uv=False)
        dims[k] = int(np.sum(sv > 0.5))
    return dims[2], dims[1], dims[0]


def peirce_dims_spin(u, n):
    def L(x):
        return tp_spin(u, u, x)

    dims = []
    for P in (
        lambda x: 2 * L(L(x)) - L(x),
        lambda x: 4 * (L(x) - L(L(x))),
        lambda x: x - 3 * L(x) + 2 * L(L(x)),
    ):
        M = np.zeros((n, n), complex)
        for col in range(n):
            b = np.zeros(n, complex)
            b[col] = 1
            M[:, col] = P(b)
        sv = np.linalg.svd(M, compute_uv=False)
        dims.append(int(np.sum(sv > 0.5)))
    return tuple(dims)


# ------------------------------------------------------- fixture elements

I2 = np.eye(2, dtype=complex)
I3 = np.eye(3, dtype=complex)
SWAP = np.array([[0, 1], [1, 0]], complex)
NEG_SWAP = np.array([[0, -1], [-1, 0]], complex)
DIAG_I = np.diag([1j, -1j])
ROT45 = np.array([[1, -1], [1, 1]], complex) / np.sqrt(2)
NILP = np.array([[0, -1], [0, 0]], complex)
E11_2 = np.diag([1.0 + 0j, 0])
M2S_B_U = np.array([[1, 1j], [1j, 1]], complex) / np.sqrt(2)
M2S_C_U = np.array([[0.5, 0.5j], [0.5j, -0.5]], complex)
J2 = np.array([[0, 1], [-1, 0]], complex)


def embed_a4(a):
    # off-diagonal embedding of a 2x2 block into the 4x4 antisymmetric factor
    z = np.zeros((4, 4), complex)
    z[0:2, 2:4] = a
    z[2:4, 0:2] = -a.T
    return z


A4_E = embed_a4(I2)
A4_U = embed_a4(NEG_SWAP)
A4_V = embed_a4(DIAG_I)
A4_U2 = embed_a4(SWAP)
A4_V2 = embed_a4(ROT45)
A4_V3 = embed_a4(NILP)


def sv(x):
    return np.array(x, complex)


SPIN_E1 = sv([1, 0, 0])
SPIN_U_HALF = sv([0.5, 0.5j, 0])
SPIN_CU = sv([0.5j, -0.5, 0])
SPIN_U1 = sv([-0.5, 0.5j, 0])
SPIN_U2 = sv([0.5j, 0.5, 0])
SPIN_U3 = sv([0, 0.5j, 0.5])
SPIN_E2 = sv([0, 1, 0])
SPIN_E12 = sv([1 / np.sqrt(2), 1 / np.sqrt(2), 0])


# ------------------------------------------------------------ fixtures


def fixture_tables():
    out = {}

    def add(fid, sys, checks):
        tbl = {}
        for name, kind, u, e in checks:
            tbl[name] = relate(sys, kind, u, e)
        out[fid] = tbl

    e, u, v = I2, NEG_SWAP, DIAG_I
    add("leh-not-transitive", FULL, [
        ("LE_H u e", "LE_H", u, e),
        ("SIM_H u e", "SIM_H", u, e),
        ("LE_H v u", "LE_H", v, u),
        ("SIM_H v u", "SIM_H", v, u),
        ("LE_H v e", "LE_H", v, e),
        ("LE_H e v", "LE_H", e, v),
        ("SIM_2 v e", "SIM_2", v, e),
        ("SIM_HC v e", "SIM_HC", v, e),
    ])

    add("lehc-not-transitive-b", FULL, [
        ("SIM_H u e", "SIM_H", SWAP, I2),
        ("LE_H v u", "LE_H", ROT45, SWAP),
        ("SIM_H v u", "SIM_H", ROT45, SWAP),
        ("LE_HC v e", "LE_HC", ROT45, I2),
        ("LE_HC e v", "LE_HC", I2, ROT45),
        ("SIM_HC v e", "SIM_HC", ROT45, I2),
    ])

    e3 = E11_2
    u3 = I2
    v3 = np.array([[1, 1], [-1, 1]], complex) / np.sqrt(2)
    t_u = tp_mat(u3, u3, e3)
    t_v = tp_mat(v3, v3, e3)
    out["len-not-transitive-ab"] = {
        "LE_2 u e": relate(FULL, "LE_2", u3, e3),
        "LE_2 v e": relate(FULL, "LE_2", v3, e3),
        "LE_N u e": relate(FULL, "LE_N", u3, e3),
        "LE_N v e": relate(FULL, "LE_N", v3, e3),
        "uue tripotent": is_tripotent(FULL, t_u),
        "vve tripotent": is_tripotent(FULL, t_v),
        "LE uue e": relate(FULL, "LE", t_u, e3),
        "LE vve e": relate(FULL, "LE", t_v, e3),
        "uue = p2u p2u e": bool(
            nrm(t_u - tp_mat(e3 @ u3.conj().T @ e3 * 0 + peirce2(e3, u3),
                             peirce2(e3, u3), e3)) <= 1e-12),
    }

    add("len-not-transitive-c", FULL, [
        ("SIM_H u e", "SIM_H", NEG_SWAP, I2),
        ("LE v u", "LE", NILP, NEG_SWAP),
        ("LE_N v e", "LE_N", NILP, I2),
        ("LE_2 v e", "LE_2", NILP, I2),
    ])
    out["len-not-transitive-c"]["vvE tripotent"] = is_tripotent(
        FULL, tp_mat(NILP, NILP, I2))

    add("antisymmetric-4x4-a", ASYM, [
        ("LE_H u e", "LE_H", A4_U, A4_E),
        ("SIM_H u e", "SIM_H", A4_U, A4_E),
        ("LE_H v u", "LE_H", A4_V, A4_U),
        ("SIM_H v u", "SIM_H", A4_V, A4_U),
        ("LE_H v e", "LE_H", A4_V, A4_E),
        ("LE_H e v", "LE_H", A4_E, A4_V),
        ("SIM_HC v e", "SIM_HC", A4_V, A4_E),
    ])
    add("antisymmetric-4x4-b", ASYM, [
        ("SIM_H u e", "SIM_H", A4_U2, A4_E),
        ("SIM_H v u", "SIM_H", A4_V2, A4_U2),
        ("LE_HC v e", "LE_HC", A4_V2, A4_E),
        ("SIM_HC v e", "SIM_HC", A4_V2, A4_E),
    ])
    add("antisymmetric-4x4-c", ASYM, [
        ("SIM_H u e", "SIM_H", A4_U, A4_E),
        ("LE v u", "LE", A4_V3, A4_U),
        ("LE_N v e", "LE_N", A4_V3, A4_E),
        ("LE_2 v e", "LE_2", A4_V3, A4_E),
    ])

    add("symmetric-2x2-b", SYM, [
        ("LE_H u v", "LE_H", M2S_B_U, np.diag([1, -1]).astype(complex)),
        ("SIM_H u v", "SIM_H", M2S_B_U, np.diag([1, -1]).astype(complex)),
        ("SIM_H v e", "SIM_H", np.diag([1, -1]).astype(complex), I2),
        ("LE_HC u e", "LE_HC", M2S_B_U, I2),
        ("SIM_HC u e", "SIM_HC", M2S_B_U, I2),
    ])
    uu = tp_mat(M2S_C_U, M2S_C_U, I2)
    out["symmetric-2x2-c"] = {
        "u tripotent": is_tripotent(SYM, M2S_C_U),
        "u normal": bool(nrm(M2S_C_U @ M2S_C_U.conj().T
                             - M2S_C_U.conj().T @ M2S_C_U) <= 1e-12),
        "uuE": [[c.real, c.imag] for c in uu.reshape(-1)],
        "uuE tripotent": is_tripotent(SYM, uu),
        "LE_N u e": relate(SYM, "LE_N", M2S_C_U, I2),
        "LE_2 u e": relate(SYM, "LE_2", M2S_C_U, I2),
    }

    add("spin-3-a", SPIN, [
        ("LE_C u cu", "LE_C", SPIN_U_HALF, SPIN_CU),
        ("LE_H u cu", "LE_H", SPIN_U_HALF, SPIN_CU),
        ("LE_H cu u", "LE_H", SPIN_CU, SPIN_U_HALF),
    ])
    add("spin-3-b", SPIN, [
        ("LE_R u1 e", "LE_R", SPIN_U1, SPIN_E1),
        ("LE u1 e", "LE", SPIN_U1, SPIN_E1),
        ("LE_N u2 e", "LE_N", SPIN_U2, SPIN_E1),
        ("LE_H u2 e", "LE_H", SPIN_U2, SPIN_E1),
        ("LE_N u3 e", "LE_N", SPIN_U3, SPIN_E1),
        ("LE_2 u3 e", "LE_2", SPIN_U3, SPIN_E1),
    ])
    add("spin-3-c", SPIN, [
        ("SIM_H u e", "SIM_H", SPIN_E1, SPIN_E2),
        ("SIM_2 u e", "SIM_2", SPIN_E1, SPIN_E2),
    ])
    add("spin-3-d", SPIN, [
        ("SIM_HC u e", "SIM_HC", SPIN_E1, SPIN_E12),
        ("SIM_2 u e", "SIM_2", SPIN_E1, SPIN_E12),
    ])

    # distinguishing relations, concrete orthogonal tripotents
    E11, E22 = E11_2, np.diag([0, 1.0 + 0j])
    add("distinguishing-a", FULL, [
        ("LE_R -e e", "LE_R", -E11, E11),
        ("LE -e e", "LE", -E11, E11),
        ("LE e -e", "LE", E11, -E11),
        ("LE_C ie e", "LE_C", 1j * E11, E11),
        ("LE_R ie e", "LE_R", 1j * E11, E11),
        ("LE_H ie e", "LE_H", 1j * E11, E11),
        ("LE_R -u u+v", "LE_R", -E11, I2),
        ("LE_R u+v -u", "LE_R", I2, -E11),
        ("LE -u u+v", "LE", -E11, I2),
        ("LE u+v -u", "LE", I2, -E11),
        ("LE_C iu u+v", "LE_C", 1j * E11, I2),
        ("LE_C u+v iu", "LE_C", I2, 1j * E11),
        ("LE_R iu u+v", "LE_R", 1j * E11, I2),
        ("LE_H iu u+v", "LE_H", 1j * E11, I2),
    ])
    D1 = np.diag([1, -1]).astype(complex)
    add("distinguishing-d-pairs", FULL, [
        ("SIM_H u-v u+v", "SIM_H", D1, I2),
        ("LE_C u-v u+v", "LE_C", D1, I2),
        ("LE_C u+v u-v", "LE_C", I2, D1),
        ("SIM_HC i(u-v) u+v", "SIM_HC", DIAG_I, I2),
        ("LE_H i(u-v) u+v", "LE_H", DIAG_I, I2),
        ("LE_H u+v i(u-v)", "LE_H", I2, DIAG_I),
        ("LE_C i(u-v) u+v", "LE_C", DIAG_I, I2),
        ("LE_C u+v i(u-v)", "LE_C", I2, DIAG_I),
        ("SIM_2 u+iv u+v", "SIM_2", np.diag([1, 1j]), I2),
        ("LE_HC u+iv u+v", "LE_HC", np.diag([1, 1j]), I2),
        ("LE_HC u+v u+iv", "LE_HC", I2, np.diag([1, 1j])),
    ])
    U3a = np.diag([1, -1, 0]).astype(complex)
    U3b = np.diag([1j, -1j, 0])
    U3c = np.diag([1, 1j, 0])
    add("distinguishing-d-strict", FULL, [
        ("LE_H u-v w3", "LE_H", U3a, I3),
        ("LE_H w3 u-v", "LE_H", I3, U3a),
        ("LE_C u-v w3", "LE_C", U3a, I3),
        ("LE_C w3 u-v", "LE_C", I3, U3a),
        ("LE_HC i(u-v) w3", "LE_HC", U3b, I3),
        ("LE_HC w3 i(u-v)", "LE_HC", I3, U3b),
        ("LE_H i(u-v) w3", "LE_H", U3b, I3),
        ("LE_N u+iv w3", "LE_N", U3c, I3),
        ("LE_N w3 u+iv", "LE_N", I3, U3c),
        ("LE_HC u+iv w3", "LE_HC", U3c, I3),
        ("LE_HC w3 u+iv", "LE_HC", I3, U3c),
    ])
    add("distinguishing-e", FULL, [
        ("LE_H e v", "LE_H", I2, DIAG_I),
        ("LE_H v e", "LE_H", DIAG_I, I2),
        ("SIM_2 e v", "SIM_2", I2, DIAG_I),
    ])
    add("distinguishing-e-m3", FULL, [
        ("LE_H u3 e3", "LE_H", U3b, I3),
        ("LE_H e3 u3", "LE_H", I3, U3b),
        ("LE_2 u3 e3", "LE_2", U3b, I3),
        ("LE_2 e3 u3", "LE_2", I3, U3b),
    ])
    add("distinguishing-f", FULL, [
        ("LE_N v e", "LE_N", NILP, I2),
        ("LE_N e v", "LE_N", I2, NILP),
        ("LE_2 v e", "LE_2", NILP, I2),
    ])
    return out


def peirce2(e, x):
    p_f = e @ e.conj().T
    p_i = e.conj().T @ e
    return p_f @ x @ p_i


# ----------------------------------------------------- derived constants


def derived_constants():
    d = {}

    # normal spectral example
    a = NEG_SWAP
    w, z = np.linalg.eigh(a.real)
    d["normal_eig_negswap_values"] = sorted([float(x) for x in w],
                                            reverse=True)

    # singular values example
    d["svd_nilp_sigma"] = [float(x) for x in
                           np.linalg.svd(NILP, compute_uv=False)]

    # symmetric unitary diagonalization by a real orthogonal congruence
    s = M2S_B_U
    # S = A + iB, A,B commuting real symmetric
    phases = np.linalg.eigvals(s)
    d["ros_m2sb_phases"] = sorted(
        [[p.real, p.imag] for p in phases],
        key=lambda t: (np.angle(complex(t[0], t[1])) % (2 * np.pi)))
    d["ros_m2sb_phase_product"] = [float(np.prod(phases).real),
                                   float(np.prod(phases).imag)]
    d["ros_swap_phases"] = [[1.0, 0.0], [-1.0, 0.0]]

    # youla phases of the canonical 4x4 antisymmetric example
    d["youla_a4e_det"] = [float(np.linalg.det(A4_E).real),
                          float(np.linalg.det(A4_E).imag)]

    # principal square roots used by the shift construction
    r = np.sqrt(1j)
    d["shift_root_diag_i"] = [[r.real, r.imag],
                              [r.conjugate().real, r.conjugate().imag]]
    vv = np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], complex) / 2
    d["shift_root_swap_check"] = float(nrm(vv @ vv - SWAP))
    d["shift_root_swap"] = [[[c.real, c.imag] for c in row] for row in vv]

    # peirce dimensions
    d["peirce_E11_M2"] = peirce_dims(FULL, basis_full(2, 2), E11_2)
    e_sym4 = np.diag([1, 1, 0, 0]).astype(complex)
    d["peirce_sym4_rank2"] = peirce_dims(SYM, basis_sym(4), e_sym4)
    e_asym4 = np.zeros((4, 4), complex)
    e_asym4[0:2, 0:2] = J2
    d["peirce_asym4_J"] = peirce_dims(ASYM, basis_asym(4), e_asym4)
    d["peirce_spin5_min"] = peirce_dims_spin(sv([0.5, 0.5j, 0, 0, 0]), 5)
    d["peirce_spin3_min"] = peirce_dims_spin(SPIN_U_HALF, 3)

    # spin triple product example
    u = sv([0.5, 0.5j, 0])
    d["spin_uuu_residual"] = nrm(tp_spin(u, u, u) - u)
    d["spin_u_norm"] = spin_norm(u)
    d["spin_u_l2"] = float(np.linalg.norm(u))
    hr = sv([3 / 5, 4 / 5, 0])
    d["spin_hr_norm_eq_l2"] = [spin_norm(hr), float(np.linalg.norm(hr))]

    # hull invariants
    d["det_diag_i"] = [float(np.linalg.det(DIAG_I).real),
                       float(np.linalg.det(DIAG_I).imag)]
    alpha = np.exp(1j * np.pi / 4)
    eun = alpha * SPIN_E1
    d["spin_inv_alpha_e1"] = [sdot(eun, eun.conj()).real,
                              sdot(eun, eun.conj()).imag]

    # hct phase for diag(i,1) against the 2x2 identity
    a = np.exp(-1j * np.pi / 4)
    d["hct_alpha_diag_i1"] = [a.real, a.imag]
    d["hct_alpha_check_det"] = [
        float(np.linalg.det(a * np.diag([1j, 1])).real),
        float(np.linalg.det(a * np.diag([1j, 1])).imag)]

    # unitary extension example
    w = np.array([[0, -1], [-1, 0]], complex)
    d["ext_nilp_check_le"] = nrm(tp_mat(NILP, w, NILP) - NILP)
    return d


# ------------------------------------------------- chain-link prevalidation


def simh_holds(sys, a, b):
    return relate(sys, "SIM_H", a, b)


def diag_chain(betas):
    """Two-link merge moves on a diagonal unitary with determinant +-1.

    Returns the full node list diag(betas) -> identity; every consecutive
    pair must be SIM_H-related symmetric matrices.
    """
    n = len(betas)
    cur = np.array(betas, complex)
    nodes = [np.diag(cur)]
    for j in range(n - 1):
        a, b = cur[j], cur[j + 1]
        if abs(a - 1) < 1e-14:
            continue
        nu = np.sqrt(a * b)
        mid = np.diag(cur).astype(complex)
        mid[j, j] = 0
        mid[j + 1, j + 1] = 0
        mid[j, j + 1] = nu
        mid[j + 1, j] = nu
        nodes.append(mid)
        cur = cur.copy()
        cur[j], cur[j + 1] = 1, a * b
        nodes.append(np.diag(cur))
    if abs(cur[n - 1] + 1) < 1e-12:
        cur = cur.copy()
        cur[n - 1] = 1
        nodes.append(np.diag(cur))
    return nodes


def chain_report():
    rep = {}
    rng = np.random.default_rng(20260815)

    # random diagonal with det -1, n = 4
    th = rng.uniform(0, 2 * np.pi, 3)
    betas = list(np.exp(1j * th))
    betas.append(-1 / np.prod(betas))
    nodes = diag_chain(betas)
    oks = [simh_holds(SYM, nodes[i], nodes[i + 1])
           for i in range(len(nodes) - 1)]
    rep["diag_chain_n4_links"] = len(nodes) - 1
    rep["diag_chain_n4_all_simh"] = all(oks)
    rep["diag_chain_n4_bound"] = len(nodes) - 1 <= 2 * 4 - 1

    # spin chain, unitary to unitary, both phase cases
    def spin_chain(u, e):
        cu, ce = sdot(u, u.conj()), sdot(e, e.conj())
        alpha = np.sqrt(cu)
        x = (u / alpha).real.astype(complex) + 0j
        x = u / alpha
        if abs(cu - ce) < 1e-12:
            beta = np.sqrt(ce)
            y = e / beta
            if nrm(y.imag) > 1e-9:
                beta, y = -beta, -y
        else:
            beta = np.sqrt(-ce) * 1j  # so that beta^2 = ce = -alpha^2 * ...
            beta = np.sqrt(ce)
            y = e / beta
        n = len(u)
        # z1 real unit orthogonal to x and y
        M = np.vstack([x.real, x.imag, y.real, y.imag])
        _, _, vt = np.linalg.svd(np.vstack([M, np.zeros((1, n))]))
        z1 = vt[-1].astype(complex)
        z1 /= np.linalg.norm(z1)
        if abs(cu - ce) < 1e-12:
            return [u, 1j * alpha * z1, e]
        M2 = np.vstack([z1.real, y.real, y.imag])
        _, _, vt2 = np.linalg.svd(np.vstack([M2, np.zeros((1, n))]))
        z2 = vt2[-1].astype(complex)
        z2 /= np.linalg.norm(z2)
        return [u, 1j * alpha * z1, alpha * z2, e]

    for tag, e in (("same", SPIN_E2), ("flip", 1j * SPIN_E2)):
        ch = spin_chain(SPIN_E1.astype(complex), e.astype(complex))
        oks = [simh_holds(SPIN, ch[i], ch[i + 1]) for i in range(len(ch) - 1)]
        rep[f"spin_chain_{tag}_links"] = len(ch) - 1
        rep[f"spin_chain_{tag}_all_simh"] = all(oks)

    # antisymmetric pipeline on a random 4x4 antisymmetric unitary, det 1
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    q, _ = np.linalg.qr(g)
    e0 = np.zeros((4, 4), complex)
    e0[0:2, 0:2] = J2
    e0[2:4, 2:4] = J2
    v = q @ e0 @ q.T
    v /= np.linalg.det(v) ** (1 / 4)
    y = v @ (-e0)  # T(v) = v e0*
    rep["asym_T_in_H"] = nrm(y.T - (-e0) @ y @ e0) < 1e-9
    # sigma-paired eigenbasis
    lam, vec = np.linalg.eig(y)
    order = np.argsort(np.angle(lam) % (2 * np.pi))
    lam, vec = lam[order], vec[:, order]
    cols, vals = [], []
    used = np.zeros(4, bool)
    for i in range(4):
        if used[i]:
            continue
        xi = vec[:, i]
        for kcol in range(len(cols)):
            xi = xi - cols[kcol] * np.vdot(cols[kcol], xi)
        nxi = np.linalg.norm(xi)
        if nxi < 1e-8:
            used[i] = True
            continue
        xi /= nxi
        sxi = e0 @ xi.conj()
        cols += [xi, sxi]
        vals.append(lam[i])
        used[i] = True
    A = np.column_stack(cols)
    rep["asym_A_unitary"] = nrm(A.conj().T @ A - np.eye(4)) < 1e-9
    blocks = np.diag([vals[0], vals[0], vals[1], vals[1]])
    rep["asym_blockscalar"] = nrm(A.conj().T @ y @ A - blocks) < 1e-9
    # chain in the 2x2 symmetric-land, transported back
    nodes = diag_chain(vals)
    big = []
    for nmat in nodes:
        big.append(np.kron(nmat, np.eye(2)))
    tnodes = [(A @ b @ A.conj().T) @ e0 for b in big]  # T^{-1}(z) = z e0
    tnodes[0] = v
    tnodes[-1] = e0
    oks = [simh_holds(ASYM, tnodes[i], tnodes[i + 1])
           for i in range(len(tnodes) - 1)]
    anti = [nrm(t.T + t) < 1e-9 for t in tnodes]
    rep["asym_chain_links"] = len(tnodes) - 1
    rep["asym_chain_all_simh"] = all(oks)
    rep["asym_chain_all_antisym"] = all(anti)
    rep["asym_chain_bound"] = len(tnodes) - 1 <= 2 * 2 - 1
    return rep


def main():
    out = {
        "fixtures": fixture_tables(),
        "derived": derived_constants(),
        "chains": chain_report(),
    }

    def default(o):
        if isinstance(o, (np.bool_,)):
            return bool(o)
        if isinstance(o, (np.floating,)):
            return float(o)
        if isinstance(o, (np.integer,)):
            return int(o)
        if isinstance(o, complex):
            return [o.real, o.imag]
        if isinstance(o, tuple):
            return list(o)
        raise TypeError(type(o))

    print(json.dumps(out, indent=1, default=default))


if __name__ == "__main__":
    main()
