"""Independent numpy oracle used to freeze expected values in the C++ tests.

Everything here is written directly from the operator definitions with
numpy/scipy linear algebra and brute-force loops; it shares no code with
the library.
"""
import itertools
import numpy as np
from scipy.linalg import sqrtm

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.diag([1, -1]).astype(complex)
ket0 = np.array([1, 0], dtype=complex)
ket1 = np.array([0, 1], dtype=complex)
plus = (ket0 + ket1) / np.sqrt(2)
minus = (ket0 - ket1) / np.sqrt(2)
plus_i = (ket0 + 1j * ket1) / np.sqrt(2)
minus_i = (ket0 - 1j * ket1) / np.sqrt(2)


def proj(v):
    return np.outer(v, v.conj())


def psi(alpha, phi, sign=1):
    return np.cos(alpha / 2) * plus + sign * np.exp(1j * phi) * np.sin(alpha / 2) * minus


def pd_kraus(r):
    return [np.diag([1, np.sqrt(1 - r)]).astype(complex), np.diag([0, np.sqrt(r)]).astype(complex)]


def ad_kraus(r):
    return [np.diag([1, np.sqrt(1 - r)]).astype(complex), np.array([[0, np.sqrt(r)], [0, 0]], dtype=complex)]


def apply(ops, rho):
    return sum(A @ rho @ A.conj().T for A in ops)


def meas(axis, th):
    c, s = np.cos(th / 2), np.sin(th / 2)
    a, b = {"x": (plus, minus), "y": (plus_i, minus_i), "z": (ket0, ket1)}[axis]
    return c * proj(a) + s * proj(b), s * proj(a) + c * proj(b)


def rot(axis, eta):
    # exp(-i eta sigma/2) for the + sign
    sig = {"x": X, "y": Y, "z": Z}[axis]
    return np.cos(eta / 2) * I2 - 1j * np.sin(eta / 2) * sig


def rot_z_diag(eta):
    return np.diag([np.exp(1j * eta / 2), np.exp(-1j * eta / 2)])


def rot_signed(axis, eta):
    return rot_z_diag(eta) if axis == "z" else rot(axis, eta)


def fid(rho_in, rho_f):
    s = sqrtm(rho_in)
    return np.real(np.trace(sqrtm(s @ rho_f @ s)))


def fid_pure(v, rho):
    return np.sqrt(max(0.0, np.real(v.conj() @ rho @ v)))


def qfbc_out(rho_e, maxis, th, raxis, eta, binding):
    mp, mm = meas(maxis, th)
    s = 1 if binding == "+" else -1
    rp, rm = rot_signed(raxis, s * eta), rot_signed(raxis, -s * eta)
    return rp @ mp @ rho_e @ mp.conj().T @ rp.conj().T + rm @ mm @ rho_e @ mm.conj().T @ rm.conj().T


def qffc_rot_out(rho, kraus, p, eta, binding):
    m1 = np.diag([np.sqrt(p), np.sqrt(1 - p)])
    m2 = np.diag([np.sqrt(1 - p), np.sqrt(p)])
    s = 1 if binding == "+" else -1
    b1 = apply(kraus, m1 @ rho @ m1.conj().T)
    b2 = X @ apply(kraus, X @ m2 @ rho @ m2.conj().T @ X) @ X
    r1, r2 = rot("y", s * eta), rot("y", -s * eta)
    return r1 @ b1 @ r1.conj().T + r2 @ b2 @ r2.conj().T


GRID = [k * np.pi / 60 for k in range(31)]


def opt_qfbc(v, kraus):
    rho_e = apply(kraus, proj(v))
    best = -1
    for th, eta, ma, ra, b in itertools.product(GRID, GRID, "xyz", "xyz", "+-"):
        f = fid_pure(v, qfbc_out(rho_e, ma, th, ra, eta, b))
        if f > best:
            best = f
    return best


def opt_qffc(v, kraus):
    best = -1
    rho = proj(v)
    for th, eta, b in itertools.product(GRID, GRID, "+-"):
        p = np.cos(th / 2) ** 2
        f = fid_pure(v, qffc_rot_out(rho, kraus, p, eta, b))
        if f > best:
            best = f
    return best


if __name__ == "__main__":
    import sys
    print("fid |+> vs PD(0.5):", fid(proj(plus), apply(pd_kraus(0.5), proj(plus))))
    for phi in [0, np.pi / 4, np.pi / 2]:
        for kind, k in [("AD", ad_kraus), ("PD", pd_kraus)]:
            row = []
            for alpha in [0, np.pi / 8, np.pi / 4, 3 * np.pi / 8, np.pi / 2]:
                v = psi(alpha, phi)
                fb, ff = opt_qfbc(v, k(0.999)), opt_qffc(v, k(0.999))
                row.append((round(alpha, 3), round(fb, 4), round(ff, 4), round(fb - ff, 4)))
            print(kind, round(phi, 3), row)
            sys.stdout.flush()
