"""Integral forms of exceptional Lie algebras and the modules used for Jordan block counts.

Simply laced algebras come from the sign cocycle construction; F4 and G2 are cut out
of E6 and D4 as fixed points of the diagram automorphism.  Every operator is an integer
matrix on an explicit lattice, so reduction mod p gives the characteristic p action."""

from fractions import Fraction
from math import factorial

import numpy as np

from roots import RootSystem


def _eps_table(rs):
    n = rs.rank
    e = [[1] * n for _ in range(n)]
    for i in range(n):
        e[i][i] = -1
        for j in range(i + 1, n):
            if rs.cartan[i][j] != 0:
                e[i][j] = -1
    return e


def cocycle(rs):
    tab = _eps_table(rs)

    def eps(a, b):
        s = 0
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj and tab[i][j] == -1:
                    s += ai * bj
        return -1 if s % 2 else 1

    return eps


class SimplyLaced:
    """Basis: E_alpha for every root (in rs.roots order) then h_1..h_r (simple coroots)."""

    def __init__(self, name):
        self.rs = RootSystem(name)
        self.eps = cocycle(self.rs)
        rs = self.rs
        self.nroots = len(rs.roots)
        self.dim = self.nroots + rs.rank

    def bracket_root(self, a, b):
        """[E_a, E_b] as a sparse dict over basis indices."""
        rs = self.rs
        s = rs.add(a, b)
        if all(x == 0 for x in s):
            return {self.nroots + i: -c for i, c in enumerate(a) if c}
        if rs.is_root(s):
            return {rs.index[s]: self.eps(a, b)}
        return {}

    def ad(self, a):
        """Integer matrix of ad(E_a) on the Chevalley lattice."""
        rs = self.rs
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        for k, b in enumerate(rs.roots):
            for idx, c in self.bracket_root(a, b).items():
                m[idx, k] += c
        for i in range(rs.rank):
            pair = sum(a[k] * rs.cartan[k][i] for k in range(rs.rank))
            m[rs.index[a], self.nroots + i] += -pair
        return m


def minuscule_module(rs, highest):
    """Weights (Dynkin labels) of the minuscule module with the given highest weight and
    the 0/1 matrices of e_i, f_i for simple roots."""
    weights = [tuple(highest)]
    seen = {tuple(highest)}
    k = 0
    while k < len(weights):
        mu = weights[k]
        for i in range(rs.rank):
            if mu[i] == 1:
                nu = tuple(mu[j] - rs.cartan[i][j] for j in range(rs.rank))
                if nu not in seen:
                    seen.add(nu)
                    weights.append(nu)
        k += 1
    index = {w: i for i, w in enumerate(weights)}
    n = len(weights)
    es, fs = [], []
    for i in range(rs.rank):
        e = np.zeros((n, n), dtype=np.int64)
        f = np.zeros((n, n), dtype=np.int64)
        for w in weights:
            if w[i] == -1:
                up = tuple(w[j] + rs.cartan[i][j] for j in range(rs.rank))
                e[index[up], index[w]] = 1
            if w[i] == 1:
                dn = tuple(w[j] - rs.cartan[i][j] for j in range(rs.rank))
                f[index[dn], index[w]] = 1
        es.append(e)
        fs.append(f)
    return weights, es, fs


def extend_representation(alg, pos_simple, neg_simple):
    """Given images of E_{alpha_i} and E_{-alpha_i}, return images of every E_alpha."""
    rs = alg.rs
    images = {}
    for i in range(rs.rank):
        unit = tuple(1 if k == i else 0 for k in range(rs.rank))
        images[unit] = pos_simple[i]
        images[rs.neg(unit)] = neg_simple[i]
    for sign in (1, -1):
        for r in rs.positive:
            root = r if sign == 1 else rs.neg(r)
            if root in images:
                continue
            for i in range(rs.rank):
                unit = tuple(sign if k == i else 0 for k in range(rs.rank))
                rest = tuple(x - y for x, y in zip(root, unit))
                if rs.is_root(rest) and rest in images:
                    a, b = images[unit], images[rest]
                    images[root] = alg.eps(unit, rest) * (a @ b - b @ a)
                    break
            else:
                raise RuntimeError(f"cannot reach root {root}")
    return images


def check_representation(alg, images, sample=None):
    """Verify [rho(E_a), rho(E_b)] = rho([E_a, E_b]) on root pairs."""
    rs = alg.rs
    cart = []
    for i in range(rs.rank):
        unit = tuple(1 if k == i else 0 for k in range(rs.rank))
        a, b = images[unit], images[rs.neg(unit)]
        cart.append(-(a @ b - b @ a))  # h_i = -[E_ai, E_-ai]
    pairs = [(a, b) for a in rs.roots for b in rs.roots]
    if sample is not None:
        rng = np.random.default_rng(0)
        pick = rng.choice(len(pairs), size=min(sample, len(pairs)), replace=False)
        pairs = [pairs[k] for k in pick]
    for a, b in pairs:
        lhs = images[a] @ images[b] - images[b] @ images[a]
        rhs = np.zeros_like(lhs)
        for idx, c in alg.bracket_root(a, b).items():
            if idx < alg.nroots:
                rhs = rhs + c * images[rs.roots[idx]]
            else:
                rhs = rhs + c * cart[idx - alg.nroots]
        if not np.array_equal(lhs, rhs):
            raise AssertionError(f"bracket mismatch for {a}, {b}")
    return True


def divided_powers(n):
    """[N^(0), N^(1), ...] for a nilpotent integer matrix, checking integrality."""
    n = np.asarray(n, dtype=np.int64)
    out = [np.eye(n.shape[0], dtype=np.int64)]
    power = np.eye(n.shape[0], dtype=np.int64)
    k = 0
    while True:
        k += 1
        power = power @ n
        if not power.any():
            break
        assert np.abs(power).max() < 2 ** 40
        f = factorial(k)
        if (power % f).any():
            raise ArithmeticError("divided power not integral")
        out.append(power // f)
    return out


def hnf_rows(vectors):
    """Row-style Hermite basis of the Z-span of integer vectors."""
    rows = [list(map(int, v)) for v in vectors if any(v)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis = []
    col = 0
    while rows and col < ncols:
        nz = [r for r in rows if r[col] != 0]
        if not nz:
            col += 1
            continue
        rows = [r for r in rows if r[col] == 0]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            rest = []
            for r in nz[1:]:
                q = r[col] // piv[col]
                r2 = [x - q * y for x, y in zip(r, piv)]
                if r2[col] != 0:
                    rest.append(r2)
                elif any(r2):
                    rows.append(r2)
            nz = [piv] + rest
        piv = nz[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        basis.append(piv)
        col += 1
    return basis


def stable_lattice(start, operators):
    """Smallest lattice containing ``start`` and stable under the integer ``operators``."""
    basis = hnf_rows(start)
    while True:
        gens = list(basis)
        for op in operators:
            for b in basis:
                v = op @ np.array(b, dtype=object)
                if any(v):
                    gens.append(list(v))
        new = hnf_rows(gens)
        if new == basis:
            return basis
        basis = new


def restrict_to_lattice(op, basis):
    """Matrix of ``op`` in the lattice basis (columns); op must preserve the lattice."""
    b = np.array(basis, dtype=object).T  # columns
    import sympy
    bm = sympy.Matrix(b)
    pinv = (bm.T * bm).inv() * bm.T
    res = pinv * sympy.Matrix(op.astype(object)) * bm
    if any(x.q != 1 for x in res):
        raise ArithmeticError("operator does not preserve the lattice")
    return np.array(res.tolist(), dtype=np.int64)
