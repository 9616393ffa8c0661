"""Root elements of G2, F4, E6, E7, E8 acting on the reference module V and on Lie(G),
as integer divided powers, ready for reduction mod p."""

from math import gcd

import numpy as np

from lie import (SimplyLaced, divided_powers, extend_representation, hnf_rows,
                 minuscule_module, stable_lattice)
from roots import RootSystem

# folding data: target simple root -> orbit of parent simple roots (zero based)
FOLDS = {
    "F4": ("E6", [[1], [3], [2, 4], [0, 5]], (1, 0, 0, 0, 0, 0)),
    "G2": ("D4", [[0, 2, 3], [1]], (1, 0, 0, 0)),
}
MINUSCULE = {"E6": (1, 0, 0, 0, 0, 0), "E7": (0, 0, 0, 0, 0, 0, 1)}


def _bracket(alg, x, y):
    """Bracket of two parent elements given as {root: coeff}; result {basis index: coeff}."""
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for idx, c in alg.bracket_root(a, b).items():
                out[idx] = out.get(idx, 0) + ca * cb * c
    return {k: v for k, v in out.items() if v}


def _restrict(rs_parent, orbits, root):
    return tuple(sum(root[j] for j in orb) for orb in orbits)


def folded_root_vectors(target):
    """Chevalley root vectors of the folded algebra as combinations of parent root vectors."""
    parent, orbits, _ = FOLDS[target]
    alg = SimplyLaced(parent)
    prs = alg.rs
    rs = RootSystem(target)
    vec = {}
    for i, orb in enumerate(orbits):
        unit = tuple(1 if k == i else 0 for k in range(rs.rank))
        vec[unit] = {tuple(1 if k == j else 0 for k in range(prs.rank)): 1 for j in orb}
        vec[rs.neg(unit)] = {tuple(-1 if k == j else 0 for k in range(prs.rank)): -1 for j in orb}
    for sign in (1, -1):
        for r in rs.positive:
            root = r if sign == 1 else rs.neg(r)
            if root in vec:
                continue
            for i in range(rs.rank):
                unit = tuple(sign if k == i else 0 for k in range(rs.rank))
                rest = tuple(x - y for x, y in zip(root, unit))
                if rest in vec:
                    br = _bracket(alg, vec[unit], vec[rest])
                    g = 0
                    for v in br.values():
                        g = gcd(g, v)
                    elem = {prs.roots[k]: v // g for k, v in br.items()}
                    assert all(_restrict(prs, orbits, b) == root for b in elem), root
                    vec[root] = elem
                    break
            else:
                raise RuntimeError(root)
    return alg, rs, vec


def _coords(basis, pivots, v):
    """Integer coordinates of v in an echelon lattice basis."""
    v = list(v)
    out = []
    for b, pc in zip(basis, pivots):
        c = v[pc]
        if c % b[pc]:
            raise ArithmeticError("not in lattice")
        c //= b[pc]
        out.append(c)
        if c:
            v = [x - c * y for x, y in zip(v, b)]
    if any(v):
        raise ArithmeticError("not in lattice")
    return out


def _on_lattice(op, basis):
    pivots = [next(k for k, x in enumerate(b) if x) for b in basis]
    bt = np.array(basis, dtype=object)
    images = (op.astype(object) @ bt.T).T
    cols = [_coords(basis, pivots, img) for img in images]
    return np.array(cols, dtype=np.int64).T


class Group:
    """Per root: divided powers (k >= 1) of the root vector on V and on Lie(G)."""

    def __init__(self, name):
        self.name = name
        if name in FOLDS:
            self._build_folded()
        else:
            self._build_simply_laced()

    def _pack(self, mats):
        return [m.astype(np.int8) for m in divided_powers(mats)[1:]]

    def _build_simply_laced(self):
        alg = SimplyLaced(self.name)
        self.rs = alg.rs
        ad = {a: alg.ad(a) for a in alg.rs.roots}
        self.dimW = alg.dim
        self.W = {a: self._pack(m) for a, m in ad.items()}
        if self.name == "E8":
            self.dimV = alg.dim
            self.V = self.W
            return
        w, es, fs = minuscule_module(alg.rs, MINUSCULE[self.name])
        im = extend_representation(alg, es, [-f for f in fs])
        self.dimV = len(w)
        self.V = {a: self._pack(m) for a, m in im.items()}

    def _build_folded(self):
        parent, orbits, hw = FOLDS[self.name]
        alg, rs, vec = folded_root_vectors(self.name)
        self.rs = rs
        prs = alg.rs
        # parent module for V
        w, es, fs = minuscule_module(prs, hw)
        pim = extend_representation(alg, es, [-f for f in fs])
        pad = {a: alg.ad(a) for a in prs.roots}
        nv = {g: sum(c * pim[b] for b, c in e.items()) for g, e in vec.items()}
        nw = {g: sum(c * pad[b] for b, c in e.items()) for g, e in vec.items()}
        ops_v = [m for g in nv for m in divided_powers(nv[g])[1:]]
        start = np.zeros(len(w), dtype=np.int64)
        start[0] = 1
        vbasis = stable_lattice([start], ops_v)
        # Chevalley lattice of the folded Lie algebra inside the parent adjoint lattice
        gens = []
        for g, e in vec.items():
            v = np.zeros(alg.dim, dtype=np.int64)
            for b, c in e.items():
                v[prs.index[b]] = c
            gens.append(v)
            if g in rs.positive[: rs.rank] or sum(g) == 1:
                br = _bracket(alg, e, vec[rs.neg(g)])
                h = np.zeros(alg.dim, dtype=np.int64)
                for k, c in br.items():
                    h[k] = c
                gens.append(h)
        wbasis = hnf_rows(gens)
        self.dimV = len(vbasis)
        self.dimW = len(wbasis)
        self.V = {g: self._pack(_on_lattice(nv[g], vbasis)) for g in vec}
        self.W = {g: self._pack(_on_lattice(nw[g], wbasis)) for g in vec}

    def root_element(self, module, root, c, p):
        """x_root(c) on the module reduced mod p, as float64."""
        dps = (self.V if module == "V" else self.W)[root]
        n = dps[0].shape[0]
        m = np.eye(n)
        ck = 1
        for dp in dps:
            ck = ck * c % p
            m = m + ck * dp.astype(np.float64)
        return np.mod(m, p)


if __name__ == "__main__":
    import sys
    import time
    for name in sys.argv[1:] or ["G2", "F4", "E6", "E7"]:
        t0 = time.time()
        g = Group(name)
        print(name, g.dimV, g.dimW, len(g.V), f"{time.time() - t0:.1f}s")
