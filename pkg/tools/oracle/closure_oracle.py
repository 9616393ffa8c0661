"""Closure order of nilpotent orbits in characteristic zero (simulated by a large prime).

An orbit O' lies in the closure of O iff it meets g_{>=2}(h_O).  We sample nilpotent elements
supported on random subsets of the degree >= 2 roots and identify their orbits by the rank
profile of ad(e)^k (and of e^k on V).  Necessary conditions (rank domination) bound the search;
pairs allowed by the necessary conditions but never witnessed are reported."""

import numpy as np

from classes import cocharacter, orbits
from groups import Group
from jordan import rank_mod
from roots import subsystem_roots

Q = 100003


def profile(mat, q=Q):
    out = []
    cur = mat
    while True:
        r = rank_mod(cur, q)
        out.append(r)
        if r == 0:
            return tuple(out)
        cur = np.mod(cur @ mat, q)


class Signer:
    def __init__(self, name):
        self.g = Group(name)
        self.nw = {r: dps[0].astype(np.float64) for r, dps in self.g.W.items()}
        self.nv = {r: dps[0].astype(np.float64) for r, dps in self.g.V.items()}
        self.same = self.g.V is self.g.W

    def signature(self, coeffs):
        mw = sum(c * self.nw[r] for r, c in coeffs)
        sw = profile(np.mod(mw, Q))
        if self.same:
            return sw
        mv = sum(c * self.nv[r] for r, c in coeffs)
        return sw + ("|",) + profile(np.mod(mv, Q))


    def identify(self, coeffs, table):
        """Label of the orbit containing the element: compute ranks until one candidate is left."""
        mw = np.mod(sum(c * self.nw[r] for r, c in coeffs), Q)
        cands = dict(table)
        cur = mw
        k = 0
        while len(cands) > 1:
            r = rank_mod(cur, Q)
            if k == 0 and r == 0:
                return None
            cands = {lab: s for lab, s in cands.items()
                     if (s[k] if k < len(s) and s[k] != "|" else 0) == r}
            if r == 0:
                break
            cur = np.mod(cur @ mw, Q)
            k += 1
        if len(cands) == 1:
            return next(iter(cands))
        if not self.same and len(cands) > 1:
            sv = profile(np.mod(sum(c * self.nv[r] for r, c in coeffs), Q))
            cands = {lab: s for lab, s in cands.items() if s[s.index("|") + 1:] == sv}
        return next(iter(cands)) if len(cands) == 1 else ("?", tuple(sorted(cands)))


def degree_roots(rs, h, degree_min=2, exact=False):
    out = []
    for r in rs.positive:
        v = rs.evaluate(r, h)
        if (v == degree_min) if exact else (v >= degree_min):
            out.append(r)
    return out


def orbit_signatures(name, signer, rng, tries=3):
    rs, obs = orbits(name)
    sig = {}
    for o in obs:
        h = cocharacter(rs, o.subset, o.values)
        roots = [r for r in subsystem_roots(rs, o.subset) if rs.evaluate(r, h) == 2]
        best = None
        for _ in range(tries):
            s = signer.signature([(r, int(rng.integers(1, Q))) for r in roots])
            if best is None or s[0] > best[0]:
                best = s
        sig[o.label] = best
    return rs, obs, sig


def dominated(a, b):
    """Necessary condition for a in closure(b): every rank is <= the corresponding rank."""
    def split(s):
        if "|" in s:
            k = s.index("|")
            return [s[:k], s[k + 1:]]
        return [s]
    for x, y in zip(split(a), split(b)):
        n = max(len(x), len(y))
        x = list(x) + [0] * (n - len(x))
        y = list(y) + [0] * (n - len(y))
        if any(u > v for u, v in zip(x, y)):
            return False
    return True


def closure_data(name, samples=400, seed=7, targets=None):
    rng = np.random.default_rng(seed)
    signer = Signer(name)
    rs, obs, sig = orbit_signatures(name, signer, rng)
    by_sig = {}
    for lab, s in sig.items():
        assert s not in by_sig, (lab, by_sig.get(s))
        by_sig[s] = lab
    dims = {o.label: o.dim for o in obs}
    targets = targets or [o.label for o in obs]
    witnessed = {}
    unknown = {}
    for o in obs:
        if o.label not in targets:
            continue
        h = rs.dominate(cocharacter(rs, o.subset, o.values))
        pool = degree_roots(rs, h)
        found = {o.label}
        strange = set()
        for k in range(samples):
            size = int(rng.integers(1, min(len(pool), rs.rank + 2) + 1))
            pick = rng.choice(len(pool), size=size, replace=False)
            lab = signer.identify([(pool[i], int(rng.integers(1, Q))) for i in pick], sig)
            if lab is None:
                continue
            if isinstance(lab, tuple):
                strange.add(lab)
            else:
                found.add(lab)
        witnessed[o.label] = found
        unknown[o.label] = strange
    necessary = {a: {b for b in sig if dominated(sig[b], sig[a]) and (dims[b] < dims[a] or a == b)}
                 for a in sig}
    down = transitive({a: set(b) for a, b in witnessed.items()})
    pairs = [(b, a) for a in down for b in necessary[a] - down[a]]
    for b, a in targeted(name, signer, rs, obs, sig, pairs, rng):
        witnessed[a].add(b)
    return rs, obs, sig, dims, witnessed, necessary, unknown


def gram_embeddings(rs, source, pool, limit=300, budget=200000):
    """Injective maps source -> pool preserving the symmetric form, found by backtracking."""
    gram = [[rs.form(a, b) for b in source] for a in source]
    pool_form = {}
    out = []
    nodes = [0]

    def form(x, y):
        key = (x, y)
        if key not in pool_form:
            pool_form[key] = rs.form(x, y)
        return pool_form[key]

    def rec(chosen):
        if len(out) >= limit or nodes[0] > budget:
            return
        k = len(chosen)
        if k == len(source):
            out.append(list(chosen))
            return
        for cand in pool:
            nodes[0] += 1
            if cand in chosen or rs.norm(cand) != gram[k][k]:
                continue
            if all(form(cand, chosen[j]) == gram[k][j] for j in range(k)):
                chosen.append(cand)
                rec(chosen)
                chosen.pop()
                if len(out) >= limit:
                    return

    rec([])
    return out


def targeted(name, signer, rs, obs, sig, pairs, rng):
    """Try Gram-preserving transplants of the smaller orbit's support into g_{>=2}(h_big)."""
    byname = {o.label: o for o in obs}
    found = set()
    for small, big in pairs:
        ob, os_ = byname[big], byname[small]
        h = rs.dominate(cocharacter(rs, ob.subset, ob.values))
        pool = degree_roots(rs, h)
        hs = cocharacter(rs, os_.subset, os_.values)
        source = [r for r in subsystem_roots(rs, os_.subset) if rs.evaluate(r, hs) == 2]
        rng.shuffle(pool)
        for emb in gram_embeddings(rs, source, pool):
            lab = signer.identify([(r, int(rng.integers(1, Q))) for r in emb], sig)
            if lab == small:
                found.add((small, big))
                break
    return found


def transitive(down):
    changed = True
    while changed:
        changed = False
        for a in down:
            extra = set()
            for b in down[a]:
                if b in down and b != a:
                    extra |= down[b]
            if not extra <= down[a]:
                down[a] |= extra
                changed = True
    return down


if __name__ == "__main__":
    import sys
    import time
    name = sys.argv[1]
    t0 = time.time()
    rs, obs, sig, dims, wit, nec, unk = closure_data(name)
    down = transitive({a: set(b) for a, b in wit.items()})
    for o in obs:
        a = o.label
        miss = nec[a] - down[a]
        extra = down[a] - nec[a]
        print(a, dims[a], len(down[a]), "MISS:" + ",".join(sorted(miss)) if miss else "",
              "EXTRA:" + ",".join(sorted(extra)) if extra else "", "UNK" if unk[a] else "")
    print(f"# {time.time() - t0:.1f}s")
