"""Jordan block data of class representatives mod p."""

import numpy as np

from classes import component_type, orbits
from groups import Group
from roots import components, subsystem_roots

PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
BAD = {"D": {2}, "E6": {2, 3}, "E7": {2, 3}, "E8": {2, 3, 5}, "F4": {2, 3}, "G2": {2, 3},
       "C": {2}, "B": {2}}


def rank_mod(m, p):
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        below = np.nonzero(a[:, c])[0]
        below = below[below != r]
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


def matmul_mod(a, b, p):
    return np.mod(a @ b, p)


def rank_profile(u, p, limit=None):
    """[rank((u-1)^k) for k = 1, 2, ...] until zero."""
    n = u.shape[0]
    x = np.mod(u - np.eye(n), p)
    cur = x
    out = []
    while True:
        r = rank_mod(cur, p)
        out.append(r)
        if r == 0 or (limit and len(out) >= limit):
            return out
        cur = matmul_mod(cur, x, p)


def nilpotency_le(u, p, k):
    """True when (u-1)^k = 0 mod p."""
    n = u.shape[0]
    x = np.mod(u - np.eye(n), p)
    cur = x
    for _ in range(k - 1):
        cur = matmul_mod(cur, x, p)
        if not cur.any():
            return True
    return not cur.any()


def partition_from_profile(n, prof):
    ranks = [n] + prof
    ge = [ranks[k] - ranks[k + 1] for k in range(len(prof))]  # blocks of size >= k+1
    parts = {}
    for k in range(len(ge)):
        exact = ge[k] - (ge[k + 1] if k + 1 < len(ge) else 0)
        if exact:
            parts[k + 1] = exact
    return parts


def product(group, module, factors, p):
    n = group.dimV if module == "V" else group.dimW
    u = np.eye(n)
    for root, c in factors:
        u = matmul_mod(u, group.root_element(module, root, c, p), p)
    return u


def representative_factors(rs, orbit, rng, p):
    """Root factors for the orbit: degree-2 roots of each component with random coefficients."""
    h = orbit_cocharacter(rs, orbit)
    out = []
    for r in subsystem_roots(rs, orbit.subset):
        if rs.evaluate(r, h) == 2:
            c = 1 if p == 2 else int(rng.integers(1, p))
            out.append((r, c))
    return out


def orbit_cocharacter(rs, orbit):
    from classes import cocharacter
    return cocharacter(rs, orbit.subset, orbit.values)


def reliable(rs, orbit, p):
    """True when every non-regular component of the Bala-Carter datum is in good characteristic."""
    vals = dict(zip(orbit.subset, orbit.values))
    for comp in components(rs, orbit.subset):
        if all(vals[i] == 2 for i in comp):
            continue
        fam, k, _ = component_type(rs, comp)
        key = fam if fam in "DCB" else f"{fam}{k}"
        if p in BAD[key]:
            return False
    return True


def is_levi_regular(orbit):
    return all(v == 2 for v in orbit.values)


def class_data(name, primes=PRIMES, samples=12, seed=1):
    g = Group(name)
    rs, obs = orbits(name)
    rng = np.random.default_rng(seed)
    rows = []
    for o in obs:
        for p in primes:
            best = None
            tries = 1 if is_levi_regular(o) else samples
            for _ in range(tries):
                f = representative_factors(rs, o, rng, p)
                uw = product(g, "W", f, p)
                pw = rank_profile(uw, p, limit=3)
                key = (sum(pw), pw)
                if best is None or key > best[0]:
                    best = (key, f, uw, pw)
            _, f, uw, pw = best
            uv = product(g, "V", f, p) if g.V is not g.W else uw
            pv = rank_profile(uv, p, limit=1)
            rows.append(dict(group=name, label=o.label, dim=o.dim, p=p,
                             blocksV=g.dimV - pv[0], blocksW=g.dimW - pw[0],
                             order_p=nilpotency_le(uv, p, p),
                             reliable=reliable(rs, o, p), levi=is_levi_regular(o)))
    return g, rs, obs, rows


if __name__ == "__main__":
    import sys
    import time
    for name in sys.argv[1:]:
        t0 = time.time()
        g, rs, obs, rows = class_data(name)
        for r in rows:
            print(r["label"], r["dim"], r["p"], r["blocksV"], r["blocksW"], int(r["order_p"]),
                  int(r["reliable"]), g.dimW - r["dim"])
        print(f"# {time.time() - t0:.1f}s")
