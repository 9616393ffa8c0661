"""Closure relations restricted to a set of classes of interest.

For every pair allowed by rank domination we look for a witness: a Gram-preserving copy of
the smaller orbit's support inside the degree >= 2 roots of the larger orbit, whose generic
combination is identified as the smaller orbit.  Pairs with no witness are reported."""

import sys
import time

import numpy as np

from classes import cocharacter
from closure_oracle import (Q, Signer, degree_roots, dominated, gram_embeddings,
                            orbit_signatures)
from roots import subsystem_roots


def relations(name, interest=None, seed=11, tries=60):
    rng = np.random.default_rng(seed)
    signer = Signer(name)
    rs, obs, sig = orbit_signatures(name, signer, rng)
    dims = {o.label: o.dim for o in obs}
    byname = {o.label: o for o in obs}
    nec = {a: {b for b in sig if b != a and dims[b] < dims[a] and dominated(sig[b], sig[a])}
           for a in sig}
    if interest is None:
        universe = set(sig)
    else:
        universe = set(interest)
        for a in interest:
            universe |= nec[a]
    regular = max(obs, key=lambda o: o.dim).label
    proven, open_pairs = set(), set()
    order = sorted(universe, key=lambda x: dims[x])
    for a in order:
        for b in sorted(nec[a] & universe, key=lambda x: -dims[x]):
            if a == regular:
                proven.add((b, a))
                continue
            # transitivity through an already proven intermediate
            if any((b, c) in proven and (c, a) in proven for c in universe):
                proven.add((b, a))
                continue
            ob, os_ = byname[a], byname[b]
            pool = degree_roots(rs, rs.dominate(cocharacter(rs, ob.subset, ob.values)))
            hs = cocharacter(rs, os_.subset, os_.values)
            source = [r for r in subsystem_roots(rs, os_.subset) if rs.evaluate(r, hs) == 2]
            ok = False
            for _ in range(3):
                rng.shuffle(pool)
                for emb in gram_embeddings(rs, source, pool, limit=tries, budget=400000):
                    lab = signer.identify([(r, int(rng.integers(1, Q))) for r in emb], sig)
                    if lab == b:
                        ok = True
                        break
                if ok:
                    break
            (proven if ok else open_pairs).add((b, a))
    return rs, obs, sig, dims, universe, proven, open_pairs


def reduce(pairs):
    """Transitive reduction of a strict order given as a set of pairs."""
    keep = set()
    for b, a in pairs:
        if not any((b, c) in pairs and (c, a) in pairs for (_, c) in pairs if c not in (a, b)):
            keep.add((b, a))
    return keep


if __name__ == "__main__":
    name = sys.argv[1]
    interest = sys.argv[2].split(",") if len(sys.argv) > 2 else None
    t0 = time.time()
    rs, obs, sig, dims, uni, proven, open_pairs = relations(name, interest)
    for b, a in sorted(reduce(proven), key=lambda x: (dims[x[1]], dims[x[0]])):
        print("EDGE", b, a)
    for b, a in sorted(open_pairs, key=lambda x: (dims[x[1]], dims[x[0]])):
        print("OPEN", b, a)
    print("UNIVERSE", ",".join(sorted(uni, key=lambda x: dims[x])))
    print(f"# {time.time() - t0:.1f}s")
