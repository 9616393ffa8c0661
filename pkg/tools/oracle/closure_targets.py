"""Down-sets of selected classes: every class allowed by rank domination is tested for a
Gram-preserving witness inside the degree >= 2 part of the larger class.  One line per pair."""

import sys
import time

import numpy as np

from classes import cocharacter
from closure_oracle import (Q, Signer, degree_roots, dominated, gram_embeddings,
                            orbit_signatures)
from roots import subsystem_roots


def witness(rs, signer, sig, small, big, rng, tries=40, rounds=3):
    pool = degree_roots(rs, rs.dominate(cocharacter(rs, big.subset, big.values)))
    hs = cocharacter(rs, small.subset, small.values)
    source = [r for r in subsystem_roots(rs, small.subset) if rs.evaluate(r, hs) == 2]
    for _ in range(rounds):
        rng.shuffle(pool)
        for emb in gram_embeddings(rs, source, pool, limit=tries, budget=400000):
            if signer.identify([(r, int(rng.integers(1, Q))) for r in emb], sig) == small.label:
                return True
    return False


def main(name, bigs, seed=5):
    rng = np.random.default_rng(seed)
    signer = Signer(name)
    rs, obs, sig = orbit_signatures(name, signer, rng)
    dims = {o.label: o.dim for o in obs}
    byname = {o.label: o for o in obs}
    proven = set()
    for big in sorted(bigs, key=lambda x: dims[x]):
        nec = sorted((b for b in sig if dims[b] < dims[big] and dominated(sig[b], sig[big])),
                     key=lambda x: -dims[x])
        print("NEC", big, ",".join(nec), flush=True)
        if NEC_ONLY:
            continue
        for b in nec:
            via = next((c for c in nec if (c, big) in proven and (b, c) in proven), None)
            if via:
                proven.add((b, big))
                print("VIA", b, big, via, flush=True)
                continue
            ok = witness(rs, signer, sig, byname[b], byname[big], rng)
            if ok:
                proven.add((b, big))
            print("EDGE" if ok else "OPEN", b, big, flush=True)


NEC_ONLY = "--nec-only" in sys.argv

if __name__ == "__main__":
    t0 = time.time()
    main(sys.argv[1], sys.argv[2].split(";"))
    print(f"# {time.time() - t0:.1f}s")
