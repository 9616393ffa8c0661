"""Representatives for the classes that exist only in bad characteristic: (~A1)_3 in G2 at p=3
and (~A1)_2 in F4 at p=2.  Both are found as products of two root elements whose Jordan data
differ from every Levi-type class of the same order."""

from itertools import combinations

from groups import Group
from jordan import product, rank_profile


def invariants(g, factors, p):
    uv = product(g, "V", factors, p)
    uw = product(g, "W", factors, p)
    return tuple(rank_profile(uv, p)), tuple(rank_profile(uw, p))


def search(name, p, known):
    g = Group(name)
    rs = g.rs
    found = {}
    for a, b in combinations(rs.positive, 2):
        for c in range(1, p):
            inv = invariants(g, [(a, 1), (b, c)], p)
            if len(inv[0]) > p:  # not of order p
                continue
            if inv not in known.values():
                found.setdefault(inv, (a, b, c))
    return g, found


if __name__ == "__main__":
    for name, p, levi in [("G2", 3, {"A1": [((0, 1), 1)], "~A1": [((1, 0), 1)]}),
                          ("F4", 2, {"A1": [((1, 0, 0, 0), 1)], "~A1": [((0, 0, 0, 1), 1)],
                                     "A1~A1": [((1, 0, 0, 0), 1), ((0, 0, 0, 1), 1)]})]:
        g = Group(name)
        known = {lab: invariants(g, f, p) for lab, f in levi.items()}
        for lab, inv in known.items():
            print(name, p, lab, g.dimV - inv[0][0], g.dimW - inv[1][0], inv)
        g, found = search(name, p, known)
        for inv, rep in found.items():
            print(name, p, "NEW", g.dimV - inv[0][0], g.dimW - inv[1][0], inv, rep)
