"""Root systems of the exceptional types (plus D4, E6 for folding), Bourbaki numbering."""

from fractions import Fraction
from itertools import product


def _edges_simply_laced(name):
    # Bourbaki: E_n has 1-3-4-5-..., with 2 attached to 4
    if name == "D4":
        return 4, [(1, 2), (2, 3), (2, 4)]
    n = int(name[1])
    edges = [(1, 3), (3, 4), (2, 4)] + [(i, i + 1) for i in range(4, n)]
    return n, edges


def cartan_matrix(name):
    """cartan[i][j] = <alpha_i, alpha_j^vee>, zero based."""
    if name == "G2":
        # alpha1 short, alpha2 long
        return [[2, -1], [-3, 2]]
    if name == "F4":
        # alpha1, alpha2 long; alpha3, alpha4 short
        return [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    n, edges = _edges_simply_laced(name)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    return a


def simple_lengths(name):
    """Squared lengths of simple roots, short roots normalised to 1 (long to 2 or 3)."""
    if name == "G2":
        return [1, 3]
    if name == "F4":
        return [2, 2, 1, 1]
    n = len(cartan_matrix(name))
    return [2] * n


class RootSystem:
    def __init__(self, name):
        self.name = name
        self.cartan = cartan_matrix(name)
        self.rank = len(self.cartan)
        self.lengths = simple_lengths(name)
        # symmetric form B(alpha_i, alpha_j) = cartan[i][j] * |alpha_j|^2 / 2
        self.gram = [[Fraction(self.cartan[i][j] * self.lengths[j], 2) for j in range(self.rank)]
                     for i in range(self.rank)]
        self.positive = self._positive_roots()
        self.roots = self.positive + [tuple(-c for c in r) for r in self.positive]
        self.index = {r: k for k, r in enumerate(self.roots)}

    def form(self, a, b):
        return sum(a[i] * self.gram[i][j] * b[j] for i in range(self.rank) for j in range(self.rank))

    def norm(self, a):
        return self.form(a, a)

    def pairing(self, a, b):
        """<a, b^vee> = 2(a,b)/(b,b)."""
        return 2 * self.form(a, b) / self.form(b, b)

    def _positive_roots(self):
        n = self.rank
        simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        found = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for r in layer:
                for i in range(n):
                    # alpha_i string through r: p - q = -<r, alpha_i^vee>
                    q = 0
                    s = tuple(r[k] - (1 if k == i else 0) for k in range(n))
                    while s in found:
                        q += 1
                        s = tuple(s[k] - (1 if k == i else 0) for k in range(n))
                    pair = sum(r[k] * self.cartan[k][i] for k in range(n))
                    if q - pair > 0:
                        t = tuple(r[k] + (1 if k == i else 0) for k in range(n))
                        if t not in found:
                            found.add(t)
                            nxt.append(t)
            layer = nxt
        return sorted(found, key=lambda r: (sum(r), r))

    def is_root(self, r):
        return tuple(r) in self.index

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def height(self, r):
        return sum(r)

    def is_long(self, r):
        return self.norm(r) == max(self.lengths)

    def highest_root(self):
        return self.positive[-1]

    def evaluate(self, r, h):
        """r(h) where h is given by its values on simple roots."""
        return sum(c * v for c, v in zip(r, h))

    def dominate(self, h):
        """Conjugate a cocharacter (values on simple roots) into the dominant chamber."""
        h = list(h)
        changed = True
        while changed:
            changed = False
            for i in range(self.rank):
                if h[i] < 0:
                    hi = h[i]
                    for j in range(self.rank):
                        h[j] = h[j] - self.cartan[j][i] * hi
                    changed = True
        return tuple(h)


def components(rs, subset):
    """Connected components of the Dynkin subdiagram on ``subset`` (zero based indices)."""
    subset = sorted(subset)
    seen = set()
    comps = []
    for s in subset:
        if s in seen:
            continue
        stack = [s]
        comp = []
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in subset:
                if y not in seen and rs.cartan[x][y] != 0:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def subsystem_roots(rs, subset):
    """Positive roots of rs supported on ``subset``."""
    sset = set(subset)
    return [r for r in rs.positive if all(c == 0 or i in sset for i, c in enumerate(r))]


if __name__ == "__main__":
    for name in ["G2", "F4", "E6", "E7", "E8", "D4"]:
        rs = RootSystem(name)
        print(name, len(rs.positive), rs.highest_root())
