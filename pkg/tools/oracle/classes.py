"""Nilpotent orbits in characteristic zero via Bala-Carter: Levi subsystem plus distinguished
parabolic, identified by weighted Dynkin diagram.  Labels follow the house grammar."""

from fractions import Fraction
from itertools import combinations, product

from roots import RootSystem, components, subsystem_roots

DISTINGUISHED_NAMES = {
    "E8": ["E8", "E8(a1)", "E8(a2)", "E8(a3)", "E8(a4)", "E8(b4)", "E8(a5)", "E8(b5)",
           "E8(a6)", "E8(b6)", "E8(a7)"],
    "E7": ["E7", "E7(a1)", "E7(a2)", "E7(a3)", "E7(a4)", "E7(a5)"],
    "E6": ["E6", "E6(a1)", "E6(a3)"],
    "F4": ["F4", "F4(a1)", "F4(a2)", "F4(a3)"],
    "G2": ["G2", "G2(a1)"],
    "C3": ["C3", "C3(a1)"],
}

FAMILY_RANK = {"E": 0, "F": 1, "G": 1, "D": 2, "C": 3, "B": 4, "A": 5}


def solve(mat, rhs):
    n = len(mat)
    m = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(mat, rhs)]
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


def cocharacter(rs, subset, values):
    """h in the coroot span of ``subset`` with alpha_i(h) = values[i] for i in subset."""
    sub = list(subset)
    mat = [[rs.cartan[i][j] for j in sub] for i in sub]
    coeffs = solve(mat, values)
    h = []
    for k in range(rs.rank):
        v = sum(c * rs.cartan[k][j] for c, j in zip(coeffs, sub))
        h.append(int(v) if v.denominator == 1 else v)
    return tuple(h)


def component_type(rs, comp):
    k = len(comp)
    if rs.name == "G2" and k == 2:
        return "G", 2, False
    longs = [rs.lengths[i] == max(rs.lengths) for i in comp]
    if all(longs) or not any(longs):
        tilde = not any(longs) and len(set(rs.lengths)) > 1
        degrees = {i: sum(1 for j in comp if j != i and rs.cartan[i][j] != 0) for i in comp}
        branch = [i for i in comp if degrees[i] == 3]
        if not branch:
            return "A", k, tilde
        b = branch[0]
        arms = []
        for nb in [j for j in comp if j != b and rs.cartan[b][j] != 0]:
            length, prev, cur = 1, b, nb
            while True:
                nxt = [j for j in comp if j not in (prev, cur) and rs.cartan[cur][j] != 0]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return "D", k, False
        return "E", k, False
    if k == 4:
        return "F", 4, False
    nlong = sum(longs)
    if k == 2 or nlong > k - nlong:
        return "B", k, False
    return "C", k, False


def grading_counts(rs, roots, h):
    counts = {}
    for r in roots:
        v = rs.evaluate(r, h)
        counts[v] = counts.get(v, 0) + 1
    return counts


def distinguished_labelings(rs, comp):
    """All {0,2} labelings of a component that define distinguished parabolics,
    with the orbit dimension inside the component, largest orbit first."""
    pos = subsystem_roots(rs, comp)
    out = []
    for vals in product([0, 2], repeat=len(comp)):
        h = cocharacter(rs, comp, vals)
        c = grading_counts(rs, pos, h)
        if len(comp) + 2 * c.get(0, 0) == c.get(2, 0):
            dim_orbit = 2 * len(pos) - 2 * c.get(0, 0) - c.get(1, 0)
            out.append((dim_orbit, vals))
    out.sort(key=lambda x: -x[0])
    return out


def atom_name(rs, comp, index):
    fam, k, tilde = component_type(rs, comp)
    base = ("~" if tilde else "") + f"{fam}{k}"
    key = f"{fam}{k}"
    if index == 0:
        return base
    if key in DISTINGUISHED_NAMES:
        return DISTINGUISHED_NAMES[key][index]
    if fam == "D":
        return f"{base}(a{index})"
    raise ValueError(f"no name for distinguished orbit {index} of {key}")


def format_atoms(atoms):
    """atoms: list of (family, rank, tilde, name).  Collapse repeats into powers."""
    keyed = sorted(atoms, key=lambda a: (FAMILY_RANK[a[0]], -a[1], a[2], a[3]))
    out = []
    i = 0
    while i < len(keyed):
        j = i
        while j < len(keyed) and keyed[j] == keyed[i]:
            j += 1
        name = keyed[i][3]
        mult = j - i
        if mult > 1:
            assert "(" not in name
            name = f"{name}^{mult}"
        out.append(name)
        i = j
    return "".join(out)


class Orbit:
    def __init__(self, label, wdd, dim, subset, values):
        self.label = label
        self.wdd = wdd
        self.dim = dim
        self.subset = subset
        self.values = values

    def __repr__(self):
        return f"Orbit({self.label}, dim={self.dim}, wdd={self.wdd})"


def orbits(name):
    rs = RootSystem(name)
    N = len(rs.positive)
    by_wdd = {}
    comp_cache = {}
    for size in range(1, rs.rank + 1):
        for subset in combinations(range(rs.rank), size):
            comps = components(rs, subset)
            choices = []
            for comp in comps:
                key = tuple(comp)
                if key not in comp_cache:
                    comp_cache[key] = distinguished_labelings(rs, comp)
                choices.append([(idx, vals) for idx, (_, vals) in enumerate(comp_cache[key])])
            for combo in product(*choices):
                values = {}
                atoms = []
                for comp, (idx, vals) in zip(comps, combo):
                    for node, v in zip(comp, vals):
                        values[node] = v
                    fam, k, tilde = component_type(rs, comp)
                    atoms.append((fam, k, tilde, atom_name(rs, comp, idx)))
                h = cocharacter(rs, subset, [values[i] for i in subset])
                wdd = rs.dominate(h)
                label = format_atoms(atoms)
                if wdd in by_wdd:
                    assert by_wdd[wdd].label == label, (by_wdd[wdd], label)
                    continue
                c = grading_counts(rs, rs.positive, wdd)
                dim = 2 * N - 2 * c.get(0, 0) - c.get(1, 0)
                by_wdd[wdd] = Orbit(label, wdd, dim, subset, [values[i] for i in subset])
    result = sorted(by_wdd.values(), key=lambda o: (o.dim, o.label))
    # duplicated labels (E7) get (1)/(2) decorations by increasing dimension
    names = {}
    for o in result:
        names.setdefault(o.label, []).append(o)
    for base, group in names.items():
        if len(group) > 1:
            group.sort(key=lambda o: o.dim)
            for k, o in enumerate(group, start=1):
                o.label = f"({base})^({k})"
    return rs, result


if __name__ == "__main__":
    import sys
    for name in sys.argv[1:] or ["G2", "F4", "E6", "E7", "E8"]:
        rs, obs = orbits(name)
        print(name, len(obs))
        for o in obs:
            print("  ", o.label, o.dim, "".join(map(str, o.wdd)))
