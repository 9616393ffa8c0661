"""Unipotent class labels: parsing, rendering, ordering and the graph-automorphism action.

Grammar (ASCII)::

    label := atom+ | '(' atom+ ')' deco
    deco  := '^(' INT ')' | '_' INT
    atom  := '~'? FAMILY INT ('^' INT)? ('(' ('a'|'b') INT ')')?
"""

from dataclasses import dataclass

from .errors import LabelSyntaxError, MissingTauData, UnknownClass, UnknownFamily

FAMILIES = "ABCDEFG"
# ranks that occur in class labels of the exceptional groups
RANKS = {"A": range(1, 9), "B": range(2, 5), "C": range(3, 5), "D": range(4, 9),
         "E": range(6, 9), "F": (4,), "G": (2,)}
TAU_PAIRS = {("G2", 3), ("F4", 2)}


@dataclass(frozen=True, order=True)
class LabelPart:
    family: str
    tilde: bool
    rank: int
    power: int = 1
    inner: tuple = ()  # () or (mark, k) with mark 'a' or 'b'

    def key(self):
        return (self.family, self.tilde, self.rank, self.power, self.inner)

    def render(self):
        s = ("~" if self.tilde else "") + f"{self.family}{self.rank}"
        if self.power != 1:
            s += f"^{self.power}"
        if self.inner:
            s += f"({self.inner[0]}{self.inner[1]})"
        return s


@dataclass(frozen=True)
class ClassLabel:
    parts: tuple
    decoration: tuple = ()  # () or ('sup', k) or ('sub', k)

    def key(self):
        deco = () if not self.decoration else (0 if self.decoration[0] == "sup" else 1,
                                               self.decoration[1])
        return (tuple(p.key() for p in self.parts), deco)

    def __lt__(self, other):
        return self.key() < other.key()

    def __str__(self):
        return format_label(self)


class _Reader:
    def __init__(self, text):
        self.s, self.i = text, 0

    def peek(self):
        return self.s[self.i] if self.i < len(self.s) else ""

    def eat(self, ch):
        if self.peek() != ch:
            raise LabelSyntaxError(f"expected {ch!r} at {self.i} in {self.s!r}")
        self.i += 1

    def integer(self):
        j = self.i
        while self.peek().isdigit():
            self.i += 1
        if j == self.i or (self.s[j] == "0"):
            raise LabelSyntaxError(f"expected a positive integer at {j} in {self.s!r}")
        return int(self.s[j:self.i])

    def atom(self):
        tilde = False
        if self.peek() == "~":
            self.i += 1
            tilde = True
        fam = self.peek()
        if not fam.isalpha() or not fam.isupper():
            raise LabelSyntaxError(f"expected a family letter at {self.i} in {self.s!r}")
        self.i += 1
        rank = self.integer()
        if fam not in FAMILIES or rank not in RANKS[fam]:
            raise UnknownFamily(f"{fam}{rank} is outside the label alphabet")
        power = 1
        if self.peek() == "^" and self.s[self.i + 1:self.i + 2] != "(":
            self.i += 1
            power = self.integer()
        inner = ()
        if self.peek() == "(" and self.s[self.i + 1:self.i + 2] in ("a", "b"):
            self.i += 1
            mark = self.s[self.i]
            self.i += 1
            inner = (mark, self.integer())
            self.eat(")")
        return LabelPart(fam, tilde, rank, power, inner)

    def atoms(self, stop):
        out = [self.atom()]
        while self.peek() and self.peek() != stop:
            out.append(self.atom())
        return tuple(out)


def parse_label(text):
    if not isinstance(text, str) or not text.strip():
        raise LabelSyntaxError("empty label")
    s = "".join(text.split())
    if not s.isascii():
        raise LabelSyntaxError(f"non-ASCII label {text!r}")
    r = _Reader(s)
    if r.peek() == "(":
        r.i += 1
        parts = r.atoms(")")
        r.eat(")")
        if r.peek() == "^":
            r.i += 1
            r.eat("(")
            deco = ("sup", r.integer())
            r.eat(")")
        elif r.peek() == "_":
            r.i += 1
            deco = ("sub", r.integer())
        else:
            raise LabelSyntaxError(f"parenthesised group without decoration in {text!r}")
        label = ClassLabel(parts, deco)
    else:
        label = ClassLabel(r.atoms(""))
    if r.i != len(s):
        raise LabelSyntaxError(f"trailing text at {r.i} in {text!r}")
    return label


def format_label(label):
    body = "".join(p.render() for p in label.parts)
    if not label.decoration:
        return body
    kind, k = label.decoration
    return f"({body})^({k})" if kind == "sup" else f"({body})_{k}"


def _as_label(x):
    return x if isinstance(x, ClassLabel) else parse_label(x)


def sort_labels(labels):
    return sorted((_as_label(x) for x in labels), key=ClassLabel.key)


def tau_image(catalog, group, p, label):
    """Image under the graph automorphism; the identity unless (group, p) is (G2,3) or (F4,2)."""
    label = _as_label(label)
    catalog.require_class(group, label)
    if (group, p) not in TAU_PAIRS:
        return label
    image = catalog.tau.get((group, p), {}).get(label)
    if image is None:
        raise MissingTauData(f"no graph-automorphism image of {format_label(label)} in "
                             f"{group} at p={p}")
    return image


@dataclass(frozen=True)
class CanonicalTuple:
    group: str
    p: int
    labels: tuple

    def __str__(self):
        return "(" + ",".join(format_label(x) for x in self.labels) + ")"

    @property
    def t(self):
        return len(self.labels)


def _lex(labels):
    return tuple(x.key() for x in labels)


def canonical_tuple(catalog, group, p, labels):
    labels = [_as_label(x) for x in labels]
    if not labels:
        raise UnknownClass(group, "<empty tuple>")
    for x in labels:
        catalog.require_class(group, x)
    plain = tuple(sort_labels(labels))
    if (group, p) in TAU_PAIRS:
        image = tuple(sort_labels(tau_image(catalog, group, p, x) for x in labels))
        if _lex(image) < _lex(plain):
            plain = image
    return CanonicalTuple(group, p, plain)


def tuple_variants(catalog, group, p, labels):
    """The sorted tuple and, where the graph automorphism acts, its sorted image."""
    labels = [_as_label(x) for x in labels]
    out = [tuple(sort_labels(labels))]
    if (group, p) in TAU_PAIRS:
        img = tuple(sort_labels(tau_image(catalog, group, p, x) for x in labels))
        if img != out[0]:
            out.append(img)
    return out
