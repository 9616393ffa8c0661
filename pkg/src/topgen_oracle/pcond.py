"""Conditions on the characteristic and first-match p-regime maps."""

import re
from dataclasses import dataclass

REPRESENTATIVE_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)

# bad primes per group; "good" means none of these
BAD_PRIMES = {"G2": {2, 3}, "F4": {2, 3}, "E6": {2, 3}, "E7": {2, 3}, "E8": {2, 3, 5}}


def is_prime(n):
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class PCondition:
    kind: str  # all | at_least | exactly | in_set | not_equal | good | never
    value: tuple = ()

    def admits(self, p, group=None):
        if self.kind == "all":
            return True
        if self.kind == "never":
            return False
        if self.kind == "at_least":
            return p >= self.value[0]
        if self.kind == "exactly":
            return p == self.value[0]
        if self.kind == "in_set":
            return p in self.value
        if self.kind == "not_equal":
            return p != self.value[0]
        if self.kind == "good":
            return p not in BAD_PRIMES[group]
        raise AssertionError(self.kind)

    def __str__(self):
        if self.kind == "all":
            return "all"
        if self.kind == "never":
            return "-"
        if self.kind == "at_least":
            return f"p>={self.value[0]}"
        if self.kind == "exactly":
            return f"p={self.value[0]}"
        if self.kind == "not_equal":
            return f"p!={self.value[0]}"
        if self.kind == "good":
            return "good"
        return "p in {" + ",".join(map(str, self.value)) + "}"


ALL = PCondition("all")
_SET = re.compile(r"p in \{(\d+(?:,\d+)*)\}$")


def parse_pcondition(text):
    """Raises ValueError on anything outside the grammar."""
    t = text.strip()
    if t == "all":
        return ALL
    if t == "-":
        return PCondition("never")
    if t == "good":
        return PCondition("good")
    for prefix, kind in (("p>=", "at_least"), ("p!=", "not_equal"), ("p=", "exactly")):
        if t.startswith(prefix) and t[len(prefix):].isdigit():
            return PCondition(kind, (int(t[len(prefix):]),))
    m = _SET.match(t)
    if m:
        return PCondition("in_set", tuple(sorted(int(x) for x in m.group(1).split(","))))
    raise ValueError(f"bad p-condition {text!r}")


@dataclass(frozen=True)
class Regime:
    """First-match map from p-conditions to values (None marks a known gap)."""
    entries: tuple  # of (PCondition, value)

    def at(self, p, group=None):
        for cond, value in self.entries:
            if cond.admits(p, group):
                return value
        return None

    def values(self):
        return [v for _, v in self.entries]

    def __str__(self):
        return ";".join(f"{c}:{'-' if v is None else v}" for c, v in self.entries)


def parse_regime(text, convert=int):
    """'p=2:36;all:30' or a bare value (meaning all:value); '-' alone is the empty regime."""
    t = text.strip()
    if t == "-":
        return Regime(())
    if ":" not in t:
        return Regime(((ALL, convert(t)),))
    out = []
    for chunk in t.split(";"):
        cond, _, val = chunk.rpartition(":")
        out.append((parse_pcondition(cond), None if val == "-" else convert(val)))
    return Regime(tuple(out))
