"""Exception hierarchy.  Every error carries enough context to print a one-line diagnostic."""


class TopgenError(Exception):
    """Base class."""


# input errors (CLI exit code 2)
class InvalidInput(TopgenError):
    pass


class LabelSyntaxError(InvalidInput):
    """Malformed label text (the grammar's SyntaxError; renamed to avoid the builtin)."""


class UnknownFamily(InvalidInput):
    pass


class UnknownClass(InvalidInput):
    def __init__(self, group, label):
        super().__init__(f"{group} has no class {label}")
        self.group, self.label = group, label


class UnknownSubgroup(InvalidInput):
    pass


class UnknownGroup(InvalidInput):
    pass


class TwoInvolutionsUnsupported(InvalidInput):
    pass


class NotOrderP(InvalidInput):
    def __init__(self, label, p):
        super().__init__(f"class {label} has no elements of order {p}")
        self.label, self.p = label, p


class TupleTooSmall(InvalidInput):
    pass


class SizeMismatch(InvalidInput):
    pass


class NoGraphAutomorphism(InvalidInput):
    pass


class NegativeDimension(InvalidInput):
    pass


# data gaps (exit code 3)
class DataGap(TopgenError):
    pass


class MissingData(DataGap):
    def __init__(self, field, where=""):
        super().__init__(f"missing {field}" + (f" for {where}" if where else ""))
        self.field = field


class MissingTauData(DataGap):
    pass


class MissingPosetData(DataGap):
    pass


class MissingBound(DataGap):
    pass


# dataset errors raised while loading
class DatasetError(TopgenError):
    pass


class ParseError(DatasetError):
    def __init__(self, file, line, msg):
        super().__init__(f"{file}:{line}: {msg}")
        self.file, self.line = file, line


class DanglingReference(DatasetError):
    pass


class DuplicateRow(DatasetError):
    pass


class RouteDisagreement(TopgenError):
    def __init__(self, verdicts):
        super().__init__("routes disagree: " + ", ".join(f"{k}={v}" for k, v in verdicts.items()))
        self.verdicts = verdicts
