"""Exception hierarchy shared across the toolkit."""


class XlsentiError(Exception):
    """Base class for all domain errors raised by this package."""


class MalformedRecord(XlsentiError):
    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DuplicateId(XlsentiError):
    pass


class EmptyCorpus(XlsentiError):
    pass


class LanguageMismatch(XlsentiError):
    pass


class MissingClass(XlsentiError):
    pass


class AlignmentError(XlsentiError):
    pass


class SchemaError(XlsentiError):
    pass


class MalformedRow(XlsentiError):
    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class EmptyLexicon(XlsentiError):
    pass


class LengthMismatch(XlsentiError):
    pass


class UnknownCategory(XlsentiError):
    pass
