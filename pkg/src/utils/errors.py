"""
Exception hierarchy shared by all etabench packages
"""


class EtaBenchError(Exception):
    """Base class for every error raised on purpose by etabench"""


class InternalError(EtaBenchError):
    """An impossible value shape was reached; the elaborator should have prevented it"""


class BenchError(EtaBenchError):
    """Benchmark harness failure (invalid suite, nondeterministic verdicts)"""
