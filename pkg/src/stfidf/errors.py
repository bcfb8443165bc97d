"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid configuration: bad pipeline string, out-of-range parameter,
    inconsistent stage list, vocab size not above the alphabet, and similar
    caller mistakes. The CLI maps this to exit code 1."""


class DataError(ValueError):
    """Broken or missing data: unreadable corpus, malformed model or index
    file, schema violation in a dataset file. The CLI maps this to exit
    code 2."""
