"""Shared exception types."""


class GuardLimitExceeded(Exception):
    """A computational guard (frontier width, enumeration cap) was exceeded."""


class PrecisionError(Exception):
    """A high-precision computation could not certify its result."""
