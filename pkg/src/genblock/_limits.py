import os

DEFAULT_ENUM_LIMIT = 10**7
DEFAULT_INDEX_LIMIT = 10**8


def limit(default):
    """Size guard, overridable through the ``GB_LIMIT_CELLS`` environment variable."""
    env = os.environ.get("GB_LIMIT_CELLS")
    if env:
        return int(env)
    return default
