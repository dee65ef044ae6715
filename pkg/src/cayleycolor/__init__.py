"""CayleyColor - colorings of Cayley graphs on groups and gyrogroups."""

from importlib.metadata import PackageNotFoundError, version as _version  # noqa: I001

try:
    __version__ = _version("cayleycolor")
except PackageNotFoundError:
    __version__ = "0.0.0"
