"""Package metadata.

This submodule exposes package metadata read from the installed
distribution. Reports written by the command-line interface embed the
version string.

Exports:
    __module__: Name of the package.
    __package__: Name of the package.
    __version__: Version of the package.
"""

from importlib.metadata import version

__all__: list[str] = [
    "__module__",
    "__package__",
    "__version__",
]

__title__: str = "Strong Blocking Sets"

__package__: str = __title__.lower().replace(" ", "_")
__module__: str = __package__

__version__: str = version(__package__)
