"""Klein-zone scattering, square-well spectra, and vacuum currents for the
one-dimensional Dirac equation."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:  # extension built in-tree, not installed as a package
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
