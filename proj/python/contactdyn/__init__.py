"""Contact Hamiltonian dynamics: dissipative models, hybrid leap-frog
integration, contact Poisson brackets and trajectory diagnostics."""

from ._contactdyn import *  # noqa: F401,F403
from ._contactdyn import __version__  # noqa: F401
