"""primelab: prime arithmetic in the plane, quaternions, and octonions,
with Goldbach sweeps, prime-matrix spectra, prime graphs, zeta machinery,
and cellular automata on prime configurations."""

__version__ = "0.1.0"

from .ratkernel import CapacityError, is_prime, sieve  # noqa: F401
from .planarith import EisensteinInt, GaussianInt  # noqa: F401
from .hyperarith import OctInt, QuatInt  # noqa: F401
