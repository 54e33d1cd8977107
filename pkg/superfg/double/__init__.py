from . import dataclasses, moment, exactness
from .dataclasses import DoublePoint
from .moment import dirac_identities, moment_residual, solve_moment
from .exactness import exactness_check, omega_a_invariance
