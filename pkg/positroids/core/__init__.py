from .errors import *
from .linalg import GrassmannPoint, as_fraction, fraction_str, nullspace, rank, rref
from .binmat import BinaryPeriodicMatrix
from .affperm import *
from .rankmat import *
from .bundles import *
from .poisson import *
from .chart import *
from .sampling import make_rng, random_point, degenerate_point, sample_points, random_invertible
from .verify import SUITES, run_suites
