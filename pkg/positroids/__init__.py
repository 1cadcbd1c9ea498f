from .core.affperm import AffinePermutation, perm_new, classify, length, enumerate_perms, orbit_decomposition, bruhat_leq, covers
from .core.rankmat import CyclicRankMatrix, r_of_perm, perm_of_r, check_axioms, r_of_matrix, f_of_matrix
from .core.bundles import BundleType, Summand, bundle_of_perm, A_of_bundle, f_of_A, end_dim, membership
from .core.poisson import bivector, skew_rank, leaf_report, mp_pairing, kernel_basis
from .core.chart import chart_bivector, schouten_jacobiator
from .core.linalg import GrassmannPoint

from .scripts.configure import configure
from .scripts.stratify import stratify
from .scripts.bundle import bundle
from .scripts.enumerate import enumerate_strata
from .scripts.verify import verify

from importlib.metadata import version
__version__ = version("positroids")
