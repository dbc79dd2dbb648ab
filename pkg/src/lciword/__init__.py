"""Longest common weakly increasing subsequences of words over a finite
ordered alphabet: exact solvers by three independent routes, directed
last-passage percolation equivalents, the analytic occurrence laws, and
Monte Carlo simulation of the Brownian max/min limit functionals.
"""

from ._backend import BACKEND, HAVE_NUMBA
from .exact import LciResult, lci_banded, lci_bruteforce, lci_dp, lci_representation, weak_lis
from .laws import LetterLaw, limit_covariance
from .limits import (
    BrownianPathPair,
    FunctionalSpec,
    eval_functional,
    sample_functional_batch,
    sample_path_pair,
    sample_prelimit_batch,
)
from .percolation import WeightLattice, indicator_lattice, lpp_t2, lpp_t3, lpp_tp
from .stats import SampleBatch, ecdf, empirical_pgf, ks_two_sample, moment_check
from .words import Alphabet, StarCounts, Word, WordStats, star_counts

__all__ = [
    "Alphabet",
    "BACKEND",
    "BrownianPathPair",
    "FunctionalSpec",
    "HAVE_NUMBA",
    "LciResult",
    "LetterLaw",
    "SampleBatch",
    "StarCounts",
    "WeightLattice",
    "Word",
    "WordStats",
    "ecdf",
    "empirical_pgf",
    "eval_functional",
    "indicator_lattice",
    "ks_two_sample",
    "lci_banded",
    "lci_bruteforce",
    "lci_dp",
    "lci_representation",
    "limit_covariance",
    "lpp_t2",
    "lpp_t3",
    "lpp_tp",
    "moment_check",
    "sample_functional_batch",
    "sample_path_pair",
    "sample_prelimit_batch",
    "star_counts",
    "weak_lis",
]
__version__ = "0.1.0"
