"""SAFE: commensalistic coevolution of solutions and objective functions,
benchmarked on the two-objective ZDT problems."""

__version__ = "0.1.0"

from .engine import (
    NoveltyArchive,
    RunResult,
    SafeState,
    init_state,
    run,
    score_objfns,
    score_solutions,
    step,
    update_archive,
)
from .evo import EvolutionParams, make_rng
from .metrics import IgdResult, igd, summarize
from .pareto import FrontEntry, ParetoFront, dominates
from .zdt import PROBLEMS, GeneDomain, domain_bounds, domains, evaluate, true_front

__all__ = [
    "EvolutionParams",
    "FrontEntry",
    "GeneDomain",
    "IgdResult",
    "NoveltyArchive",
    "PROBLEMS",
    "ParetoFront",
    "RunResult",
    "SafeState",
    "domain_bounds",
    "domains",
    "dominates",
    "evaluate",
    "igd",
    "init_state",
    "make_rng",
    "run",
    "score_objfns",
    "score_solutions",
    "step",
    "summarize",
    "true_front",
    "update_archive",
]
