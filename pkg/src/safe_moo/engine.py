"""The SAFE coevolutionary loop.

Two populations evolve side by side: candidate solutions to a ZDT problem,
and candidate objective functions, each a weighting pair [a, b] over the two
objectives.  Every generation each solution is scored by every weighting and
keeps the best (highest) score as its fitness.  The weightings themselves
are commensal: their fitness is genotypic novelty (mean distance to the k
nearest neighbors among the current weighting population and an archive of
past novel weightings) and never depends on the solutions.

A passively tracked Pareto front collects every scored solution; it is the
run's output and plays no part in fitness or selection.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass

import numpy as np

from . import zdt
from .evo import EvolutionParams, init_objfns, init_solutions, make_rng, next_generation
from .metrics import igd
from .pareto import ParetoFront

# Floor for the weighted sum before taking its reciprocal.  zdt3 can drive
# f2 (and hence the sum) to zero or below; capping keeps scores finite and
# monotone in the sum up to saturation.
SCORE_EPS = 1e-12

_OBJFN_LO = np.zeros(2)
_OBJFN_HI = np.ones(2)


def normalized_weights(objfns) -> np.ndarray:
    """Rows rescaled to sum to 1; an all-zero row becomes (0.5, 0.5)."""
    w = np.atleast_2d(np.asarray(objfns, dtype=float))
    s = w.sum(axis=1, keepdims=True)
    out = w / np.where(s > 0.0, s, 1.0)
    out[s[:, 0] == 0.0] = 0.5
    return out


def objfn_scores(objectives, objfns) -> np.ndarray:
    """(n, m) score matrix: reciprocal of each weighting's weighted sum of
    each solution's objectives.  Smaller weighted sums score higher."""
    f = np.atleast_2d(np.asarray(objectives, dtype=float))
    wn = normalized_weights(objfns)
    ws = np.multiply.outer(f[:, 0], wn[:, 0]) + np.multiply.outer(f[:, 1], wn[:, 1])
    return 1.0 / np.maximum(ws, SCORE_EPS)


def score_solutions(
    solutions, objfns, problem: str
) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate and score a solutions population against all weightings.

    Returns (objectives, fitness): the (n, 2) objective values, computed
    once per solution, and the (n,) fitness where each solution keeps the
    best score any current weighting grants it.
    """
    sols = np.atleast_2d(np.asarray(solutions, dtype=float))
    w = np.atleast_2d(np.asarray(objfns, dtype=float))
    if len(sols) == 0 or len(w) == 0:
        raise ValueError("both populations must be non-empty")
    objectives = zdt.evaluate_batch(problem, sols)
    scores = objfn_scores(objectives, w)
    return objectives, scores.max(axis=1)


class NoveltyArchive:
    """Bounded FIFO store of past weighting genomes; oldest evicted first."""

    def __init__(self, capacity: int = 1000):
        if capacity < 0:
            raise ValueError("capacity must be >= 0")
        self.capacity = capacity
        self._entries: deque[np.ndarray] = deque(maxlen=capacity)

    def __len__(self) -> int:
        return len(self._entries)

    def append(self, genome) -> None:
        self._entries.append(np.array(genome, dtype=float))

    def as_array(self) -> np.ndarray:
        if not self._entries:
            return np.empty((0, 2))
        return np.array(self._entries)


def score_objfns(objfns, archive: NoveltyArchive, k: int) -> np.ndarray:
    """Novelty of each weighting: mean Euclidean genome distance to its k
    nearest neighbors among the other current weightings plus the archive.

    Fewer than k neighbors available: average over all of them.  No
    neighbors at all (population of one, empty archive): novelty 0.
    """
    x = np.atleast_2d(np.asarray(objfns, dtype=float))
    m = len(x)
    if m == 0:
        raise ValueError("objective-function population must be non-empty")
    a = archive.as_array()
    cand = np.vstack((x, a)) if len(a) else x
    kk = min(k, len(cand) - 1)
    if kk <= 0:
        return np.zeros(m)
    d = np.sqrt(((x[:, None, :] - cand[None, :, :]) ** 2).sum(axis=2))
    np.fill_diagonal(d[:, :m], np.inf)  # self is not a neighbor
    smallest = np.partition(d, kk - 1, axis=1)[:, :kk]
    return smallest.mean(axis=1)


def update_archive(archive: NoveltyArchive, objfns, novelty) -> None:
    """Admit the generation's single most novel weighting (ties to the
    lowest index); FIFO eviction handles the capacity."""
    x = np.atleast_2d(np.asarray(objfns, dtype=float))
    nov = np.asarray(novelty, dtype=float)
    if len(x) == 0 or len(nov) != len(x):
        raise ValueError("need one novelty value per weighting")
    archive.append(x[int(np.argmax(nov))])


@dataclass
class SafeState:
    """Everything one run carries between generations."""

    solutions: np.ndarray
    objfns: np.ndarray
    archive: NoveltyArchive
    front: ParetoFront
    rng: np.random.Generator
    generation: int = 0


def init_state(problem: str, params: EvolutionParams) -> SafeState:
    """Fresh seeded state: random populations, empty archive, empty front.

    Stream order: solution genomes first, then weighting genomes.
    """
    zdt.check_problem(problem)
    rng = make_rng(params.seed)
    lo, hi = zdt.domain_bounds(problem)
    solutions = init_solutions(lo, hi, params.solution_pop_size, rng)
    objfns = init_objfns(params.objfn_pop_size, rng)
    return SafeState(
        solutions=solutions,
        objfns=objfns,
        archive=NoveltyArchive(params.archive_capacity),
        front=ParetoFront(genome_length=zdt.NUM_GENES),
        rng=rng,
    )


def step(state: SafeState, problem: str, params: EvolutionParams) -> SafeState:
    """Advance one generation in place (and return the state).

    Order: score solutions, score weightings, offer all scored solutions to
    the front, admit the most novel weighting to the archive, then breed
    both populations.
    """
    objectives, sol_fitness = score_solutions(state.solutions, state.objfns, problem)
    novelty = score_objfns(state.objfns, state.archive, params.novelty_k)
    state.front.insert_many(objectives, state.solutions)
    update_archive(state.archive, state.objfns, novelty)
    lo, hi = zdt.domain_bounds(problem)
    state.solutions = next_generation(
        state.solutions, sol_fitness, params, lo, hi, state.rng
    )
    state.objfns = next_generation(
        state.objfns, novelty, params, _OBJFN_LO, _OBJFN_HI, state.rng
    )
    state.generation += 1
    return state


@dataclass
class RunResult:
    """Outcome of one seeded run."""

    problem: str
    seed: int
    igd_trace: np.ndarray  # (generations + 1,), entry g covers generations 0..g
    front_sizes: np.ndarray  # (generations + 1,) front size alongside the trace
    front: ParetoFront
    elapsed_s: float

    @property
    def final_igd(self) -> float:
        return float(self.igd_trace[-1])


def run(problem: str, params: EvolutionParams, tf_points: int = 1000) -> RunResult:
    """Execute a full run: `params.generations` bred generations from random
    initialization, tracking the front and its igd after every generation's
    scoring.  The trace has generations + 1 entries (generation 0 included);
    the final population is scored into the front but not bred further.
    """
    zdt.check_problem(problem)
    params.validate()
    t0 = time.perf_counter()
    tf = zdt.true_front(problem, tf_points)
    state = init_state(problem, params)
    trace = []
    sizes = []
    for _ in range(params.generations):
        step(state, problem, params)
        trace.append(igd(tf, state.front.objectives).value)
        sizes.append(len(state.front))
    final_objectives = zdt.evaluate_batch(problem, state.solutions)
    state.front.insert_many(final_objectives, state.solutions)
    trace.append(igd(tf, state.front.objectives).value)
    sizes.append(len(state.front))
    return RunResult(
        problem=problem,
        seed=params.seed,
        igd_trace=np.array(trace),
        front_sizes=np.array(sizes, dtype=int),
        front=state.front,
        elapsed_s=time.perf_counter() - t0,
    )
