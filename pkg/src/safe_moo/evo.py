"""Generic generational EA machinery shared by both coevolving populations.

Genomes are rows of a float array; fitness is always maximized.  Every
operator draws from an explicit numpy Generator, and a generation consumes
the stream in a fixed order (per offspring pair: parent 1 tournament,
parent 2 tournament, crossover roll, cut point if crossing, then one
mutation roll plus optional gene index and replacement value per child), so
whole runs replay bit-identically from their seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class EvolutionParams:
    """Run settings; the defaults are the benchmark configuration."""

    solution_pop_size: int = 500
    objfn_pop_size: int = 150
    generations: int = 3000
    tournament_size: int = 5
    crossover_rate: float = 0.8
    mutation_prob: float = 0.4
    elite_count: int = 2
    archive_capacity: int = 1000
    novelty_k: int = 15
    seed: int = 0

    def validate(self) -> None:
        """Raise ValueError naming every field that is out of range."""
        bad = []
        if self.solution_pop_size < 1:
            bad.append("solution_pop_size must be >= 1")
        if self.objfn_pop_size < 1:
            bad.append("objfn_pop_size must be >= 1")
        if self.generations < 0:
            bad.append("generations must be >= 0")
        smallest_pop = min(self.solution_pop_size, self.objfn_pop_size)
        if not 1 <= self.tournament_size <= smallest_pop:
            bad.append("tournament_size must be in [1, population size]")
        if not 0.0 <= self.crossover_rate <= 1.0:
            bad.append("crossover_rate must be in [0, 1]")
        if not 0.0 <= self.mutation_prob <= 1.0:
            bad.append("mutation_prob must be in [0, 1]")
        if not 0 <= self.elite_count < smallest_pop:
            bad.append("elite_count must be in [0, population size)")
        if self.archive_capacity < 0:
            bad.append("archive_capacity must be >= 0")
        if self.novelty_k < 1:
            bad.append("novelty_k must be >= 1")
        if bad:
            raise ValueError("invalid parameters: " + "; ".join(bad))


def make_rng(seed: int) -> np.random.Generator:
    """Deterministic PCG64 stream; same seed, same sequence, any platform."""
    return np.random.default_rng(seed)


def init_solutions(
    lo: np.ndarray, hi: np.ndarray, count: int, rng: np.random.Generator
) -> np.ndarray:
    """(count, len(lo)) genomes, each gene uniform in [lo[i], hi[i]]."""
    return rng.uniform(lo, hi, size=(count, len(lo)))


def init_objfns(count: int, rng: np.random.Generator) -> np.ndarray:
    """(count, 2) weighting genomes [a, b], both uniform in [0, 1]."""
    return rng.uniform(0.0, 1.0, size=(count, 2))


def tournament_select(fitness, size: int, rng: np.random.Generator) -> int:
    """Index of the best of `size` contestants drawn with replacement.

    Ties go to the earliest-drawn contestant.
    """
    f = np.asarray(fitness, dtype=float)
    if f.shape[0] == 0:
        raise ValueError("tournament over an empty population")
    contestants = rng.integers(0, f.shape[0], size=size)
    return int(contestants[np.argmax(f[contestants])])


def crossover(
    parent1, parent2, rate: float, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    """Single-point crossover with probability `rate`, else parent copies.

    The cut point is uniform in {1, .., L-1}, so two-gene genomes always
    cross at position 1.
    """
    p1 = np.asarray(parent1, dtype=float)
    p2 = np.asarray(parent2, dtype=float)
    if p1.shape != p2.shape or p1.ndim != 1:
        raise ValueError("parents must be 1-d arrays of equal length")
    if rng.random() < rate and p1.shape[0] >= 2:
        cut = int(rng.integers(1, p1.shape[0]))
        c1 = np.concatenate((p1[:cut], p2[cut:]))
        c2 = np.concatenate((p2[:cut], p1[cut:]))
        return c1, c2
    return p1.copy(), p2.copy()


def mutate(
    genome, prob: float, lo: np.ndarray, hi: np.ndarray, rng: np.random.Generator
) -> np.ndarray:
    """With probability `prob`, redraw one uniformly chosen gene from its domain.

    One roll per individual; the fresh draw may coincide with the old value.
    Always returns a copy.
    """
    g = np.array(genome, dtype=float)
    if g.shape[0] != len(lo):
        raise ValueError("genome length does not match domain arrays")
    if rng.random() < prob:
        idx = int(rng.integers(0, g.shape[0]))
        g[idx] = rng.uniform(lo[idx], hi[idx])
    return g


def next_generation(
    genomes: np.ndarray,
    fitness: np.ndarray,
    params: EvolutionParams,
    lo: np.ndarray,
    hi: np.ndarray,
    rng: np.random.Generator,
) -> np.ndarray:
    """Breed the next population of the same size.

    The top `elite_count` genomes (ties to the lower index) are copied
    unchanged into the first slots; the rest are filled pairwise with
    tournament parents -> crossover -> mutation.  When one slot is left,
    a full pair is generated and the second child dropped.
    """
    pop = np.asarray(genomes, dtype=float)
    fit = np.asarray(fitness, dtype=float)
    n = len(pop)
    if n == 0 or len(fit) != n:
        raise ValueError("population and fitness sizes must match and be > 0")
    if params.elite_count >= n:
        raise ValueError("elite_count must be smaller than the population")

    elite_idx = np.argsort(-fit, kind="stable")[: params.elite_count]
    out = [pop[i].copy() for i in elite_idx]
    while len(out) < n:
        i = tournament_select(fit, params.tournament_size, rng)
        j = tournament_select(fit, params.tournament_size, rng)
        c1, c2 = crossover(pop[i], pop[j], params.crossover_rate, rng)
        out.append(mutate(c1, params.mutation_prob, lo, hi, rng))
        out.append(mutate(c2, params.mutation_prob, lo, hi, rng))
    return np.vstack(out[:n])
