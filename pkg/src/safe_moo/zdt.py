"""The two-objective ZDT benchmark problems zdt1..zdt4 over 30 real genes.

Both objectives are minimized.  With k = 30 genes and x1 the first gene:

    zdt1:  f1 = x1,  g = 1 + 9/(k-1) * sum(x2..xk),  f2 = 1 - sqrt(f1/g)
    zdt2:  as zdt1 except  f2 = 1 - (f1/g)^2
    zdt3:  as zdt1 except  f2 = 1 - sqrt(f1/g) - (f1/g) * sin(10*pi*f1)
    zdt4:  as zdt1 except  g = 1 + 10(k-1) + sum(xi^2 - 10*cos(4*pi*xi), i=2..k)

Genes live in [0, 1], except zdt4 where genes 2..30 live in [-5, 5].  Since
g >= 1 for every in-domain genome, f1/g never divides by zero and all
objective values are finite.

The optimal fronts are attained at g = 1 (genes 2..30 all zero):
zdt1/zdt4 follow f2 = 1 - sqrt(f1), zdt2 follows f2 = 1 - f1^2, and zdt3
traces the non-dominated subset of f2 = 1 - sqrt(f1) - f1*sin(10*pi*f1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

NUM_GENES = 30

PROBLEMS: tuple[str, ...] = ("zdt1", "zdt2", "zdt3", "zdt4")


@dataclass(frozen=True)
class GeneDomain:
    """Closed interval [lo, hi] that one gene must stay inside."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError(f"empty gene domain [{self.lo}, {self.hi}]")

    def contains(self, value: float) -> bool:
        return self.lo <= value <= self.hi


def check_problem(problem: str) -> str:
    """Return `problem` if it is one of zdt1..zdt4, else raise ValueError."""
    if problem not in PROBLEMS:
        raise ValueError(
            f"unknown problem {problem!r}; expected one of {', '.join(PROBLEMS)}"
        )
    return problem


def domains(problem: str) -> list[GeneDomain]:
    """Per-gene domains: [0,1]^30, except zdt4 which is [0,1] x [-5,5]^29."""
    check_problem(problem)
    if problem == "zdt4":
        return [GeneDomain(0.0, 1.0)] + [GeneDomain(-5.0, 5.0)] * (NUM_GENES - 1)
    return [GeneDomain(0.0, 1.0)] * NUM_GENES


def domain_bounds(problem: str) -> tuple[np.ndarray, np.ndarray]:
    """The same domains as two (NUM_GENES,) arrays (lo, hi) for array code."""
    ds = domains(problem)
    lo = np.array([d.lo for d in ds])
    hi = np.array([d.hi for d in ds])
    return lo, hi


def evaluate_batch(problem: str, genomes: np.ndarray) -> np.ndarray:
    """Evaluate an (n, 30) array of genomes into an (n, 2) array of objectives.

    Raises ValueError if any gene is outside its domain; an out-of-domain
    gene can only be produced by a broken variation operator, so this is
    treated as a usage error rather than clamped.
    """
    check_problem(problem)
    x = np.asarray(genomes, dtype=float)
    if x.ndim != 2 or x.shape[1] != NUM_GENES:
        raise ValueError(f"expected shape (n, {NUM_GENES}), got {x.shape}")
    lo, hi = domain_bounds(problem)
    if np.any(x < lo) or np.any(x > hi):
        raise ValueError(f"gene outside its {problem} domain")

    f1 = x[:, 0]
    tail = x[:, 1:]
    if problem == "zdt4":
        g = 1.0 + 10.0 * (NUM_GENES - 1) + np.sum(
            tail**2 - 10.0 * np.cos(4.0 * np.pi * tail), axis=1
        )
    else:
        g = 1.0 + 9.0 / (NUM_GENES - 1) * np.sum(tail, axis=1)
    ratio = f1 / g
    if problem == "zdt2":
        f2 = 1.0 - ratio**2
    elif problem == "zdt3":
        f2 = 1.0 - np.sqrt(ratio) - ratio * np.sin(10.0 * np.pi * f1)
    else:
        f2 = 1.0 - np.sqrt(ratio)
    return np.column_stack((f1, f2))


def evaluate(problem: str, genome: np.ndarray) -> tuple[float, float]:
    """Objective values (f1, f2) of a single 30-gene genome."""
    x = np.asarray(genome, dtype=float)
    if x.shape != (NUM_GENES,):
        raise ValueError(f"expected shape ({NUM_GENES},), got {x.shape}")
    out = evaluate_batch(problem, x[None, :])
    return float(out[0, 0]), float(out[0, 1])


def _nondominated_sweep(front: np.ndarray) -> np.ndarray:
    # front sorted by f1 ascending with unique f1; keep strict f2 improvements
    keep = np.empty(len(front), dtype=bool)
    keep[0] = True
    prefix_min = np.minimum.accumulate(front[:, 1])
    keep[1:] = front[1:, 1] < prefix_min[:-1]
    return front[keep]


def true_front(problem: str, num_points: int = 1000) -> np.ndarray:
    """Uniform sample of the analytic optimal front, shape (<= num_points, 2).

    Rows are mutually non-dominated and sorted by ascending f1.  zdt3's
    optimal curve is non-monotone, so it is oversampled 10x, reduced to its
    non-dominated subset, then thinned back to at most num_points rows;
    the other problems return exactly num_points rows.
    """
    check_problem(problem)
    if num_points < 2:
        raise ValueError("num_points must be >= 2")
    if problem == "zdt3":
        t = np.linspace(0.0, 1.0, 10 * num_points)
        f2 = 1.0 - np.sqrt(t) - t * np.sin(10.0 * np.pi * t)
        pts = _nondominated_sweep(np.column_stack((t, f2)))
        if len(pts) > num_points:
            pick = np.unique(
                np.round(np.linspace(0, len(pts) - 1, num_points)).astype(int)
            )
            pts = pts[pick]
        return pts
    t = np.linspace(0.0, 1.0, num_points)
    if problem == "zdt2":
        f2 = 1.0 - t**2
    else:
        f2 = 1.0 - np.sqrt(t)
    return np.column_stack((t, f2))
