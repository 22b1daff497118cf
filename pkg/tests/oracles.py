"""Independent brute-force oracles, deliberately written with plain Python
loops and math.* so they share no code path with the implementations they
check."""

from __future__ import annotations

import itertools
import math


def zdt_objectives_scalar(problem: str, genome) -> tuple[float, float]:
    """Scalar re-derivation of the ZDT objective formulas."""
    x = [float(v) for v in genome]
    k = len(x)
    f1 = x[0]
    if problem == "zdt4":
        g = 1.0 + 10.0 * (k - 1)
        for xi in x[1:]:
            g += xi * xi - 10.0 * math.cos(4.0 * math.pi * xi)
    else:
        g = 1.0 + 9.0 / (k - 1) * sum(x[1:])
    r = f1 / g
    if problem == "zdt1" or problem == "zdt4":
        f2 = 1.0 - math.sqrt(r)
    elif problem == "zdt2":
        f2 = 1.0 - r * r
    elif problem == "zdt3":
        f2 = 1.0 - math.sqrt(r) - r * math.sin(10.0 * math.pi * f1)
    else:
        raise ValueError(problem)
    return f1, f2


def dominates_min(u, v) -> bool:
    return (
        u[0] <= v[0]
        and u[1] <= v[1]
        and (u[0] < v[0] or u[1] < v[1])
    )


def brute_nondominated(points) -> list[int]:
    """Indices of the non-dominated subset of a point sequence, collapsing
    duplicate points to the earliest occurrence."""
    pts = [(float(p[0]), float(p[1])) for p in points]
    keep = []
    for i, p in enumerate(pts):
        dominated = any(dominates_min(q, p) for q in pts)
        duplicate = any(pts[j] == p for j in range(i))
        if not dominated and not duplicate:
            keep.append(i)
    return keep


def brute_igd(true_front, produced_front) -> float:
    total = 0.0
    for v in true_front:
        best = math.inf
        for p in produced_front:
            d = math.hypot(float(v[0]) - float(p[0]), float(v[1]) - float(p[1]))
            if d < best:
                best = d
        total += best
    return total / len(true_front)


def brute_solution_fitness(problem: str, genomes, objfns, eps: float) -> list[float]:
    """Per-solution fitness: best reciprocal weighted-sum score over all
    weightings, objectives recomputed from scratch."""
    out = []
    for genome in genomes:
        f1, f2 = zdt_objectives_scalar(problem, genome)
        best = -math.inf
        for a, b in objfns:
            s = float(a) + float(b)
            if s > 0.0:
                an, bn = float(a) / s, float(b) / s
            else:
                an, bn = 0.5, 0.5
            score = 1.0 / max(an * f1 + bn * f2, eps)
            if score > best:
                best = score
        out.append(best)
    return out


def brute_novelty(objfns, archive, k: int) -> list[float]:
    """Sort-based exhaustive k-nearest-neighbor novelty."""
    pop = [(float(a), float(b)) for a, b in objfns]
    arch = [(float(a), float(b)) for a, b in archive]
    out = []
    for i, (a1, b1) in enumerate(pop):
        others = [p for j, p in enumerate(pop) if j != i] + arch
        dists = sorted(
            math.sqrt((a1 - a2) ** 2 + (b1 - b2) ** 2) for a2, b2 in others
        )
        kk = min(k, len(dists))
        out.append(sum(dists[:kk]) / kk if kk else 0.0)
    return out


def exact_tournament_probs(n: int, size: int) -> list[float]:
    """P(individual i wins) for distinct fitness equal to rank, drawn with
    replacement, ties to the earliest draw, by full enumeration of draws."""
    wins = [0] * n
    for draw in itertools.product(range(n), repeat=size):
        best = max(draw, key=lambda i: i)  # fitness == index
        wins[best] += 1
    total = n**size
    return [w / total for w in wins]
