"""Passive archive of mutually non-dominated solutions (minimization).

The front is the algorithm's output: every scored solution is offered to it,
dominated offers are ignored, and admitted offers evict whatever they
dominate.  The front itself is never consulted for fitness or selection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def dominates(u, v) -> bool:
    """True iff u is no worse than v in both objectives and better in one."""
    u1, u2 = float(u[0]), float(u[1])
    v1, v2 = float(v[0]), float(v[1])
    return u1 <= v1 and u2 <= v2 and (u1 < v1 or u2 < v2)


@dataclass(frozen=True)
class FrontEntry:
    """One non-dominated point: objective pair plus the genome behind it."""

    objectives: tuple[float, float]
    genome: np.ndarray


class ParetoFront:
    """Unbounded set of mutually non-dominated (objectives, genome) pairs.

    Entries are kept sorted by ascending f1 (which, for a non-dominated
    2-objective set, also means strictly descending f2).  Duplicate
    objective vectors collapse to the first one inserted.
    """

    def __init__(self, genome_length: int = 0):
        self._objs = np.empty((0, 2))
        self._genomes = np.empty((0, genome_length))

    def __len__(self) -> int:
        return len(self._objs)

    @property
    def objectives(self) -> np.ndarray:
        """(len, 2) array of objective pairs, read-only, sorted by f1."""
        view = self._objs.view()
        view.setflags(write=False)
        return view

    @property
    def genomes(self) -> np.ndarray:
        """(len, genome_length) array aligned with `objectives`, read-only."""
        view = self._genomes.view()
        view.setflags(write=False)
        return view

    def entries(self) -> list[FrontEntry]:
        return [
            FrontEntry((float(o[0]), float(o[1])), g.copy())
            for o, g in zip(self._objs, self._genomes)
        ]

    def insert(self, objectives, genome=()) -> bool:
        """Offer one candidate; returns True if it entered the front.

        A candidate dominated by (or equal to) an existing entry leaves the
        front unchanged; otherwise it is added and every entry it dominates
        is removed.
        """
        f1, f2 = float(objectives[0]), float(objectives[1])
        g = np.asarray(genome, dtype=float).reshape(-1)
        if g.shape[0] != self._genomes.shape[1]:
            raise ValueError(
                f"genome length {g.shape[0]} != front's {self._genomes.shape[1]}"
            )
        # dominated-or-equal: some entry is <= in both objectives
        if np.any((self._objs[:, 0] <= f1) & (self._objs[:, 1] <= f2)):
            return False
        keep = ~((self._objs[:, 0] >= f1) & (self._objs[:, 1] >= f2))
        objs = self._objs[keep]
        pos = int(np.searchsorted(objs[:, 0], f1))
        self._objs = np.insert(objs, pos, (f1, f2), axis=0)
        self._genomes = np.insert(self._genomes[keep], pos, g, axis=0)
        return True

    def insert_many(self, objectives, genomes) -> None:
        """Offer a batch of candidates; equivalent to inserting one by one.

        Single vectorized pass, used on the hot path where every scored
        solution of a generation is offered at once.
        """
        F = np.atleast_2d(np.asarray(objectives, dtype=float))
        G = np.asarray(genomes, dtype=float).reshape(len(F), -1)
        if F.shape[1] != 2:
            raise ValueError(f"expected (n, 2) objectives, got {F.shape}")
        if G.shape[1] != self._genomes.shape[1]:
            raise ValueError(
                f"genome length {G.shape[1]} != front's {self._genomes.shape[1]}"
            )
        all_f = np.vstack((self._objs, F))
        if len(all_f) == 0:
            return
        all_g = np.vstack((self._genomes, G))
        # Sort by f1, then f2, then insertion order (existing entries first)
        # so that among equal objective vectors the oldest wins, and sweep:
        # a point survives iff its f2 strictly improves on everything at a
        # smaller-or-equal f1.
        order = np.arange(len(all_f))
        idx = np.lexsort((order, all_f[:, 1], all_f[:, 0]))
        f2s = all_f[idx, 1]
        keep = np.empty(len(idx), dtype=bool)
        keep[0] = True
        prefix_min = np.minimum.accumulate(f2s)
        keep[1:] = f2s[1:] < prefix_min[:-1]
        sel = idx[keep]
        self._objs = all_f[sel]
        self._genomes = all_g[sel]
