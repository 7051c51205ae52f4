"""Exact game values by memoized minimax over (played set, mover) states.

Marking depends only on the played set, so legal moves and the remaining
move count are functions of (played set, mover); that Markov property is
what makes the transposition table sound. Dominator minimizes and Staller
maximizes the number of moves in the completed game. All tie-breaks are
lowest vertex index, so values and principal variations are reproducible.
"""

from __future__ import annotations

import os
import weakref
from dataclasses import dataclass

from .engine import GameState, Player, marked_set
from .errors import GameStateError, GraphDomainError, SolverCapError
from .graph import Graph, iter_bits

DEFAULT_SOLVER_CAP = 20
SOLVER_CAP_ENV = "ISOGAME_SOLVER_CAP"

_EXACT, _LOWER, _UPPER = 0, 1, 2


def solver_cap_from_env(default: int = DEFAULT_SOLVER_CAP) -> int:
    raw = os.environ.get(SOLVER_CAP_ENV)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SolverCapError(f"{SOLVER_CAP_ENV} must be an integer, got {raw!r}")


@dataclass(frozen=True)
class GameValue:
    """Optimal game length and a deterministic line achieving it."""
    total_moves: int
    principal_variation: tuple[int, ...]


@dataclass(frozen=True)
class TableStats:
    states: int
    hits: int


class StateCache:
    """Per-graph cache of (unmarked mask, playable mask) keyed by played set."""

    def __init__(self, g: Graph):
        self.graph = g
        self._info: dict[int, tuple[int, int]] = {}

    def info(self, played: int) -> tuple[int, int]:
        cached = self._info.get(played)
        if cached is not None:
            return cached
        g = self.graph
        unmarked = marked_set(g, played).unmarked
        playable = 0
        for v in range(g.n):
            if g.adj[v] & unmarked:
                playable |= 1 << v
        result = (unmarked, playable)
        self._info[played] = result
        return result

    def unmarked(self, played: int) -> int:
        return self.info(played)[0]

    def playable(self, played: int) -> int:
        return self.info(played)[1]

    def mark_gain(self, played: int, v: int) -> int:
        """Number of vertices newly marked by playing ``v``."""
        before = self.unmarked(played)
        after = self.unmarked(played | 1 << v)
        return before.bit_count() - after.bit_count()


_shared_caches: "weakref.WeakKeyDictionary[Graph, StateCache]" = weakref.WeakKeyDictionary()


def shared_cache(g: Graph) -> StateCache:
    """One StateCache per live graph, shared across solvers and strategies."""
    cache = _shared_caches.get(g)
    if cache is None:
        cache = _shared_caches[g] = StateCache(g)
    return cache


def check_solvable(g: Graph, cap: int) -> None:
    if g.n < 2:
        raise GraphDomainError(f"the game needs at least 2 vertices, got n={g.n}")
    if g.min_degree == 0:
        raise GraphDomainError("graphs with isolated vertices have no game value")
    if g.n > cap:
        raise SolverCapError(
            f"n={g.n} exceeds the solver cap {cap}; raise the cap "
            f"(or set {SOLVER_CAP_ENV}) to solve it anyway")


class Solver:
    """Memoized minimax for one graph; shareable across both start variants."""

    def __init__(self, g: Graph, cap: int = DEFAULT_SOLVER_CAP):
        check_solvable(g, cap)
        self.graph = g
        self.cache = shared_cache(g)
        self._memo: dict[tuple[int, bool], int] = {}
        self._hits = 0

    @property
    def stats(self) -> TableStats:
        return TableStats(states=len(self._memo), hits=self._hits)

    def value(self, played: int, mover: Player) -> int:
        """Moves remaining from this position under optimal play."""
        dom = mover is Player.DOMINATOR
        key = (played, dom)
        cached = self._memo.get(key)
        if cached is not None:
            self._hits += 1
            return cached
        unmarked, playable = self.cache.info(played)
        if unmarked == 0:
            result = 0
        else:
            other = mover.other
            best = None
            limit = unmarked.bit_count()
            for v in iter_bits(playable):
                child = 1 + self.value(played | 1 << v, other)
                if best is None or (child < best if dom else child > best):
                    best = child
                # Each move marks >= 1 vertex, so 1 and |unmarked| bracket
                # the remaining-move value; stop once the mover attains it.
                if child == (1 if dom else limit):
                    break
            result = best
        self._memo[key] = result
        return result

    def best_move(self, played: int, mover: Player) -> int:
        """Lowest-index playable vertex attaining the mover's optimum."""
        unmarked, playable = self.cache.info(played)
        if unmarked == 0:
            raise GameStateError("no optimal move in a terminal state")
        target = self.value(played, mover)
        for v in iter_bits(playable):
            if 1 + self.value(played | 1 << v, mover.other) == target:
                return v
        raise AssertionError("some child must attain the minimax value")

    def game_value(self, first_mover: Player) -> GameValue:
        total = self.value(0, first_mover)
        variation = []
        played, mover = 0, first_mover
        while self.cache.unmarked(played):
            v = self.best_move(played, mover)
            variation.append(v)
            played |= 1 << v
            mover = mover.other
        assert len(variation) == total
        return GameValue(total_moves=total, principal_variation=tuple(variation))


class PrunedSolver:
    """Alpha-beta variant; must agree move-for-move in value with Solver.

    The transposition table stores bound flags so entries written under a
    cut window never leak as exact values.
    """

    def __init__(self, g: Graph, cap: int = DEFAULT_SOLVER_CAP):
        check_solvable(g, cap)
        self.graph = g
        self.cache = shared_cache(g)
        self._table: dict[tuple[int, bool], tuple[int, int]] = {}

    def value(self, played: int, mover: Player,
              alpha: int | None = None, beta: int | None = None) -> int:
        if alpha is None:
            alpha, beta = -1, self.graph.n + 1
        dom = mover is Player.DOMINATOR
        key = (played, dom)
        entry = self._table.get(key)
        if entry is not None:
            flag, stored = entry
            if flag == _EXACT:
                return stored
            if flag == _LOWER:
                alpha = max(alpha, stored)
            else:
                beta = min(beta, stored)
            if alpha >= beta:
                return stored
        unmarked, playable = self.cache.info(played)
        if unmarked == 0:
            self._table[key] = (_EXACT, 0)
            return 0
        alpha_in, beta_in = alpha, beta
        other = mover.other
        best = None
        for v in iter_bits(playable):
            child = 1 + self.value(played | 1 << v, other, alpha - 1, beta - 1)
            if best is None or (child < best if dom else child > best):
                best = child
            if dom:
                beta = min(beta, best)
            else:
                alpha = max(alpha, best)
            if alpha >= beta:
                break
        if best <= alpha_in:
            self._table[key] = (_UPPER, best)
        elif best >= beta_in:
            self._table[key] = (_LOWER, best)
        else:
            self._table[key] = (_EXACT, best)
        return best

    def game_value(self, first_mover: Player) -> GameValue:
        total = self.value(0, first_mover)
        variation = []
        played, mover = 0, first_mover
        while self.cache.unmarked(played):
            target = self.value(played, mover)
            for v in iter_bits(self.cache.playable(played)):
                if 1 + self.value(played | 1 << v, mover.other) == target:
                    variation.append(v)
                    break
            played |= 1 << variation[-1]
            mover = mover.other
        return GameValue(total_moves=total, principal_variation=tuple(variation))


def solve(g: Graph, first_mover: Player = Player.DOMINATOR,
          cap: int = DEFAULT_SOLVER_CAP, pruning: bool = False) -> GameValue:
    """Game length under optimal play: the Dominator-start value for
    ``Player.DOMINATOR``, the Staller-start value for ``Player.STALLER``."""
    solver = PrunedSolver(g, cap) if pruning else Solver(g, cap)
    return solver.game_value(first_mover)


def optimal_move(state: GameState, cap: int = DEFAULT_SOLVER_CAP) -> int:
    """The mover's lowest-index optimal vertex in a non-terminal state."""
    solver = Solver(state.graph, cap)
    return solver.best_move(state.played, state.mover)


def cp_gap(g: Graph, cap: int = DEFAULT_SOLVER_CAP) -> int:
    """Staller-start value minus Dominator-start value (signed)."""
    solver = Solver(g, cap)
    return solver.value(0, Player.STALLER) - solver.value(0, Player.DOMINATOR)


def solve_both(g: Graph, cap: int = DEFAULT_SOLVER_CAP) -> tuple[int, int]:
    """(Dominator-start value, Staller-start value) sharing one table."""
    solver = Solver(g, cap)
    return solver.value(0, Player.DOMINATOR), solver.value(0, Player.STALLER)


__all__ = [
    "DEFAULT_SOLVER_CAP", "SOLVER_CAP_ENV", "GameValue", "TableStats",
    "StateCache", "shared_cache", "Solver", "PrunedSolver", "solve", "optimal_move",
    "cp_gap", "solve_both", "solver_cap_from_env",
]
