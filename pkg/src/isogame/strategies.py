"""Player strategies, game simulation, and stage instrumentation.

The greedy Dominator always plays a legal vertex marking the most new
vertices; the modified greedy additionally prefers non-leaves among the
maximizers. The extremal Staller answers inside the component Dominator
just played in, on disjoint unions of 3-vertex paths/triangles and
6-vertex paths/cycles. Simulation tags every move with its stage: a
Dominator move is burst stage (1) while some legal move still marks two
or more new vertices, trickle stage (2) once every legal move marks
exactly one; Staller inherits the stage of Dominator's previous move.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .engine import GameState, Player, new_game
from .errors import (GameStateError, IllegalMoveError, ProtocolViolationError,
                     SnapshotDomainError, StrategyDomainError)
from .graph import (Graph, closed_neighborhood, induced_subgraph, iter_bits,
                    open_neighborhood, vertex_set, vertices_of)
from .solver import DEFAULT_SOLVER_CAP, Solver, check_solvable, shared_cache

STAGE_BURST = 1
STAGE_TRICKLE = 2


class Strategy:
    """Deterministic choice rule mapping a game state to a playable vertex.

    ``needs_last_move`` marks strategies whose choice depends on the
    opponent's previous move (they read ``history[-1]``); everything else
    is a pure function of the played set.
    """

    name = "strategy"
    needs_last_move = False

    def __init__(self):
        self._pending_note: str | None = None

    def choose(self, state: GameState, history: tuple[int, ...]) -> int:
        raise NotImplementedError

    def _flag(self, note: str) -> None:
        self._pending_note = note

    def pop_note(self) -> str | None:
        note, self._pending_note = self._pending_note, None
        return note


def _mark_gains(state: GameState) -> list[tuple[int, int]]:
    """(vertex, new-mark count) for every playable vertex, ascending index."""
    cache = shared_cache(state.graph)
    playable = cache.playable(state.played)
    if playable == 0:
        raise GameStateError("no moves in a terminal state")
    return [(v, cache.mark_gain(state.played, v)) for v in iter_bits(playable)]


def greedy_move(state: GameState) -> int:
    """Playable vertex marking the most new vertices; ties to lowest index."""
    gains = _mark_gains(state)
    best = max(gain for _, gain in gains)
    return next(v for v, gain in gains if gain == best)


def modified_greedy_move(state: GameState) -> int:
    """Greedy, preferring non-leaves among the maximizers when any exist."""
    gains = _mark_gains(state)
    best = max(gain for _, gain in gains)
    maximizers = [v for v, gain in gains if gain == best]
    for v in maximizers:
        if state.graph.degree(v) >= 2:
            return v
    return maximizers[0]


class GreedyDominator(Strategy):
    name = "greedy"

    def choose(self, state, history):
        return greedy_move(state)


class ModifiedGreedyDominator(Strategy):
    name = "modified-greedy"

    def choose(self, state, history):
        return modified_greedy_move(state)


class RandomStrategy(Strategy):
    """Uniform choice among playable vertices, derandomized per position so
    simulations are reproducible and memoization-safe."""

    name = "random"

    def __init__(self, seed: int):
        super().__init__()
        self.seed = seed

    def choose(self, state, history):
        playable = vertices_of(state.playable())
        if not playable:
            raise GameStateError("no moves in a terminal state")
        rng = random.Random(self.seed * (1 << state.graph.n) + state.played)
        return rng.choice(playable)


class OptimalStrategy(Strategy):
    """Plays the exact solver's move for whichever side is to move."""

    name = "optimal"

    def __init__(self, cap: int = DEFAULT_SOLVER_CAP):
        super().__init__()
        self.cap = cap
        self._solvers: dict[Graph, Solver] = {}

    def _solver(self, g: Graph) -> Solver:
        solver = self._solvers.get(g)
        if solver is None:
            solver = self._solvers[g] = Solver(g, self.cap)
        return solver

    def choose(self, state, history):
        return self._solver(state.graph).best_move(state.played, state.mover)


# -- extremal Staller --------------------------------------------------------

_SUPPORTED_COMPONENTS = ("P3", "C3", "P6", "C6")


def _component_kind(g: Graph, comp: int) -> str:
    members = vertices_of(comp)
    order = len(members)
    inside = sum(1 for u, v in g.edges if comp >> u & 1 and comp >> v & 1)
    degrees = sorted(g.adj[v].bit_count() for v in members)
    if order == 3 and inside == 2:
        return "P3"
    if order == 3 and inside == 3:
        return "C3"
    if order == 6 and inside == 5 and degrees == [1, 1, 2, 2, 2, 2]:
        return "P6"
    if order == 6 and inside == 6 and degrees == [2] * 6:
        return "C6"
    raise StrategyDomainError(
        f"unsupported component of order {order}; the extremal Staller plays "
        f"unions of {', '.join(_SUPPORTED_COMPONENTS)} only")


class ExtremalStaller(Strategy):
    """Replies in the component of Dominator's previous move.

    In a 3-vertex component she plays the vertex marking everything left
    there; in a 6-cycle the vertex at distance 3 from Dominator's move; in
    a 6-path her solver-optimal reply within the component. If the
    component offers no legal reply she falls back to her globally optimal
    move and flags the trace.
    """

    name = "extremal"
    needs_last_move = True

    def __init__(self, cap: int = DEFAULT_SOLVER_CAP):
        super().__init__()
        self.cap = cap
        self._kinds: dict[Graph, tuple[str, ...]] = {}
        self._component_solvers: dict[tuple[Graph, int], tuple[Solver, tuple[int, ...]]] = {}
        self._global_solvers: dict[Graph, Solver] = {}

    def _component_kinds(self, g: Graph) -> tuple[str, ...]:
        kinds = self._kinds.get(g)
        if kinds is None:
            kinds = tuple(_component_kind(g, comp) for comp in g.components)
            self._kinds[g] = kinds
        return kinds

    def _component_solver(self, g: Graph, comp: int) -> tuple[Solver, tuple[int, ...]]:
        entry = self._component_solvers.get((g, comp))
        if entry is None:
            sub, originals = induced_subgraph(g, comp)
            entry = self._component_solvers[(g, comp)] = (Solver(sub, self.cap), originals)
        return entry

    def _component_optimal(self, state: GameState, comp: int) -> int:
        solver, originals = self._component_solver(state.graph, comp)
        local_played = vertex_set(originals.index(v)
                                  for v in vertices_of(state.played & comp))
        local = solver.best_move(local_played, Player.STALLER)
        return originals[local]

    def choose(self, state, history):
        g = state.graph
        kinds = self._component_kinds(g)
        if state.mover is not Player.STALLER:
            raise StrategyDomainError("the extremal strategy plays Staller only")
        if not history:
            raise StrategyDomainError(
                "the extremal strategy answers a Dominator move; none was made")
        last = history[-1]
        comp_index = next(i for i, comp in enumerate(g.components)
                          if comp >> last & 1)
        comp = g.components[comp_index]
        in_component = state.playable() & comp
        if in_component == 0:
            self._flag("component finished; fell back to the global optimal move")
            solver = self._global_solvers.get(g)
            if solver is None:
                solver = self._global_solvers[g] = Solver(g, self.cap)
            return solver.best_move(state.played, Player.STALLER)
        kind = kinds[comp_index]
        if kind in ("P3", "C3"):
            cache = shared_cache(g)
            gains = [(v, cache.mark_gain(state.played, v))
                     for v in iter_bits(in_component)]
            best = max(gain for _, gain in gains)
            return next(v for v, gain in gains if gain == best)
        if kind == "C6":
            antipode = next(v for v in vertices_of(comp)
                            if g.distance(last, v) == 3)
            if in_component >> antipode & 1:
                return antipode
        return self._component_optimal(state, comp)


def staller_extremal_move(state: GameState, history: tuple[int, ...]) -> int:
    """One-shot form of :class:`ExtremalStaller` for a single position."""
    return ExtremalStaller().choose(state, history)


# -- simulation and traces ---------------------------------------------------

@dataclass(frozen=True)
class MoveRecord:
    vertex: int
    mover: Player
    new_marks: int
    stage: int
    note: str | None = None


@dataclass(frozen=True)
class GameTrace:
    graph: Graph
    first_mover: Player
    moves: tuple[MoveRecord, ...]
    dominator_strategy: str
    staller_strategy: str

    @property
    def t(self) -> int:
        return len(self.moves)

    @property
    def final_played(self) -> int:
        return vertex_set(record.vertex for record in self.moves)

    def played_before(self, index: int) -> int:
        return vertex_set(record.vertex for record in self.moves[:index])


def _burst_available(cache: StateCache, played: int) -> bool:
    """True while some legal move still marks two or more new vertices."""
    return any(cache.mark_gain(played, v) >= 2
               for v in iter_bits(cache.playable(played)))


def simulate(g: Graph, dominator: Strategy, staller: Strategy,
             first_mover: Player = Player.DOMINATOR) -> GameTrace:
    """Play a complete game, recording per-move mark counts and stages."""
    state = new_game(g, first_mover)
    cache = shared_cache(g)
    history: list[int] = []
    records: list[MoveRecord] = []
    last_dominator_stage: int | None = None
    while cache.unmarked(state.played):
        mover = state.mover
        strategy = dominator if mover is Player.DOMINATOR else staller
        v = strategy.choose(state, tuple(history))
        if mover is Player.DOMINATOR:
            stage = STAGE_BURST if _burst_available(cache, state.played) else STAGE_TRICKLE
            last_dominator_stage = stage
        elif last_dominator_stage is not None:
            stage = last_dominator_stage
        else:
            # Staller opens the game: classify by the pre-move position.
            stage = STAGE_BURST if _burst_available(cache, state.played) else STAGE_TRICKLE
        gain = cache.mark_gain(state.played, v) if cache.playable(state.played) >> v & 1 else 0
        try:
            state = state.play(v)
        except IllegalMoveError as exc:
            raise ProtocolViolationError(strategy.name, v, exc.reason) from exc
        history.append(v)
        records.append(MoveRecord(vertex=v, mover=mover, new_marks=gain,
                                  stage=stage, note=strategy.pop_note()))
    return GameTrace(graph=g, first_mover=first_mover, moves=tuple(records),
                     dominator_strategy=dominator.name, staller_strategy=staller.name)


# -- stage snapshot ----------------------------------------------------------

@dataclass(frozen=True)
class StageSnapshot:
    """State at the burst/trickle boundary of a greedy-Dominator game.

    ``remote`` holds the vertices at distance at least 2 from every
    unmarked vertex, i.e. everything outside the unmarked set's closed
    neighborhood.
    """
    played: int
    stage1_dominator_moves: int
    unmarked: int
    unmarked_neighbors: int
    remote: int
    leaf_unmarked: int
    nonleaf_unmarked: int
    boundary_index: int
    total_moves: int

    @property
    def unmarked_count(self) -> int:
        return self.unmarked.bit_count()

    @property
    def leaf_unmarked_count(self) -> int:
        return self.leaf_unmarked.bit_count()


def stage_snapshot(trace: GameTrace) -> StageSnapshot | None:
    """Quantities at the stage boundary, or None if no trickle stage ran."""
    if trace.dominator_strategy not in ("greedy", "modified-greedy"):
        raise SnapshotDomainError(
            f"stage snapshots require a greedy Dominator trace, got "
            f"{trace.dominator_strategy!r}")
    boundary = next((i for i, record in enumerate(trace.moves)
                     if record.stage == STAGE_TRICKLE), None)
    if boundary is None:
        return None
    g = trace.graph
    played = trace.played_before(boundary)
    cache = shared_cache(g)
    unmarked = cache.unmarked(played)
    neighbors = open_neighborhood(g, unmarked)
    remote = g.full_mask & ~closed_neighborhood(g, unmarked)
    leaves = vertex_set(v for v in iter_bits(unmarked) if g.degree(v) == 1)
    return StageSnapshot(
        played=played,
        stage1_dominator_moves=sum(1 for record in trace.moves[:boundary]
                                   if record.mover is Player.DOMINATOR),
        unmarked=unmarked,
        unmarked_neighbors=neighbors,
        remote=remote,
        leaf_unmarked=leaves,
        nonleaf_unmarked=unmarked & ~leaves,
        boundary_index=boundary,
        total_moves=trace.t,
    )


# -- best response against a fixed strategy ---------------------------------

class ForcedGameSolver:
    """Minimax with one side's moves forced by a strategy.

    The free side plays to its own objective (Dominator minimizes, Staller
    maximizes the total move count). For strategies that read the
    opponent's previous move the memo key carries it; everything else keys
    on (played set, mover) alone.
    """

    def __init__(self, g: Graph, strategy: Strategy, fixed_role: Player,
                 cap: int = DEFAULT_SOLVER_CAP):
        check_solvable(g, cap)
        self.graph = g
        self.strategy = strategy
        self.fixed_role = fixed_role
        self.cache = shared_cache(g)
        self._memo: dict[tuple[int, bool, int | None], int] = {}

    def _state(self, played: int, mover: Player) -> GameState:
        first = mover if played.bit_count() % 2 == 0 else mover.other
        return GameState(self.graph, played, first)

    def value_from(self, played: int, mover: Player, last: int | None = None) -> int:
        remember_last = mover is self.fixed_role and self.strategy.needs_last_move
        key = (played, mover is Player.DOMINATOR, last if remember_last else None)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        unmarked, playable = self.cache.info(played)
        if unmarked == 0:
            result = 0
        elif mover is self.fixed_role:
            v = self.strategy.choose(self._state(played, mover),
                                     () if last is None else (last,))
            if not playable >> v & 1:
                raise ProtocolViolationError(self.strategy.name, v, "not-playable")
            result = 1 + self.value_from(played | 1 << v, mover.other, v)
        else:
            dom = mover is Player.DOMINATOR
            best = None
            for v in iter_bits(playable):
                child = 1 + self.value_from(played | 1 << v, mover.other, v)
                if best is None or (child < best if dom else child > best):
                    best = child
            result = best
        self._memo[key] = result
        return result

    def free_side_move(self, played: int, mover: Player, last: int | None = None) -> int:
        """Lowest-index optimal move for the non-forced side."""
        if mover is self.fixed_role:
            raise GameStateError("the forced side has no choice to optimize")
        unmarked, playable = self.cache.info(played)
        if unmarked == 0:
            raise GameStateError("no optimal move in a terminal state")
        target = self.value_from(played, mover, last)
        for v in iter_bits(playable):
            if 1 + self.value_from(played | 1 << v, mover.other, v) == target:
                return v
        raise AssertionError("some child must attain the optimum")


def best_response_value(g: Graph, strategy: Strategy, fixed_role: Player,
                        first_mover: Player = Player.DOMINATOR,
                        cap: int = DEFAULT_SOLVER_CAP) -> int:
    """Game length with ``fixed_role`` forced to ``strategy`` and the other
    side playing its own optimum against it."""
    return ForcedGameSolver(g, strategy, fixed_role, cap).value_from(0, first_mover)


class BestResponseStrategy(Strategy):
    """Plays the exact best response for ``role`` against a declared
    opponent strategy (the opponent in simulation should match it)."""

    name = "best-response"

    def __init__(self, opponent: Strategy, role: Player,
                 cap: int = DEFAULT_SOLVER_CAP):
        super().__init__()
        self.opponent = opponent
        self.role = role
        self.cap = cap
        self._searches: dict[Graph, ForcedGameSolver] = {}

    def choose(self, state, history):
        if state.mover is not self.role:
            raise StrategyDomainError(f"best-response built for {self.role}")
        search = self._searches.get(state.graph)
        if search is None:
            search = ForcedGameSolver(state.graph, self.opponent,
                                      self.role.other, self.cap)
            self._searches[state.graph] = search
        last = history[-1] if history else None
        return search.free_side_move(state.played, state.mover, last)
