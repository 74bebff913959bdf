"""Pseudograph pressing over a finite field.

A pseudograph is a complete symmetric weight function on n vertices: the
diagonal of its weighted adjacency matrix holds vertex (loop) weights and the
off-diagonal entries hold edge weights.  Pressing a vertex v with positive
loop weight a replaces every weight f(x, y) by f(x, y) - f(x, v) f(y, v) / a,
which isolates v and performs one swap-free symmetric elimination step.  A
pressing sequence is successful when the all-zero graph remains, and an order
of all vertices succeeds exactly when the correspondingly permuted adjacency
matrix is positive definite (relaxed, to allow an already-empty tail).

Over GF(2) this specializes to bicolored-graph pressing: diagonal 1 is a blue
vertex, pressing complements the closed neighborhood and flips its colors.

Vertices are 1-indexed everywhere in this module, matching user-facing text.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass, field as dc_field
from typing import Optional

from . import gf, linalg
from .gf import Field
from .linalg import Mat

FIND_ORDER_MAX_N = 10


class PressingError(Exception):
    pass


class NonPositiveLoop(PressingError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} has a non-positive loop weight")
        self.vertex = vertex


class DuplicateVertex(PressingError):
    pass


class IndexOutOfRange(PressingError):
    pass


class SelfLoopEdge(PressingError):
    pass


class NotPermutation(PressingError):
    pass


class NotPressable(PressingError):
    pass


class NothingToUndo(PressingError):
    pass


class SearchSpaceTooLarge(PressingError):
    pass


class Pseudograph:
    """Immutable weighted pseudograph: a symmetric Mat plus vertex count."""

    __slots__ = ("field", "n", "weights")

    def __init__(self, weights: Mat):
        if not weights.is_symmetric():
            raise PressingError("weight matrix must be symmetric")
        self.field = weights.field
        self.n = weights.n_rows
        self.weights = weights

    def weight(self, i: int, j: int):
        """Weight of edge ij (loop when i == j), 1-indexed."""
        self._check_vertex(i)
        self._check_vertex(j)
        return self.weights[i - 1, j - 1]

    def _check_vertex(self, v):
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise IndexOutOfRange(f"vertex {v} not in 1..{self.n}")

    def is_zero(self) -> bool:
        return self.weights.is_zero()

    def pressable(self) -> list:
        """Vertices with positive loop weight, ascending."""
        return [
            v for v in range(1, self.n + 1)
            if gf.is_positive(self.weights[v - 1, v - 1])
        ]

    def __eq__(self, other):
        return isinstance(other, Pseudograph) and self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return f"Pseudograph({self.weights!r})"

    # -- wire format ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "field": self.field.literal(),
            "n": self.n,
            "weights": self.weights.to_json()["rows"],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Pseudograph":
        """Accepts both the weights shape and the GF(2) bicolored shorthand."""
        if "blue" in obj or "edges" in obj:
            field = Field.parse(obj.get("field", "GF(2)"))
            if field.q != 2:
                raise PressingError("bicolored shorthand requires GF(2)")
            return from_bicolored(
                obj["n"],
                obj.get("blue", []),
                [tuple(e) for e in obj.get("edges", [])],
            )
        field = Field.parse(obj["field"])
        return cls(Mat(field, obj["weights"]))


def from_matrix(weights: Mat) -> Pseudograph:
    return Pseudograph(weights)


def from_bicolored(n: int, blue, edges) -> Pseudograph:
    """GF(2) graph: diagonal = blue indicator, off-diagonal = edge indicator."""
    F = Field(2)
    rows = [[0] * n for _ in range(n)]
    for v in blue:
        if not isinstance(v, int) or not 1 <= v <= n:
            raise IndexOutOfRange(f"blue vertex {v} not in 1..{n}")
        rows[v - 1][v - 1] = 1
    for i, j in edges:
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexOutOfRange(f"edge ({i},{j}) out of range 1..{n}")
        if i == j:
            raise SelfLoopEdge(f"edge ({i},{j}) is a self-loop")
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = 1
    return Pseudograph(Mat(F, rows))


def press(G: Pseudograph, v: int) -> Pseudograph:
    """One press at v: g(x, y) = f(x, y) - f(x, v) f(y, v) / f(v, v)."""
    G._check_vertex(v)
    a = G.weights[v - 1, v - 1]
    if not gf.is_positive(a):
        raise NonPositiveLoop(v)
    inv = a.inverse()
    n = G.n
    W = G.weights
    rows = [
        [W[x, y] - W[x, v - 1] * W[y, v - 1] * inv for y in range(n)]
        for x in range(n)
    ]
    return Pseudograph(Mat(G.field, rows))


@dataclass
class PressOutcome:
    status: str  # "success" | "stuck"
    steps_applied: list
    final: Pseudograph
    stuck_vertex: Optional[int] = None


def run_sequence(G: Pseudograph, order) -> PressOutcome:
    """Apply presses in order; stops at the first non-pressable vertex.

    Presses of an already all-zero graph are vacuous (the sequence may be
    longer than necessary); success means the final weights are all zero.
    """
    order = list(order)
    if len(set(order)) != len(order):
        raise DuplicateVertex(f"repeated vertex in {order}")
    for v in order:
        G._check_vertex(v)
    applied = []
    cur = G
    for v in order:
        if cur.is_zero():
            break
        try:
            cur = press(cur, v)
        except NonPositiveLoop:
            return PressOutcome("stuck", applied, cur, stuck_vertex=v)
        applied.append(v)
    if cur.is_zero():
        return PressOutcome("success", applied, cur)
    return PressOutcome("stuck", applied, cur)


def _permuted_weights(G: Pseudograph, order) -> Mat:
    idx = [v - 1 for v in order]
    return Mat(G.field, [[G.weights[i, j] for j in idx] for i in idx])


def _check_permutation(G: Pseudograph, order):
    if sorted(order) != list(range(1, G.n + 1)):
        raise NotPermutation(f"{order} is not a permutation of 1..{G.n}")


def order_is_successful(G: Pseudograph, order) -> bool:
    """Theorem bridge: the order presses successfully iff the permuted
    adjacency matrix is positive definite (relaxed for an all-zero tail)."""
    order = list(order)
    _check_permutation(G, order)
    return linalg.is_positive_definite(_permuted_weights(G, order), relaxed=True)


def instructions_from_cholesky(G: Pseudograph, order) -> list:
    """Press instructions: the support of each row of the upper Cholesky factor.

    Over GF(2) the i-th set is exactly the set of vertices whose color or
    incident edges change when the i-th vertex of the order is pressed.
    """
    order = list(order)
    _check_permutation(G, order)
    A = _permuted_weights(G, order)
    try:
        L = linalg.cholesky_psd(A)
    except linalg.NotPositiveDefinite as e:
        raise NotPressable(f"order {order} is not a successful pressing order") from e
    n = G.n
    return [
        {order[j] for j in range(n) if not L[j, i].is_zero()}
        for i in range(n)
    ]


# -- some-order search -------------------------------------------------------


def gf2_component_pressable(G: Pseudograph) -> bool:
    """Cooper-Davis characterization over GF(2): every connected component
    (edges = nonzero off-diagonal weights) contains a blue vertex."""
    if G.field.q != 2:
        raise PressingError("component characterization applies to GF(2) only")
    n = G.n
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in range(n):
                if y != x and not seen[y] and not G.weights[x, y].is_zero():
                    seen[y] = True
                    stack.append(y)
        if not any(not G.weights[x, x].is_zero() for x in comp):
            return False
    return True


def _gf2_rows(G: Pseudograph):
    return tuple(
        sum(1 << j for j in range(G.n) if not G.weights[i, j].is_zero())
        for i in range(G.n)
    )


def gf2_find_order_bitmask(rows, n):
    """Lexicographically-first successful order for a GF(2) graph given as
    bitmask rows; None when no order succeeds.  Failed states are memoized.

    An initially inert vertex (zero loop, no incident edges) makes the graph
    unpressable: it can never be pressed or touched, so no pressing sequence
    accounts for it.  This matches the component characterization, under
    which an isolated white vertex is a component without a blue vertex.
    """
    if any(r == 0 for r in rows):
        return None
    failed = set()

    def dfs(state):
        if not any(state):
            return []
        if state in failed:
            return None
        for v in range(n):
            if (state[v] >> v) & 1:
                rv = state[v]
                nxt = tuple(r ^ rv if (r >> v) & 1 else r for r in state)
                sub = dfs(nxt)
                if sub is not None:
                    return [v + 1] + sub
        failed.add(state)
        return None

    return dfs(tuple(rows))


def find_order(G: Pseudograph, max_n: int = FIND_ORDER_MAX_N):
    """Depth-first search for the lexicographically first successful order.

    Branches on currently pressable vertices in ascending index order and
    memoizes failed weight matrices; returns None when no order succeeds.
    GF(2) inputs take a bitmask fast path (same search, integer rows).

    A vertex that is inert from the start (zero loop and all-zero edge row)
    can never be pressed or affected, so such graphs report None even though
    their matrices may already be zero; run_sequence, by contrast, counts an
    already-zero graph as trivially successful.
    """
    if G.n > max_n:
        raise SearchSpaceTooLarge(f"n = {G.n} exceeds search bound {max_n}")
    if G.field.q == 2:
        return gf2_find_order_bitmask(_gf2_rows(G), G.n)
    if any(all(e.is_zero() for e in row) for row in G.weights.rows):
        return None
    return completion_order(G, max_n)


def completion_order(G: Pseudograph, max_n: int = FIND_ORDER_MAX_N):
    """Lexicographically-first press sequence taking G to the all-zero graph.

    Unlike find_order there is no inert-vertex rule: vertices that are
    already zeroed out (e.g. pressed earlier in a session) are simply left
    alone, and an already-zero graph completes with the empty sequence.
    """
    if G.n > max_n:
        raise SearchSpaceTooLarge(f"n = {G.n} exceeds search bound {max_n}")
    if G.field.q == 2:
        rows = _gf2_rows(G)
        if not any(rows):
            return []
        # inert vertices never change; strip them so the bitmask search
        # (which rejects zero rows) sees only the live part
        live = [i for i in range(G.n) if rows[i]]
        packed = tuple(
            sum(1 << a for a, x in enumerate(live) if (rows[i] >> x) & 1)
            for i in live
        )
        sub = gf2_find_order_bitmask(packed, len(live))
        return None if sub is None else [live[v - 1] + 1 for v in sub]

    failed = set()

    def dfs(graph):
        if graph.is_zero():
            return []
        key = graph.weights
        if key in failed:
            return None
        for v in graph.pressable():
            sub = dfs(press(graph, v))
            if sub is not None:
                return [v] + sub
        failed.add(key)
        return None

    return dfs(G)


# -- interactive sessions ----------------------------------------------------


@dataclass
class PressSession:
    """Mutable exploration state: graph history plus a press log.

    history always has one more entry than log; consecutive entries are
    related by one legal press.  Single-writer: callers serialize mutation.
    """

    history: list
    log: list
    id: str = dc_field(default_factory=lambda: secrets.token_hex(16))

    @property
    def current(self) -> Pseudograph:
        return self.history[-1]

    @property
    def initial(self) -> Pseudograph:
        return self.history[0]


def session_new(G: Pseudograph) -> PressSession:
    return PressSession(history=[G], log=[])


def session_press(s: PressSession, v: int) -> Pseudograph:
    nxt = press(s.current, v)
    s.history.append(nxt)
    s.log.append(v)
    return nxt


def session_undo(s: PressSession) -> Pseudograph:
    if not s.log:
        raise NothingToUndo("press log is empty")
    s.history.pop()
    s.log.pop()
    return s.current


def session_state(s: PressSession) -> dict:
    """Snapshot: current graph, pressable set, log, and analysis hints."""
    cur = s.current
    remaining = [v for v in range(1, cur.n + 1) if v not in s.log]
    analysis = {
        "pressable": cur.pressable(),
        "pd_in_current_order": order_is_successful(s.initial, s.log + remaining),
    }
    if cur.n <= FIND_ORDER_MAX_N:
        analysis["some_order"] = completion_order(cur)
    else:
        analysis["some_order"] = "too-large"
    return {
        "graph": cur.to_json(),
        "log": list(s.log),
        "pressable": cur.pressable(),
        "finished": cur.is_zero(),
        "analysis": analysis,
    }
