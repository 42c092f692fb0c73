"""Bipartite divisibility matchings between degree multisets.

A perfect matching pairs every left degree with a distinct right degree
that divides it.  When none exists the failure is certified by a Hall
violator: a subset of one side adjacent to strictly fewer vertices on
the other side.  The smallest violator is reported, scanning the right
side before the left at each size so a deficient right subset (degrees
that divide nothing on the left) is preferred as the witness.
"""

from itertools import combinations

from .errors import InternalCheckError

_EXHAUSTIVE_LIMIT = 20


class MatchingOutcome:
    """Either a perfect divisibility matching or its refutation."""

    __slots__ = ("ok", "pairs", "violator_side", "violator", "reason")

    def __init__(self, ok, pairs=None, violator_side=None, violator=None,
                 reason=None):
        self.ok = ok
        self.pairs = pairs
        self.violator_side = violator_side
        self.violator = violator
        self.reason = reason

    def __repr__(self):
        if self.ok:
            return f"MatchingOutcome(pairs={list(self.pairs)})"
        return (
            f"MatchingOutcome({self.reason}:"
            f" {self.violator_side} {self.violator})"
        )


def divisibility_matching(left, right):
    """Match each left degree to a distinct right degree dividing it."""
    left = tuple(left)
    right = tuple(right)
    if len(left) != len(right):
        return MatchingOutcome(
            False,
            violator_side="right" if len(right) > len(left) else "left",
            violator=tuple(sorted(right if len(right) > len(left) else left)),
            reason="size mismatch",
        )
    n = len(left)
    adj = [
        tuple(
            j
            for j in sorted(range(n), key=lambda j: (right[j], j))
            if left[i] % right[j] == 0
        )
        for i in range(n)
    ]
    match_of_right = [None] * n
    match_of_left = [None] * n

    def augment(i, seen):
        for j in adj[i]:
            if j in seen:
                continue
            seen.add(j)
            if match_of_right[j] is None or augment(match_of_right[j], seen):
                match_of_right[j] = i
                match_of_left[i] = j
                return True
        return False

    for i in sorted(range(n), key=lambda i: (left[i], i)):
        augment(i, set())
    if all(j is not None for j in match_of_left):
        pairs = tuple((i, match_of_left[i]) for i in range(n))
        _check_matching(left, right, pairs)
        return MatchingOutcome(True, pairs=pairs)
    side, subset = _hall_violator(left, right, adj)
    degrees = right if side == "right" else left
    witness = tuple(sorted(degrees[i] for i in subset))
    _check_violator(left, right, adj, side, subset)
    return MatchingOutcome(
        False, violator_side=side, violator=witness, reason="hall violator"
    )


def _check_matching(left, right, pairs):
    lefts = sorted(i for i, _ in pairs)
    rights = sorted(j for _, j in pairs)
    if lefts != list(range(len(left))) or rights != list(range(len(right))):
        raise InternalCheckError("matching is not a bijection")
    for i, j in pairs:
        if left[i] % right[j]:
            raise InternalCheckError("matched degree does not divide")


def _neighbor_count(adj_for_side, subset):
    seen = set()
    for i in subset:
        seen.update(adj_for_side[i])
    return len(seen)


def _hall_violator(left, right, adj):
    n = len(left)
    radj = [tuple(i for i in range(n) if j in adj[i]) for j in range(n)]
    if n <= _EXHAUSTIVE_LIMIT:
        for size in range(1, n + 1):
            for side, nbrs in (("right", radj), ("left", adj)):
                for subset in combinations(range(n), size):
                    if _neighbor_count(nbrs, subset) < size:
                        return side, subset
        raise InternalCheckError(
            "matching failed but no Hall violator exists"
        )
    # Too many subsets to scan: fall back to the deficiency witness from
    # the matching itself, without the minimality promise.
    return _koenig_violator(left, adj)


def _koenig_violator(left, adj):
    n = len(left)
    match_of_right = [None] * n
    match_of_left = [None] * n

    def augment(i, seen):
        for j in adj[i]:
            if j in seen:
                continue
            seen.add(j)
            if match_of_right[j] is None or augment(match_of_right[j], seen):
                match_of_right[j] = i
                match_of_left[i] = j
                return True
        return False

    for i in range(n):
        augment(i, set())
    free = [i for i in range(n) if match_of_left[i] is None]
    reachable = set(free)
    frontier = list(free)
    while frontier:
        i = frontier.pop()
        for j in adj[i]:
            owner = match_of_right[j]
            if owner is not None and owner not in reachable:
                reachable.add(owner)
                frontier.append(owner)
    return "left", tuple(sorted(reachable))


def _check_violator(left, right, adj, side, subset):
    n = len(left)
    if side == "left":
        nbrs = adj
    else:
        nbrs = [tuple(i for i in range(n) if j in adj[i]) for j in range(n)]
    if _neighbor_count(nbrs, subset) >= len(subset):
        raise InternalCheckError("reported Hall violator is not deficient")
