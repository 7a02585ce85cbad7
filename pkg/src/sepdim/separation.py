"""Separation predicates, payoff enumeration, and ordering searches.

Linear separation: both endpoints of one edge precede both endpoints of the
other.  Circular separation: the four endpoints do not alternate around the
circle.  Enumeration works in "position space": iterating over all maps
vertex -> position visits every ordering, and lets the inner loop index
positions directly.  Reversal duplicates are skipped; every separation verdict
is reversal-invariant, so payoff sets and maxima are unchanged.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from multiprocessing import Pool

from .graphs import EdgePair, Graph, nonincident_pairs

LINEAR_ENUM_CAP = 10
CIRCULAR_ENUM_CAP = 10
INTEGER_LINEAR_CAP = 7
INTEGER_CIRCULAR_CAP = 8
DEFAULT_BNB_BUDGET_S = 60.0

MODES = ("linear", "circular")


class EnumerationCapExceeded(RuntimeError):
    """Requested enumeration is over the configured size cap."""


@dataclass(frozen=True)
class Ordering:
    """A vertex ordering: a permutation of 0..n-1, linear or circular.

    Circular orderings are canonicalized at construction: rotated so the
    smallest label comes first, direction chosen so the second entry is
    smaller than the last.  Rotation and reflection never change a circular
    separation verdict, so canonicalization is free.
    """

    mode: str
    perm: tuple[int, ...]

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        if self.mode == "circular" and n >= 3:
            perm = self.perm
            k = perm.index(min(perm))
            perm = perm[k:] + perm[:k]
            if perm[1] > perm[-1]:
                perm = (perm[0],) + tuple(reversed(perm[1:]))
            object.__setattr__(self, "perm", perm)

    @property
    def n(self) -> int:
        return len(self.perm)

    def positions(self) -> list[int]:
        pos = [0] * len(self.perm)
        for i, v in enumerate(self.perm):
            pos[v] = i
        return pos

    def reversed(self) -> "Ordering":
        return Ordering(self.mode, tuple(reversed(self.perm)))

    def serialize(self) -> str:
        prefix = "lin" if self.mode == "linear" else "circ"
        return prefix + ":" + ",".join(map(str, self.perm))

    @classmethod
    def parse(cls, text: str) -> "Ordering":
        head, _, rest = text.partition(":")
        mode = {"lin": "linear", "circ": "circular"}.get(head)
        if mode is None or not rest:
            raise ValueError(f"cannot parse ordering {text!r}")
        return cls(mode, tuple(int(x) for x in rest.split(",")))


def _linear_separated(pos, a, b, c, d) -> bool:
    pa, pb = pos[a], pos[b]
    if pa > pb:
        pa, pb = pb, pa
    pc, pd = pos[c], pos[d]
    if pc > pd:
        pc, pd = pd, pc
    return pb < pc or pd < pa


def _circular_separated(pos, a, b, c, d) -> bool:
    # Separated iff {c,d} does not alternate with {a,b}: either both or
    # neither of c,d fall inside the arc (pos[a], pos[b]).
    pa, pb = pos[a], pos[b]
    if pa > pb:
        pa, pb = pb, pa
    return (pa < pos[c] < pb) == (pa < pos[d] < pb)


def separates(ordering: Ordering, pair: EdgePair) -> bool:
    """Whether one ordering separates one nonincident edge pair."""
    (a, b), (c, d) = pair
    pos = ordering.positions()
    if ordering.mode == "linear":
        return _linear_separated(pos, a, b, c, d)
    return _circular_separated(pos, a, b, c, d)


def count_separated(ordering: Ordering, pairs, classes=None) -> tuple[int, ...]:
    """Per-class counts of pairs separated by one ordering.

    ``classes`` holds disjoint lists of pair indices (a partition of all
    pairs in the game reduction); None means a single class of all pairs.
    The result is the ordering's payoff vector.
    """
    if classes is None:
        classes = [list(range(len(pairs)))]
    pos = ordering.positions()
    test = _linear_separated if ordering.mode == "linear" else _circular_separated
    counts = []
    for cls in classes:
        c = 0
        for i in cls:
            (a, b), (cc, dd) = pairs[i]
            if test(pos, a, b, cc, dd):
                c += 1
        counts.append(c)
    return tuple(counts)


# ---------------------------------------------------------------------------
# Enumeration internals
# ---------------------------------------------------------------------------

def _pair_specs(pairs, classes):
    """Flatten pairs into (a, b, c, d, class_index) tuples."""
    cls_of = {}
    for k, cls in enumerate(classes):
        for i in cls:
            cls_of[i] = k
    if len(cls_of) != len(pairs):
        raise ValueError("classes must partition the pair list")
    return [
        (p[0][0], p[0][1], p[1][0], p[1][1], cls_of[i])
        for i, p in enumerate(pairs)
    ]


def _singleton_classes(npairs):
    return [[i] for i in range(npairs)]


def _linear_scan(n, specs, nclasses, prefixes):
    """Collect distinct payoff vectors over linear orderings.

    Enumerates position maps; keeps the lexicographically-least witness map
    per vector.  ``prefixes`` restricts the first two entries (worker split).
    Exactly one of each reversal pair is visited: the reversed ordering has
    position map n-1-q, so q[0] (with a q[1] tiebreak for the odd-n center)
    decides which copy survives.
    """
    half = n - 1
    found = {}
    singleton = nclasses == len(specs)
    if prefixes is None and singleton:
        # Payoff vectors are 0/1 here; accumulate them as bitmasks.
        bits = [(a, b, c, d, 1 << k) for a, b, c, d, k in specs]
        for q in permutations(range(n)):
            d0 = 2 * q[0] - half
            if d0 > 0 or (d0 == 0 and 2 * q[1] > half):
                continue
            mask = 0
            for a, b, c, d, bit in bits:
                pa = q[a]; pb = q[b]
                if pa > pb:
                    pa, pb = pb, pa
                pc = q[c]; pd = q[d]
                if pc > pd:
                    pc, pd = pd, pc
                if pb < pc or pd < pa:
                    mask |= bit
            if mask not in found:
                found[mask] = q
        return {
            tuple((m >> i) & 1 for i in range(nclasses)): q
            for m, q in found.items()
        }
    if prefixes is None:
        stream = permutations(range(n))
    else:
        def prefixed():
            for p0, p1 in prefixes:
                d0 = 2 * p0 - half
                if d0 > 0 or (d0 == 0 and 2 * p1 > half):
                    continue
                remaining = [p for p in range(n) if p != p0 and p != p1]
                for tail in permutations(remaining):
                    yield (p0, p1) + tail
        stream = prefixed()
    for q in stream:
        d0 = 2 * q[0] - half
        if d0 > 0 or (d0 == 0 and 2 * q[1] > half):
            continue
        counts = [0] * nclasses
        for a, b, c, d, k in specs:
            pa = q[a]; pb = q[b]
            if pa > pb:
                pa, pb = pb, pa
            pc = q[c]; pd = q[d]
            if pc > pd:
                pc, pd = pd, pc
            if pb < pc or pd < pa:
                counts[k] += 1
        key = tuple(counts)
        if key not in found:
            found[key] = q
    return found


def _circular_scan(n, specs, nclasses, prefixes):
    """Collect distinct payoff vectors over canonical circular orderings
    (first vertex 0, second entry smaller than last)."""
    found = {}
    pos = [0] * n
    rest = list(range(1, n))
    heads = [(a,) for a in rest] if prefixes is None else prefixes
    for head in heads:
        remaining = [v for v in rest if v not in head]
        for tail in permutations(remaining):
            perm = (0,) + head + tail
            if perm[1] > perm[-1]:
                continue
            for i, v in enumerate(perm):
                pos[v] = i
            counts = [0] * nclasses
            for a, b, c, d, k in specs:
                pa = pos[a]; pb = pos[b]
                if pa > pb:
                    pa, pb = pb, pa
                if (pa < pos[c] < pb) == (pa < pos[d] < pb):
                    counts[k] += 1
            key = tuple(counts)
            if key not in found:
                found[key] = perm
    return found


def _linear_worker(args):
    return _linear_scan(*args)


def _circular_worker(args):
    return _circular_scan(*args)


def pareto_filter(rows):
    """Drop payoff vectors dominated coordinatewise by another.

    ``rows`` maps counts -> witness; dominated rows never help the maximizing
    ordering player, so removing them keeps the game value.
    """
    items = sorted(rows.items(), key=lambda kv: (-sum(kv[0]), kv[0]))
    kept = []
    for counts, witness in items:
        if any(all(kc >= c for kc, c in zip(k, counts)) for k, _ in kept):
            continue
        kept.append((counts, witness))
    return kept


def _check_cap(mode, n, cap):
    if cap is None:
        cap = LINEAR_ENUM_CAP if mode == "linear" else CIRCULAR_ENUM_CAP
    if n > cap:
        raise EnumerationCapExceeded(
            f"{mode} enumeration is capped at n <= {cap} (graph has n={n}); "
            "raise the cap or use a stronger reduction"
        )


def _pos_to_ordering(q):
    perm = [0] * len(q)
    for v, p in enumerate(q):
        perm[p] = v
    return Ordering("linear", tuple(perm))


def enumerate_payoffs(g: Graph, mode: str, classes=None, *, pareto=True,
                      cap=None, workers=1):
    """Distinct payoff vectors achieved by any ordering of the given mode.

    Returns a list of (counts, witness Ordering), deduplicated and (by
    default) Pareto-filtered, deterministically ordered.  Parallel workers
    split the stream by a two-entry prefix; merging keeps the least witness
    per vector, so output is identical for any worker count.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    _check_cap(mode, g.n, cap)
    pairs = nonincident_pairs(g)
    if classes is None:
        classes = _singleton_classes(len(pairs))
    nclasses = len(classes)
    if not pairs:
        trivial = Ordering(mode, tuple(range(g.n)))
        return [((0,) * nclasses, trivial)]
    specs = _pair_specs(pairs, classes)
    n = g.n
    if workers > 1 and n >= 4:
        if mode == "linear":
            prefixes = sorted(permutations(range(n), 2))
        else:
            prefixes = sorted(
                (a, b) for a in range(1, n) for b in range(1, n) if a != b
            )
        chunks = [prefixes[i::workers] for i in range(workers)]
        scan = _linear_worker if mode == "linear" else _circular_worker
        with Pool(workers) as pool:
            results = pool.map(scan, [(n, specs, nclasses, c) for c in chunks])
        found = {}
        for part in results:
            for key, witness in part.items():
                if key not in found or witness < found[key]:
                    found[key] = witness
    elif mode == "linear":
        found = _linear_scan(n, specs, nclasses, None)
    else:
        found = _circular_scan(n, specs, nclasses, None)
    rows = pareto_filter(found) if pareto else sorted(found.items())
    if mode == "linear":
        return [(counts, _pos_to_ordering(q)) for counts, q in rows]
    return [(counts, Ordering("circular", q)) for counts, q in rows]


# ---------------------------------------------------------------------------
# Maximum separation search
# ---------------------------------------------------------------------------

@dataclass
class MaxSeparation:
    score: Fraction
    ordering: Ordering
    exact: bool


def max_separation(g: Graph, mode: str, classes=None, weights=None, *,
                   method="enumerate", budget_s=DEFAULT_BNB_BUDGET_S,
                   cap=None) -> MaxSeparation:
    """Maximize the weighted per-class separated counts over orderings.

    ``method="enumerate"`` is exhaustive within the caps.  ``method="bnb"``
    is a depth-first branch and bound with the coarse bound "pairs not yet
    decided could all be separated" and a wall-clock budget; when the budget
    runs out the best-so-far is returned with ``exact=False`` (a lower bound
    only).
    """
    pairs = nonincident_pairs(g)
    if classes is None:
        classes = _singleton_classes(len(pairs))
    if weights is None:
        weights = [Fraction(1)] * len(classes)
    weights = [Fraction(w) for w in weights]
    if not pairs:
        return MaxSeparation(Fraction(0), Ordering(mode, tuple(range(g.n))), True)
    if method == "enumerate":
        # Pareto filtering is only sound for nonnegative weights.
        keep_pareto = all(w >= 0 for w in weights)
        rows = enumerate_payoffs(g, mode, classes, pareto=keep_pareto, cap=cap)
        best = None
        for counts, ordering in rows:
            score = sum(w * c for w, c in zip(weights, counts))
            if best is None or score > best[0]:
                best = (score, ordering)
        return MaxSeparation(best[0], best[1], True)
    if method != "bnb":
        raise ValueError("method must be 'enumerate' or 'bnb'")
    return _branch_and_bound(g, mode, pairs, classes, weights, budget_s)


def _branch_and_bound(g, mode, pairs, classes, weights, budget_s):
    n = g.n
    cls_of = {}
    for k, cls in enumerate(classes):
        for i in cls:
            cls_of[i] = k
    pair_weight = [weights[cls_of[i]] for i in range(len(pairs))]
    endpoints = [p[0] + p[1] for p in pairs]
    deadline = time.monotonic() + budget_s
    test = _linear_separated if mode == "linear" else _circular_separated

    # Greedy seed so pruning has a baseline.
    ident = Ordering(mode, tuple(range(n)))
    seed = count_separated(ident, pairs, _singleton_classes(len(pairs)))
    state = {
        "best_score": sum(w for w, c in zip(pair_weight, seed) if c),
        "best_perm": tuple(range(n)),
        "timed_out": False,
    }

    prefix = []
    placed = [False] * n
    pos = [-1] * n

    def scores():
        got = Fraction(0)
        optimistic = Fraction(0)
        for i, eps in enumerate(endpoints):
            if all(placed[v] for v in eps):
                a, b, c, d = eps
                if test(pos, a, b, c, d):
                    got += pair_weight[i]
            else:
                optimistic += pair_weight[i]
        return got, optimistic

    def rec():
        if state["timed_out"] or time.monotonic() > deadline:
            state["timed_out"] = True
            return
        got, optimistic = scores()
        if len(prefix) == n:
            if got > state["best_score"]:
                state["best_score"] = got
                state["best_perm"] = tuple(prefix)
            return
        if got + optimistic <= state["best_score"]:
            return
        for v in range(n):
            if placed[v]:
                continue
            if mode == "circular" and not prefix and v != 0:
                break  # rotation canonicalization: circular orderings start at 0
            placed[v] = True
            pos[v] = len(prefix)
            prefix.append(v)
            rec()
            prefix.pop()
            pos[v] = -1
            placed[v] = False

    rec()
    return MaxSeparation(
        state["best_score"], Ordering(mode, state["best_perm"]), not state["timed_out"]
    )


# ---------------------------------------------------------------------------
# Covering verification and small exact covers
# ---------------------------------------------------------------------------

def verify_separating_family(g: Graph, orderings, t: int = 1):
    """Check that every nonincident pair is separated at least t times.

    Returns (ok, deficiencies) where deficiencies lists (pair, count) for
    every pair separated fewer than t times.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    if len({o.mode for o in orderings}) > 1:
        raise ValueError("orderings must share one mode")
    pairs = nonincident_pairs(g)
    counts = [0] * len(pairs)
    for o in orderings:
        if o.n != g.n:
            raise ValueError("ordering is not over V(G)")
        pos = o.positions()
        test = _linear_separated if o.mode == "linear" else _circular_separated
        for i, ((a, b), (c, d)) in enumerate(pairs):
            if test(pos, a, b, c, d):
                counts[i] += 1
    deficiencies = [(pairs[i], counts[i]) for i in range(len(pairs)) if counts[i] < t]
    return (not deficiencies), deficiencies


def circular_sepdim_is_one(g: Graph, cap=None):
    """Whether one circular ordering separates every pair (outerplanarity).

    Returns (bool, witness Ordering or None).
    """
    pairs = nonincident_pairs(g)
    if not pairs:
        return True, Ordering("circular", tuple(range(g.n)))
    _check_cap("circular", g.n, cap)
    specs = _pair_specs(pairs, _singleton_classes(len(pairs)))
    n = g.n
    pos = [0] * n
    for tail in permutations(range(1, n)):
        if tail[0] > tail[-1]:
            continue
        perm = (0,) + tail
        for i, v in enumerate(perm):
            pos[v] = i
        ok = True
        for a, b, c, d, _ in specs:
            pa = pos[a]; pb = pos[b]
            if pa > pb:
                pa, pb = pb, pa
            if (pa < pos[c] < pb) != (pa < pos[d] < pb):
                ok = False
                break
        if ok:
            return True, Ordering("circular", perm)
    return False, None


def _separation_masks(g: Graph, mode: str, cap):
    """Distinct separation sets over all orderings, as pair-index bitmasks."""
    _check_cap(mode, g.n, cap)
    pairs = nonincident_pairs(g)
    specs = _pair_specs(pairs, _singleton_classes(len(pairs)))
    scan = _linear_scan if mode == "linear" else _circular_scan
    found = scan(g.n, specs, len(pairs), None)
    masks = {sum(1 << i for i, c in enumerate(counts) if c) for counts in found}
    return pairs, masks


def integer_sepdim(g: Graph, mode: str = "linear", t: int = 1, cap=None) -> int:
    """Exact minimum multiset of orderings separating every pair >= t times.

    Branch and bound over the distinct separation sets; masks that are
    subsets of another are dropped (a superset is never worse).
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    if cap is None:
        cap = INTEGER_LINEAR_CAP if mode == "linear" else INTEGER_CIRCULAR_CAP
    pairs = nonincident_pairs(g)
    if not pairs:
        return 0
    _, masks = _separation_masks(g, mode, cap)
    masks = sorted(masks)
    maximal = [m for m in masks if not any(m != o and m & ~o == 0 for o in masks)]
    npairs = len(pairs)
    covering = [[m for m in maximal if (m >> i) & 1] for i in range(npairs)]
    if any(not c for c in covering):
        raise RuntimeError("some pair is never separated; inconsistent enumeration")
    max_cover = max(bin(m).count("1") for m in maximal)

    # Greedy multiset cover seeds the upper bound.
    need = [t] * npairs
    upper = 0
    while any(need):
        best = max(
            maximal,
            key=lambda m: sum(1 for i in range(npairs) if need[i] and (m >> i) & 1),
        )
        for i in range(npairs):
            if need[i] and (best >> i) & 1:
                need[i] -= 1
        upper += 1

    state = {"best": upper}
    need = [t] * npairs

    def rec(depth, deficiency):
        if deficiency == 0:
            state["best"] = min(state["best"], depth)
            return
        if depth + (deficiency + max_cover - 1) // max_cover >= state["best"]:
            return
        target = min(
            (i for i in range(npairs) if need[i]),
            key=lambda i: len(covering[i]),
        )
        for m in covering[target]:
            hit = [i for i in range(npairs) if need[i] and (m >> i) & 1]
            for i in hit:
                need[i] -= 1
            rec(depth + 1, deficiency - len(hit))
            for i in hit:
                need[i] += 1

    rec(0, npairs * t)
    return state["best"]
