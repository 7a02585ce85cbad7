"""Exact solution of the separation game and the fractional covering LP.

The ordering player picks a vertex ordering, the pair player picks a
nonincident edge pair (or a pair class); the payoff is the probability the
chosen pair is separated.  The fractional separation dimension is the
reciprocal of the game value and equals the optimum of the covering LP
"minimize total ordering weight so every pair class is covered once".

That covering LP is solved through its packing dual (max 1.v s.t. Av <= 1,
v >= 0), which starts feasible on the slack basis, with Bland's rule over
exact Fractions; the ordering weights are the duals of the packing rows.  The
optimality certificate is recomputed from the raw matrix, independent of the
pivot path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import Graph, complete_multipartite, connected_components, induced_subgraph, nonincident_pairs
from .separation import (
    EnumerationCapExceeded,
    count_separated,
    enumerate_payoffs,
    pareto_filter,
)
from .symmetry import (
    automorphisms,
    multipartite_patterns,
    pair_orbits,
    pattern_ordering,
    signature_classes,
)

PATTERN_N_CAP = 14
REDUCTIONS = ("auto", "none", "orbits", "patterns")


class GameError(ValueError):
    """Malformed game input."""


class LPUnbounded(RuntimeError):
    pass


def _simplex_max(matrix, rhs, objective):
    """Maximize objective.v subject to matrix.v <= rhs, v >= 0.

    Exact Fractions throughout; Bland's rule (lowest eligible index enters,
    ratio ties broken by lowest basic index) guarantees termination and makes
    solves deterministic.  Returns (optimum, v, row_duals).
    """
    m = len(matrix)
    k = len(objective)
    F = Fraction
    tableau = [
        [F(x) for x in row] + [F(1) if j == i else F(0) for j in range(m)] + [F(rhs[i])]
        for i, row in enumerate(matrix)
    ]
    cost = [F(c) for c in objective] + [F(0)] * (m + 1)
    basis = list(range(k, k + m))
    width = k + m

    while True:
        enter = -1
        for j in range(width):
            if cost[j] > 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best_ratio = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][-1] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = i
        if leave < 0:
            raise LPUnbounded("packing LP unbounded: a pair class is never separated")
        piv = tableau[leave][enter]
        row = [x / piv for x in tableau[leave]]
        tableau[leave] = row
        for i in range(m):
            if i != leave and tableau[i][enter]:
                f = tableau[i][enter]
                tableau[i] = [x - f * y for x, y in zip(tableau[i], row)]
        if cost[enter]:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, row)]
        basis[leave] = enter

    v = [Fraction(0)] * k
    for i, b in enumerate(basis):
        if b < k:
            v[b] = tableau[i][-1]
    duals = [-cost[k + i] for i in range(m)]
    optimum = sum(c * x for c, x in zip(objective, v))
    return optimum, v, duals


@dataclass
class GameSolution:
    """Exact game value with matching primal and dual strategies.

    ``value`` is the separation game value t, ``pi_f`` = 1/t is the covering
    optimum.  ``primal`` weights orderings (by serialized key), ``dual``
    weights pair classes; each side sums to one and the two mixed payoffs
    meet exactly at ``value``.  Graphs without nonincident pairs get
    ``pi_f`` = 0 and no strategies.
    """

    pi_f: Fraction
    value: Fraction | None
    primal: list[tuple[str, Fraction]] = field(default_factory=list)
    dual: list[tuple[str, Fraction]] = field(default_factory=list)
    mode: str = "linear"
    reduction: str = "none"
    class_sizes: list[int] = field(default_factory=list)
    class_labels: list[str] = field(default_factory=list)

    def to_json_dict(self):
        out = {
            "pi_f": _frac_str(self.pi_f),
            "value": _frac_str(self.value) if self.value is not None else None,
            "mode": self.mode,
            "reduction": self.reduction,
            "primal": [[key, _frac_str(w)] for key, w in self.primal],
            "dual": [[key, _frac_str(w)] for key, w in self.dual],
            "classes": [
                {"label": lbl, "size": size}
                for lbl, size in zip(self.class_labels, self.class_sizes)
            ],
        }
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def solve_game(rows, class_sizes, class_labels=None, *, mode="linear",
               reduction="none") -> GameSolution:
    """Solve the reduced separation game.

    ``rows`` is a list of (counts per class, key); matrix entries are
    counts/|class|, so the reduced value equals the unreduced one.  The
    returned certificate (min primal-mixed payoff = value = max dual-mixed
    payoff) is asserted from the raw matrix.
    """
    rows = list(rows)
    if not rows:
        raise GameError("at least one payoff row is required")
    if any(s <= 0 for s in class_sizes):
        raise GameError("class sizes must be positive")
    k = len(class_sizes)
    if class_labels is None:
        class_labels = [f"class{i}" for i in range(k)]
    matrix = [
        [Fraction(counts[q], class_sizes[q]) for q in range(k)]
        for counts, _ in rows
    ]
    ones_r = [Fraction(1)] * len(rows)
    ones_c = [Fraction(1)] * k
    optimum, v, duals = _simplex_max(matrix, ones_r, ones_c)
    pi_f = optimum
    if pi_f <= 0:
        raise GameError("degenerate game: value would be infinite")
    if sum(duals) != pi_f:
        raise AssertionError("strong duality violated")
    value = Fraction(1) / pi_f
    primal = [
        (rows[i][1], duals[i] / pi_f) for i in range(len(rows)) if duals[i] > 0
    ]
    dual = [(class_labels[q], v[q] / pi_f) for q in range(k) if v[q] > 0]

    # Certificate, recomputed independently of the solve path.
    x = {i: duals[i] / pi_f for i in range(len(rows)) if duals[i] > 0}
    col_payoff = [
        sum(w * matrix[i][q] for i, w in x.items()) for q in range(k)
    ]
    if min(col_payoff) != value:
        raise AssertionError("primal certificate failed")
    w = {q: v[q] / pi_f for q in range(k) if v[q] > 0}
    row_payoff = [
        sum(weight * matrix[i][q] for q, weight in w.items())
        for i in range(len(rows))
    ]
    if max(row_payoff) != value:
        raise AssertionError("dual certificate failed")

    return GameSolution(
        pi_f=pi_f,
        value=value,
        primal=primal,
        dual=dual,
        mode=mode,
        reduction=reduction,
        class_sizes=list(class_sizes),
        class_labels=list(class_labels),
    )


def _pair_label(pair) -> str:
    (a, b), (c, d) = pair
    return f"{a}-{b}/{c}-{d}"


def pattern_payoffs(g: Graph, mode: str, classes):
    """Distinct payoff vectors over canonical pattern orderings."""
    pairs = nonincident_pairs(g)
    found = {}
    for pat in multipartite_patterns(g, mode):
        o = pattern_ordering(g, pat, mode)
        counts = count_separated(o, pairs, classes)
        if counts not in found:
            found[counts] = o
    return pareto_filter(found)


def fractional_sepdim(g: Graph, mode: str = "linear", reduction: str = "auto",
                      *, cap=None, pattern_cap=None, workers=1) -> GameSolution:
    """Exact fractional (circular) separation dimension with certificate.

    Reductions: "none" solves over raw orderings with singleton pair classes;
    "orbits" aggregates pairs per automorphism orbit; "patterns" restricts a
    complete multipartite graph to part-label patterns with signature classes.
    "auto" picks patterns when parts are present, else orbits when the graph
    has any symmetry, else none.  Disconnected graphs take the maximum over
    components.
    """
    if reduction not in REDUCTIONS:
        raise GameError(f"reduction must be one of {REDUCTIONS}")
    comps = connected_components(g)
    if len(comps) > 1:
        best = None
        for comp in comps:
            sub = induced_subgraph(g, comp)
            sol = fractional_sepdim(sub, mode, reduction, cap=cap,
                                    pattern_cap=pattern_cap, workers=workers)
            if best is None or sol.pi_f > best.pi_f:
                best = sol
        return best

    pairs = nonincident_pairs(g)
    if not pairs:
        # Convention: no nonincident pairs means nothing to separate.
        return GameSolution(Fraction(0), None, mode=mode, reduction=reduction)

    if reduction == "auto":
        if g.parts is not None:
            reduction = "patterns"
        else:
            aut = automorphisms(g)
            reduction = "orbits" if aut.order > 1 else "none"

    if reduction == "patterns":
        if g.parts is None:
            raise GameError(
                "pattern reduction requires a complete multipartite graph with parts"
            )
        limit = PATTERN_N_CAP if pattern_cap is None else pattern_cap
        if g.n > limit:
            raise EnumerationCapExceeded(
                f"pattern reduction is capped at n <= {limit} (n={g.n})"
            )
        classes, labels = signature_classes(g)
        rows = [
            (counts, o.serialize()) for counts, o in pattern_payoffs(g, mode, classes)
        ]
        sizes = [len(c) for c in classes]
    elif reduction == "orbits":
        aut = automorphisms(g)
        orbits = pair_orbits(g, aut)
        classes = orbits.classes
        labels = [
            f"orbit[{_pair_label(orbits.pairs[r])}]x{len(c)}"
            for r, c in zip(orbits.representatives, orbits.classes)
        ]
        sizes = orbits.sizes
        rows = [
            (counts, o.serialize())
            for counts, o in enumerate_payoffs(g, mode, classes, cap=cap, workers=workers)
        ]
    else:
        classes = [[i] for i in range(len(pairs))]
        labels = [_pair_label(p) for p in pairs]
        sizes = [1] * len(pairs)
        rows = [
            (counts, o.serialize())
            for counts, o in enumerate_payoffs(g, mode, classes, cap=cap, workers=workers)
        ]
    return solve_game(rows, sizes, labels, mode=mode, reduction=reduction)


@dataclass
class ScanRow:
    sizes: tuple[int, ...]
    pi_f: Fraction | None
    is_max: bool = False
    skipped: str | None = None


def conjecture_scan(n: int, family: str, mode: str = "linear", *,
                    bipartite_cap=14, tripartite_cap=12) -> list[ScanRow]:
    """Exact pi_f for every complete bipartite/tripartite shape on n vertices.

    Rows come back sorted by value descending with the argmax flagged;
    shapes over the cap are reported as skipped.
    """
    if family == "bipartite":
        if n > bipartite_cap:
            raise EnumerationCapExceeded(
                f"bipartite scan capped at n <= {bipartite_cap}"
            )
        shapes = [(a, n - a) for a in range(1, n // 2 + 1)]
    elif family == "tripartite":
        if n > tripartite_cap:
            raise EnumerationCapExceeded(
                f"tripartite scan capped at n <= {tripartite_cap}"
            )
        shapes = [
            (a, b, n - a - b)
            for a in range(1, n // 3 + 1)
            for b in range(a, (n - a) // 2 + 1)
        ]
    else:
        raise GameError("family must be 'bipartite' or 'tripartite'")

    out = []
    for shape in shapes:
        try:
            sol = fractional_sepdim(complete_multipartite(*shape), mode, "patterns")
            out.append(ScanRow(shape, sol.pi_f))
        except EnumerationCapExceeded as exc:
            out.append(ScanRow(shape, None, skipped=str(exc)))
    solved = [r for r in out if r.pi_f is not None]
    if solved:
        best = max(r.pi_f for r in solved)
        for r in solved:
            if r.pi_f == best:
                r.is_max = True
    out.sort(key=lambda r: (r.pi_f is None, -(r.pi_f or 0), r.sizes))
    return out
