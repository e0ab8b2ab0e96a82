"""Color-multiset statistics, derandomized coloring, and exhaustive solvers.

Colors are 0-based ints below ``b``. The color multiset of a hyperedge under
a coloring C is encoded as the length-b tuple of per-color multiplicities
(summing to the uniformity a); the color sequence of an oriented hyperedge
is the plain tuple of its vertices' colors in order.

For a coloring with census (n_0, ..., n_{b-1}) the probability that a
uniformly random a-subset of the n vertices has color multiset T is

    p(T) = prod_j C(n_j, T_j) / C(n, a),

computed exactly as a Fraction; the probability that a uniformly random
ordered a-tuple without repetition has color sequence s is

    prod_j n_j! / (n_j - mult_s(j))!  /  (n)_a.

"Random-like" checks compare actual per-multiset (per-sequence) hyperedge
counts of a fixed hypergraph against these reference values for every
coloring, either exhaustively over all b^n colorings or over a seeded
sample.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import comb, factorial

from .errors import StateSpaceTooLargeError
from .graphs import OrientedHypergraph, UniformHypergraph
from .rng import SplitMix64

EXHAUSTIVE_CAP = 10_000_000

ColorMultiset = tuple[int, ...]  # multiplicity per color, sums to a
ColorSequence = tuple[int, ...]  # one color per position, length a


@dataclass(frozen=True)
class Coloring:
    """Vertex coloring with values in [0, b)."""

    colors: tuple[int, ...]
    b: int

    def __post_init__(self) -> None:
        if self.b < 1:
            raise ValueError("need at least one color")
        if any(not 0 <= c < self.b for c in self.colors):
            raise ValueError("color out of range")

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def census(self) -> tuple[int, ...]:
        counts = [0] * self.b
        for c in self.colors:
            counts[c] += 1
        return tuple(counts)


def color_multiset(vertices, coloring: Coloring) -> ColorMultiset:
    counts = [0] * coloring.b
    for v in vertices:
        counts[coloring.colors[v]] += 1
    return tuple(counts)


def color_sequence(vertices, coloring: Coloring) -> ColorSequence:
    return tuple(coloring.colors[v] for v in vertices)


def all_multisets(a: int, b: int) -> list[ColorMultiset]:
    """All C(a+b-1, a) multiplicity tuples, in ascending color order."""
    out = []
    for combo in combinations_with_replacement(range(b), a):
        counts = [0] * b
        for c in combo:
            counts[c] += 1
        out.append(tuple(counts))
    return out


@dataclass(frozen=True)
class MultisetFamily:
    """A family of a-element color multisets over b colors."""

    a: int
    b: int
    members: frozenset[ColorMultiset]

    def __post_init__(self) -> None:
        for t in self.members:
            if len(t) != self.b or sum(t) != self.a or any(x < 0 for x in t):
                raise ValueError(f"invalid multiset {t} for a={self.a}, b={self.b}")

    def __contains__(self, t: ColorMultiset) -> bool:
        return t in self.members

    @property
    def size(self) -> int:
        return len(self.members)

    @classmethod
    def non_monochromatic(cls, a: int, b: int) -> "MultisetFamily":
        """Multisets using at least two distinct colors."""
        members = [t for t in all_multisets(a, b) if max(t) < a]
        return cls(a, b, frozenset(members))

    @classmethod
    def all_distinct(cls, a: int, b: int) -> "MultisetFamily":
        """Rainbow multisets: every color used at most once (needs a <= b)."""
        if a > b:
            raise ValueError("rainbow multisets need a <= b")
        members = [t for t in all_multisets(a, b) if max(t) <= 1]
        return cls(a, b, frozenset(members))

    @classmethod
    def complete(cls, a: int, b: int) -> "MultisetFamily":
        return cls(a, b, frozenset(all_multisets(a, b)))


# ---------------------------------------------------------------------------
# Exact reference probabilities


def census_multiset_probability(census: tuple[int, ...], t: ColorMultiset) -> Fraction:
    n = sum(census)
    a = sum(t)
    num = 1
    for nj, tj in zip(census, t):
        num *= comb(nj, tj)
    return Fraction(num, comb(n, a))


def p_multiset_exact(coloring: Coloring, t: ColorMultiset, a: int) -> Fraction:
    """Probability that a uniform a-subset has color multiset t under the coloring."""
    if sum(t) != a:
        raise ValueError(f"multiset {t} does not sum to a={a}")
    return census_multiset_probability(coloring.census, t)


def p_family(coloring: Coloring, family: MultisetFamily) -> Fraction:
    census = coloring.census
    return sum((census_multiset_probability(census, t) for t in family.members),
               Fraction(0))


def census_sequence_probability(census: tuple[int, ...], s: ColorSequence) -> Fraction:
    """Probability that a uniform ordered tuple without repetition has color
    sequence s: prod falling factorials over (n)_a."""
    n = sum(census)
    a = len(s)
    mult = [0] * len(census)
    for c in s:
        mult[c] += 1
    num = 1
    for nj, mj in zip(census, mult):
        if mj > nj:
            return Fraction(0)
        num *= factorial(nj) // factorial(nj - mj)
    den = factorial(n) // factorial(n - a)
    return Fraction(num, den)


def rainbow_bound(a: int, b: int) -> Fraction:
    """Fraction of hyperedges a rainbow-colorable subhypergraph can reach:
    C(b, a) * a! / b^a."""
    if not 2 <= a <= b:
        raise ValueError("need 2 <= a <= b")
    return Fraction(comb(b, a) * factorial(a), b ** a)


# ---------------------------------------------------------------------------
# Derandomized coloring (conditional expectations)


def _derandomize(h: UniformHypergraph, b: int):
    """Greedy conditional-expectation coloring.

    Vertices are processed in index order; the chosen color minimizes the
    expected number of monochromatic hyperedges when the remaining vertices
    are colored uniformly at random (ties to the lowest color). The
    expectation starts at m / b^(a-1) and never increases, so the final
    monochromatic count is at most floor(m / b^(a-1)).
    """
    if b < 2:
        raise ValueError("need b >= 2")
    a = h.a
    # per hyperedge: number of uncolored vertices and the common color of the
    # colored ones (None = none colored yet, -1 = already polychromatic)
    uncolored = [a] * h.m
    mono_color: list[int | None] = [None] * h.m  # -1 once polychromatic

    def contrib(i: int, assign: int | None = None) -> Fraction:
        """P(hyperedge i monochromatic | current colors), optionally with one
        of its uncolored vertices assigned color ``assign``."""
        left, mc = uncolored[i], mono_color[i]
        if mc == -1:
            return Fraction(0)
        if assign is not None:
            if mc is None:
                left, mc = left - 1, assign
            elif mc == assign:
                left -= 1
            else:
                return Fraction(0)
        if mc is None:
            return Fraction(1, b ** (a - 1))
        return Fraction(1, b ** left)

    expect = Fraction(h.m, b ** (a - 1))
    trace = [expect]
    colors: list[int] = []
    for v in range(h.n):
        incident = h.by_vertex[v]
        best_c = 0
        best_e = None
        for c in range(b):
            e_c = expect
            for i in incident:
                e_c += contrib(i, assign=c) - contrib(i)
            if best_e is None or e_c < best_e:
                best_c, best_e = c, e_c
        colors.append(best_c)
        for i in incident:
            if mono_color[i] == -1:
                continue
            if mono_color[i] is None or mono_color[i] == best_c:
                mono_color[i] = best_c
                uncolored[i] -= 1
            else:
                mono_color[i] = -1
        expect = best_e
        trace.append(expect)

    mono = [i for i in range(h.m) if mono_color[i] is not None and mono_color[i] != -1
            and uncolored[i] == 0]
    return Coloring(tuple(colors), b), mono, trace


def derandomized_coloring(h: UniformHypergraph, b: int):
    """Coloring with at most floor(m / b^(a-1)) monochromatic hyperedges, plus
    the subhypergraph of non-monochromatic hyperedges (which that coloring
    makes b-colorable)."""
    coloring, mono, _ = _derandomize(h, b)
    mono_set = set(mono)
    sub = UniformHypergraph(
        h.a, h.n, tuple(he for i, he in enumerate(h.hyperedges) if i not in mono_set))
    return coloring, sub


def derandomization_trace(h: UniformHypergraph, b: int) -> list[Fraction]:
    """Expected-monochromatic-count trace, one entry before any choice and one
    after each vertex; non-increasing by construction."""
    return _derandomize(h, b)[2]


# ---------------------------------------------------------------------------
# Counting and random-likeness checks


def count_by_multiset(h: UniformHypergraph, coloring: Coloring) -> dict[ColorMultiset, int]:
    if coloring.n != h.n:
        raise ValueError("coloring length must equal the vertex count")
    out: dict[ColorMultiset, int] = {}
    for he in h.hyperedges:
        t = color_multiset(he, coloring)
        out[t] = out.get(t, 0) + 1
    return out


def count_by_sequence(o: OrientedHypergraph, coloring: Coloring) -> dict[ColorSequence, int]:
    if coloring.n != o.n:
        raise ValueError("coloring length must equal the vertex count")
    out: dict[ColorSequence, int] = {}
    for he in o.hyperedges:
        s = color_sequence(he, coloring)
        out[s] = out.get(s, 0) + 1
    return out


@dataclass(frozen=True)
class RandomlikeReport:
    """Outcome of a random-likeness check.

    ``worst_deviation`` is the largest |count - reference * m| over all
    checked (coloring, key) pairs, as an exact Fraction; the check passes
    when it is at most eps * m. ``exhaustive`` distinguishes a full scan of
    the coloring space from a seeded sample.
    """

    passed: bool
    worst_deviation: Fraction
    worst_coloring: tuple[int, ...] | None
    worst_key: tuple[int, ...] | None
    threshold: Fraction
    exhaustive: bool
    colorings_checked: int


def _iter_all_colorings(n: int, b: int):
    return product(range(b), repeat=n)


def _iter_sampled_colorings(n: int, b: int, seed: int, count: int):
    rng = SplitMix64(seed)
    for _ in range(count):
        yield tuple(rng.randrange(b) for _ in range(n))


def _scan_colorings(n: int, b: int, mode: str, seed: int | None, samples: int | None):
    if mode == "exhaustive":
        if b ** n > EXHAUSTIVE_CAP:
            raise StateSpaceTooLargeError(
                f"{b}^{n} colorings exceed the exhaustive cap {EXHAUSTIVE_CAP}")
        return _iter_all_colorings(n, b), b ** n, True
    if mode == "sampled":
        if seed is None or samples is None:
            raise ValueError("sampled mode needs seed and samples")
        return _iter_sampled_colorings(n, b, seed, samples), samples, False
    raise ValueError(f"unknown mode {mode!r}")


def _multiplicity_of_combo(combo: tuple[int, ...], b: int) -> ColorMultiset:
    counts = [0] * b
    for c in combo:
        counts[c] += 1
    return tuple(counts)


def check_randomlike(h: UniformHypergraph, b: int, eps, *, mode: str = "exhaustive",
                     seed: int | None = None, samples: int | None = None) -> RandomlikeReport:
    """Check that for every (scanned) coloring C and every multiset T the number
    of hyperedges with color multiset T is within eps*m of p^C(T) * m."""
    colorings, total, exhaustive = _scan_colorings(h.n, b, mode, seed, samples)
    # multisets keyed internally by the ascending color tuple
    combos = list(combinations_with_replacement(range(b), h.a))
    threshold = Fraction(eps) * h.m
    hyperedges = h.hyperedges

    @lru_cache(maxsize=None)
    def reference(census: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
        return {combo: census_multiset_probability(
                    census, _multiplicity_of_combo(combo, b)) * h.m
                for combo in combos}

    worst = Fraction(0)
    worst_coloring = None
    worst_key = None
    for colors in colorings:
        census = [0] * b
        for c in colors:
            census[c] += 1
        counts: dict[tuple[int, ...], int] = {}
        for he in hyperedges:
            key = tuple(sorted(colors[v] for v in he))
            counts[key] = counts.get(key, 0) + 1
        ref = reference(tuple(census))
        for combo in combos:
            dev = abs(counts.get(combo, 0) - ref[combo])
            if dev > worst:
                worst, worst_coloring, worst_key = dev, colors, combo
    key_out = _multiplicity_of_combo(worst_key, b) if worst_key is not None else None
    return RandomlikeReport(worst <= threshold, worst, worst_coloring, key_out,
                            threshold, exhaustive, total)


def check_randomlike_oriented(o: OrientedHypergraph, b: int, eps, *,
                              mode: str = "exhaustive", seed: int | None = None,
                              samples: int | None = None) -> RandomlikeReport:
    """Oriented variant: per color sequence s, the target count is the product
    form prod_i n_{s_i}/n times m."""
    colorings, total, exhaustive = _scan_colorings(o.n, b, mode, seed, samples)
    sequences = list(product(range(b), repeat=o.a))
    threshold = Fraction(eps) * o.m
    hyperedges = o.hyperedges

    @lru_cache(maxsize=None)
    def reference(census: tuple[int, ...]) -> dict[ColorSequence, Fraction]:
        n = sum(census)
        return {s: Fraction(o.m) * _prod(census[c] for c in s) / n ** o.a
                for s in sequences}

    worst = Fraction(0)
    worst_coloring = None
    worst_key = None
    for colors in colorings:
        census = [0] * b
        for c in colors:
            census[c] += 1
        counts: dict[ColorSequence, int] = {}
        for he in hyperedges:
            s = tuple(colors[v] for v in he)
            counts[s] = counts.get(s, 0) + 1
        ref = reference(tuple(census))
        for s in sequences:
            dev = abs(counts.get(s, 0) - ref[s])
            if dev > worst:
                worst, worst_coloring, worst_key = dev, colors, s
    return RandomlikeReport(worst <= threshold, worst, worst_coloring, worst_key,
                            threshold, exhaustive, total)


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


# ---------------------------------------------------------------------------
# Extremal colorings


def max_multiset_probability(n: int, b: int, family: MultisetFamily,
                             a: int) -> tuple[tuple[int, ...], Fraction]:
    """Census maximizing p^C(family) plus the exact maximum.

    p^C depends on the coloring only through its census, so it suffices to
    scan the compositions of n into b parts (lexicographically; the first
    maximum is kept).
    """
    if family.a != a or family.b != b:
        raise ValueError("family parameters disagree with a, b")
    best_census: tuple[int, ...] | None = None
    best_p = Fraction(-1)
    for census in _compositions(n, b):
        p = sum((census_multiset_probability(census, t) for t in family.members),
                Fraction(0))
        if p > best_p:
            best_census, best_p = census, p
    assert best_census is not None
    return best_census, best_p


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class SubhypergraphResult:
    """Largest family-colorable subhypergraph size with an attaining coloring."""

    q: int
    coloring: Coloring
    optimal: bool


def best_subhypergraph(h: UniformHypergraph, b: int, family: MultisetFamily, *,
                       mode: str = "exhaustive", seed: int | None = None,
                       restarts: int = 32) -> SubhypergraphResult:
    """q(H) = max over b-colorings of the number of hyperedges whose color
    multiset lies in the family.

    Exhaustive mode scans all b^n colorings (capped; first lexicographic
    maximum kept). Heuristic mode is seeded hill climbing with restarts and
    is flagged non-optimal. With the non-monochromatic family, b=2 and a=2
    this is exactly max-cut.
    """
    if family.a != h.a or family.b != b:
        raise ValueError("family parameters disagree with the hypergraph")
    member_combos = {
        combo for combo in combinations_with_replacement(range(b), h.a)
        if _multiplicity_of_combo(combo, b) in family.members}

    def hits(colors) -> int:
        return sum(1 for he in h.hyperedges
                   if tuple(sorted(colors[v] for v in he)) in member_combos)

    if mode == "exhaustive":
        if b ** h.n > EXHAUSTIVE_CAP:
            raise StateSpaceTooLargeError(
                f"{b}^{h.n} colorings exceed the exhaustive cap {EXHAUSTIVE_CAP}; "
                "use mode='heuristic' for a flagged lower bound")
        best_q = -1
        best_colors: tuple[int, ...] = ()
        for colors in _iter_all_colorings(h.n, b):
            q = hits(colors)
            if q > best_q:
                best_q, best_colors = q, colors
        return SubhypergraphResult(best_q, Coloring(best_colors, b), True)

    if mode == "heuristic":
        if seed is None:
            raise ValueError("heuristic mode needs a seed")
        rng = SplitMix64(seed)
        best_q = -1
        best_colors = ()
        for _ in range(restarts):
            colors = [rng.randrange(b) for _ in range(h.n)]
            improved = True
            while improved:
                improved = False
                for v in range(h.n):
                    base = hits(colors)
                    for c in range(b):
                        if c == colors[v]:
                            continue
                        old = colors[v]
                        colors[v] = c
                        if hits(colors) > base:
                            improved = True
                            break
                        colors[v] = old
            q = hits(colors)
            if q > best_q:
                best_q, best_colors = q, tuple(colors)
        return SubhypergraphResult(best_q, Coloring(best_colors, b), False)

    raise ValueError(f"unknown mode {mode!r}")
