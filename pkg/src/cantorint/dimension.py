"""Hausdorff dimension computations for Cantor set self-intersections.

Routes implemented:

* the digit-frequency formula  dim = log2/(-log alpha) * lower-density-of-0s
  for translations with a unique expansion,
* the intersection-graph route: relabel the all-expansions automaton by the
  number of admissible {0,1} digits per edge, then dim = log(Perron)/(-log
  alpha), with the spectral radius both certified by exact row-sum brackets
  of matrix powers and pinned down exactly via the characteristic
  polynomial,
* an independent box-counting estimator over {0,1} cylinders,
* the self-similarity test for unique-expansion translations, the dense
  family of self-similar targets below the threshold base, and the
  Liouville construction producing intersections of purely transcendental
  numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

import numpy as np

from . import exactnum, expansions, thuemorse, words
from .exactnum import AlgebraicReal, Comparison, QAlphaElement, compare
from .expansions import (
    BaseSystem,
    ExpansionAutomaton,
    OutOfDomain,
    UniqStatus,
    golden_threshold,
    is_unique_expansion,
)
from .words import TERNARY, Alphabet, EPSeq, FreqReport, LazySeq


class DimensionError(Exception):
    pass


class IncompleteAutomaton(DimensionError):
    pass


class DepthCapExceeded(DimensionError):
    pass


class VerificationFailed(DimensionError):
    """An exactness check that must always hold did not; treat as a bug."""


# ---------------------------------------------------------------------------
# dimension values
# ---------------------------------------------------------------------------

class DimForm(Enum):
    FREQUENCY = "frequency"
    PERRON = "perron"
    BOX = "box"


def _log_interval(lo: Fraction, hi: Fraction):
    """Float interval containing [ln lo, ln hi], mildly outward-rounded."""
    a = math.log(lo) if lo > 0 else -math.inf
    b = math.log(hi)
    for _ in range(4):
        a = math.nextafter(a, -math.inf)
        b = math.nextafter(b, math.inf)
    return a, b


def _neg_log_alpha_interval(alpha, width=Fraction(1, 10**20)):
    alo, ahi = exactnum.enclosure(alpha, width)
    la, lb = _log_interval(alo, ahi)
    return (-lb, -la)  # positive for alpha < 1


def _ratio_interval(num_lo, num_hi, den_lo, den_hi):
    """[num]/[den] for positive denominator interval."""
    cands = [num_lo / den_hi, num_lo / den_lo, num_hi / den_hi, num_hi / den_lo]
    return min(cands), max(cands)


@dataclass(frozen=True)
class DimensionValue:
    """An exact dimension expression together with a decimal rendering.

    The decimal is the midpoint of ``(lo, hi)``, a float interval computed
    from certified enclosures of the exact ingredients.
    """

    form: DimForm
    alpha: object
    lo: float
    hi: float
    freq: Optional[Fraction] = None
    perron: Optional["PerronInfo"] = None
    empty: bool = False
    note: str = ""

    @property
    def decimal(self) -> float:
        return (self.lo + self.hi) / 2

    def exact_str(self) -> str:
        if self.empty:
            return "0 (empty intersection)"
        if self.form is DimForm.FREQUENCY:
            return f"({self.freq}) * log(2)/(-log(alpha))"
        if self.form is DimForm.PERRON:
            return "log(lambda)/(-log(alpha)), lambda = " + \
                (self.perron.exact_str() if self.perron else "?")
        return f"box-count slope ~ {self.decimal:.6f}"

    def __repr__(self):
        return f"DimensionValue({self.exact_str()} ~ {self.decimal:.6f})"


def _check_dimension_domain(alpha):
    if compare(alpha, Fraction(1, 3)) is not Comparison.GREATER or \
            compare(alpha, Fraction(1, 2)) is not Comparison.LESS:
        raise OutOfDomain("dimension formulas need alpha in (1/3, 1/2)")


def dim_from_frequency(alpha, freq: Union[FreqReport, Fraction],
                       unique_certified: bool = True) -> DimensionValue:
    """dim = log 2 / (-log alpha) * (lower zero density).

    Valid for translations with a unique expansion; ``unique_certified``
    is the caller's statement to that effect and is recorded in the note.
    """
    _check_dimension_domain(alpha)
    if isinstance(freq, FreqReport):
        f = freq.lower
    else:
        f = Fraction(freq)
    if not 0 <= f <= 1:
        raise ValueError("zero frequency must lie in [0, 1]")
    nlo, nhi = _neg_log_alpha_interval(alpha)
    l2 = math.log(2)
    lo, hi = _ratio_interval(float(f) * math.nextafter(l2, 0),
                             float(f) * math.nextafter(l2, 2), nlo, nhi)
    note = "" if unique_certified else "frequency route without certified uniqueness"
    return DimensionValue(DimForm.FREQUENCY, alpha, lo, hi, freq=f, note=note)


def full_dimension(alpha) -> DimensionValue:
    """dim of the whole {0,1} Cantor set: log 2 / (-log alpha)."""
    return dim_from_frequency(alpha, Fraction(1))


# ---------------------------------------------------------------------------
# exact spectral radius machinery
# ---------------------------------------------------------------------------

def char_poly(entries: Sequence[Sequence[int]]) -> list:
    """Characteristic polynomial (low degree first) of an integer matrix,
    computed exactly by the Faddeev-LeVerrier recurrence."""
    n = len(entries)
    A = [[Fraction(x) for x in row] for row in entries]
    coeffs = [Fraction(1)]  # leading coefficient of x^n
    M = [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
         for i in range(n)]
    cs = []
    for k in range(1, n + 1):
        # M <- A * M
        AM = [[sum(A[i][l] * M[l][j] for l in range(n)) for j in range(n)]
              for i in range(n)]
        c = -sum(AM[i][i] for i in range(n)) / k
        cs.append(c)
        M = [[AM[i][j] + (c if i == j else 0) for j in range(n)]
             for i in range(n)]
    low_first = list(reversed(cs)) + [Fraction(1)]
    out = []
    for c in low_first:
        if c.denominator != 1:
            raise VerificationFailed("characteristic polynomial not integral")
        out.append(int(c))
    return out


def _kth_root_bounds(x: int, k: int, scale_bits: int = 28):
    """Rational lower/upper bounds on x**(1/k), verified exactly.

    A float logarithm seeds dyadic candidates, then one exact big-integer
    power comparison per side certifies them (adjusting in the rare case
    the float seed was off).
    """
    if x == 0:
        return Fraction(0), Fraction(0)
    if k == 1:
        return Fraction(x), Fraction(x)
    scale = 1 << scale_bits
    seed = math.exp(math.log(x) / k)
    target = x << (scale_bits * k)
    lo_num = int(seed * (1 - 1e-9) * scale)
    while lo_num > 0 and lo_num**k > target:
        lo_num = min(lo_num - 1, int(lo_num * (1 - 1e-9)))
    hi_num = int(seed * (1 + 1e-9) * scale) + 1
    while hi_num**k < target:
        hi_num = max(hi_num + 1, int(hi_num * (1 + 1e-9)))
    return Fraction(lo_num, scale), Fraction(hi_num, scale)


@dataclass
class PerronInfo:
    """Spectral radius data for a nonnegative integer matrix."""

    estimate: float
    algebraic: Optional[AlgebraicReal]
    rowsum_bracket: tuple  # (Fraction lo, Fraction hi), certified
    char: Optional[list] = None

    def enclosure(self, width=Fraction(1, 10**12)):
        if self.algebraic is not None:
            return self.algebraic.refine(width)
        return self.rowsum_bracket

    def exact_str(self) -> str:
        if self.algebraic is not None:
            cs = ",".join(str(c) for c in self.algebraic.coeffs)
            return f"largest real root of [{cs}]"
        lo, hi = self.rowsum_bracket
        return f"in [{lo}, {hi}]"


class CountMatrix:
    """Nonnegative integer matrix counting labelled edges, with its Perron
    eigenvalue certified on demand."""

    def __init__(self, entries):
        self.entries = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ValueError("matrix must be square")
            if any(x < 0 for x in row):
                raise ValueError("matrix must be nonnegative")
        self.n = n
        self._perron: Optional[PerronInfo] = None

    def row_sums(self):
        return [sum(row) for row in self.entries]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def power_estimate(self, residual: float = 1e-12,
                       max_iter: int = 100_000) -> float:
        """Power iteration on floats; an estimate only.

        Iterates on A + I so that periodic cycle structure cannot make the
        Rayleigh quotients oscillate, then shifts the result back.
        """
        if self.n == 0 or self.is_zero():
            return 0.0
        A = np.array(self.entries, dtype=float) + np.eye(self.n)
        v = np.ones(self.n)
        lam = 0.0
        for _ in range(max_iter):
            w = A @ v
            norm = np.linalg.norm(w)
            if norm == 0:
                return 0.0
            w /= norm
            new_lam = float(w @ (A @ w))
            if abs(new_lam - lam) <= residual * max(1.0, abs(new_lam)):
                lam = new_lam
                break
            lam, v = new_lam, w
        return lam - 1.0

    def rowsum_enclosure(self, width=Fraction(1, 10**3),
                         k_cap: int = 1 << 14):
        """Certified bracket: min/max row sums of A^k bound lambda^k.

        The power is grown by repeated squaring (exact integers) until the
        k-th-root bracket is narrower than ``width`` or k reaches the cap.
        """
        if self.n == 0 or self.is_zero():
            return (Fraction(0), Fraction(0))
        width = Fraction(width)
        B = [list(row) for row in self.entries]
        k = 1
        best = None
        while True:
            rs = [sum(row) for row in B]
            lo, _ = _kth_root_bounds(min(rs), k)
            _, hi = _kth_root_bounds(max(rs), k)
            if best is None:
                best = (lo, hi)
            else:
                best = (max(lo, best[0]), min(hi, best[1]))
            if best[0] > best[1]:
                raise VerificationFailed("row-sum brackets are inconsistent")
            if best[1] - best[0] <= width or 2 * k > k_cap:
                return best
            n = self.n
            B = [[sum(B[i][l] * B[l][j] for l in range(n)) for j in range(n)]
                 for i in range(n)]
            k *= 2

    def perron(self, charpoly_max_dim: int = 24) -> PerronInfo:
        """Estimate, certified bracket, and (for small matrices) the exact
        algebraic form of the spectral radius."""
        if self._perron is not None:
            return self._perron
        est = self.power_estimate()
        bracket = self.rowsum_enclosure()
        algebraic = None
        cp = None
        if 0 < self.n <= charpoly_max_dim and not self.is_zero():
            cp = char_poly(self.entries)
            stripped = list(cp)
            while stripped and stripped[0] == 0:
                stripped.pop(0)  # remove x^k factors (zero eigenvalues)
            stripped = exactnum.poly_squarefree_part(stripped)
            hi = Fraction(max(self.row_sums()) + 1)
            algebraic = exactnum.isolate_largest_root(stripped, Fraction(0), hi)
            lam_lo, lam_hi = algebraic.refine(Fraction(1, 10**12))
            blo, bhi = bracket
            if lam_hi < blo or lam_lo > bhi:
                raise VerificationFailed(
                    "characteristic-polynomial root disagrees with row-sum "
                    "bracket")
        self._perron = PerronInfo(est, algebraic, bracket, cp)
        return self._perron


# ---------------------------------------------------------------------------
# intersection graph from an expansion automaton
# ---------------------------------------------------------------------------

def _edge_label_count(digit: int) -> int:
    """Number of admissible {0,1} digits over a difference digit:
    #({0,1} intersect ({0,1}+d))."""
    if digit == 0:
        return 2
    if abs(digit) == 1:
        return 1
    return 0


@dataclass
class IntersectionGraph:
    automaton: ExpansionAutomaton
    count_matrix: CountMatrix
    state_map: list  # graph row -> automaton state index
    empty: bool = False

    def perron(self) -> PerronInfo:
        return self.count_matrix.perron()


def build_intersection_graph(auto: ExpansionAutomaton) -> IntersectionGraph:
    """Relabel automaton edges by admissible {0,1} digit counts and trim to
    states that are reachable and lie on infinite paths."""
    if not auto.complete:
        raise IncompleteAutomaton("intersection graph needs a closed automaton")
    if auto.initial is None:
        return IntersectionGraph(auto, CountMatrix([]), [], empty=True)
    alive = auto.essential_mask()
    reach = {auto.initial} if alive[auto.initial] else set()
    frontier = list(reach)
    while frontier:
        i = frontier.pop()
        for (d, t) in auto.out_edges(i):
            if alive[t] and t not in reach:
                reach.add(t)
                frontier.append(t)
    keep = [i for i in range(len(auto.states)) if i in reach]
    if not keep:
        return IntersectionGraph(auto, CountMatrix([]), [], empty=True)
    pos = {i: r for r, i in enumerate(keep)}
    n = len(keep)
    entries = [[0] * n for _ in range(n)]
    for (f, d, t) in auto.edges:
        if f in pos and t in pos:
            entries[pos[f]][pos[t]] += _edge_label_count(d)
    return IntersectionGraph(auto, CountMatrix(entries), keep)


def perron_dimension(g: IntersectionGraph, alpha) -> DimensionValue:
    """dim = log(lambda) / (-log alpha) for the trimmed count matrix.

    An empty intersection yields dimension 0 flagged ``empty`` rather than
    an error.
    """
    if g.empty or g.count_matrix.is_zero():
        return DimensionValue(DimForm.PERRON, alpha, 0.0, 0.0, empty=True,
                              note="empty intersection")
    info = g.count_matrix.perron()
    if max(g.count_matrix.row_sums()) == 1:
        # every trimmed state has out-degree exactly one label: a single
        # path, spectral radius exactly 1, dimension exactly 0
        return DimensionValue(DimForm.PERRON, alpha, 0.0, 0.0, perron=info)
    lam_lo, lam_hi = info.enclosure()
    if lam_hi < 1:
        raise VerificationFailed("trimmed matrix must have spectral radius >= 1")
    lam_log = _log_interval(lam_lo, lam_hi)
    nlo, nhi = _neg_log_alpha_interval(alpha)
    lo, hi = _ratio_interval(max(lam_log[0], 0.0), max(lam_log[1], 0.0),
                             nlo, nhi)
    return DimensionValue(DimForm.PERRON, alpha, lo, hi, perron=info)


# ---------------------------------------------------------------------------
# max cycle-mean of the zero indicator (bounds sup of upper densities)
# ---------------------------------------------------------------------------

def _sccs(n: int, succ) -> list:
    """Strongly connected components (Kosaraju, iterative)."""
    radj = [[] for _ in range(n)]
    for u in range(n):
        for v in succ(u):
            radj[v].append(u)
    order, seen = [], [False] * n
    for s in range(n):
        if seen[s]:
            continue
        stack = [(s, iter(succ(s)))]
        seen[s] = True
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if not seen[v]:
                    seen[v] = True
                    stack.append((v, iter(succ(v))))
                    advanced = True
                    break
            if not advanced:
                order.append(u)
                stack.pop()
    comp = [-1] * n
    c = 0
    for s in reversed(order):
        if comp[s] != -1:
            continue
        stack = [s]
        comp[s] = c
        while stack:
            u = stack.pop()
            for v in radj[u]:
                if comp[v] == -1:
                    comp[v] = c
                    stack.append(v)
        c += 1
    return comp


def _karp_max_cycle_mean(nodes: list, edges: list) -> Optional[Fraction]:
    """Karp's algorithm on one strongly connected component.

    ``edges`` are (u, v, weight) with u, v indices into ``nodes``.
    Returns None if the component has no edge.
    """
    n = len(nodes)
    if not edges:
        return None
    NEG = None
    d = [[NEG] * n for _ in range(n + 1)]
    d[0][0] = 0
    for k in range(1, n + 1):
        for (u, v, w) in edges:
            if d[k - 1][u] is not None:
                cand = d[k - 1][u] + w
                if d[k][v] is None or cand > d[k][v]:
                    d[k][v] = cand
    best = None
    for v in range(n):
        if d[n][v] is None:
            continue
        worst = None
        for k in range(n):
            if d[k][v] is None:
                continue
            mean = Fraction(d[n][v] - d[k][v], n - k)
            if worst is None or mean < worst:
                worst = mean
        if worst is not None and (best is None or worst > best):
            best = worst
    return best


def freq_upper_bound_over_expansions(auto: ExpansionAutomaton) -> Fraction:
    """Maximum cycle-mean of the zero-digit indicator over the automaton.

    The upper zero density of every infinite path is at most this value, so
    it bounds the supremum of frequency-route dimensions over all expansions
    of t (divide-and-multiply by log2/(-log alpha) as needed).
    """
    if not auto.complete:
        raise IncompleteAutomaton("frequency bound needs a closed automaton")
    if auto.initial is None:
        return Fraction(0)
    alive = auto.essential_mask()
    n = len(auto.states)
    adj = [[] for _ in range(n)]
    for (f, d, t) in auto.edges:
        if alive[f] and alive[t]:
            adj[f].append((t, 1 if d == 0 else 0))
    comp = _sccs(n, lambda u: [v for (v, _) in adj[u]])
    best = Fraction(0)
    found = False
    groups: dict = {}
    for u in range(n):
        groups.setdefault(comp[u], []).append(u)
    for members in groups.values():
        mset = set(members)
        pos = {u: i for i, u in enumerate(members)}
        edges = [(pos[u], pos[v], w) for u in members for (v, w) in adj[u]
                 if v in mset]
        mean = _karp_max_cycle_mean(members, edges)
        if mean is not None:
            found = True
            if mean > best:
                best = mean
    if not found:
        return Fraction(0)
    return best


# ---------------------------------------------------------------------------
# box-counting oracle (independent of the exact machinery above)
# ---------------------------------------------------------------------------

_INF = math.inf


def _iv_add(a, b):
    return (math.nextafter(a[0] + b[0], -_INF), math.nextafter(a[1] + b[1], _INF))


def _iv_mul(a, b):
    p = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (math.nextafter(min(p), -_INF), math.nextafter(max(p), _INF))


def _iv_of(x, width=Fraction(1, 10**22)):
    if isinstance(x, QAlphaElement):
        lo, hi = x.value_enclosure(width)
    else:
        lo, hi = exactnum.enclosure(x, width)
    return (math.nextafter(float(lo), -_INF), math.nextafter(float(hi), _INF))


@dataclass(frozen=True)
class BoxCountReport:
    rows: list  # (n, lower_count, upper_count)
    slope: float
    alpha: object
    t: object

    def upper(self, n: int) -> int:
        return self.rows[n - 1][2]

    def lower(self, n: int) -> int:
        return self.rows[n - 1][1]


def box_count_oracle(alpha, t, depth: int, buffer: int = 8,
                     max_depth: int = 20,
                     witnesses: bool = True) -> BoxCountReport:
    """Count {0,1} prefixes whose cylinder can meet the intersection.

    An upper count keeps every depth-n prefix that survives outward-rounded
    interval pruning against the translated set refined to depth n+buffer;
    a lower count additionally requires an exact membership certificate for
    a witness point in the cylinder.  The least-squares slope of log(upper)
    against n * (-log alpha) over the last half of the depths estimates the
    dimension.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if depth > max_depth:
        raise DepthCapExceeded(f"depth {depth} above configured max {max_depth}")
    a_iv = _iv_of(alpha)
    t_iv = _iv_of(t)
    one_minus = _iv_add((1.0, 1.0), (-a_iv[1], -a_iv[0]))
    recip = (math.nextafter(1.0 / one_minus[1], -_INF),
             math.nextafter(1.0 / one_minus[0], _INF))
    u_iv = _iv_mul(a_iv, recip)  # alpha/(1-alpha)

    # exact side for witnesses
    ctx = None
    t_exact = None
    if witnesses:
        if isinstance(t, QAlphaElement):
            ctx, t_exact = t.ctx, t
        elif isinstance(alpha, (Fraction, int)) or isinstance(alpha, AlgebraicReal):
            if isinstance(t, (int, Fraction)):
                ctx = exactnum.QAlphaContext(alpha)
                t_exact = ctx.embed(Fraction(t))
    alpha_el = ctx.alpha_element if ctx is not None else None

    uppers = [0] * (depth + 1)
    lowers = [0] * (depth + 1)

    def gamma_children(part_iv, pow_next):
        zero = part_iv
        one = _iv_add(part_iv, pow_next)
        return (zero, one)

    def probe(I, gammas, k, extra):
        """Is some gamma extension ``extra`` levels deeper still overlapping
        the fixed interval I?  gammas hold partial-sum intervals at depth k."""
        stack = [(g, k) for g in gammas]
        while stack:
            part, m = stack.pop()
            tail_hi = _iv_mul(_pow_cache(m), u_iv)[1]
            if part[0] > I[1] or math.nextafter(part[1] + tail_hi, _INF) < I[0]:
                continue
            if m >= k + extra:
                return True
            child_pow = _pow_cache(m + 1)
            z, o = gamma_children(part, child_pow)
            stack.append((z, m + 1))
            stack.append((o, m + 1))
        return False

    pow_list = [(1.0, 1.0)]

    def _pow_cache(k):
        while len(pow_list) <= k:
            pow_list.append(_iv_mul(pow_list[-1], a_iv))
        return pow_list[k]

    def certify(digits):
        if ctx is None:
            return False
        x = ctx.zero
        for d in reversed(digits):
            x = (x + d) * alpha_el
        res = expansions.gamma_membership(alpha, x - t_exact, depth_cap=512)
        return res.status is expansions.GammaStatus.IN

    def walk(k, part, gammas, digits):
        I = (part[0],
             math.nextafter(part[1] + _iv_mul(_pow_cache(k), u_iv)[1], _INF))
        # keep gamma prefixes whose cylinder can still meet I
        kept = []
        seen = set()
        for g in gammas:
            tail_hi = _iv_mul(_pow_cache(k), u_iv)[1]
            if g[0] > I[1] or math.nextafter(g[1] + tail_hi, _INF) < I[0]:
                continue
            if g not in seen:
                seen.add(g)
                kept.append(g)
        if not kept or not probe(I, kept, k, buffer):
            return
        if k > 0:
            uppers[k] += 1
            if witnesses and certify(digits):
                lowers[k] += 1
        if k == depth:
            return
        pw = _pow_cache(k + 1)
        next_g = []
        for g in kept:
            z, o = gamma_children(g, pw)
            next_g.append(z)
            next_g.append(o)
        walk(k + 1, part, next_g, digits + [0])
        walk(k + 1, _iv_add(part, pw), next_g, digits + [1])

    walk(0, (0.0, 0.0), [t_iv], [])

    rows = [(n, lowers[n], uppers[n]) for n in range(1, depth + 1)]
    pts = [(n, u) for (n, _, u) in rows if u > 0]
    half = pts[len(pts) // 2:]
    if len(half) >= 2:
        neg_log = -math.log((_iv_of(alpha)[0] + _iv_of(alpha)[1]) / 2)
        xs = np.array([n * neg_log for (n, _) in half])
        ys = np.array([math.log(u) for (_, u) in half])
        slope = float(np.polyfit(xs, ys, 1)[0])
    else:
        slope = 0.0
    return BoxCountReport(rows, slope, alpha, t)


# ---------------------------------------------------------------------------
# self-similarity of the intersection for unique-expansion translations
# ---------------------------------------------------------------------------

class SelfSimilarStatus(Enum):
    SELF_SIMILAR = "self-similar"
    NOT_SELF_SIMILAR = "not-self-similar"
    NOT_UNIQUE = "not-unique"
    UNDECIDED = "undecided-at-depth"


@dataclass(frozen=True)
class SelfSimilarResult:
    status: SelfSimilarStatus
    witness: Optional[tuple] = None  # (I, J) finite words over {0,1}


def self_similar_check(sys: BaseSystem, seq: EPSeq) -> SelfSimilarResult:
    """The intersection for a unique-expansion t is self-similar iff
    (1 - |t_i|) is strongly eventually periodic."""
    if seq.alphabet != TERNARY:
        raise OutOfDomain("self-similarity test is stated over {-1,0,1}")
    res = is_unique_expansion(sys, seq)
    if res.status is UniqStatus.NOT_UNIQUE:
        return SelfSimilarResult(SelfSimilarStatus.NOT_UNIQUE)
    if res.status is UniqStatus.UNDECIDED:
        return SelfSimilarResult(SelfSimilarStatus.UNDECIDED)
    indicator = EPSeq([1 - abs(d) for d in seq.pre],
                      [1 - abs(d) for d in seq.per], Alphabet(0, 2))
    wit = words.strongly_eventually_periodic(indicator)
    if wit is None:
        return SelfSimilarResult(SelfSimilarStatus.NOT_SELF_SIMILAR)
    return SelfSimilarResult(SelfSimilarStatus.SELF_SIMILAR, wit)


def dense_selfsimilar_targets(alpha, targets: Sequence, tol) -> list:
    """Periodic words ((1 -1)^a 0^b)^inf realising each target zero density
    within ``tol``, each passing both the uniqueness test and the
    self-similarity criterion.  Only valid up to the threshold base."""
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if compare(alpha, golden_threshold()) is Comparison.GREATER:
        raise OutOfDomain("dense self-similar family needs "
                          "alpha <= (3-sqrt(5))/2")
    if compare(alpha, Fraction(1, 3)) is not Comparison.GREATER:
        raise OutOfDomain("alpha must exceed 1/3")
    sys = BaseSystem(alpha, TERNARY)
    out = []
    n2_cap = int(4 / tol) + 4
    for target in targets:
        a = Fraction(target) if not isinstance(target, float) \
            else Fraction(target).limit_denominator(10**6)
        if not 0 <= a <= 1:
            raise ValueError("targets must lie in [0, 1]")
        found = None
        for n1 in range(1, 65):
            for n2 in range(0, n2_cap + 1):
                d = Fraction(n2, 2 * n1 + n2)
                if abs(d - a) <= tol:
                    found = (n1, n2)
                    break
            if found:
                break
        if not found:
            raise DimensionError(f"no family word within tol of {a}")
        n1, n2 = found
        seq = EPSeq((), (1, -1) * n1 + (0,) * n2, TERNARY)
        if is_unique_expansion(sys, seq).status is not UniqStatus.UNIQUE:
            raise VerificationFailed("family word failed the uniqueness test")
        if self_similar_check(sys, seq).status is not \
                SelfSimilarStatus.SELF_SIMILAR:
            raise VerificationFailed("family word failed the "
                                     "self-similarity criterion")
        out.append(seq)
    return out


# ---------------------------------------------------------------------------
# the Liouville construction
# ---------------------------------------------------------------------------

@dataclass
class LiouvilleWitness:
    pq: Fraction
    nk: list  # n_1 .. n_(K+1)
    approximants: list  # Fractions p_k/q_k for k = 1..K
    x_enclosure: tuple  # rational interval certified to contain x
    x: exactnum.SeriesReal
    t_seq: LazySeq
    free_rule: Callable[[int], int]

    def block_boundary(self, k: int) -> int:
        """Index of the k-th separating zero: m_k = 2(n_1+..+n_k) + k."""
        return 2 * sum(self.nk[:k]) + k


def _liouville_min_next(p: int, q: int, nk: list) -> int:
    """Minimal n_{k+1} >= 1 with (q/p)^(2 sum+2m+k+1) >= q^(k(2 sum+k+3)).

    A float estimate seeds the search; minimality is then pinned by exact
    integer comparisons one step in each direction.
    """
    k = len(nk)
    s = sum(nk)
    f_exp = k * (2 * s + k + 3)

    def ok(m: int) -> bool:
        e = 2 * s + 2 * m + k + 1
        return q**e >= p**e * q**f_exp

    lnq, lnp = math.log(q), math.log(p)
    need = f_exp * lnq / (lnq - lnp)
    m = max(1, math.ceil((need - (2 * s + k + 1)) / 2) - 2)
    while not ok(m):
        m += 1
    while m > 1 and ok(m - 1):
        m -= 1
    return m


def liouville_nk(pq: Fraction, count: int) -> list:
    """n_1 = 1 and then the minimal growth sequence."""
    p, q = pq.numerator, pq.denominator
    nk = [1]
    while len(nk) < count:
        nk.append(_liouville_min_next(p, q, nk))
    return nk


class _LiouvilleBlocks:
    """Lazily extended block table for (1 -1)^(n_1) 0 (1 -1)^(n_2) 0 ..."""

    def __init__(self, pq: Fraction):
        self.pq = Fraction(pq)
        self.nk = [1]
        self.bounds = [3]  # end position of each block (1 -1)^(n_j) 0

    def _ensure(self, i: int):
        p, q = self.pq.numerator, self.pq.denominator
        while self.bounds[-1] < i:
            self.nk.append(_liouville_min_next(p, q, self.nk))
            self.bounds.append(self.bounds[-1] + 2 * self.nk[-1] + 1)

    def digit(self, i: int) -> int:
        self._ensure(i)
        lo = 0
        for b in self.bounds:
            if i <= b:
                if i == b:
                    return 0  # the separating zero
                return 1 if (i - lo) % 2 == 1 else -1
            lo = b
        raise AssertionError

    def slot_of(self, i: int) -> int:
        """1-based number of the separating zero sitting at position i."""
        self._ensure(i)
        return self.bounds.index(i) + 1


def liouville_t_seq(pq: Fraction) -> LazySeq:
    """(t_i) = (1 -1)^(n_1) 0 (1 -1)^(n_2) 0 ... with the minimal n_k.

    The block lengths are extended on demand, so the generator stays a pure
    function of the index while only paying for the blocks actually read.
    """
    blocks = _LiouvilleBlocks(pq)
    return LazySeq(blocks.digit, TERNARY, f"liouville({Fraction(pq)})")


def liouville_witness(pq, K: int, free_digit_rule=0) -> LiouvilleWitness:
    """Run the Liouville construction and verify its inequalities exactly.

    ``free_digit_rule`` fixes the {0,1} digit at each separating-zero slot
    (a constant, or a callable on the slot number).  For every k <= K the
    witness checks, in exact rational arithmetic, that

    * q_k respects the displayed denominator bound q^(m_k + 3),
    * |x - p_k/q_k| <= q_k^(-k), and
    * p_k/q_k != x.

    Any failure raises ``VerificationFailed`` (it would be a bug, not an
    input problem).
    """
    pq = Fraction(pq)
    if K < 1:
        raise ValueError("K must be at least 1")
    if compare(pq, Fraction(1, 3)) is not Comparison.GREATER or \
            compare(pq, Fraction(1, 2)) is not Comparison.LESS:
        # below the threshold base (3-sqrt(5))/2 uniqueness of (t_i) is
        # automatic; above it the separating zeros are single so the
        # uniqueness test still passes, and every inequality is re-verified
        # exactly below anyway
        raise OutOfDomain("p/q must lie in (1/3, 1/2)")
    if callable(free_digit_rule):
        rule = free_digit_rule
    else:
        const = int(free_digit_rule)
        if const not in (0, 1):
            raise ValueError("free digit rule must produce 0 or 1")
        rule = lambda slot: const  # noqa: E731

    nk = liouville_nk(pq, K + 1)
    blocks = _LiouvilleBlocks(pq)
    t_seq = LazySeq(blocks.digit, TERNARY, f"liouville({pq})")

    def eps(i: int) -> int:
        d = blocks.digit(i)
        if d == 1:
            return 1
        if d == -1:
            return 0
        return rule(blocks.slot_of(i))

    x = exactnum.SeriesReal(eps, pq, 0, 1, description=f"liouville-x({pq})")

    q = pq.denominator
    approximants = []
    for k in range(1, K + 1):
        m_k = 2 * sum(nk[:k]) + k
        partial = Fraction(0)
        power = Fraction(1)
        for i in range(1, m_k + 1):
            power *= pq
            partial += eps(i) * power
        tail = pq ** (m_k + 1) / (1 - pq * pq)
        approx = partial + tail
        approximants.append(approx)
        if approx.denominator > q ** (m_k + 3):
            raise VerificationFailed("denominator bound violated")

    # enclose x deep enough for all checks
    deepest = 2 * sum(nk[:K + 1]) + K + 64
    x_lo, x_hi = x.enclosure(pq ** deepest)

    for k in range(1, K + 1):
        approx = approximants[k - 1]
        diff_hi = max(abs(x_lo - approx), abs(x_hi - approx))
        qk = Fraction(approx.denominator)
        if diff_hi > qk ** (-k):
            raise VerificationFailed(
                f"|x - p_{k}/q_{k}| <= q_{k}^-{k} failed")
        if x_lo <= approx <= x_hi:
            # refine until the approximant is excluded (x is irrational);
            # the stored enclosure keeps the separating precision
            w = pq ** deepest
            for _ in range(64):
                w /= 2**8
                x_lo, x_hi = x.enclosure(w)
                if not (x_lo <= approx <= x_hi):
                    break
            else:
                raise VerificationFailed("could not separate x from p_k/q_k")

    return LiouvilleWitness(pq, nk, approximants, (x_lo, x_hi), x, t_seq, rule)


# ---------------------------------------------------------------------------
# the dimension spectrum D_alpha
# ---------------------------------------------------------------------------

class DSetKind(Enum):
    FINITE_LIST = "finite-list"
    COUNTABLE_FAMILY = "countable-family"
    CONTAINS_INTERVAL = "contains-interval"
    FULL_INTERVAL = "full-interval"


@dataclass
class DSetDescription:
    kind: DSetKind
    alpha: object
    full: DimensionValue
    proper_subset: bool
    values: list = field(default_factory=list)
    nstar: Optional[int] = None
    nstar_cap_hit: bool = False
    sft_n: Optional[int] = None
    sft_interval: Optional[tuple] = None  # (DimensionValue, DimensionValue)
    excluded_band: Optional[tuple] = None  # frequency band (lo, hi)
    note: str = ""

    @property
    def interval(self) -> Optional[tuple]:
        """The certified interval for the interval-shaped kinds: all of
        [0, full] when the spectrum is the full interval, otherwise the
        subshift frequency interval it provably contains."""
        if self.kind is DSetKind.FULL_INTERVAL:
            return (dim_from_frequency(self.alpha, Fraction(0)), self.full)
        if self.kind is DSetKind.CONTAINS_INTERVAL:
            return self.sft_interval
        return None


def tm_block_word(n: int) -> EPSeq:
    """The periodic word (w_n reflect(w_n))^inf over {-1,0,1}."""
    w = thuemorse.w_word(n)
    return EPSeq((), w.digits + words.reflect(w).digits, TERNARY)


def n_star(alpha, cap: int = 12, depth_cap: int = 4096) -> tuple:
    """Largest n <= cap with (w_n reflect(w_n))^inf passing the uniqueness
    test; returns (n*, cap_hit).

    Every level up to the cap is tested (passes have always been downward
    closed in practice, but the maximum is what is reported).  cap_hit is
    True when the top level itself passes, i.e. the cap may be binding.
    """
    sys = BaseSystem(alpha, TERNARY)
    last_pass = 0
    for n in range(1, cap + 1):
        res = is_unique_expansion(sys, tm_block_word(n), depth_cap=depth_cap)
        if res.status is UniqStatus.UNIQUE:
            last_pass = n
        elif res.status is UniqStatus.UNDECIDED:
            raise exactnum.UndecidedComparison(
                f"uniqueness of the level-{n} block word undecided at depth")
    return last_pass, last_pass == cap


def d_set(alpha, nstar_cap: int = 12, sft_n_cap: int = 8,
          depth_cap: int = 4096) -> DSetDescription:
    """Describe D_alpha per the trichotomy around alpha_KL.

    Above alpha_KL the set is the finite list {0, full} plus the block-word
    frequencies up to n*; at alpha_KL it is the countable family; below it
    contains the interval spanned by the four-block subshift frequencies,
    and is all of [0, full] exactly on (1/3, (3-sqrt(5))/2].
    """
    _check_dimension_domain(alpha)
    full = full_dimension(alpha)

    if _is_alpha_kl_value(alpha):
        values = [dim_from_frequency(alpha, Fraction(0)),
                  dim_from_frequency(alpha, Fraction(1, 3)),
                  full]
        return DSetDescription(
            DSetKind.COUNTABLE_FAMILY, alpha, full, proper_subset=True,
            values=values,
            note=("countable family: {0, full, full/3} together with "
                  "full * d(w_n) for every n >= 1"))

    pos = compare(alpha, thuemorse.alpha_kl_real(),
                  precision=Fraction(1, 2**96))
    if pos is Comparison.UNDECIDED:
        raise exactnum.UndecidedComparison(
            "position of alpha relative to alpha_KL undecided")

    if pos is Comparison.GREATER:
        ns, cap_hit = n_star(alpha, nstar_cap, depth_cap)
        values = [dim_from_frequency(alpha, Fraction(0))]
        values += [dim_from_frequency(alpha, thuemorse.dw(n))
                   for n in range(1, ns + 1)]
        values.append(full)
        sys = BaseSystem(alpha, TERNARY)
        k = expansions.forbidden_zero_run(sys)
        band = (Fraction(k + 1, k + 2), Fraction(1))
        return DSetDescription(
            DSetKind.FINITE_LIST, alpha, full, proper_subset=True,
            values=values, nstar=ns, nstar_cap_hit=cap_hit,
            excluded_band=band)

    # alpha below alpha_KL: interval regime
    n = thuemorse.find_smallest_sft_n(alpha, n_cap=sft_n_cap,
                                      depth_cap=depth_cap)
    blocks = thuemorse.sft_blocks(n)
    d_lo, d_hi = blocks.density_interval
    interval = (dim_from_frequency(alpha, d_lo), dim_from_frequency(alpha, d_hi))
    rel_golden = compare(alpha, golden_threshold())
    if rel_golden in (Comparison.LESS, Comparison.EQUAL):
        return DSetDescription(
            DSetKind.FULL_INTERVAL, alpha, full, proper_subset=False,
            sft_n=n, sft_interval=interval,
            note="D_alpha = [0, full] on (1/3, (3-sqrt(5))/2]")
    sys = BaseSystem(alpha, TERNARY)
    k = expansions.forbidden_zero_run(sys)
    band = (Fraction(k + 1, k + 2), Fraction(1))
    return DSetDescription(
        DSetKind.CONTAINS_INTERVAL, alpha, full, proper_subset=True,
        sft_n=n, sft_interval=interval, excluded_band=band)


def _is_alpha_kl_value(alpha) -> bool:
    return isinstance(alpha, exactnum.SeriesReal) and \
        alpha.description == "alpha_KL"
