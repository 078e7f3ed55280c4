"""Greedy and quasi-greedy digit algorithms, the lexicographic uniqueness
test, and the all-expansions automaton.

Everything works over an arbitrary alphabet of consecutive integers but is
phrased internally over the shifted digits {0, ..., M}; statements for
{0,1,2} transfer to {-1,0,1} by the order-preserving digit shift.  All
comparisons run in exact arithmetic (rationals, or Q(alpha) for an
algebraic base), so every verdict below is certified unless it explicitly
says UNDECIDED.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Optional, Union

from . import exactnum, words
from .exactnum import (
    AlgebraicReal,
    Comparison,
    QAlphaContext,
    QAlphaElement,
    SeriesReal,
    UnsupportedBase,
    compare,
)
from .words import (
    TERNARY,
    Alphabet,
    EPSeq,
    FiniteWord,
    LazySeq,
)


class ExpansionError(Exception):
    pass


class OutOfRange(ExpansionError):
    pass


class OutOfDomain(ExpansionError):
    pass


# (3 - sqrt(5)) / 2, the threshold base: root of x^2 - 3x + 1 in (1/3, 1/2)
def golden_threshold() -> AlgebraicReal:
    return AlgebraicReal([1, -3, 1], Fraction(1, 3), Fraction(1, 2))


def _is_alpha_kl(alpha) -> bool:
    return isinstance(alpha, SeriesReal) and alpha.description == "alpha_KL"


class BaseSystem:
    """A base alpha in (0,1) together with a digit alphabet.

    For rational or algebraic alpha the system carries a Q(alpha) context in
    which remainders, follower values and automaton states live exactly.
    The alpha_KL constant is admitted as a base only for the operations that
    can run off its known quasi-greedy expansion of 1.
    """

    def __init__(self, alpha, alphabet: Alphabet = TERNARY):
        if isinstance(alpha, int):
            alpha = Fraction(alpha)
        if compare(alpha, Fraction(0)) is not Comparison.GREATER or \
                compare(alpha, Fraction(1)) is not Comparison.LESS:
            raise OutOfDomain("base must lie strictly between 0 and 1")
        self.alpha = alpha
        self.alphabet = alphabet
        if isinstance(alpha, (Fraction, AlgebraicReal)):
            self.ctx = QAlphaContext(alpha)
        else:
            self.ctx = None  # series base: only delta via the known expansion
        self._delta = None

    @property
    def M(self) -> int:
        return self.alphabet.size - 1

    def _require_ctx(self) -> QAlphaContext:
        if self.ctx is None:
            raise UnsupportedBase(
                "operation needs exact Q(alpha) arithmetic; the base must be "
                "rational or algebraic")
        return self.ctx

    # frequently used exact quantities
    @property
    def alpha_el(self) -> QAlphaElement:
        return self._require_ctx().alpha_element

    @property
    def inv_alpha(self) -> QAlphaElement:
        ctx = self._require_ctx()
        return ctx.one / ctx.alpha_element

    @property
    def tail_unit(self) -> QAlphaElement:
        """alpha / (1 - alpha): the value of the all-ones tail."""
        ctx = self._require_ctx()
        a = ctx.alpha_element
        return a / (ctx.one - a)

    def low_tail(self) -> QAlphaElement:
        return self.alphabet.low * self.tail_unit

    def high_tail(self) -> QAlphaElement:
        return self.alphabet.high * self.tail_unit

    def embed(self, x) -> QAlphaElement:
        ctx = self._require_ctx()
        if isinstance(x, QAlphaElement):
            if x.ctx.key != ctx.key:
                raise ValueError("element from a different base system")
            return x
        return ctx.embed(Fraction(x))

    def delta_cache(self) -> "_DeltaCache":
        if self._delta is None:
            self._delta = _DeltaCache(self)
        return self._delta

    def __repr__(self):
        return f"BaseSystem({self.alpha!r}, {self.alphabet})"


class _DeltaCache:
    """Digits of the quasi-greedy expansion of 1 over {0..M}, grown on
    demand, with remainder bookkeeping for eventual-periodicity detection."""

    def __init__(self, sys: BaseSystem):
        self.sys = sys
        self.digits: list[int] = []
        if sys.ctx is None:
            if not _is_alpha_kl(sys.alpha):
                raise UnsupportedBase(
                    "quasi-greedy expansion of 1 needs a rational/algebraic "
                    "base (or the alpha_KL constant)")
            if sys.M != 2:
                raise OutOfDomain("alpha_KL is a base for three-digit alphabets")
            self._lam_backed = True
            self.ep = None
            return
        self._lam_backed = False
        ctx = sys.ctx
        # domain: alpha >= 1/(M+1) so that 1 is attainable
        if (sys.M * sys.tail_unit - ctx.one).sign() < 0:
            raise OutOfDomain("quasi-greedy expansion of 1 needs "
                              "alpha >= 1/(M+1)")
        self._inv = sys.inv_alpha
        self._rems = [ctx.one]
        self._seen = {ctx.one: 0}
        self.ep: Optional[tuple[int, int]] = None  # (preperiod, period)

    def digit(self, i: int) -> int:
        self.extend(i)
        return self.digits[i - 1]

    def extend(self, n: int):
        if self._lam_backed:
            if len(self.digits) < n:
                from . import thuemorse
                for i in range(len(self.digits) + 1, n + 1):
                    self.digits.append(1 + thuemorse.lam(i))
            return
        M = self.sys.M
        while len(self.digits) < n:
            if self.ep is not None:
                pre, per = self.ep
                i = len(self.digits)
                self.digits.append(self.digits[pre + (i - pre) % per])
                continue
            q = self._rems[-1] * self._inv
            for d in range(M, -1, -1):
                if d == 0 or (q - d).sign() > 0:
                    break
            self.digits.append(d)
            y = q - d
            seen_at = self._seen.get(y)
            if seen_at is not None:
                self.ep = (seen_at, len(self._rems) - seen_at)
                self._rems.clear()
                self._seen.clear()
            else:
                self._seen[y] = len(self._rems)
                self._rems.append(y)

    def ep_form(self, depth_cap: int) -> Optional[EPSeq]:
        """Exact eventually periodic form, if a remainder repeats in time."""
        if self._lam_backed:
            return None
        step = 64
        while self.ep is None and len(self.digits) < depth_cap:
            self.extend(min(depth_cap, len(self.digits) + step))
            step *= 2
        if self.ep is None:
            return None
        pre, per = self.ep
        self.extend(pre + per)
        return EPSeq(self.digits[:pre], self.digits[pre:pre + per],
                     Alphabet(0, self.sys.M + 1))


def _shifted_attainable(sys: BaseSystem, x) -> QAlphaElement:
    """Map x into the {0..M} picture and check attainability."""
    el = sys.embed(x)
    y = el - sys.low_tail()
    if y.sign() < 0 or (sys.M * sys.tail_unit - y).sign() < 0:
        raise OutOfRange("value outside the attainable interval")
    return y


def greedy_expansion(sys: BaseSystem, x, length: int) -> FiniteWord:
    """First ``length`` digits of the lexicographically largest expansion."""
    if length < 1:
        raise ValueError("length must be at least 1")
    y = _shifted_attainable(sys, x)
    inv = sys.inv_alpha
    M, low = sys.M, sys.alphabet.low
    out = []
    for _ in range(length):
        q = y * inv
        for d in range(M, -1, -1):
            if d == 0 or (q - d).sign() >= 0:
                break
        out.append(d + low)
        y = q - d
    return FiniteWord(out, sys.alphabet)


def quasi_greedy_expansion(sys: BaseSystem, x, length: int) -> FiniteWord:
    """First ``length`` digits of the lexicographically largest *infinite*
    expansion (never eventually minimal-digit).  At the attainable infimum
    the convention is the all-low sequence."""
    if length < 1:
        raise ValueError("length must be at least 1")
    y = _shifted_attainable(sys, x)
    inv = sys.inv_alpha
    M, low = sys.M, sys.alphabet.low
    if y.sign() == 0:
        return FiniteWord([low] * length, sys.alphabet)
    out = []
    for _ in range(length):
        q = y * inv
        for d in range(M, -1, -1):
            if d == 0 or (q - d).sign() > 0:
                break
        out.append(d + low)
        y = q - d
    return FiniteWord(out, sys.alphabet)


def delta(sys: BaseSystem, length: int) -> FiniteWord:
    """Prefix of the quasi-greedy expansion of 1, over sys.alphabet."""
    if length < 1:
        raise ValueError("length must be at least 1")
    cache = sys.delta_cache()
    cache.extend(length)
    low = sys.alphabet.low
    return FiniteWord([d + low for d in cache.digits[:length]], sys.alphabet)


def delta_seq(sys: BaseSystem) -> LazySeq:
    """The full quasi-greedy expansion of 1 as a lazy sequence over
    sys.alphabet."""
    cache = sys.delta_cache()
    low = sys.alphabet.low
    return LazySeq(lambda i: cache.digit(i) + low, sys.alphabet,
                   f"delta({sys.alpha!r})")


def try_ep_form(sys: BaseSystem, depth_cap: int = 2048) -> Optional[EPSeq]:
    """Eventually periodic form of delta, over sys.alphabet, or None if no
    remainder repeats within the cap."""
    ep = sys.delta_cache().ep_form(depth_cap)
    if ep is None:
        return None
    return words.substitute_alphabet(ep, Alphabet(0, sys.M + 1), sys.alphabet)


class Verdict(Enum):
    TRUE = "true"
    FALSE = "false"
    UNDECIDED = "undecided-at-depth"


def admissible_delta(seq: Union[EPSeq, LazySeq],
                     depth_cap: int = 1024) -> Verdict:
    """Whether every shift of ``seq`` is lex-<= the sequence itself.

    Exact for EPSeq (finitely many distinct shifts); depth-capped for lazy
    sequences, where TRUE cannot be certified and the best positive answer
    is UNDECIDED (no violation found).
    """
    if isinstance(seq, EPSeq) and seq.per == (seq.alphabet.low,):
        raise OutOfDomain("sequence is eventually minimal-digit; a "
                          "quasi-greedy expansion of 1 never is")
    if isinstance(seq, EPSeq):
        for k in range(1, len(seq.pre) + len(seq.per) + 1):
            if words.lex_compare(seq.shift(k), seq) is words.Lex.GREATER:
                return Verdict.FALSE
        return Verdict.TRUE
    for k in range(1, depth_cap + 1):
        shifted = LazySeq(lambda i, _k=k: seq.digit(i + _k), seq.alphabet)
        if words.lex_compare(shifted, seq, depth_cap=depth_cap) is words.Lex.GREATER:
            return Verdict.FALSE
    # a lazy sequence has infinitely many shifts; no violation found is the
    # strongest positive statement available
    return Verdict.UNDECIDED


class UniqStatus(Enum):
    UNIQUE = "unique"
    NOT_UNIQUE = "not-unique"
    UNDECIDED = "undecided-at-depth"


@dataclass(frozen=True)
class UniquenessResult:
    status: UniqStatus
    violation: Optional[tuple] = None  # (shift n, absolute position or None)
    shifts_checked: int = 0
    compare_cap: int = 0

    @property
    def passed(self) -> bool:
        """No violation found (certified for UNIQUE, best-effort otherwise)."""
        return self.status is not UniqStatus.NOT_UNIQUE


_DEFAULT_COMPARE_CAP = 4096
_DEFAULT_LAZY_SHIFTS = 512


def is_unique_expansion(sys: BaseSystem, seq: Union[EPSeq, LazySeq],
                        depth_cap: Optional[int] = None) -> UniquenessResult:
    """Lexicographic uniqueness test against the quasi-greedy expansion of 1.

    A sequence is the unique expansion of its value iff every tail after a
    prefix that is not all-high stays lex-< delta, and symmetrically for the
    reflected sequence after prefixes that are not all-low.  EPSeq inputs
    are decided exactly whenever each tail comparison resolves at finite
    depth (always true when delta is eventually periodic, and in practice
    long before the cap otherwise).
    """
    if seq.alphabet != sys.alphabet:
        raise words.AlphabetMismatch("sequence alphabet differs from system")
    M, low = sys.M, sys.alphabet.low
    dcache = sys.delta_cache()
    ep_delta = dcache.ep_form(512) if not dcache._lam_backed else None

    compare_cap = depth_cap if depth_cap is not None else _DEFAULT_COMPARE_CAP

    if isinstance(seq, EPSeq):
        shifts = len(seq.pre) + len(seq.per)
        if ep_delta is not None:
            # equality of an EPSeq tail with an EP delta is decidable
            bound = (max(len(seq.pre), len(ep_delta.pre))
                     + lcm(len(seq.per), len(ep_delta.per)) + 1)
            compare_cap = max(compare_cap, bound)
        eq_bound = None if ep_delta is None else compare_cap
    else:
        shifts = depth_cap if depth_cap is not None else _DEFAULT_LAZY_SHIFTS
        eq_bound = None

    def sd(i):
        return seq.digit(i) - low

    def check_tail(n: int, reflected: bool):
        """STRICT tail < delta?  Returns ('ok'|'violation'|'equal'|'cap',
        position)."""
        for j in range(1, compare_cap + 1):
            u = sd(n + j)
            if reflected:
                u = M - u
            dj = dcache.digit(j)
            if u < dj:
                return ("ok", None)
            if u > dj:
                return ("violation", n + j)
            if eq_bound is not None and j >= eq_bound:
                return ("equal", None)
        if eq_bound is not None:
            return ("equal", None)
        return ("cap", None)

    all_high = True
    all_low = True
    undecided = False
    for n in range(0, shifts + 1):
        if not all_high:
            kind, pos = check_tail(n, reflected=False)
            if kind == "violation" or kind == "equal":
                return UniquenessResult(UniqStatus.NOT_UNIQUE, (n, pos),
                                        n, compare_cap)
            if kind == "cap":
                undecided = True
        if not all_low:
            kind, pos = check_tail(n, reflected=True)
            if kind == "violation" or kind == "equal":
                return UniquenessResult(UniqStatus.NOT_UNIQUE, (n, pos),
                                        n, compare_cap)
            if kind == "cap":
                undecided = True
        d_next = sd(n + 1)
        all_high = all_high and d_next == M
        all_low = all_low and d_next == 0

    if isinstance(seq, LazySeq) or undecided:
        return UniquenessResult(UniqStatus.UNDECIDED, None, shifts, compare_cap)
    return UniquenessResult(UniqStatus.UNIQUE, None, shifts, compare_cap)


def forbidden_zero_run(sys: BaseSystem, scan_cap: int = 100_000) -> int:
    """The k >= 0 with delta(alpha) = 1 0^k (-1) ... over {-1,0,1}.

    Only defined for alpha strictly between (3-sqrt(5))/2 and 1/2; at or
    below the threshold delta is 1 0^infinity and no finite k exists.  As a
    consequence no member of the univoque set contains 1 0^(k+1) (or its
    reflection) infinitely often.
    """
    if sys.alphabet != TERNARY:
        raise OutOfDomain("forbidden zero run is stated over {-1,0,1}")
    if compare(sys.alpha, golden_threshold()) is not Comparison.GREATER:
        raise OutOfDomain("alpha must exceed (3-sqrt(5))/2")
    if compare(sys.alpha, Fraction(1, 2)) is not Comparison.LESS:
        raise OutOfDomain("alpha must be below 1/2")
    dcache = sys.delta_cache()
    if dcache.digit(1) != 2:
        raise OutOfDomain("expected delta to start with the top digit")
    for i in range(2, scan_cap):
        d = dcache.digit(i) - 1  # over {-1,0,1}
        if d == 0:
            continue
        if d == -1:
            return i - 2
        raise ExpansionError("delta exceeded 1 0^k pattern; domain bug")
    raise exactnum.IterationLimit("no -1 found in delta within scan cap")


# ---------------------------------------------------------------------------
# the all-expansions automaton
# ---------------------------------------------------------------------------

@dataclass
class ExpansionAutomaton:
    """Follower-value graph of all expansions of t over the alphabet.

    States are exact Q(alpha) elements in [low*u, high*u] for
    u = alpha/(1-alpha); an edge (s, d, s') means s' = s/alpha - d stays in
    that interval.  Infinite paths from the initial state spell exactly the
    expansions of t.
    """

    states: list
    initial: Optional[int]
    edges: list
    complete: bool
    alphabet: Alphabet = TERNARY

    def out_edges(self, i: int):
        return [(d, j) for (f, d, j) in self.edges if f == i]

    def essential_mask(self) -> list:
        """States that lie on some infinite path (out-degree never dies)."""
        alive = [True] * len(self.states)
        changed = True
        while changed:
            changed = False
            for i in range(len(self.states)):
                if alive[i] and not any(f == i and alive[t]
                                        for (f, d, t) in self.edges):
                    alive[i] = False
                    changed = True
        return alive

    def has_unique_infinite_path(self) -> bool:
        if not self.complete:
            raise ExpansionError("path structure needs a closed automaton")
        if self.initial is None:
            return False
        alive = self.essential_mask()
        if not alive[self.initial]:
            return False
        seen = {self.initial}
        queue = [self.initial]
        while queue:
            i = queue.pop()
            outs = [(d, t) for (d, t) in self.out_edges(i) if alive[t]]
            if len(outs) != 1:
                return False
            t = outs[0][1]
            if t not in seen:
                seen.add(t)
                queue.append(t)
        return True

    def path_count(self, length: int) -> int:
        """Number of digit words of the given length spelled from the
        initial state."""
        if self.initial is None:
            return 0
        counts = {self.initial: 1}
        for _ in range(length):
            nxt: dict = {}
            for i, c in counts.items():
                for (_, t) in self.out_edges(i):
                    nxt[t] = nxt.get(t, 0) + c
            counts = nxt
        return sum(counts.values())

    def path_words(self, length: int) -> set:
        """All digit words of the given length from the initial state."""
        if self.initial is None:
            return set()
        out: set = set()

        def rec(i, prefix):
            if len(prefix) == length:
                out.add(tuple(prefix))
                return
            for (d, t) in self.out_edges(i):
                rec(t, prefix + [d])

        rec(self.initial, [])
        return out

    def to_json_dict(self) -> dict:
        return {
            "states": [",".join(str(c) for c in s.coeffs) for s in self.states],
            "initial": self.initial,
            "edges": [{"from": f, "digit": d, "to": t}
                      for (f, d, t) in self.edges],
            "complete": self.complete,
        }


def build_expansion_automaton(sys: BaseSystem, t,
                              state_cap: int = 10_000) -> ExpansionAutomaton:
    """Breadth-first closure of follower values of t under s -> s/alpha - d.

    Exact comparisons decide interval membership, and states deduplicate by
    canonical Q(alpha) equality.  For alpha the reciprocal of a Pisot number
    and t in Q(alpha) the closure is finite; the state cap guards other
    bases and yields a partial automaton flagged ``complete=False``.
    """
    ctx = sys._require_ctx()
    t_el = sys.embed(t)
    lo = sys.low_tail()
    hi = sys.high_tail()
    if (t_el - lo).sign() < 0 or (hi - t_el).sign() < 0:
        return ExpansionAutomaton([], None, [], True, sys.alphabet)
    inv = sys.inv_alpha
    states = [t_el]
    index = {t_el: 0}
    edges = []
    complete = True
    queue = [0]
    digits = range(sys.alphabet.low, sys.alphabet.high + 1)
    while queue:
        i = queue.pop(0)
        s = states[i]
        q = s * inv
        for d in digits:
            child = q - d
            if (child - lo).sign() < 0 or (hi - child).sign() < 0:
                continue
            j = index.get(child)
            if j is None:
                if len(states) >= state_cap:
                    complete = False
                    continue
                j = len(states)
                index[child] = j
                states.append(child)
                queue.append(j)
            edges.append((i, d, j))
    return ExpansionAutomaton(states, 0, edges, complete, sys.alphabet)


def seq_value(sys: BaseSystem, seq: Union[FiniteWord, EPSeq]) -> QAlphaElement:
    """Exact value sum seq_i alpha^i in Q(alpha)."""
    ctx = sys._require_ctx()
    a = ctx.alpha_element

    def horner(digits):
        acc = ctx.zero
        for d in reversed(list(digits)):
            acc = (acc + d) * a
        return acc

    if isinstance(seq, FiniteWord):
        return horner(seq.digits)
    p, q = len(seq.pre), len(seq.per)
    a_p = ctx.one
    for _ in range(p):
        a_p = a_p * a
    a_q = ctx.one
    for _ in range(q):
        a_q = a_q * a
    per_val = horner(seq.per)
    return horner(seq.pre) + a_p * per_val / (ctx.one - a_q)


class GammaStatus(Enum):
    IN = "in"
    OUT = "out"
    UNKNOWN = "unknown-at-depth"


@dataclass(frozen=True)
class GammaResult:
    status: GammaStatus
    witness: Optional[FiniteWord] = None


def gamma_membership(alpha, x, depth_cap: int = 4096,
                     node_cap: int = 200_000) -> GammaResult:
    """Branch-and-prune membership test for the {0,1} Cantor set.

    OUT is certified by interval exclusion along every branch; IN is
    certified when a follower value repeats along a surviving path (the
    cycle pumps to an infinite valid expansion) and returns the digit
    prefix reaching the cycle.  Anything cut short by the caps is UNKNOWN.
    """
    ctx = QAlphaContext(alpha) if not isinstance(x, QAlphaElement) else x.ctx
    x_el = x if isinstance(x, QAlphaElement) else ctx.embed(Fraction(x))
    a = ctx.alpha_element
    bound = a / (ctx.one - a)
    inv = ctx.one / a
    if x_el.sign() < 0 or (bound - x_el).sign() < 0:
        return GammaResult(GammaStatus.OUT)

    frames = [[x_el, 0, False]]  # element, next digit, tainted-by-cap
    on_path = {x_el: 0}
    digit_path: list[int] = []
    dead = set()
    nodes = 0
    root_taint = False
    while frames:
        el, di, taint = frames[-1]
        if di == 2:
            frames.pop()
            del on_path[el]
            if digit_path:
                digit_path.pop()
            if taint:
                if frames:
                    frames[-1][2] = True
                else:
                    root_taint = True
            else:
                dead.add(el)
            continue
        frames[-1][1] += 1
        d = di  # digits 0 then 1
        child = el * inv - d
        if child.sign() < 0 or (bound - child).sign() < 0:
            continue
        if child in on_path:
            witness = FiniteWord(digit_path + [d], Alphabet(0, 2))
            return GammaResult(GammaStatus.IN, witness)
        if child in dead:
            continue
        nodes += 1
        if len(frames) >= depth_cap or nodes > node_cap:
            frames[-1][2] = True
            continue
        frames.append([child, 0, False])
        on_path[child] = len(frames) - 1
        digit_path.append(d)
    if root_taint:
        return GammaResult(GammaStatus.UNKNOWN)
    return GammaResult(GammaStatus.OUT)
