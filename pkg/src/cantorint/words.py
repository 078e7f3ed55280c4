"""Digit sequences over consecutive-integer alphabets.

Finite words, eventually periodic sequences (canonicalised at
construction), lazy sequences driven by a pure index function, plus the
combinatorial operations everything else builds on: lexicographic
comparison, reflection, zero densities, alphabet substitution, and the
strongly-eventually-periodic test.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Callable, Optional, Union


class WordsError(Exception):
    pass


class AlphabetMismatch(WordsError):
    pass


class SizeMismatch(WordsError):
    pass


@dataclass(frozen=True)
class Alphabet:
    """Digits {low, ..., low + size - 1}."""

    low: int
    size: int

    def __post_init__(self):
        if self.size < 2:
            raise WordsError("alphabet needs at least two digits")

    @property
    def high(self) -> int:
        return self.low + self.size - 1

    def __contains__(self, d: int) -> bool:
        return self.low <= d <= self.high

    def reflect_digit(self, d: int) -> int:
        return self.low + self.high - d


TERNARY = Alphabet(-1, 3)
BINARY = Alphabet(0, 2)


def _check_digits(digits, alphabet):
    for d in digits:
        if d not in alphabet:
            raise WordsError(f"digit {d} outside alphabet "
                             f"[{alphabet.low}, {alphabet.high}]")


@dataclass(frozen=True)
class FiniteWord:
    digits: tuple
    alphabet: Alphabet = TERNARY

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        _check_digits(self.digits, self.alphabet)

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def digit(self, i: int) -> int:
        """1-indexed digit access."""
        return self.digits[i - 1]

    def concat(self, other: "FiniteWord") -> "FiniteWord":
        if other.alphabet != self.alphabet:
            raise AlphabetMismatch("cannot concatenate across alphabets")
        return FiniteWord(self.digits + other.digits, self.alphabet)

    def zeros(self) -> int:
        return sum(1 for d in self.digits if d == 0)

    def __repr__(self):
        return f"FiniteWord({format_seq(self)!r})"


class EPSeq:
    """Eventually periodic sequence ``preperiod . period^infinity``.

    Stored in canonical form: the period is primitive (no shorter repeating
    block) and the preperiod is as short as possible, which makes structural
    equality coincide with sequence equality.
    """

    __slots__ = ("pre", "per", "alphabet")

    def __init__(self, pre, per, alphabet: Alphabet = TERNARY):
        pre = tuple(pre)
        per = tuple(per)
        if not per:
            raise WordsError("period must be nonempty")
        _check_digits(pre, alphabet)
        _check_digits(per, alphabet)
        # primitive period
        n = len(per)
        for d in range(1, n + 1):
            if n % d == 0 and per == per[:d] * (n // d):
                per = per[:d]
                break
        # minimal preperiod: absorb matching tail digits into a rotation
        pre = list(pre)
        per = list(per)
        while pre and pre[-1] == per[-1]:
            per = [per[-1]] + per[:-1]
            pre.pop()
        self.pre = tuple(pre)
        self.per = tuple(per)
        self.alphabet = alphabet

    def digit(self, i: int) -> int:
        """1-indexed digit access."""
        if i <= len(self.pre):
            return self.pre[i - 1]
        return self.per[(i - 1 - len(self.pre)) % len(self.per)]

    def shift(self, n: int) -> "EPSeq":
        """Drop the first n digits."""
        if n <= len(self.pre):
            return EPSeq(self.pre[n:], self.per, self.alphabet)
        k = (n - len(self.pre)) % len(self.per)
        return EPSeq((), self.per[k:] + self.per[:k], self.alphabet)

    def prefix(self, n: int) -> FiniteWord:
        return FiniteWord(tuple(self.digit(i) for i in range(1, n + 1)),
                          self.alphabet)

    def __eq__(self, other):
        if not isinstance(other, EPSeq):
            return NotImplemented
        return (self.pre, self.per, self.alphabet) == \
               (other.pre, other.per, other.alphabet)

    def __hash__(self):
        return hash((self.pre, self.per, self.alphabet))

    def __repr__(self):
        return f"EPSeq({format_seq(self)!r})"


@dataclass
class LazySeq:
    """Infinite sequence given by a pure function of the (1-based) index."""

    fn: Callable[[int], int]
    alphabet: Alphabet = TERNARY
    description: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    def digit(self, i: int) -> int:
        d = self._cache.get(i)
        if d is None:
            d = self.fn(i)
            self._cache[i] = d
        return d

    def prefix(self, n: int) -> FiniteWord:
        return FiniteWord(tuple(self.digit(i) for i in range(1, n + 1)),
                          self.alphabet)

    def __repr__(self):
        return f"LazySeq<{self.description or 'anonymous'}>"


SeqLike = Union[FiniteWord, EPSeq, LazySeq]


@dataclass(frozen=True)
class FreqReport:
    """Lower/upper zero density with exactness status."""

    lower: Fraction
    upper: Fraction
    exact: bool
    prefix_used: Optional[int] = None

    def __post_init__(self):
        if self.lower > self.upper:
            raise WordsError("lower density above upper density")
        if self.exact and self.lower != self.upper:
            raise WordsError("exact report must have lower == upper")

    @property
    def value(self) -> Fraction:
        if not self.exact:
            raise WordsError("density is only an estimate")
        return self.lower


class Lex(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    UNDECIDED_AT_DEPTH = "undecided-at-depth"


DEFAULT_DEPTH_CAP = 10**6


def _ep_equality_bound(a: EPSeq, b: EPSeq) -> int:
    """Depth after which two EPSeq that agree must agree forever."""
    return max(len(a.pre), len(b.pre)) + lcm(len(a.per), len(b.per))


def lex_compare(a: SeqLike, b: SeqLike, depth_cap: int = DEFAULT_DEPTH_CAP) -> Lex:
    """First-differing-digit comparison.

    EPSeq-vs-EPSeq is decided exactly.  Comparisons involving a LazySeq scan
    at most ``depth_cap`` digits and report UNDECIDED_AT_DEPTH when no
    difference shows up.  Finite words compare as ordinary words (a proper
    prefix is smaller).
    """
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch("sequences over different alphabets")
    if depth_cap < 1:
        raise ValueError("depth_cap must be at least 1")
    if isinstance(a, FiniteWord) != isinstance(b, FiniteWord):
        raise WordsError("cannot lex-compare a finite word with an "
                         "infinite sequence")
    if isinstance(a, FiniteWord):
        if a.digits == b.digits:
            return Lex.EQUAL
        return Lex.LESS if a.digits < b.digits else Lex.GREATER

    if isinstance(a, EPSeq) and isinstance(b, EPSeq):
        bound = _ep_equality_bound(a, b)
        for i in range(1, bound + 1):
            da, db = a.digit(i), b.digit(i)
            if da != db:
                return Lex.LESS if da < db else Lex.GREATER
        return Lex.EQUAL

    for i in range(1, depth_cap + 1):
        da, db = a.digit(i), b.digit(i)
        if da != db:
            return Lex.LESS if da < db else Lex.GREATER
    return Lex.UNDECIDED_AT_DEPTH


def reflect(s: SeqLike) -> SeqLike:
    """Digitwise map d -> low + high - d (negation for {-1,0,1})."""
    alph = s.alphabet
    r = alph.reflect_digit
    if isinstance(s, FiniteWord):
        return FiniteWord(tuple(r(d) for d in s.digits), alph)
    if isinstance(s, EPSeq):
        return EPSeq(tuple(r(d) for d in s.pre), tuple(r(d) for d in s.per), alph)
    if isinstance(s, LazySeq):
        return LazySeq(lambda i, _s=s: r(_s.digit(i)), alph,
                       f"reflect({s.description})")
    raise TypeError(f"not a sequence: {s!r}")


def zero_density(s: Union[FiniteWord, EPSeq]) -> FreqReport:
    """Exact zero density; the preperiod of an EPSeq does not matter."""
    if isinstance(s, FiniteWord):
        if len(s) == 0:
            raise WordsError("empty word has no density")
        d = Fraction(s.zeros(), len(s))
        return FreqReport(d, d, exact=True)
    if isinstance(s, EPSeq):
        zeros = sum(1 for x in s.per if x == 0)
        d = Fraction(zeros, len(s.per))
        return FreqReport(d, d, exact=True)
    raise TypeError("zero_density needs a FiniteWord or EPSeq; "
                    "use zero_density_prefix for lazy sequences")


def zero_density_prefix(s: SeqLike, n: int) -> FreqReport:
    """Zero proportion over the first n digits (an estimate, exact=False)."""
    if n < 1:
        raise ValueError("prefix length must be at least 1")
    zeros = sum(1 for i in range(1, n + 1) if s.digit(i) == 0)
    d = Fraction(zeros, n)
    return FreqReport(d, d, exact=False, prefix_used=n)


def substitute_alphabet(s: SeqLike, frm: Alphabet, to: Alphabet) -> SeqLike:
    """Order-preserving digit shift between equal-size alphabets."""
    if frm.size != to.size:
        raise SizeMismatch("alphabets must have the same size")
    if s.alphabet != frm:
        raise AlphabetMismatch("sequence is not over the source alphabet")
    shift = to.low - frm.low
    if isinstance(s, FiniteWord):
        return FiniteWord(tuple(d + shift for d in s.digits), to)
    if isinstance(s, EPSeq):
        return EPSeq(tuple(d + shift for d in s.pre),
                     tuple(d + shift for d in s.per), to)
    if isinstance(s, LazySeq):
        return LazySeq(lambda i, _s=s: _s.digit(i) + shift, to,
                       f"shift({s.description})")
    raise TypeError(f"not a sequence: {s!r}")


def strongly_eventually_periodic(s: EPSeq):
    """Witness (I, J) with s = I J^inf, |I| = |J|, I lex-<= J, else None.

    Any such factorisation forces an eventual period of length |J| with
    preperiod at most |I|, so block lengths beyond preperiod+period of the
    canonical form add nothing new; it suffices to scan k up to that bound
    with J read off as the aligned continuation.  (Cross-checked by brute
    force in the test suite.)
    """
    if not isinstance(s, EPSeq):
        raise TypeError("strongly_eventually_periodic needs an EPSeq")
    if s.alphabet.size != 2:
        raise WordsError("test is defined over two-letter alphabets")
    p, q = len(s.pre), len(s.per)
    for k in range(1, p + q + 1):
        # s must repeat with period k from position k+1 onward
        check_to = max(k + 1, p) + lcm(k, q)
        if all(s.digit(i) == s.digit(i + k) for i in range(k + 1, check_to + 1)):
            word_i = tuple(s.digit(i) for i in range(1, k + 1))
            word_j = tuple(s.digit(i) for i in range(k + 1, 2 * k + 1))
            if word_i <= word_j:
                return (FiniteWord(word_i, s.alphabet),
                        FiniteWord(word_j, s.alphabet))
    return None


# ---------------------------------------------------------------------------
# text format: '+', '-', '0' over {-1,0,1}; comma-separated ints otherwise;
# a parenthesised suffix repeats forever, e.g.  "+0(0)"  or  "2(1)"
# ---------------------------------------------------------------------------

_TERNARY_RE = re.compile(r"^(?P<pre>[+\-0]*)(\((?P<per>[+\-0]+)\))?$")
_CHAR_TO_DIGIT = {"+": 1, "-": -1, "0": 0}
_DIGIT_TO_CHAR = {1: "+", -1: "-", 0: "0"}


def parse_seq(text: str, alphabet: Alphabet = TERNARY) -> Union[FiniteWord, EPSeq]:
    """Parse the sequence text format for the given alphabet."""
    text = text.strip()
    if alphabet == TERNARY:
        m = _TERNARY_RE.match(text)
        if not m:
            raise WordsError(f"cannot parse ternary sequence {text!r}")
        pre = tuple(_CHAR_TO_DIGIT[c] for c in m.group("pre"))
        per = m.group("per")
        if per is None:
            if not pre:
                raise WordsError("empty sequence")
            return FiniteWord(pre, alphabet)
        return EPSeq(pre, tuple(_CHAR_TO_DIGIT[c] for c in per), alphabet)
    # comma-separated integer format
    m = re.match(r"^(?P<pre>[^()]*)(\((?P<per>[^()]+)\))?$", text)
    if not m:
        raise WordsError(f"cannot parse sequence {text!r}")

    def ints(part):
        part = part.strip().strip(",")
        if not part:
            return ()
        return tuple(int(x) for x in part.split(","))

    pre = ints(m.group("pre"))
    if m.group("per") is None:
        if not pre:
            raise WordsError("empty sequence")
        return FiniteWord(pre, alphabet)
    return EPSeq(pre, ints(m.group("per")), alphabet)


def format_seq(s: Union[FiniteWord, EPSeq]) -> str:
    if s.alphabet == TERNARY:
        if isinstance(s, FiniteWord):
            return "".join(_DIGIT_TO_CHAR[d] for d in s.digits)
        return ("".join(_DIGIT_TO_CHAR[d] for d in s.pre)
                + "(" + "".join(_DIGIT_TO_CHAR[d] for d in s.per) + ")")
    if isinstance(s, FiniteWord):
        return ",".join(str(d) for d in s.digits)
    pre = ",".join(str(d) for d in s.pre)
    per = ",".join(str(d) for d in s.per)
    return f"{pre}({per})" if pre else f"({per})"
