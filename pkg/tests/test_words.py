import random
from fractions import Fraction as F

import pytest

from cantorint import words as W
from cantorint import thuemorse as T
from cantorint.words import (
    BINARY,
    TERNARY,
    Alphabet,
    AlphabetMismatch,
    EPSeq,
    FiniteWord,
    LazySeq,
    Lex,
    SizeMismatch,
    format_seq,
    lex_compare,
    parse_seq,
    reflect,
    strongly_eventually_periodic,
    substitute_alphabet,
    zero_density,
    zero_density_prefix,
)


def rand_epseq(rng, alphabet=TERNARY, max_pre=4, max_per=6):
    digits = range(alphabet.low, alphabet.high + 1)
    pre = tuple(rng.choice(digits) for _ in range(rng.randrange(0, max_pre)))
    per = tuple(rng.choice(digits) for _ in range(rng.randrange(1, max_per + 1)))
    return EPSeq(pre, per, alphabet)


class TestCanonicalForm:
    def test_primitive_period(self):
        s = EPSeq((), (1, 0, 1, 0), TERNARY)
        assert s.per == (1, 0)

    def test_preperiod_absorbed(self):
        s = EPSeq((1, 0), (0,), TERNARY)
        assert s.pre == (1,) and s.per == (0,)

    def test_rotation_alignment(self):
        # 10(01)^inf = 1(00 1...)? canonical form keeps pre = 10
        s = EPSeq((1, 0), (0, 1), BINARY)
        assert (s.pre, s.per) == ((1, 0), (0, 1))
        # equality is structural equality of canonical forms
        assert EPSeq((1,), (0, 1), BINARY) == EPSeq((1, 0), (1, 0), BINARY)


class TestLexCompare:
    def test_first_digit_decides(self):
        a = EPSeq((-1,), (0,), TERNARY)
        b = EPSeq((1,), (0,), TERNARY)
        assert lex_compare(a, b) is Lex.LESS

    def test_equal_epseqs(self):
        a = EPSeq((1,), (0,), TERNARY)
        b = EPSeq((1,), (0,), TERNARY)
        assert lex_compare(a, b) is Lex.EQUAL

    def test_zero_run_comparison(self):
        # 1 0^(k+1) ... beats 1 0^k (-1) ... at position k+2
        for k in range(0, 4):
            a = EPSeq((1,) + (0,) * (k + 1), (1,), TERNARY)
            b = EPSeq((1,) + (0,) * k + (-1,), (1,), TERNARY)
            assert lex_compare(a, b) is Lex.GREATER
            # they agree through position k+1 and split at k+2
            assert all(a.digit(i) == b.digit(i) for i in range(1, k + 2))
            assert a.digit(k + 2) > b.digit(k + 2)

    def test_lazy_undecided(self):
        lam = T.lambda_seq()
        same = LazySeq(lambda i: T.lam(i), TERNARY, "copy")
        assert lex_compare(lam, same, depth_cap=64) is Lex.UNDECIDED_AT_DEPTH

    def test_lazy_decided(self):
        lam = T.lambda_seq()
        other = LazySeq(lambda i: 0 if i < 5 else 1, TERNARY)
        assert lex_compare(other, lam, depth_cap=64) is Lex.LESS

    def test_alphabet_mismatch(self):
        with pytest.raises(AlphabetMismatch):
            lex_compare(EPSeq((), (1,), TERNARY), EPSeq((), (1,), BINARY))

    def test_total_order_on_random_epseqs(self):
        rng = random.Random(5)
        seqs = [rand_epseq(rng) for _ in range(40)]
        for a in seqs:
            for b in seqs:
                r = lex_compare(a, b)
                assert r is not Lex.UNDECIDED_AT_DEPTH
                # antisymmetry
                rr = lex_compare(b, a)
                if r is Lex.LESS:
                    assert rr is Lex.GREATER
                elif r is Lex.GREATER:
                    assert rr is Lex.LESS
                else:
                    assert rr is Lex.EQUAL and a == b
        # transitivity on sorted triples
        import functools

        def cmp(a, b):
            r = lex_compare(a, b)
            return -1 if r is Lex.LESS else (1 if r is Lex.GREATER else 0)

        ordered = sorted(seqs, key=functools.cmp_to_key(cmp))
        for x, y in zip(ordered, ordered[1:]):
            assert lex_compare(x, y) is not Lex.GREATER


class TestReflect:
    def test_ternary_negation(self):
        w = FiniteWord((1, 0, -1, 1), TERNARY)
        assert tuple(reflect(w)) == (-1, 0, 1, -1)

    def test_block_word_doubling(self):
        # w_1 = 10, reflect(w_1) = (-1)0, and w_2 with its last digit
        # decremented equals w_1 reflect(w_1)
        w1 = T.w_word(1)
        assert tuple(w1) == (1, 0)
        assert tuple(reflect(w1)) == (-1, 0)
        w2 = list(T.w_word(2))
        w2[-1] -= 1
        assert tuple(w2) == tuple(w1) + tuple(reflect(w1))

    def test_general_alphabet(self):
        w = FiniteWord((0, 2, 1), Alphabet(0, 3))
        assert tuple(reflect(w)) == (2, 0, 1)

    def test_involutive(self):
        rng = random.Random(9)
        for _ in range(50):
            s = rand_epseq(rng)
            assert reflect(reflect(s)) == s

    def test_reverses_order(self):
        rng = random.Random(13)
        for _ in range(100):
            a, b = rand_epseq(rng), rand_epseq(rng)
            r = lex_compare(a, b)
            rr = lex_compare(reflect(b), reflect(a))
            assert r is rr


class TestZeroDensity:
    def test_w1(self):
        assert zero_density(T.w_word(1)).value == F(1, 2)

    def test_periodic(self):
        assert zero_density(EPSeq((), (1, -1, 0), TERNARY)).value == F(1, 3)

    def test_preperiod_ignored(self):
        a = zero_density(EPSeq((0, 0, 0), (1, -1), TERNARY))
        assert a.value == 0 and a.exact

    def test_lambda_prefix_estimate(self):
        rep = zero_density_prefix(T.lambda_seq(), 2**12)
        assert not rep.exact and rep.prefix_used == 2**12
        assert abs(rep.lower - F(1, 3)) <= F(1, 3) / 2**12 + F(1, 2**12)

    def test_reflection_invariant(self):
        rng = random.Random(17)
        for _ in range(100):
            s = rand_epseq(rng)
            assert zero_density(s).value == zero_density(reflect(s)).value

    def test_count_doubling_identities(self):
        # zeros(w_n) = 2 zeros(w_(n-1)) - 1 for even n, + 1 for odd n
        for n in range(2, 11):
            zn = T.w_word(n).zeros()
            zp = T.w_word(n - 1).zeros()
            assert zn == 2 * zp + (-1 if n % 2 == 0 else 1)


class TestSubstitute:
    def test_spec_rule(self):
        s = FiniteWord((2, 1, 0), Alphabet(0, 3))
        assert tuple(substitute_alphabet(s, Alphabet(0, 3), TERNARY)) == \
            (1, 0, -1)

    def test_identity(self):
        s = FiniteWord((1, 0), TERNARY)
        assert substitute_alphabet(s, TERNARY, TERNARY) == s

    def test_roundtrip(self):
        s = EPSeq((2,), (1, 0), Alphabet(0, 3))
        out = substitute_alphabet(substitute_alphabet(s, Alphabet(0, 3),
                                                      TERNARY),
                                  TERNARY, Alphabet(0, 3))
        assert out == s

    def test_order_isomorphic(self):
        rng = random.Random(23)
        for _ in range(60):
            a, b = rand_epseq(rng), rand_epseq(rng)
            a2 = substitute_alphabet(a, TERNARY, Alphabet(5, 3))
            b2 = substitute_alphabet(b, TERNARY, Alphabet(5, 3))
            assert lex_compare(a, b) is lex_compare(a2, b2)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            substitute_alphabet(FiniteWord((0, 1), BINARY), BINARY, TERNARY)


def sep_brute_force(s: EPSeq, k_max: int = 16) -> bool:
    """Oracle: try every block length up to k_max, checking a long prefix."""
    horizon = 4 * (len(s.pre) + len(s.per)) * k_max + 4 * k_max + 8
    digits = [s.digit(i) for i in range(1, horizon + 1)]
    for k in range(1, k_max + 1):
        word_i = digits[:k]
        word_j = digits[k:2 * k]
        if word_i > word_j:
            continue
        if all(digits[i] == digits[i - k] for i in range(2 * k, horizon)):
            return True
    return False


class TestStronglyEventuallyPeriodic:
    def test_periodic_is_sep(self):
        got = strongly_eventually_periodic(EPSeq((), (0, 0, 1), BINARY))
        assert got is not None
        i, j = got
        assert tuple(i) == tuple(j) == (0, 0, 1)

    def test_definition_instance(self):
        got = strongly_eventually_periodic(EPSeq((0, 1), (1, 0), BINARY))
        assert got is not None
        i, j = got
        assert tuple(i) <= tuple(j)

    def test_negative_case(self):
        assert strongly_eventually_periodic(
            EPSeq((1, 0), (0, 1), BINARY)) is None

    def test_one_then_zeros(self):
        assert strongly_eventually_periodic(
            EPSeq((1,), (0,), BINARY)) is None
        assert strongly_eventually_periodic(
            EPSeq((0,), (1,), BINARY)) is not None

    def test_against_brute_force(self):
        rng = random.Random(31)
        for _ in range(300):
            s = rand_epseq(rng, BINARY, max_pre=3, max_per=4)
            assert (strongly_eventually_periodic(s) is not None) == \
                sep_brute_force(s)

    def test_requires_two_letters(self):
        with pytest.raises(W.WordsError):
            strongly_eventually_periodic(EPSeq((), (0,), TERNARY))


class TestTextFormat:
    def test_examples(self):
        s = parse_seq("(+-)")
        assert s == EPSeq((), (1, -1), TERNARY)
        s = parse_seq("+0(0)")
        assert s.digit(1) == 1 and s.digit(2) == 0 and s.digit(100) == 0

    def test_roundtrip(self):
        rng = random.Random(37)
        for _ in range(100):
            s = rand_epseq(rng)
            assert parse_seq(format_seq(s)) == s

    def test_integer_format(self):
        s = parse_seq("2,1(1)", Alphabet(0, 3))
        assert s == EPSeq((2,), (1,), Alphabet(0, 3))
        assert parse_seq(format_seq(s), Alphabet(0, 3)) == s

    def test_bad_input(self):
        with pytest.raises(W.WordsError):
            parse_seq("abc")
        with pytest.raises(W.WordsError):
            parse_seq("")
