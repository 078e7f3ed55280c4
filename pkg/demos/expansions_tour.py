"""A tour of digit expansions in a non-integer base.

Every x in [0, M*alpha/(1-alpha)] has at least one representation
x = sum eps_i alpha^i with digits in {0,...,M}; for alpha above 1/(M+1)
it generically has many.  The greedy expansion is the lexicographically
largest one, the quasi-greedy expansion is the largest *infinite* one,
and the quasi-greedy expansion of 1 acts as the yardstick deciding which
sequences are the unique expansion of their value.

Run:  python demos/expansions_tour.py
"""

from fractions import Fraction as F

from cantorint import (
    AlgebraicReal,
    BaseSystem,
    TERNARY,
    Alphabet,
    delta,
    forbidden_zero_run,
    golden_threshold,
    greedy_expansion,
    is_unique_expansion,
    parse_seq,
    quasi_greedy_expansion,
    try_ep_form,
    format_seq,
)

A012 = Alphabet(0, 3)

print("=== greedy vs quasi-greedy ===")
sys_45 = BaseSystem(F(9, 20), A012)
print("base 9/20, expanding x = 1 over {0,1,2}:")
print("  greedy      :", format_seq(greedy_expansion(sys_45, 1, 12)))
print("  quasi-greedy:", format_seq(quasi_greedy_expansion(sys_45, 1, 12)))
print("the two agree unless the greedy expansion terminates in zeros.")

print()
print("=== the threshold base (3-sqrt(5))/2 ~ 0.381966 ===")
thr = BaseSystem(golden_threshold(), A012)
print("quasi-greedy expansion of 1:", format_seq(delta(thr, 10)),
      " eventually periodic form:", format_seq(try_ep_form(thr)))
print("over {-1,0,1} this is the sequence 1 0 0 0 ... -- the boundary")
print("case: for larger bases the expansion of 1 drops below 1(0)^inf.")

print()
print("=== how far can a zero run go? ===")
for a in (F(2, 5), F(77, 200), F(9, 20)):
    k = forbidden_zero_run(BaseSystem(a, TERNARY))
    print(f"  base {a}: the expansion of 1 starts 1 0^{k} (-1), so no unique")
    print(f"    expansion contains the factor 1 0^{k + 1} infinitely often")

print()
print("=== uniqueness of expansions over {-1,0,1} ===")
cubic = AlgebraicReal([-1, 1, 2, 2], F(2, 5), F(1, 2))
cases = [
    (F(9, 25), "(+-0)"),
    (F(9, 25), "(+-+-0)"),
    (cubic, "(-+)"),
    (F(21, 50), "(+0-0)"),
]
for alpha, text in cases:
    sys_a = BaseSystem(alpha, TERNARY)
    res = is_unique_expansion(sys_a, parse_seq(text))
    label = alpha if isinstance(alpha, F) else "cubic root ~ 0.4406"
    print(f"  {text:>10} at base {label}: {res.status.value}", end="")
    if res.violation:
        print(f"  (first violation at shift {res.violation[0]})")
    else:
        print()
print()
print("the (-+) case has a whole continuum of expansions; the last case is")
print("the level-1 doubling word, unique only for bases below ~0.3965.")
