"""The Thue-Morse difference sequence and the critical base alpha_KL.

The binary Thue-Morse sequence tau never repeats a block three times; its
difference sequence lambda_i = tau_i - tau_(i-1) lives on {-1,0,1} and has
exactly one third of its digits equal to zero in the limit.  The doubling
words w_n = lambda_1..lambda_(2^n) oscillate around that limit, and the
base at which sum (1+lambda_i) alpha^i = 1 is the watershed between a
finite and an interval-shaped dimension spectrum.

Run:  python demos/thue_morse_frequencies.py
"""

from fractions import Fraction as F

from cantorint import (
    alpha_kl_enclosure,
    format_seq,
    lambda_prefix,
    lambda_seq,
    sft_blocks,
    tau_prefix,
    w_word,
    zero_density,
    zero_density_prefix,
)
from cantorint.dimension import CountMatrix

print("tau  :", "".join(str(d) for d in tau_prefix(32)))
print("lambda:", format_seq(lambda_prefix(32)))

print()
print("doubling words w_n and their zero densities (exact):")
for n in range(1, 9):
    w = w_word(n)
    d = zero_density(w).value
    shown = format_seq(w) if n <= 4 else f"[{2**n} digits]"
    print(f"  n={n}: d(w_n) = {str(d):>9} = {float(d):.6f}   {shown}")
print("the densities are (1 - (-1/2)^n)/3, alternating toward 1/3.")

rep = zero_density_prefix(lambda_seq(), 2**20)
print(f"\nprefix density over 2^20 digits: {float(rep.lower):.9f}"
      f"  (|error| = {abs(float(rep.lower - F(1, 3))):.2e})")

print()
print("=== the critical base ===")
for w in (F(1, 10**4), F(1, 10**8), F(1, 10**12)):
    lo, hi = alpha_kl_enclosure(w)
    print(f"  width {float(w):>7.0e}: [{float(lo):.13f}, {float(hi):.13f}]")
print("alpha_KL ~ 0.39433 (and provably below 39433/100000).")

print()
print("=== the four-block subshift ===")
b = sft_blocks(1)
print("blocks:", format_seq(b.zeta), format_seq(b.eta),
      format_seq(b.zeta_bar), format_seq(b.eta_bar))
print("transition matrix rows:", b.matrix)
info = CountMatrix(b.matrix).perron()
lo, hi = info.enclosure(F(1, 10**12))
print(f"spectral radius: {float(lo):.12f}  (the golden ratio)")
print("freely concatenable words:", format_seq(b.omega1), "and",
      format_seq(b.omega2))
print(f"their zero densities {b.d_omega1} and {b.d_omega2} span the",
      "frequency interval realised below alpha_KL")
