"""The dimension spectrum D_alpha across its three regimes.

D_alpha collects the Hausdorff dimensions of intersections with
translates having a unique {-1,0,1} expansion.  The spectrum changes
character at two thresholds: up to (3-sqrt(5))/2 it is the full interval
[0, log2/(-log alpha)]; between there and alpha_KL it still contains an
interval but misses a high-frequency band; above alpha_KL it collapses to
a finite list.

Run:  python demos/dimension_spectrum.py
"""

from fractions import Fraction as F

from cantorint import (
    BaseSystem,
    TERNARY,
    d_set,
    dense_selfsimilar_targets,
    format_seq,
    is_unique_expansion,
    self_similar_check,
    zero_density,
)
from cantorint.thuemorse import alpha_kl_real


def show(alpha):
    ds = d_set(alpha)
    name = alpha if isinstance(alpha, F) else "alpha_KL"
    print(f"--- alpha = {name} ---")
    print(f"kind: {ds.kind.value}   proper subset: {ds.proper_subset}")
    print(f"full dimension: {ds.full.decimal:.6f}")
    if ds.values:
        print("values:", [round(v.decimal, 6) for v in ds.values])
    if ds.nstar is not None:
        print(f"largest surviving doubling-word level n* = {ds.nstar}")
    if ds.sft_interval:
        lo, hi = ds.sft_interval
        print(f"contains the interval [{lo.decimal:.6f}, {hi.decimal:.6f}]"
              f" (subshift level {ds.sft_n})")
    if ds.excluded_band:
        lo, hi = ds.excluded_band
        print(f"zero-frequency band ({lo}, {hi}) is unattainable")
    if ds.note:
        print("note:", ds.note)
    print()


show(F(19, 50))           # full interval
show(F(96, 250))          # contains an interval, proper subset
show(alpha_kl_real())     # the countable watershed
show(F(3944, 10000))      # finite list with several levels
show(F(21, 50))           # finite list, only the trivial values

print("=== dense self-similar intersections below the threshold ===")
alpha = F(9, 25)
sys_a = BaseSystem(alpha, TERNARY)
targets = [F(j, 5) for j in range(6)]
for tg, seq in zip(targets,
                   dense_selfsimilar_targets(alpha, targets, F(1, 100))):
    d = zero_density(seq).value
    uniq = is_unique_expansion(sys_a, seq).status.value
    ss = self_similar_check(sys_a, seq).status.value
    print(f"  target {str(tg):>4}: {format_seq(seq):<16} density {str(d):>5}"
          f"  [{uniq}, {ss}]")
print("every target frequency is hit exactly by a periodic word whose")
print("intersection is a self-similar set.")
