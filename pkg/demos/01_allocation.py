"""
LZW embedding allocation
========================

Frequent tokens, and tokens that end frequent multi-token phrases, get more
rows in an L3 layer's tables.  This walk-through counts codewords on a tiny
sequence by hand, then allocates on a Zipf-distributed stream and shows what
the per-token cap does.

Run:  python demos/01_allocation.py
"""
import numpy as np

from l3.allocation import allocate, allocation_stats, count_codewords, uniform_allocate
from l3.errors import AllocationInfeasibleError

# A six-token line over a two-token vocabulary.  The scan grows the longest
# known phrase, counts it once it stops matching, and records the extension.
counter = count_codewords([[0, 1, 0, 1, 0, 1]], vocab_size=2)
print("codeword counts:", dict(counter))

# Give out v=4 rows with at most k=2 per token.  Every token starts with one;
# the rest go to the last token of each codeword, most frequent first.
table = allocate(counter, v=4, k=2)
print("d =", table.d.tolist(), " bounds =", table.bounds.tolist())

# %% A Zipf stream looks more like text: a few tokens dominate.
rng = np.random.default_rng(0)
vocab = 2048
ids = np.minimum(rng.zipf(1.2, size=400_000) - 1, vocab - 1)
lines = [ids[i : i + 100] for i in range(0, len(ids), 100)]
counter = count_codewords(lines, vocab)
print(f"\n{len(counter)} codewords from {len(ids)} tokens")

for k in (8, 16, 64, None):
    try:
        t = allocate(counter, 8 * vocab, k)
    except AllocationInfeasibleError as e:
        # rare tokens end too few codewords to fill 8 rows each
        print(f"k={str(k):>4}: {e}")
        continue
    st = allocation_stats(t)
    print(f"k={str(k):>4}: max d {st.max:5d}  tokens at cap {st.n_at_cap:4d}  tokens with one row {st.histogram.get(1, 0)}")

# Without a cap the most frequent token would own thousands of rows, which
# is what bounds the worst-case fetch per token at inference time.
uni = uniform_allocate(vocab, 8)
print("\nuniform baseline: every token gets", int(uni.d[0]), "rows, v =", uni.v)
