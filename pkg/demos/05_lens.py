"""
Where does the L3 layer help?
=============================

A tuned lens fits a norm and unembedding per probe point so each intermediate
state can be read as a next-token distribution.  The KL to the model's own
output drops as depth grows; a large drop across the L3 layer means it adds
information the blocks before it had not.  The second half measures how
peaked each token's attention over its own rows is, as KL to uniform.

Run:  python demos/05_lens.py      (after demos/03_desk_matrix.py)
"""
from pathlib import Path

import numpy as np

from l3.analysis import access_kl_stats, lens_kl_profile, train_tuned_lens
from l3.desk import default_scale, desk_dir, ensure_data
from l3.model import load_checkpoint

root = desk_dir()
run = sorted((root / default_scale()).glob("l3-lzw-[0-9a-f]*"))
if not run or not (run[0] / "final.ckpt").exists():
    raise SystemExit(f"no trained L3 checkpoint under {root}; run demos/03_desk_matrix.py first")
model = load_checkpoint(run[0] / "final.ckpt").model()
_, tc = ensure_data(root, model.cfg.vocab_size)
_, va = tc.split()
T = model.cfg.context_length
dev = np.asarray(va[: 64 * T]).reshape(-1, T)

lens = train_tuned_lens(model, dev, steps=100)
profile = lens_kl_profile(model, lens, dev)
for lbl, kl in zip(profile.labels, profile.kl):
    print(f"{lbl:>8}  {kl:7.4f}  {'#' * int(40 * kl / max(profile.kl))}")
d = profile.drops()
print("drop across L3:", {k: round(v, 4) for k, v in d["l3_drops"].items()}, " median block drop:", round(d["median_block_drop"], 4))

recs = access_kl_stats(model, dev[:16])
by_d: dict[int, list[float]] = {}
for r in recs:
    by_d.setdefault(r.d_t, []).append(r.mean_kl / r.ln_d if r.d_t > 1 else 0.0)
print("\nrows  tokens  KL / ln d")
for dt in sorted(by_d)[:12]:
    print(f"{dt:4d}  {len(by_d[dt]):6d}  {np.mean(by_d[dt]):.3f}")
