"""
Dense vs L3 at desk scale
=========================

Trains (or reuses) the four comparison runs on a docstring corpus harvested
from the local Python installation: a dense model, and three iso-FLOP twins
that drop one decoder block for an L3 layer with LZW, uniform, or tied-table
allocation.  The sandbox scale takes about an hour per run on one core; set
L3_FULL_SCALE=1 for the 256-wide, 8-block, 30M-token setting.

Run:  python demos/03_desk_matrix.py            (runs under ./runs, or $L3_DESK_DIR)
"""
from l3.desk import default_scale, run_matrix
from l3.train import format_matrix

rows = run_matrix(default_scale())
print()
print(format_matrix(rows))

by = {r["name"]: r for r in rows}
if {"dense", "l3-lzw"} <= set(by):
    ratio = by["l3-lzw"]["val_ppl"] / by["dense"]["val_ppl"]
    print(f"\nL3-LZW / dense perplexity: {ratio:.3f}")
if {"l3-lzw", "l3-uniform"} <= set(by):
    print(f"uniform minus LZW perplexity: {by['l3-uniform']['val_ppl'] - by['l3-lzw']['val_ppl']:+.3f}")
if {"l3-lzw", "l3-lzw-tied"} <= set(by):
    gap = by["l3-lzw-tied"]["val_ppl"] / by["l3-lzw"]["val_ppl"] - 1
    print(f"tied vs untied: {gap * 100:+.2f}%")
