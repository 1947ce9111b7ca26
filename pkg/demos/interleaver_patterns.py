"""Show the six interleaver patterns on a small block and their effect on
a burst of adjacent errors (the reason concatenated codes interleave).

Run:  python3 demos/interleaver_patterns.py
"""

import numpy as np

from gpcb.interleavers import PATTERNS, InterleaverSpec, build, apply

n = 24
payload = np.array(list("abcdefghijklmnopqrstuvwx"))
print(f"payload: {''.join(payload)}\n")
for pattern in PATTERNS:
    spec = InterleaverSpec(pattern, n, seed=7, rows=4, cols=6)
    perm = build(spec)
    print(f"{pattern:9s} {''.join(apply(perm, payload))}")

# a burst of 5 adjacent corrupted positions, viewed through each pattern
burst = np.zeros(n, dtype=int)
burst[8:13] = 1
print(f"\nburst positions (x = error), before: "
      f"{''.join('x' if b else '.' for b in burst)}")
for pattern in PATTERNS:
    perm = build(InterleaverSpec(pattern, n, seed=7, rows=4, cols=6))
    spread = apply(perm, burst)
    gaps = np.diff(np.flatnonzero(spread))
    print(f"{pattern:9s} {''.join('x' if b else '.' for b in spread)}"
          f"   min gap {gaps.min() if len(gaps) else '-'}")
