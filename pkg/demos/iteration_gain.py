"""Per-iteration BER improvement of GPCB-RS(73,53) with M=100 (random
interleaver) — the iterative-decoding waterfall at desk scale.

Run:  python3 demos/iteration_gain.py [frames_per_point]
A CSV lands in demos/out/iteration_gain.csv; if the gpcb-plots package is
installed, a figure is rendered next to it.
"""

import pathlib
import sys

from gpcb.galois import Field
from gpcb.block_codes import rs_spec
from gpcb.concatenation import GpcbSpec, DecodeParams
from gpcb.simulator import ChannelSpec, run_ber, write_csv

frames = int(sys.argv[1]) if len(sys.argv) > 1 else 25
code = rs_spec(Field(6), 5)
spec = GpcbSpec(code, code, 100)
params = DecodeParams(iterations=8)
print(f"{spec!r}, rate {float(spec.rate):.2f}, {spec.n_bits} info bits/frame")

results = []
for ebn0 in (5.0, 5.5):
    channel = ChannelSpec(ebn0, float(spec.rate), seed=42)
    res = run_ber(spec, params, channel, min_frame_errors=10 ** 9,
                  max_frames=frames)
    results.append(res)
    print(f"\nEb/N0 = {ebn0} dB ({res.frames} frames, "
          f"{res.wall_seconds:.0f}s)")
    for i, ber in enumerate(res.ber, start=1):
        bar = "#" * max(1, int(60 * ber / max(res.ber.max(), 1e-12)))
        print(f"  iteration {i}: BER {ber:.3e} {bar}")

out_dir = pathlib.Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)
csv_path = out_dir / "iteration_gain.csv"
write_csv(csv_path, results)
print(f"\nwrote {csv_path}")

try:
    from gpcb_plots import load, render
    for path in render(load([csv_path]), out_dir):
        print(f"wrote {path}")
except ImportError:
    print("gpcb-plots not installed; skipping the figure")
