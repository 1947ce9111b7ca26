"""Compare the three code families at (length, dimension) = (141, 113),
rate 0.80: BCH+BCH (construction 1), BCH+RS (construction 2), and the
nearby RS+RS code (139, 115).

Run:  python3 demos/family_comparison.py [frames_per_point]
CSV lands in demos/out/family_comparison.csv; a figure is rendered when
gpcb-plots is installed.
"""

import pathlib
import sys

from gpcb.galois import Field
from gpcb.block_codes import bch_spec, rs_spec, pair_construction2
from gpcb.concatenation import GpcbSpec, DecodeParams
from gpcb.simulator import ChannelSpec, run_ber, write_csv

frames = int(sys.argv[1]) if len(sys.argv) > 1 else 60
field = Field(7)
bch = bch_spec(field, 2)
bch2, rs2 = pair_construction2(field, 2)
rs = rs_spec(field, 6)
specs = [
    GpcbSpec(bch, bch, 10),
    GpcbSpec(bch2, rs2, 10, construction="c2"),
    GpcbSpec(rs, rs, 10),
]
params = DecodeParams(iterations=8)

results = []
for spec in specs:
    channel = ChannelSpec(5.0, float(spec.rate), seed=42)
    res = run_ber(spec, params, channel, min_frame_errors=10 ** 9,
                  max_frames=frames)
    results.append(res)
    print(f"{spec!r:22s} rate {float(spec.rate):.2f}  final BER "
          f"{res.ber[-1]:.3e}  ({res.frames} frames, {res.wall_seconds:.0f}s)")

out_dir = pathlib.Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)
csv_path = out_dir / "family_comparison.csv"
write_csv(csv_path, results)
print(f"wrote {csv_path}")

try:
    from gpcb_plots import load, render
    for path in render(load([csv_path], group_by="code"), out_dir):
        print(f"wrote {path}")
except ImportError:
    print("gpcb-plots not installed; skipping the figure")
