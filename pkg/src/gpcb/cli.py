"""Command-line front end: encode, decode, simulate, tune, list-codes.

Every flag can also come from a YAML config file (--config); explicit
command-line values override the file.  The simulate subcommand writes the
CSV consumed by the plotting tool.
"""

import argparse
import re
import sys

import numpy as np
import yaml

from .galois import Field
from .block_codes import bch_spec, rs_spec, pair_construction2
from .interleavers import InterleaverSpec
from .concatenation import GpcbSpec, DecodeParams, encode, decode_iterative
from .simulator import (
    ChannelSpec, run_ber, write_csv, tune_schedule, ALPHA_POOL, BETA_POOL,
)

# Component codes behind the published GPCB family list.
NAMED_CODES = {
    "BCH(63,51)": ("bch", 6, 2),
    "BCH(127,113)": ("bch", 7, 2),
    "BCH(255,239)": ("bch", 8, 2),
    "RS(63,53)": ("rs", 6, 5),
    "RS(127,115)": ("rs", 7, 6),
    "RS(255,243)": ("rs", 8, 6),
}

DEFAULTS = {
    "construction": "c1",
    "m_blocks": 1,
    "interleaver": "random",
    "seed": 0,
    "iterations": 8,
    "min_frame_errors": 100,
    "max_frames": 10 ** 6,
    "alpha": None,
    "beta": None,
    "ebn0": "1:0.5:4",
    "out": None,
}


class CliError(ValueError):
    pass


def parse_code(text):
    """Accept a published name like RS(63,53) or a custom kind:n,k,t spec."""
    name = re.sub(r"\s+", "", text).upper()
    if name in NAMED_CODES:
        kind, m, t = NAMED_CODES[name]
        field = Field(m)
        return bch_spec(field, t) if kind == "bch" else rs_spec(field, t)
    mobj = re.fullmatch(r"(BCH|RS):(\d+),(\d+),(\d+)", name)
    if not mobj:
        raise CliError(
            f"unknown code {text!r}; use a name from list-codes or kind:n,k,t")
    kind, n, k, t = mobj.group(1).lower(), *map(int, mobj.groups()[1:])
    m = n.bit_length()
    if (1 << m) - 1 != n:
        raise CliError(f"length {n} is not 2^m - 1")
    code = bch_spec(Field(m), t) if kind == "bch" else rs_spec(Field(m), t)
    if (code.n, code.k) != (n, k):
        raise CliError(
            f"{kind.upper()} t={t} over GF(2^{m}) gives ({code.n},{code.k}), "
            f"not ({n},{k})")
    return code


def build_spec(cfg):
    code = parse_code(cfg["code"])
    construction = cfg["construction"]
    if construction == "c2":
        if code.kind != "bch":
            raise CliError("construction c2 pairs a BCH code with its RS mate")
        code1, code2 = pair_construction2(code.field, code.t)
    else:
        code1 = code2 = code
    size = (cfg["m_blocks"] * code2.k if construction == "c1"
            else cfg["m_blocks"] * code2.k * code2.symbol_bits)
    ileave = InterleaverSpec(cfg["interleaver"], size, seed=cfg["seed"])
    return GpcbSpec(code1, code2, cfg["m_blocks"], ileave, construction)


def build_params(cfg):
    kwargs = {"iterations": cfg["iterations"]}
    for key in ("alpha", "beta"):
        if cfg[key] is not None:
            values = tuple(float(v) for v in str(cfg[key]).split(","))
            if len(values) == cfg["iterations"]:       # per-iteration shorthand
                values = tuple(v for v in values for _ in (0, 1))
            kwargs[f"{key}_schedule"] = values
    return DecodeParams(**kwargs)


def parse_ebn0(text):
    """start:step:stop in dB (inclusive stop), or a single value."""
    parts = str(text).split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise CliError("--ebn0 must be a value or start:step:stop")
    start, step, stop = map(float, parts)
    if step <= 0:
        raise CliError("--ebn0 step must be positive")
    points = np.arange(start, stop + step / 2, step)
    return [round(float(p), 10) for p in points]


def load_config(args):
    cfg = dict(DEFAULTS)
    if getattr(args, "config", None):
        with open(args.config) as fh:
            loaded = yaml.safe_load(fh) or {}
        if not isinstance(loaded, dict):
            raise CliError("config file must be a mapping")
        for key, value in loaded.items():
            cfg[key.replace("-", "_")] = value
    for key, value in vars(args).items():
        if key not in ("func", "config") and value is not None:
            cfg[key] = value
    if cfg.get("code") is None:
        raise CliError("--code is required (flag or config file)")
    return cfg


def _read_numbers(path, dtype):
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    return np.array([dtype(tok) for tok in text.replace(",", " ").split()])


def _write_numbers(path, values, fmt):
    out = " ".join(fmt % v for v in values) + "\n"
    if path in (None, "-"):
        sys.stdout.write(out)
    else:
        with open(path, "w") as fh:
            fh.write(out)


def cmd_list_codes(args):
    print(f"{'component':14s} {'construction':12s} {'GPCB (M=1)':18s} rate")
    for name, (kind, m, t) in NAMED_CODES.items():
        field = Field(m)
        code = bch_spec(field, t) if kind == "bch" else rs_spec(field, t)
        spec = GpcbSpec(code, code, 1)
        rate = int(float(spec.rate) * 100) / 100
        print(f"{name:14s} {'c1':12s} {spec!r:18s} {rate:.2f}")
        if kind == "bch" and m * t % 2 == 0:
            b, r = pair_construction2(field, t)
            spec2 = GpcbSpec(b, r, 1, construction="c2")
            rate = int(float(spec2.rate) * 100) / 100
            print(f"{name + '+RS':14s} {'c2':12s} {spec2!r:18s} {rate:.2f}")
    return 0


def cmd_encode(args):
    cfg = load_config(args)
    spec = build_spec(cfg)
    message = _read_numbers(getattr(args, "infile", None), int)
    word = encode(spec, message)
    _write_numbers(cfg["out"], word, "%d")
    return 0


def cmd_decode(args):
    cfg = load_config(args)
    spec = build_spec(cfg)
    params = build_params(cfg)
    soft = _read_numbers(getattr(args, "infile", None), float)
    message, _ = decode_iterative(spec, soft, params)
    _write_numbers(cfg["out"], message, "%d")
    return 0


def cmd_simulate(args):
    cfg = load_config(args)
    spec = build_spec(cfg)
    params = build_params(cfg)
    results = []
    for ebn0 in parse_ebn0(cfg["ebn0"]):
        channel = ChannelSpec(ebn0, float(spec.rate), seed=cfg["seed"])
        res = run_ber(spec, params, channel,
                      min_frame_errors=cfg["min_frame_errors"],
                      max_frames=cfg["max_frames"])
        results.append(res)
        print(f"{spec!r} ebn0={ebn0:g} dB frames={res.frames} "
              f"ber={res.ber[-1]:.3e} ({res.wall_seconds:.0f}s)",
              file=sys.stderr)
    if cfg["out"] is None:
        raise CliError("simulate needs --out <csv path>")
    write_csv(cfg["out"], results)
    return 0


def cmd_tune(args):
    cfg = load_config(args)
    spec = build_spec(cfg)
    ebn0 = parse_ebn0(cfg["ebn0"])[0]
    channel = ChannelSpec(ebn0, float(spec.rate), seed=cfg["seed"])
    params = tune_schedule(spec, channel, pools=(ALPHA_POOL, BETA_POOL),
                           iterations=cfg["iterations"],
                           min_frame_errors=cfg["min_frame_errors"],
                           max_frames=cfg["max_frames"])
    doc = {"iterations": params.iterations,
           "alpha": ",".join(f"{a:g}" for a in params.alpha_schedule),
           "beta": ",".join(f"{b:g}" for b in params.beta_schedule)}
    text = yaml.safe_dump(doc, sort_keys=False)
    if cfg["out"] is None:
        sys.stdout.write(text)
    else:
        with open(cfg["out"], "w") as fh:
            fh.write(text)
    return 0


def _add_common(sub):
    sub.add_argument("--config", help="YAML file mirroring the flags")
    sub.add_argument("--code", help="name from list-codes, or kind:n,k,t")
    sub.add_argument("--construction", choices=("c1", "c2"))
    sub.add_argument("--m-blocks", dest="m_blocks", type=int)
    sub.add_argument("--interleaver", choices=(
        "random", "block", "diagonal", "cyclic", "helical", "berrou"))
    sub.add_argument("--seed", type=int)
    sub.add_argument("--out")


def _add_decode_flags(sub):
    sub.add_argument("--iterations", type=int)
    sub.add_argument("--alpha", help="comma list, per iteration or per half")
    sub.add_argument("--beta", help="comma list, per iteration or per half")


def make_parser():
    parser = argparse.ArgumentParser(
        prog="gpcb",
        description="Parallel concatenated BCH/RS codes with iterative "
                    "Chase-Pyndiah decoding")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("list-codes", help="show the built-in code family")
    p.set_defaults(func=cmd_list_codes)

    p = subs.add_parser("encode", help="encode message units from a file/stdin")
    _add_common(p)
    p.add_argument("infile", nargs="?", help="message file (default stdin)")
    p.set_defaults(func=cmd_encode)

    p = subs.add_parser("decode", help="decode channel LLRs from a file/stdin")
    _add_common(p)
    _add_decode_flags(p)
    p.add_argument("infile", nargs="?", help="LLR file (default stdin)")
    p.set_defaults(func=cmd_decode)

    p = subs.add_parser("simulate", help="Monte Carlo BER sweep to CSV")
    _add_common(p)
    _add_decode_flags(p)
    p.add_argument("--ebn0", help="start:step:stop in dB, or one value")
    p.add_argument("--min-frame-errors", dest="min_frame_errors", type=int)
    p.add_argument("--max-frames", dest="max_frames", type=int)
    p.set_defaults(func=cmd_simulate)

    p = subs.add_parser("tune", help="greedy alpha/beta schedule search")
    _add_common(p)
    p.add_argument("--ebn0", help="operating point in dB")
    p.add_argument("--iterations", type=int)
    p.add_argument("--min-frame-errors", dest="min_frame_errors", type=int)
    p.add_argument("--max-frames", dest="max_frames", type=int)
    p.set_defaults(func=cmd_tune)

    return parser


def main(argv=None):
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ValueError, OSError) as exc:
        print(f"gpcb: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
