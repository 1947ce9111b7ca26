"""Read simulator CSV files into curve groups.

Input contract (shared with the simulator): header
code,construction,M,interleaver,seed,ebn0_db,iteration,bits,frames,
bit_errors,frame_errors,ber,fer — one row per (ebn0_db, iteration).
"""

import csv
import warnings
from dataclasses import dataclass, field

REQUIRED_COLUMNS = ("code", "construction", "M", "interleaver", "seed",
                    "ebn0_db", "iteration", "bits", "frames", "bit_errors",
                    "frame_errors", "ber", "fer")

GROUP_KEYS = ("iteration", "M", "interleaver", "code")

# columns that identify a figure once the group key is excluded
_IDENTITY = ("code", "construction", "M", "interleaver")

_PARSERS = {"M": int, "seed": int, "ebn0_db": float, "iteration": int,
            "bits": int, "frames": int, "bit_errors": int,
            "frame_errors": int, "ber": float, "fer": float}


class SchemaError(ValueError):
    pass


@dataclass
class Series:
    label: str
    points: list = field(default_factory=list)   # (ebn0_db, ber), sorted


@dataclass
class CurveGroup:
    group_key: str
    identity: dict                               # fixed columns for the figure
    series: list = field(default_factory=list)


def _parse_row(path, lineno, row):
    missing = [c for c in REQUIRED_COLUMNS if c not in row or row[c] is None]
    if missing:
        raise SchemaError(f"{path}:{lineno}: missing column(s) {missing}")
    out = dict(row)
    for col, cast in _PARSERS.items():
        try:
            out[col] = cast(row[col])
        except ValueError:
            raise SchemaError(
                f"{path}:{lineno}: column {col!r} has non-numeric "
                f"value {row[col]!r}") from None
    return out


def read_rows(csv_paths):
    rows = []
    for path in csv_paths:
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None:
                raise SchemaError(f"{path}:1: empty file, header expected")
            missing = [c for c in REQUIRED_COLUMNS if c not in reader.fieldnames]
            if missing:
                raise SchemaError(f"{path}:1: missing column(s) {missing}")
            for lineno, row in enumerate(reader, start=2):
                rows.append(_parse_row(path, lineno, row))
    return rows


def load(csv_paths, group_by="iteration"):
    """Group rows into one CurveGroup per identity, one series per value of
    the group key.  When grouping by anything other than iteration, only the
    final iteration of each run is compared."""
    if group_by not in GROUP_KEYS:
        raise SchemaError(f"group key must be one of {GROUP_KEYS}")
    rows = read_rows(csv_paths)
    if group_by != "iteration":
        last = {}
        for row in rows:
            key = tuple(row[c] for c in _IDENTITY) + (row["seed"], row["ebn0_db"])
            if key not in last or row["iteration"] > last[key]["iteration"]:
                last[key] = row
        rows = list(last.values())

    groups = {}
    for row in rows:
        # the code label already implies the construction, so a cross-code
        # comparison keeps c1 and c2 curves on one figure
        skip = {group_by} | ({"construction"} if group_by == "code" else set())
        identity = {c: row[c] for c in _IDENTITY if c not in skip}
        gkey = tuple(sorted(identity.items()))
        group = groups.setdefault(gkey, CurveGroup(group_by, identity, []))
        label = (f"iteration {row['iteration']}" if group_by == "iteration"
                 else f"M={row['M']}" if group_by == "M"
                 else str(row[group_by]))
        series = next((s for s in group.series if s.label == label), None)
        if series is None:
            series = Series(label)
            group.series.append(series)
        if row["ber"] <= 0.0:
            warnings.warn(
                f"dropping zero-BER point at ebn0={row['ebn0_db']} "
                f"({label}): not representable on a log axis")
            continue
        series.points.append((row["ebn0_db"], row["ber"]))

    for group in groups.values():
        for series in group.series:
            series.points.sort()
        group.series.sort(key=lambda s: s.label)
    return [groups[k] for k in sorted(groups)]
