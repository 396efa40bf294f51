"""Benchmark harness for the decision procedure.

A grid is written ``key=v1,v2;key=v`` (or given as a JSON object with list
values). Recognized keys: ``kind`` (``hard`` or ``alt-induced``, default
``hard``), ``k``, ``n`` (block size, for ``hard``), ``size`` (|Z|, for other
kinds), ``maxlen``, ``reps``, ``seed``. Every cell of the cartesian product
is run ``reps`` times with consecutive seeds.
"""
from __future__ import annotations

import csv
import itertools
import json
import time
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from statistics import median

from .errors import BudgetExceeded
from .fic import SearchBudget, decide_alt_induced
from .generate import gen_instance
from .language import partition_by_first_letter

DEFAULTS = {"kind": ["hard"], "k": [2], "maxlen": [5], "reps": [3], "seed": [0]}
INT_KEYS = {"k", "n", "size", "maxlen", "reps", "seed"}


@dataclass(frozen=True)
class BenchRecord:
    instance_id: str
    kind: str
    seed: int
    k: int
    size: int
    m: int
    n: int
    wall_time: float
    candidates: int
    verdict: str
    valid: bool

    def to_row(self) -> dict[str, str]:
        return {f.name: repr(getattr(self, f.name)) if f.type == "float" else str(getattr(self, f.name))
                for f in fields(self)}

    @classmethod
    def from_row(cls, row: dict[str, str]) -> "BenchRecord":
        kwargs = {}
        for f in fields(cls):
            v = row[f.name]
            if f.type == "int":
                kwargs[f.name] = int(v)
            elif f.type == "float":
                kwargs[f.name] = float(v)
            elif f.type == "bool":
                kwargs[f.name] = v == "True"
            else:
                kwargs[f.name] = v
        return cls(**kwargs)


FIELDNAMES = [f.name for f in fields(BenchRecord)]


def parse_grid(spec: str) -> list[dict]:
    """Expand a grid spec into one parameter dict per run."""
    spec = spec.strip()
    if not spec:
        return []
    path = Path(spec)
    if spec.startswith("{"):
        raw = json.loads(spec)
    elif path.suffix == ".json" and path.exists():
        raw = json.loads(path.read_text(encoding="utf-8"))
    else:
        raw = {}
        for part in spec.split(";"):
            if not part.strip():
                continue
            key, sep, values = part.partition("=")
            if not sep:
                raise ValueError(f"grid entry {part!r} is not key=values")
            raw[key.strip()] = [v.strip() for v in values.split(",") if v.strip()]
    grid = {k: list(v) for k, v in DEFAULTS.items()}
    for key, values in raw.items():
        if key not in INT_KEYS | {"kind"}:
            raise ValueError(f"unknown grid key {key!r}")
        values = values if isinstance(values, list) else [values]
        grid[key] = [int(v) for v in values] if key in INT_KEYS else [str(v) for v in values]
    if not grid.get("n") and not grid.get("size"):
        return []
    runs = []
    (base_seed,) = grid["seed"][:1]
    (reps,) = grid["reps"][:1]
    sizes = grid.get("n") or grid.get("size")
    counter = 0
    for kind, k, size, maxlen in itertools.product(grid["kind"], grid["k"], sizes, grid["maxlen"]):
        for _ in range(reps):
            runs.append(
                {"kind": kind, "k": k, "size": size, "maxlen": maxlen, "seed": base_seed + counter}
            )
            counter += 1
    return runs


def run_one(params: dict, budget: SearchBudget | None = None) -> BenchRecord:
    z, planted = gen_instance(params["kind"], params["k"], params["size"], params["maxlen"], params["seed"])
    m = z.min_length()
    n = min(len(b) for b in partition_by_first_letter(z).values())
    ident = f"{params['kind']}-k{params['k']}-s{params['size']}-L{params['maxlen']}-{params['seed']}"
    start = time.perf_counter()
    try:
        rep = decide_alt_induced(z, budget)
    except BudgetExceeded:
        elapsed = time.perf_counter() - start
        cap = (budget or SearchBudget()).max_candidates
        return BenchRecord(ident, params["kind"], params["seed"], params["k"], len(z), m, n,
                           elapsed, cap, "budget", True)
    elapsed = time.perf_counter() - start
    valid = rep.decomposition is None or rep.decomposition.validate(z)
    if planted is not None:
        valid = valid and rep.is_alt_induced
    return BenchRecord(ident, params["kind"], params["seed"], params["k"], len(z), m, n,
                       elapsed, rep.stats.candidates, rep.verdict.value, valid)


def bench_fic(grid: str | list[dict], out: str | Path, budget: SearchBudget | None = None) -> list[BenchRecord]:
    runs = parse_grid(grid) if isinstance(grid, str) else grid
    out = Path(out)
    records = []
    with out.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=FIELDNAMES)
        writer.writeheader()
        for params in runs:
            rec = run_one(params, budget)
            writer.writerow(rec.to_row())
            fh.flush()
            records.append(rec)
    return records


def read_records(path: str | Path) -> list[BenchRecord]:
    with Path(path).open(newline="", encoding="utf-8") as fh:
        return [BenchRecord.from_row(row) for row in csv.DictReader(fh)]


def median_candidates_by_n(records: list[BenchRecord]) -> dict[int, float]:
    by_n: dict[int, list[int]] = {}
    for r in records:
        by_n.setdefault(r.n, []).append(r.candidates)
    return {n: median(v) for n, v in sorted(by_n.items())}


def summary(records: list[BenchRecord]) -> dict:
    return {
        "runs": len(records),
        "median_candidates_by_n": median_candidates_by_n(records),
        "budget_exceeded": sum(r.verdict == "budget" for r in records),
        "invalid": sum(not r.valid for r in records),
        "records": [asdict(r) for r in records],
    }
