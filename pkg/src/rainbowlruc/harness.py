"""Competitive-ratio experiments: LRUC against the exact offline optimum."""

from __future__ import annotations

import csv
import io
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import BadParameters, ConfigError
from .generators import FAMILY_NAMES, EdgeStream, Family, make_stream
from .lruc import color_stream
from .oracle import SearchBudget, is_rainbow_connected, rc_closed_form, rc_exact

ORACLE_MODES = ("exact", "closed_form", "skip")
ORDERS = ("adversarial", "natural", "random")

CSV_COLUMNS = (
    "family", "n", "params", "order", "seed", "colors_online", "rc",
    "ratio_num", "ratio_den", "bound_num", "bound_den", "within_bound", "rainbow_valid",
)


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    family: str
    bound: Callable[[int], Fraction]
    min_n: int


THEOREMS = {
    "T1-line": TheoremSpec("T1-line", "path", lambda n: Fraction(1), 2),
    "T1-tree": TheoremSpec("T1-tree", "tree", lambda n: Fraction(1), 2),
    "T1-star": TheoremSpec("T1-star", "star", lambda n: Fraction(1), 2),
    "T2-cycle": TheoremSpec("T2-cycle", "cycle", lambda n: 2 - Fraction(2, n), 4),
    "T3-wheel": TheoremSpec("T3-wheel", "wheel", lambda n: Fraction(n - 1, 3), 8),
    "T4-complete": TheoremSpec("T4-complete", "complete", lambda n: Fraction(n - 1), 2),
}

_THEOREM_BY_FAMILY = {spec.family: spec for spec in THEOREMS.values()}


def theorem_bound(family: Optional[str], n: int) -> Optional[Fraction]:
    spec = _THEOREM_BY_FAMILY.get(family)
    if spec is None or n < spec.min_n:
        return None
    return spec.bound(n)


@dataclass(frozen=True)
class RatioReport:
    family: Optional[str]
    n: int
    params: dict
    order: str
    seed: Optional[int]
    colors_online: int
    rc: Optional[int]
    rc_source: str
    ratio: Optional[Fraction]
    theorem_bound: Optional[Fraction]
    within_bound: Optional[bool]
    rainbow_valid: bool

    def row(self) -> list:
        params = ";".join(f"{k}={v}" for k, v in self.params.items() if k != "n")

        def part(x: Optional[Fraction], attr: str):
            return "" if x is None else getattr(x, attr)

        return [
            self.family or "",
            self.n,
            params,
            self.order,
            "" if self.seed is None else self.seed,
            self.colors_online,
            "" if self.rc is None else self.rc,
            part(self.ratio, "numerator"),
            part(self.ratio, "denominator"),
            part(self.theorem_bound, "numerator"),
            part(self.theorem_bound, "denominator"),
            "" if self.within_bound is None else str(self.within_bound).lower(),
            str(self.rainbow_valid).lower(),
        ]

    def to_json(self) -> dict:
        def frac(x):
            return None if x is None else str(x)

        return {
            "family": self.family,
            "n": self.n,
            "params": self.params,
            "order": self.order,
            "seed": self.seed,
            "colors_online": self.colors_online,
            "rc": self.rc,
            "rc_source": self.rc_source,
            "ratio": frac(self.ratio),
            "bound": frac(self.theorem_bound),
            "within_bound": self.within_bound,
            "rainbow_valid": self.rainbow_valid,
        }


def run_instance(
    stream: EdgeStream,
    oracle_mode: str = "exact",
    budget: SearchBudget = SearchBudget(),
) -> RatioReport:
    """Color ``stream`` online and compare with the offline optimum.

    ``closed_form`` falls back to exact search where no closed form applies.
    """
    if oracle_mode not in ORACLE_MODES:
        raise BadParameters(f"unknown oracle mode {oracle_mode!r}")
    coloring, _ = color_stream(stream)
    g = coloring.graph
    valid = is_rainbow_connected(g, coloring)

    rc, source = None, "skip"
    if oracle_mode == "closed_form" and stream.family is not None:
        params = dict(stream.params)
        if stream.family == "tree":
            params = {"m": g.m}
        rc = rc_closed_form(stream.family, **params)
        source = "closed_form"
    if oracle_mode != "skip" and rc is None:
        rc, source = rc_exact(g, budget).rc, "exact"

    ratio = None if rc is None else Fraction(coloring.colors_used, rc)
    bound = theorem_bound(stream.family, g.n)
    within = None if bound is None or ratio is None else ratio <= bound
    return RatioReport(
        stream.family, g.n, dict(stream.params), stream.strategy, stream.seed,
        coloring.colors_used, rc, source, ratio, bound, within, valid,
    )


def verify_theorem(theorem_id: str, n_values, budget: SearchBudget = SearchBudget()):
    """Adversarial instance per n; passes iff every bound holds and every coloring is rainbow."""
    try:
        spec = THEOREMS[theorem_id]
    except KeyError:
        raise BadParameters(f"unknown theorem {theorem_id!r}") from None
    reports = []
    for n in n_values:
        if n < spec.min_n:
            raise BadParameters(f"{theorem_id} holds for n >= {spec.min_n}, got {n}")
        fam = Family(spec.family, n, seed=0 if spec.family == "tree" else None)
        reports.append(run_instance(make_stream(fam, "adversarial"), "exact", budget))
    ok = all(r.within_bound and r.rainbow_valid for r in reports)
    return reports, ok


@dataclass
class SweepConfig:
    families: list[str]
    n_values: list[int]
    pq: list[tuple[int, int]]
    orders: list[str]
    seeds: list[int]
    oracle: str = "exact"
    out: Optional[str] = None
    workers: int = 1
    budget: SearchBudget = SearchBudget()

    def instances(self):
        for fam_name, order in itertools.product(self.families, self.orders):
            if fam_name == "complete_bipartite":
                fams = [Family(fam_name, p=p, q=q) for p, q in self.pq]
            else:
                fams = [Family(fam_name, n) for n in self.n_values]
            for fam in fams:
                # seeds matter for random orders and random trees
                seeded = order == "random" or fam_name == "tree"
                for seed in self.seeds if seeded else [None]:
                    if fam_name == "tree":
                        fam = Family("tree", fam.n, seed=seed)
                    yield fam, order, seed


def _int_list(field: str, text: str) -> list[int]:
    out = []
    try:
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            if ".." in chunk:
                lo, hi = chunk.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(chunk))
    except ValueError:
        raise ConfigError(f"{field}: expected integers or ranges like 4..9, got {text!r}") from None
    return out


def _name_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def parse_config(text: str) -> SweepConfig:
    """Flat ``key = value`` config; ``#`` starts a comment line.

    Keys: families, n, pq (e.g. ``2x3, 3x3``), orders, seeds, oracle, out,
    workers, budget_edges, budget_seconds.
    """
    raw = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        raw[key] = value
    known = {"families", "n", "pq", "orders", "seeds", "oracle", "out", "workers",
             "budget_edges", "budget_seconds"}
    for key in raw:
        if key not in known:
            raise ConfigError(f"{key}: unknown field")

    families = _name_list(raw.get("families", ""))
    if not families:
        raise ConfigError("families: at least one family required")
    for fam in families:
        if fam not in FAMILY_NAMES:
            raise ConfigError(f"families: unknown family {fam!r}")
    orders = _name_list(raw.get("orders", "adversarial"))
    for order in orders:
        if order not in ORDERS:
            raise ConfigError(f"orders: unknown order {order!r}")
    oracle = raw.get("oracle", "exact")
    if oracle not in ORACLE_MODES:
        raise ConfigError(f"oracle: unknown mode {oracle!r}")
    pq = []
    for item in _name_list(raw.get("pq", "")):
        try:
            p, q = (int(x) for x in item.lower().split("x"))
        except ValueError:
            raise ConfigError(f"pq: expected PxQ, got {item!r}") from None
        pq.append((p, q))
    n_values = _int_list("n", raw.get("n", ""))
    if any(f != "complete_bipartite" for f in families) and not n_values:
        raise ConfigError("n: required for the listed families")
    if "complete_bipartite" in families and not pq:
        raise ConfigError("pq: required for complete_bipartite")
    seeds = _int_list("seeds", raw.get("seeds", "0"))
    if not seeds:
        raise ConfigError("seeds: at least one seed required")
    workers = _int_list("workers", raw.get("workers", "1"))
    budget = SearchBudget(
        _int_list("budget_edges", raw.get("budget_edges", "16"))[0],
        float(raw["budget_seconds"]) if "budget_seconds" in raw else SearchBudget().max_seconds,
    )
    config = SweepConfig(families, n_values, pq, orders, seeds, oracle,
                         raw.get("out"), workers[0] if workers else 1, budget)
    try:
        list(config.instances())
    except BadParameters as exc:
        raise ConfigError(f"n: {exc}") from None
    return config


def _run_one(args) -> RatioReport:
    fam, order, seed, oracle, budget = args
    return run_instance(make_stream(fam, order, seed or 0), oracle, budget)


def sweep(config: SweepConfig) -> list[RatioReport]:
    jobs = [(fam, order, seed, config.oracle, config.budget)
            for fam, order, seed in config.instances()]
    if config.workers > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            # map preserves submission order
            return list(pool.map(_run_one, jobs))
    return [_run_one(job) for job in jobs]


def to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(r.row())
    return buf.getvalue()
