"""Seeded storage-failure simulation driving the repair planner.

Every round is independent: its generator is seeded with
``splitmix64(seed) XOR round`` (the first splitmix64 output for ``seed``), so
serial and parallel runs produce the same report. Scrambling the seed first
keeps nearby seeds from replaying the same rounds in a different order.

The generator is xoshiro256** (Blackman and Vigna) seeded through splitmix64,
chosen so that reports can be reproduced by any implementation:

* splitmix64: ``z += 0x9E3779B97F4A7C15``;
  ``z = (z ^ z>>30) * 0xBF58476D1CE4E5B9``; ``z = (z ^ z>>27) * 0x94D049BB133111EB``;
  output ``z ^ z>>31``. Four outputs fill the xoshiro state.
* integers below ``m`` use rejection sampling: draw until ``x < 2^64 - (2^64 mod m)``, return ``x mod m``.
* floats are ``(x >> 11) * 2^-53``.
"""

from __future__ import annotations

import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .code import CodeInstance, encode
from .errors import HlrcError, ValidationError
from .repair import Tier, plan_repair, repair

MASK64 = (1 << 64) - 1
BASE_KINDS = ("single", "lambda_burst_same_subnest", "lambda_burst_same_nest")
_SCATTERED = re.compile(r"^scattered\((\d+)\)$")


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


class Xoshiro256StarStar:
    def __init__(self, seed: int):
        sm = SplitMix64(seed)
        self.s = [sm.next() for _ in range(4)]

    def next(self) -> int:
        s = self.s
        result = (_rotl((s[1] * 5) & MASK64, 7) * 9) & MASK64
        t = (s[1] << 17) & MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def below(self, m: int) -> int:
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            x = self.next()
            if x < limit:
                return x % m

    def random(self) -> float:
        return (self.next() >> 11) * 2.0**-53

    def sample(self, population: Sequence[int], count: int) -> list[int]:
        """``count`` distinct items by a partial Fisher-Yates shuffle."""
        pool = list(population)
        for i in range(count):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:count]


def round_seed(seed: int, r: int) -> int:
    return SplitMix64(seed).next() ^ r


def _kind_order(name: str) -> tuple[int, int]:
    if name in BASE_KINDS:
        return (BASE_KINDS.index(name), 0)
    m = _SCATTERED.match(name)
    if not m:
        raise ValidationError(f"unknown event kind {name!r}")
    return (len(BASE_KINDS), int(m.group(1)))


@dataclass(frozen=True)
class Scenario:
    """Round count, seed and relative weights of the failure events.

    Event kinds are ``single``, ``lambda_burst_same_subnest``,
    ``lambda_burst_same_nest`` and ``scattered(j)``. Kinds are drawn in that
    fixed order (scattered by ascending j), whatever order the mix was given in.
    """

    seed: int
    rounds: int
    event_mix: tuple[tuple[str, float], ...]

    def __post_init__(self):
        if self.rounds < 0:
            raise ValidationError("rounds must be nonnegative")
        mix = tuple(sorted(((str(k), float(w)) for k, w in self.event_mix), key=lambda kw: _kind_order(kw[0])))
        if len({k for k, _ in mix}) != len(mix):
            raise ValidationError("duplicate event kind")
        if any(w < 0 for _, w in mix) or not any(w > 0 for _, w in mix):
            raise ValidationError("weights must be nonnegative and not all zero")
        object.__setattr__(self, "seed", int(self.seed) & MASK64)
        object.__setattr__(self, "event_mix", mix)

    @classmethod
    def from_dict(cls, d: dict) -> Scenario:
        mix = []
        for name, w in d.get("event_mix", {}).items():
            if name == "scattered" and isinstance(w, dict):
                mix.extend((f"scattered({int(j)})", wj) for j, wj in w.items())
            else:
                mix.append((name, w))
        return cls(int(d["seed"]), int(d["rounds"]), tuple(mix))

    def to_dict(self) -> dict:
        return {"seed": self.seed, "rounds": self.rounds, "event_mix": dict(self.event_mix)}

    def validate_for(self, code: CodeInstance) -> None:
        for name, _ in self.event_mix:
            m = _SCATTERED.match(name)
            if m and not 1 <= int(m.group(1)) <= code.d - 1:
                raise ValidationError(f"{name}: scattered count must be in 1..d-1 = {code.d - 1}")


@dataclass
class SimReport:
    rounds: int
    event_counts: dict[str, int] = field(default_factory=dict)
    access_histogram: dict[int, int] = field(default_factory=dict)
    access_by_kind: dict[str, dict[int, int]] = field(default_factory=dict)
    erased_symbols: int = 0
    helpers_touched: int = 0
    failures: int = 0
    ceiling_violations: int = 0

    @property
    def mean_helpers_per_symbol(self) -> float:
        return self.helpers_touched / self.erased_symbols if self.erased_symbols else 0.0

    def to_dict(self) -> dict:
        return {
            "rounds": self.rounds,
            "event_counts": dict(sorted(self.event_counts.items(), key=lambda kv: _kind_order(kv[0]))),
            "access_histogram": {str(c): n for c, n in sorted(self.access_histogram.items())},
            "access_by_kind": {
                k: {str(c): n for c, n in sorted(h.items())}
                for k, h in sorted(self.access_by_kind.items(), key=lambda kv: _kind_order(kv[0]))
            },
            "erased_symbols": self.erased_symbols,
            "helpers_touched": self.helpers_touched,
            "mean_helpers_per_symbol": self.mean_helpers_per_symbol,
            "failures": self.failures,
            "ceiling_violations": self.ceiling_violations,
        }


def _pick_kind(rng: Xoshiro256StarStar, mix: tuple[tuple[str, float], ...]) -> str:
    total = sum(w for _, w in mix)
    target = rng.random() * total
    acc = 0.0
    for name, w in mix:
        acc += w
        if target < acc and w > 0:
            return name
    return next(name for name, w in reversed(mix) if w > 0)


def _erasures(rng: Xoshiro256StarStar, code: CodeInstance, kind: str) -> list[int]:
    if kind == "single":
        return [rng.below(code.n)]
    if kind == "lambda_burst_same_subnest":
        i, j = rng.below(code.ell), rng.below(code.subnests_per_nest)
        return rng.sample(code.subnest_columns(i, j), code.lam)
    if kind == "lambda_burst_same_nest":
        return rng.sample(code.nest_columns(rng.below(code.ell)), code.lam)
    count = int(_SCATTERED.match(kind).group(1))
    return rng.sample(range(code.n), count)


def run_round(code: CodeInstance, sc: Scenario, r: int) -> tuple[str, int, int, bool, bool]:
    """One round: (kind, helpers touched, symbols erased, repaired ok, within ceiling)."""
    rng = Xoshiro256StarStar(round_seed(sc.seed, r))
    kind = _pick_kind(rng, sc.event_mix)
    message = [rng.below(code.field.q) for _ in range(code.k)]
    codeword = encode(code, message)
    erased = sorted(_erasures(rng, code, kind))
    plan = plan_repair(code, erased)
    word = list(codeword)
    for c in erased:
        word[c] = None
    try:
        ok = repair(code, word) == codeword
    except HlrcError:
        ok = False
    cost = plan.total_access
    within = all(
        len(s.helpers) == {Tier.SUBNEST: code.b, Tier.NEST: code.a, Tier.GLOBAL: code.k}[s.tier] for s in plan.steps
    )
    if kind == "single":
        within = within and cost <= code.b
    elif kind.startswith("lambda_burst"):
        within = within and cost <= code.a
    return kind, cost, len(erased), ok, within


def _run_chunk(args: tuple[CodeInstance, Scenario, int, int]) -> list[tuple[str, int, int, bool, bool]]:
    code, sc, start, stop = args
    return [run_round(code, sc, r) for r in range(start, stop)]


def simulate(code: CodeInstance, sc: Scenario, jobs: int = 1) -> SimReport:
    sc.validate_for(code)
    if jobs > 1 and sc.rounds > 1:
        step = -(-sc.rounds // jobs)
        chunks = [(code, sc, s, min(s + step, sc.rounds)) for s in range(0, sc.rounds, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [row for part in pool.map(_run_chunk, chunks) for row in part]
    else:
        results = _run_chunk((code, sc, 0, sc.rounds))

    report = SimReport(sc.rounds, event_counts={name: 0 for name, _ in sc.event_mix})
    hist: Counter[int] = Counter()
    for kind, cost, erased, ok, within in results:
        report.event_counts[kind] += 1
        hist[cost] += 1
        report.access_by_kind.setdefault(kind, {})
        report.access_by_kind[kind][cost] = report.access_by_kind[kind].get(cost, 0) + 1
        report.erased_symbols += erased
        report.helpers_touched += cost
        report.failures += not ok
        report.ceiling_violations += not within
    report.access_histogram = dict(hist)
    return report
