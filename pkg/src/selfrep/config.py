"""Flat key=value configuration for runs and sweeps.

Format: UTF-8 lines of `key = value`, dotted keys for grouping
(`extinction.threshold = 1000000`), `#` starts a comment. Unknown keys
are errors so typos never silently revert to defaults. An empty document
yields the default prime-sequence experiment (N=100, G_max=500, P_m=0.2,
N_a=100, L=4, no extinction).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .engine import ENGINE_COHORT, ENGINE_NAIVE, SimParams
from .extinction import KIND_LOW_COMPLEXITY_PURGE, KIND_NONE, ExtinctionPolicy
from .rules import ReplicationRule, all_ones_rule, prime_sequence_rule


class ConfigError(ValueError):
    """Malformed document, unknown key, or out-of-range value."""


@dataclass(frozen=True)
class SimConfig:
    problem: str = "primes"
    primes_n: int = 100
    onemax_target_len: int | None = None
    g_max: int = 500
    lifetime_L: int = 4
    p_m: float = 0.2
    n_a: int = 100
    seed: int = 0
    engine: str = ENGINE_COHORT
    population_cap: int = 10**12
    reseed_on_extinction: bool = True
    stop_at_target: bool = False
    target_complexity: int | None = None
    max_genome_length: int = 10**4
    extinction_policy: str = KIND_NONE
    extinction_threshold: int = 10**6
    extinction_keep_top_k: int = 1
    runs: int = 30
    seed_base: int = 0
    output_dir: str = "out"
    emit_chart: bool = False

    def rule(self) -> ReplicationRule:
        if self.problem == "primes":
            return prime_sequence_rule(self.primes_n)
        return all_ones_rule(self.onemax_target_len)

    def element_set(self) -> tuple[int, ...]:
        if self.problem == "primes":
            return tuple(range(1, self.primes_n + 1))
        return (0, 1)

    def sim_params(self, seed: int | None = None) -> SimParams:
        target = self.target_complexity
        if target is None and self.stop_at_target:
            target = self.rule().max_complexity_hint
            if target is None:
                raise ConfigError(
                    "stop_at_target needs target_complexity or a problem "
                    "with a known target length"
                )
        return SimParams(
            g_max=self.g_max,
            lifetime_L=self.lifetime_L,
            p_m=self.p_m,
            n_a=self.n_a,
            element_set=self.element_set(),
            seed=self.seed if seed is None else seed,
            engine_mode=self.engine,
            population_cap=self.population_cap,
            reseed_on_extinction=self.reseed_on_extinction,
            stop_at_target=self.stop_at_target,
            target_complexity=target,
            max_genome_length=self.max_genome_length,
            extinction=ExtinctionPolicy(
                kind=self.extinction_policy,
                trigger_threshold=self.extinction_threshold,
                keep_top_k=self.extinction_keep_top_k,
            ),
        )


def _parse_bool(key: str, raw: str) -> bool:
    if raw == "true":
        return True
    if raw == "false":
        return False
    raise ConfigError(f"{key}: expected true or false, got {raw!r}")


def _parse_int(key: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {raw!r}") from None


def _parse_float(key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"{key}: expected a number, got {raw!r}") from None


def _parse_optional_int(key: str, raw: str) -> int | None:
    if raw == "none":
        return None
    return _parse_int(key, raw)


# config key -> (SimConfig field, parser)
_KEYS = {
    "problem": ("problem", lambda k, v: v),
    "primes.n": ("primes_n", _parse_int),
    "onemax.target_len": ("onemax_target_len", _parse_optional_int),
    "g_max": ("g_max", _parse_int),
    "lifetime_l": ("lifetime_L", _parse_int),
    "p_m": ("p_m", _parse_float),
    "n_a": ("n_a", _parse_int),
    "seed": ("seed", _parse_int),
    "engine": ("engine", lambda k, v: v),
    "population_cap": ("population_cap", _parse_int),
    "reseed_on_extinction": ("reseed_on_extinction", _parse_bool),
    "stop_at_target": ("stop_at_target", _parse_bool),
    "target_complexity": ("target_complexity", _parse_optional_int),
    "max_genome_length": ("max_genome_length", _parse_int),
    "extinction.policy": ("extinction_policy", lambda k, v: v),
    "extinction.threshold": ("extinction_threshold", _parse_int),
    "extinction.keep_top_k": ("extinction_keep_top_k", _parse_int),
    "runs": ("runs", _parse_int),
    "seed_base": ("seed_base", _parse_int),
    "output_dir": ("output_dir", lambda k, v: v),
    "emit_chart": ("emit_chart", _parse_bool),
}


def _validate(cfg: SimConfig) -> SimConfig:
    def bad(key: str, why: str):
        raise ConfigError(f"{key}: {why}")

    if cfg.problem not in ("primes", "onemax"):
        bad("problem", f"must be 'primes' or 'onemax', got {cfg.problem!r}")
    if cfg.primes_n < 2:
        bad("primes.n", "must be >= 2")
    if cfg.onemax_target_len is not None and cfg.onemax_target_len < 1:
        bad("onemax.target_len", "must be >= 1")
    if cfg.g_max < 1:
        bad("g_max", "must be >= 1")
    if cfg.lifetime_L < 1:
        bad("lifetime_l", "must be >= 1")
    if not 0.0 <= cfg.p_m <= 1.0:
        bad("p_m", f"must lie in [0, 1], got {cfg.p_m}")
    if cfg.n_a < 1:
        bad("n_a", "must be >= 1")
    if cfg.seed < 0 or cfg.seed >= 2**64:
        bad("seed", "must be an unsigned 64-bit integer")
    if cfg.engine not in (ENGINE_COHORT, ENGINE_NAIVE):
        bad("engine", f"must be 'cohort' or 'naive', got {cfg.engine!r}")
    if cfg.population_cap < 1:
        bad("population_cap", "must be >= 1")
    if cfg.target_complexity is not None and cfg.target_complexity < 1:
        bad("target_complexity", "must be >= 1")
    if cfg.max_genome_length < 1:
        bad("max_genome_length", "must be >= 1")
    if cfg.extinction_policy not in (KIND_NONE, KIND_LOW_COMPLEXITY_PURGE):
        bad(
            "extinction.policy",
            f"must be 'none' or 'low_complexity_purge', got {cfg.extinction_policy!r}",
        )
    if cfg.extinction_threshold < 1:
        bad("extinction.threshold", "must be >= 1")
    if cfg.extinction_keep_top_k < 1:
        bad("extinction.keep_top_k", "must be >= 1")
    if cfg.runs < 1:
        bad("runs", "must be >= 1")
    if cfg.seed_base < 0 or cfg.seed_base >= 2**64:
        bad("seed_base", "must be an unsigned 64-bit integer")
    return cfg


def parse_config(text: str) -> SimConfig:
    values: dict[str, object] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, raw_value = line.partition("=")
        key = key.strip()
        raw_value = raw_value.strip()
        if key not in _KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        field, parser = _KEYS[key]
        values[field] = parser(key, raw_value)
    return _validate(replace(SimConfig(), **values))


def format_config(cfg: SimConfig) -> str:
    """Canonical key=value rendering; parse(format(cfg)) == cfg."""

    def fmt(value) -> str:
        if value is None:
            return "none"
        if isinstance(value, bool):
            return "true" if value else "false"
        return str(value)

    lines = [f"{key} = {fmt(getattr(cfg, field))}" for key, (field, _) in _KEYS.items()]
    return "\n".join(lines) + "\n"


def load_config(path: str) -> SimConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
