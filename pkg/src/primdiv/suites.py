"""Verification batteries over random seed corpora, reported as JSON.

Each suite walks a deterministic corpus (drawn from ``config.seed``) and
turns every individual check into a record ``{id, params, pass, witness}``.
A failing check is recorded, never raised.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from .arith import is_prime
from .corpus import seed_corpus
from .cyclo import SeedKind
from .errors import ConfigError, DeletedIndex
from .factor_fp import factor_fp
from .mpoly import Monic, RingSpec
from .polytext import format_poly
from .resultant import resultant_lemma_check
from .sequences import (
    LEMMAS,
    Kind,
    SequenceSpec,
    cyclotomic_value,
    frobenius_check,
    lemma_coprime_check,
    primitive_part,
    seq_term,
    strong_div_check,
    valuation,
)

SUITES = ("zsigmondy", "lucas", "lehmer", "lemmas", "valuation", "frobenius")
LEMMA_BOUND = 12
VALUATION_MAX_N = 10
VALUATION_MULTIPLIERS = (2, 3, 4)

# Resultant grids: (lemma, m values, n values).
RESULTANT_GRIDS = {
    "RES2": [(m, n) for n in range(3, 13) for m in range(2, n) if gcd(m, n) == 1],
    "MIX": [(m, n) for m in range(1, 12, 2) for n in range(4, 13, 2) if gcd(m, n) == 1],
    "PMN": [(m, n) for m in range(3, 10, 2) for n in range(3, 10, 2)],
    "ABN": [(0, n) for n in range(3, 16, 2)],
}


@dataclass(frozen=True)
class SuiteConfig:
    char: int = 0
    vars: int = 1
    max_n: int = 24
    trials: int = 10
    seed: int = 42

    def validate(self):
        if self.char < 0 or (self.char and not is_prime(self.char)):
            raise ConfigError(f"characteristic must be 0 or a prime, got {self.char}")
        if not 1 <= self.vars <= 8:
            raise ConfigError(f"number of variables must be in 1..8, got {self.vars}")
        if not 3 <= self.max_n <= 32:
            raise ConfigError(f"max_n must be in 3..32, got {self.max_n}")
        if self.trials < 1:
            raise ConfigError("trials must be positive")

    def ring(self) -> RingSpec:
        return RingSpec(self.char, self.vars)


@dataclass
class SuiteReport:
    suite: str
    config: SuiteConfig
    corpus: str
    records: list[dict] = field(default_factory=list)

    def add(self, rid: str, params: dict, ok: bool, witness: dict | None = None):
        self.records.append({"id": rid, "params": params, "pass": bool(ok), "witness": witness or {}})

    @property
    def summary(self) -> dict:
        passed = sum(r["pass"] for r in self.records)
        return {"pass": passed, "fail": len(self.records) - passed}

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def failures(self) -> list[dict]:
        return [r for r in self.records if not r["pass"]]

    def to_dict(self) -> dict:
        cfg = self.config
        return {
            "suite": self.suite,
            "config": {"char": cfg.char, "vars": cfg.vars, "max_n": cfg.max_n,
                       "trials": cfg.trials, "corpus": self.corpus},
            "records": sorted(self.records, key=lambda r: r["id"]),
            "summary": self.summary,
            "rand_seed": cfg.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _corpus_note(kind: SeedKind, cfg: SuiteConfig) -> str:
    return (f"{cfg.trials} random {kind.value} seed pairs over {cfg.ring()}, "
            f"entries of degree <= 3 with <= 4 terms")


def _seed_params(i: int, seed) -> dict:
    return {"seed_index": i, "a": format_poly(seed.first), "b": format_poly(seed.second)}


def _primitive_records(report: SuiteReport, spec: SequenceSpec, i: int, max_n: int):
    p = spec.ring.characteristic
    base = _seed_params(i, spec.seed)
    tag = spec.kind.value
    for n in range(3, max_n + 1):
        params = dict(base, kind=tag, n=n)
        rid = f"{tag}/s{i:03d}/n{n:02d}"
        if p and n % p == 0:
            try:
                primitive_part(spec, n)
                report.add(f"deleted/{rid}", params, False, {"error": "deleted index accepted"})
            except DeletedIndex:
                report.add(f"deleted/{rid}", params, True)
            continue
        rep = primitive_part(spec, n)
        phi = cyclotomic_value(spec, n).canonical()
        same = rep.primitive_part == phi
        witness = {"primitive_part": format_poly(rep.primitive_part)}
        if not same:
            witness["cyclotomic_value"] = format_poly(phi)
        report.add(f"phi/{rid}", params, same, witness)
        certified = all(ok for _, ok in rep.coprime_witness)
        report.add(f"zsig/{rid}", params, rep.degree >= 1 and certified,
                   {"degree": rep.degree,
                    "not_coprime_to": [d for d, ok in rep.coprime_witness if not ok]})


def _strong_records(report: SuiteReport, spec: SequenceSpec, i: int, max_n: int):
    base = _seed_params(i, spec.seed)
    tag = spec.kind.value
    for n in range(2, max_n + 1):
        for m in range(1, n):
            ok = strong_div_check(spec, m, n)
            report.add(f"strong/{tag}/s{i:03d}/m{m:02d}/n{n:02d}", dict(base, kind=tag, m=m, n=n), ok)


def _sequence_suite(name: str, kinds: tuple[Kind, ...], cfg: SuiteConfig) -> SuiteReport:
    seed_kind = SeedKind.FG if kinds[0] in (Kind.F, Kind.S) else (
        SeedKind.LUCAS if kinds[0] is Kind.L else SeedKind.LEHMER)
    report = SuiteReport(name, cfg, _corpus_note(seed_kind, cfg))
    for i, seed in enumerate(seed_corpus(seed_kind, cfg.ring(), cfg.trials, cfg.seed)):
        for kind in kinds:
            spec = SequenceSpec(kind, seed)
            _primitive_records(report, spec, i, cfg.max_n)
            if kind is not Kind.S:
                _strong_records(report, spec, i, cfg.max_n)
    return report


def _lemma_pairs(lemma: str, bound: int) -> list[tuple[int, int]]:
    odd = range(1, bound + 1, 2)
    if lemma == "L_PMPN2":
        return [(m, n) for m in range(1, bound + 1) for n in range(1, bound + 1) if gcd(m, n) == 1]
    if lemma == "L_PMPN_ODD":
        return [(m, n) for m in odd for n in odd if gcd(m, n) == 1]
    if lemma == "L_PMPN_MIX":
        return [(m, n) for m in odd for n in range(2, bound + 1, 2) if gcd(m, n) == 1]
    if lemma == "L_PMN":
        return [(m, n) for m in odd for n in odd]
    if lemma == "L_ABN":
        return [(0, n) for n in odd]
    raise ValueError(lemma)


def _lemmas_suite(cfg: SuiteConfig) -> SuiteReport:
    report = SuiteReport("lemmas", cfg, _corpus_note(SeedKind.LEHMER, cfg)
                         + "; LUCAS pairs likewise for L_PMPN2")
    for lemma, grid in RESULTANT_GRIDS.items():
        for m, n in grid:
            res = resultant_lemma_check(lemma, m, n)
            report.add(f"res/{lemma}/m{m:02d}/n{n:02d}", {"lemma": lemma, "m": m, "n": n},
                       res.passed, {"resultant": res.value})
    bound = min(cfg.max_n, LEMMA_BOUND)
    ring = cfg.ring()
    for lemma in LEMMAS:
        kind = SeedKind.LUCAS if lemma == "L_PMPN2" else SeedKind.LEHMER
        for i, seed in enumerate(seed_corpus(kind, ring, cfg.trials, cfg.seed)):
            base = _seed_params(i, seed)
            for m, n in _lemma_pairs(lemma, bound):
                ok = lemma_coprime_check(lemma, seed, m, n)
                report.add(f"coprime/{lemma}/s{i:03d}/m{m:02d}/n{n:02d}",
                           dict(base, lemma=lemma, m=m, n=n), ok)
    return report


def _valuation_suite(cfg: SuiteConfig) -> SuiteReport:
    if cfg.vars != 1 or cfg.char == 0:
        raise ConfigError("the valuation suite needs one variable and a positive characteristic")
    p = cfg.char
    report = SuiteReport("valuation", cfg, _corpus_note(SeedKind.LEHMER, cfg))
    for i, seed in enumerate(seed_corpus(SeedKind.LEHMER, cfg.ring(), cfg.trials, cfg.seed)):
        spec = SequenceSpec(Kind.U, seed)
        base = _seed_params(i, seed)
        for n in range(3, min(cfg.max_n, VALUATION_MAX_N) + 1):
            if n % p == 0:
                continue
            un = seq_term(spec, n)
            for j, (pi, _) in enumerate(factor_fp(un, cfg.seed).factors):
                v_n = valuation(un, Monic(pi))
                for m in VALUATION_MULTIPLIERS:
                    if m % p == 0:
                        continue
                    v_mn = valuation(seq_term(spec, m * n), Monic(pi))
                    report.add(f"val/s{i:03d}/n{n:02d}/f{j:02d}/m{m}",
                               dict(base, n=n, m=m, pi=format_poly(pi)),
                               v_mn == v_n, {"v_n": v_n, "v_mn": v_mn})
    return report


def _frobenius_suite(cfg: SuiteConfig) -> SuiteReport:
    if cfg.char == 0:
        raise ConfigError("the Frobenius suite needs a positive characteristic")
    p = cfg.char
    report = SuiteReport("frobenius", cfg, _corpus_note(SeedKind.FG, cfg))
    for i, seed in enumerate(seed_corpus(SeedKind.FG, cfg.ring(), cfg.trials, cfg.seed)):
        spec = SequenceSpec(Kind.F, seed)
        base = _seed_params(i, seed)
        for n in range(1, cfg.max_n // p + 1):
            report.add(f"frob/s{i:03d}/n{n:02d}", dict(base, n=n, pn=p * n), frobenius_check(spec, n))
            if p * n >= 3:
                try:
                    primitive_part(spec, p * n)
                    ok = False
                except DeletedIndex:
                    ok = True
                report.add(f"deleted/s{i:03d}/n{p * n:02d}", dict(base, n=p * n), ok)
    return report


def run_suite(name: str, config: SuiteConfig | None = None) -> SuiteReport:
    cfg = config or SuiteConfig()
    cfg.validate()
    if name == "zsigmondy":
        return _sequence_suite(name, (Kind.F, Kind.S), cfg)
    if name == "lucas":
        return _sequence_suite(name, (Kind.L,), cfg)
    if name == "lehmer":
        return _sequence_suite(name, (Kind.U,), cfg)
    if name == "lemmas":
        return _lemmas_suite(cfg)
    if name == "valuation":
        return _valuation_suite(cfg)
    if name == "frobenius":
        return _frobenius_suite(cfg)
    raise ConfigError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")


__all__ = ["SUITES", "SuiteConfig", "SuiteReport", "run_suite"]
