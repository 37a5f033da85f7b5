"""Command-line driver: ``ringlab <command> <specfile|catalog:NAME|-> [flags]``."""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from . import config
from .core import FiniteRng
from .dsl import Environment, load
from .errors import AxiomViolation, RinglabError, TheoremDiscrepancy
from .ideals import decompose_ideal, enumerate_ideals
from .library import catalog_extensions, catalog_names, catalog_text
from .primes import (
    classify_maximal_ideals,
    classify_prime_ideals,
    classify_primes_direct_sum,
    is_local,
    is_maximal_ideal,
    is_prime_ideal,
    local_via_corollary,
)
from .radicals import (
    jacobson_radical,
    nil_theorem_radical,
    rad_direct_sum_criterion,
    rad_theorem_radical,
    upper_nil_radical,
)
from .report import Report, emit_report
from .rrng import (
    DorrohRing,
    RHomomorphism,
    RRngStructure,
    annihilator,
    find_retractions,
    is_centrally_generated,
    retraction_violation,
)
from .suites import SUITES, Failure, SuiteResult, run_suites

COMMANDS = ("check", "radical", "nilradical", "ideals", "decompose", "classify", "verify-theorems")


class UsageError(RinglabError):
    pass


@dataclass
class Options:
    obj: str | None = None
    phi: str | None = None
    suite: str | None = None
    left: bool = False
    prime: bool = False
    maximal: bool = False


def read_source(arg: str) -> tuple[str, str]:
    """Return (provenance label, spec text)."""
    if arg == "-":
        return "<stdin>", sys.stdin.read()
    if arg.startswith("catalog:"):
        name = arg.split(":", 1)[1]
        try:
            return arg, catalog_text(name)
        except FileNotFoundError as e:
            raise UsageError(str(e)) from None
    try:
        return arg, Path(arg).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {arg}: {e.strerror or e}") from None


# -- object selection -----------------------------------------------------------------


def _targets(env: Environment, opts: Options, kinds: tuple[str, ...] = ("ext",)) -> list[str]:
    if opts.obj is not None:
        if opts.obj not in env:
            raise UsageError(f"no binding named {opts.obj!r}")
        return [opts.obj]
    names = env.of_kind(*kinds)
    return names or env.of_kind("ring", "rng", "rrng")


def _ext(env: Environment, name: str) -> DorrohRing:
    value = env[name]
    if not isinstance(value, DorrohRing):
        raise UsageError(f"{name} is not an extension")
    return value


def _rng(value: Any) -> FiniteRng:
    if isinstance(value, DorrohRing):
        return value.ring
    if isinstance(value, RRngStructure):
        return value.I
    return value


def _phis(env: Environment, E: DorrohRing, spec: str | None) -> tuple[str, list[RHomomorphism], bool]:
    """Resolve --phi: returns (label, homomorphisms, per-factor?)."""
    X = E.source
    if spec in (None, "auto"):
        found = find_retractions(X)
        if found:
            return "auto", found, False
        if X.factors:
            per = [find_retractions(P) for P in X.factors]
            if all(per):
                return "auto", [p[0] for p in per], True
        raise UsageError(f"no multiplicative retraction exists for {E.ring.name}")
    if spec not in env or not isinstance(env[spec], RHomomorphism):
        raise UsageError(f"no homomorphism binding named {spec!r}")
    phi = env[spec]
    if phi.structure is X:
        bad = retraction_violation(X, phi)
        if bad is not None:
            raise UsageError(f"{spec} is not a multiplicative retraction: {bad[0]} fails")
        return spec, [phi], False
    if X.factors and any(phi.structure is P for P in X.factors):
        declared = [n for n in env.of_kind("phi") if n == spec] + \
                   [n for n in env.of_kind("phi") if n != spec]
        chosen, used = [], set()
        for P in X.factors:
            n = next((n for n in declared if n not in used and env[n].structure is P), None)
            if n is None:
                raise UsageError(f"no declared homomorphism for every factor of {X.I.name}")
            used.add(n)
            chosen.append(env[n])
        return spec, chosen, True
    raise UsageError(f"{spec} is not defined on {X.I.name}")


# -- commands ---------------------------------------------------------------------


def _labels(R: FiniteRng, members) -> list[str]:
    return [R.labels[x] for x in members]


def cmd_check(report: Report, env: Environment, opts: Options) -> None:
    names = [opts.obj] if opts.obj else list(env)
    for n in names:
        if n not in env:
            raise UsageError(f"no binding named {n!r}")
        v, kind = env[n], env.kinds[n]
        if isinstance(v, RHomomorphism):
            X = v.structure
            report.add(n, len(v.domain), kind=kind, images=dict(zip(
                _labels(X.I, v.domain.members), _labels(v.target, v.key))),
                retraction=retraction_violation(X, v) is None)
        elif isinstance(v, DorrohRing):
            report.add(n, v.order, kind=kind, valid=True, commutative=v.ring.is_commutative,
                       unit=v.ring.labels[v.ring.unit])
        elif isinstance(v, RRngStructure):
            report.add(n, v.I.order, kind=kind, valid=True, acting_ring=v.R.name,
                       annihilator=_labels(v.R, annihilator(v).members),
                       centrally_generated=bool(is_centrally_generated(v)),
                       retractions=len(find_retractions(v)))
        else:
            report.add(n, v.order, kind=kind, valid=True, commutative=v.is_commutative,
                       unit=None if v.unit is None else v.labels[v.unit])


def _radical_cmd(report: Report, env: Environment, opts: Options, nil: bool) -> None:
    radical = upper_nil_radical if nil else jacobson_radical
    theorem = nil_theorem_radical if nil else rad_theorem_radical
    for n in _targets(env, opts):
        v = env[n]
        if isinstance(v, DorrohRing):
            defn = radical(v.ring).radical
            thm = theorem(v).radical
            if defn != thm:
                raise TheoremDiscrepancy("membership criterion", defn.members, thm.members)
            extra: dict[str, Any] = {
                "R": _labels(v.R, radical(v.R).members),
                "I": _labels(v.I, radical(v.I).members),
                "criterion_agrees": True,
            }
            if not nil:
                extra["direct_sum"] = rad_direct_sum_criterion(v)
            report.add(n, v.order, radical=_labels(v.ring, defn.members), **extra)
        else:
            R = _rng(v)
            report.add(n, R.order, radical=_labels(R, radical(R).members))


def cmd_ideals(report: Report, env: Environment, opts: Options) -> None:
    if opts.left and (opts.prime or opts.maximal):
        raise UsageError("--prime/--maximal apply to two-sided ideals only")
    for n in _targets(env, opts):
        v = env[n]
        R = _rng(v)
        if isinstance(v, RRngStructure):
            found = enumerate_ideals(v.I, "R-ideal", v)
        else:
            found = enumerate_ideals(R, "left" if opts.left else "two-sided")
        if opts.maximal:
            found = [K for K in found if is_maximal_ideal(R, K)]
        elif opts.prime:
            found = [K for K in found if is_prime_ideal(R, K)]
        forms: dict[Any, str] = {}
        if opts.phi is not None and isinstance(v, DorrohRing) and (opts.prime or opts.maximal):
            for c in _classified(env, v, opts)[1]:
                forms[c.members] = c.form
        entries = []
        for K in found:
            entry: dict[str, Any] = {"members": _labels(R, K.members)}
            if K in forms:
                entry["form"] = forms[K]
            entries.append(entry)
        kind = "left" if opts.left else ("R-ideal" if isinstance(v, RRngStructure) else "two-sided")
        kind = "maximal" if opts.maximal else ("prime" if opts.prime else kind)
        report.add(n, R.order, kind=kind, count=len(entries), ideals=entries)


def _classified(env: Environment, E: DorrohRing, opts: Options, maximal: bool | None = None):
    """Returns (phi label, classification, one classification per retraction)."""
    maximal = opts.maximal if maximal is None else maximal
    label, phis, per_factor = _phis(env, E, opts.phi)
    if per_factor:
        listed = classify_primes_direct_sum(E, phis, maximal=maximal)
        return label, listed, [listed]
    runs = [classify_maximal_ideals(E, p) if maximal else classify_prime_ideals(E, p) for p in phis]
    return label, runs[0], runs


def cmd_decompose(report: Report, env: Environment, opts: Options) -> None:
    kind = "left" if opts.left else "two-sided"
    for n in _targets(env, opts):
        E = _ext(env, n)
        out = []
        for K in enumerate_ideals(E.ring, kind):
            d = decompose_ideal(E, K, kind)
            out.append({
                "K": _labels(E.ring, K.members),
                "A": _labels(E.R, d.A.members),
                "Z": _labels(E.R, d.Z.members),
                "J": _labels(E.I, d.J.members),
                "phi": {E.I.labels[j]: E.R.labels[a] for j, a in sorted(d.phi.items())},
                "injective": d.is_injective(),
                "zero_map": d.is_zero_map(),
            })
        report.add(n, E.order, kind=kind, count=len(out), decompositions=out)


def cmd_classify(report: Report, env: Environment, opts: Options) -> None:
    for n in _targets(env, opts):
        E = _ext(env, n)
        label, primes, runs = _classified(env, E, opts, maximal=False)
        _, maxes, _ = _classified(env, E, opts, maximal=True)

        def rows(cs):
            return [{"form": c.form, "base": _labels(E.R, c.base.members),
                     "members": _labels(E.ring, c.members.members)}
                    | ({"factor": c.factor} if c.factor is not None else {}) for c in cs]

        local = None
        if E.ring.is_commutative:
            _, phis, per_factor = _phis(env, E, opts.phi)
            local = is_local(E.ring)
            if not per_factor:
                for p in phis:
                    local_via_corollary(E, p)
        report.add(n, E.order, phi=label, classifications=len(runs),
                   coincide=len({frozenset(c.members for c in r) for r in runs}) == 1,
                   primes=rows(primes), maximal=rows(maxes), local=local)


def cmd_verify(report: Report, env: Environment, opts: Options, source: str) -> None:
    if opts.suite is not None and opts.suite not in SUITES:
        raise UsageError(f"unknown suite {opts.suite!r}; have {', '.join(SUITES)}")
    instances = []
    catalog_entry = source.split(":", 1)[1] if source.startswith("catalog:") else None
    if catalog_entry is None:
        instances += [(f"{source}:{n}", env[n]) for n in env.of_kind("ext")]
    instances += catalog_extensions()
    for name, E in instances:
        report.add(name, E.order)
    report.suites = run_suites(instances, [opts.suite] if opts.suite else None)


def run_command(env: Environment, command: str, opts: Options | None = None,
                source: str = "<memory>") -> Report:
    opts = opts or Options()
    report = Report(command, source)
    if command == "check":
        cmd_check(report, env, opts)
    elif command in ("radical", "nilradical"):
        _radical_cmd(report, env, opts, nil=command == "nilradical")
    elif command == "ideals":
        cmd_ideals(report, env, opts)
    elif command == "decompose":
        cmd_decompose(report, env, opts)
    elif command == "classify":
        cmd_classify(report, env, opts)
    elif command == "verify-theorems":
        cmd_verify(report, env, opts, source)
    else:
        raise UsageError(f"unknown command {command!r}")
    return report


def _axiom_report(command: str, source: str, err: AxiomViolation) -> Report:
    binding = getattr(err, "binding", None) or "?"
    result = SuiteResult("axioms", cases=len(err.violations))
    result.failures = [Failure(binding, v.axiom, "holds", f"fails in {v.count} cases", v.witness)
                       for v in err.violations]
    return Report(command, source, suites=[result])


# -- argument parsing ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ringlab",
        description="Ideals, radicals and prime structure of finite Dorroh-style extensions.",
        epilog="Built-in catalog entries: " + ", ".join(catalog_names()),
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("spec", help="spec file, catalog:NAME, or - for stdin")
    p.add_argument("--object", dest="obj", metavar="NAME", help="restrict to one binding")
    p.add_argument("--phi", metavar="NAME|auto", help="retraction to classify with")
    p.add_argument("--suite", metavar="NAME", help=f"one of: {', '.join(SUITES)}")
    p.add_argument("--left", action="store_true", help="left ideals instead of two-sided")
    p.add_argument("--prime", action="store_true", help="only prime ideals")
    p.add_argument("--maximal", action="store_true", help="only maximal ideals")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--order-cap", type=int, metavar="N")
    p.add_argument("--search-budget", type=int, metavar="N")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms in the report")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    opts = Options(args.obj, args.phi, args.suite, args.left, args.prime, args.maximal)
    caps = {}
    if args.order_cap is not None:
        caps["order_cap"] = args.order_cap
    if args.search_budget is not None:
        caps["search_budget"] = args.search_budget
    start = time.perf_counter()
    code = 0
    try:
        with config.override(**caps):
            source, text = read_source(args.spec)
            try:
                _, env = load(text)
            except AxiomViolation as e:
                if args.command != "check":
                    raise
                report, code = _axiom_report(args.command, source, e), e.exit_code
            else:
                report = run_command(env, args.command, opts, source)
                code = 1 if report.failed else 0
    except RinglabError as e:
        where = f" [{e.binding}]" if getattr(e, "binding", None) else ""
        print(f"ringlab: {type(e).__name__}{where}: {e}", file=sys.stderr)
        return e.exit_code
    if args.timing:
        report.elapsed_ms = (time.perf_counter() - start) * 1000
    sys.stdout.buffer.write(emit_report(report, args.format))
    sys.stdout.flush()
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
