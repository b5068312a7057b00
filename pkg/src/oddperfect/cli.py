"""Command-line front end.

Every subcommand is a thin adapter over one library operation: parse
arguments, call, print. Output is either human-readable text (default)
or line-delimited JSON records (--format records). Exit codes: 0 for
success (a "false" answer is still success), 1 for a domain error (the
error name goes to stderr), 2 for a usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import arith, dris, eulerian, scans, spoof
from .arith import FactorBudget, Factorization
from .cache import FactorCache
from .errors import DomainError, ParseError
from .ln2 import DEFAULT_MAX_TERMS
from .records import record_line

CACHE_ENV_VAR = "ODDPERFECT_FACTOR_CACHE"

FACTORIZATION_GRAMMAR = "FACTORIZATION is p^e*p^e*... (or space-separated p^e terms)"


@dataclass(frozen=True)
class RunConfig:
    """Run-wide knobs; every field has a working default."""

    factor_budget: int = arith.DEFAULT_BUDGET.trial_limit
    ln2_precision_cap: int = DEFAULT_MAX_TERMS
    cache_path: Path | None = None
    output_format: str = "text"
    parallelism: int = 1

    def __post_init__(self) -> None:
        if self.factor_budget < 1 or self.ln2_precision_cap < 1:
            raise ValueError("budgets must be positive")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")
        if self.output_format not in ("text", "records"):
            raise ValueError("output_format must be 'text' or 'records'")

    def budget(self) -> FactorBudget:
        cache = FactorCache(self.cache_path) if self.cache_path is not None else None
        return FactorBudget(trial_limit=self.factor_budget, cache=cache)


def _config_from_args(args) -> RunConfig:
    cache = args.cache
    if cache is None:
        env = os.environ.get(CACHE_ENV_VAR)
        cache = Path(env) if env else None
    else:
        cache = Path(cache)
    return RunConfig(
        factor_budget=args.factor_budget,
        ln2_precision_cap=args.ln2_cap,
        cache_path=cache,
        output_format=args.format,
        parallelism=args.parallelism,
    )


def _parse_factorization(args) -> Factorization:
    pretend = frozenset(args.assume_prime or ())
    return Factorization.parse(" ".join(args.factorization), pretend)


def _emit(cfg: RunConfig, payload: dict, text: str) -> None:
    print(record_line(payload) if cfg.output_format == "records" else text)


def _bool_text(flag: bool) -> str:
    return "true" if flag else "false"


# --- subcommand handlers ---------------------------------------------------


def _cmd_factor(args, cfg: RunConfig) -> int:
    f = arith.factor(args.n, cfg.budget())
    _emit(cfg, {"op": "factor", "n": args.n, "factorization": f}, f.text())
    return 0


def _cmd_sigma(args, cfg: RunConfig) -> int:
    value = arith.sigma(arith.factor(args.n, cfg.budget()))
    _emit(cfg, {"op": "sigma", "n": args.n, "sigma": value}, str(value))
    return 0


def _cmd_perfect(args, cfg: RunConfig) -> int:
    flag = arith.is_perfect(args.n, cfg.budget())
    _emit(cfg, {"op": "perfect", "n": args.n, "perfect": flag}, _bool_text(flag))
    return 0


def _cmd_abundancy(args, cfg: RunConfig) -> int:
    ratio = arith.abundancy(arith.factor(args.n, cfg.budget()))
    _emit(cfg, {"op": "abundancy", "n": args.n, "abundancy": ratio}, str(ratio))
    return 0


def _cmd_valuation(args, cfg: RunConfig) -> int:
    e = arith.valuation(args.p, args.m)
    _emit(cfg, {"op": "valuation", "p": args.p, "m": args.m, "valuation": e}, str(e))
    return 0


def _cmd_two_thirds(args, cfg: RunConfig) -> int:
    general, two_thirds = arith.two_thirds_bound_check(args.p, args.b)
    _emit(
        cfg,
        {"op": "two-thirds-check", "p": args.p, "b": args.b,
         "holds_general": general, "holds_two_thirds": two_thirds},
        f"holds_general={_bool_text(general)} holds_two_thirds={_bool_text(two_thirds)}",
    )
    return 0


def _cmd_reciprocal_sum(args, cfg: RunConfig) -> int:
    f = _parse_factorization(args)
    total, verdict = arith.reciprocal_prime_sum(f, max_terms=cfg.ln2_precision_cap)
    _emit(
        cfg,
        {"op": "reciprocal-sum", "factorization": f, "sum": total, "versus_ln2": verdict},
        f"{total} {verdict.value}",
    )
    return 0


def _cmd_eulerian(args, cfg: RunConfig) -> int:
    form = eulerian.to_eulerian(_parse_factorization(args))
    report = eulerian.admissibility_report(form, args.min_distinct)
    if cfg.output_format == "records":
        print(record_line({"op": "eulerian", "q": form.q, "k": form.k,
                           "n": form.n_value, "n_factorization": form.n_factorization,
                           "admissibility": report}))
    else:
        print(f"q={form.q} k={form.k} n={form.n_value} n_factorization={form.n_factorization.text()}")
        print(f"distinct_primes={report.distinct_primes} "
              f"meets_{report.min_distinct}_prime_bound={_bool_text(report.meets_prime_bound)}")
        if report.cube_check_applicable:
            state = "holds" if report.cube_bound_holds else "violated"
            print(f"cube_bound q^3 < 3N: {state} (q^3={report.q_cubed} 3N={report.three_N})")
        else:
            print("cube_bound q^3 < 3N: not-applicable (k > 1)")
    return 0


def _cmd_spoof_verify(args, cfg: RunConfig) -> int:
    base = Factorization.parse(" ".join(args.base))
    verdict = spoof.verify_spoof(spoof.SpoofCandidate(base, args.d))
    _emit(
        cfg,
        {"op": "spoof-verify", "base": base, "d": args.d, "verdict": verdict},
        f"spoof_perfect={_bool_text(verdict.is_spoof_perfect)} "
        f"sigma={verdict.spoof_sigma_value} two_N={verdict.two_N} "
        f"d_composite={_bool_text(verdict.d_is_composite)} d_mod4={verdict.d_mod4} "
        f"q_vs_n={verdict.q_vs_n.value}",
    )
    return 0


def _cmd_spoof_search(args, cfg: RunConfig) -> int:
    primes = [int(tok) for tok in args.primes.split(",") if tok]
    hits = spoof.search_descartes(
        primes,
        args.max_exp,
        args.d_limit,
        require_d_1mod4=not args.any_residue,
        budget=cfg.budget(),
    )
    for hit in hits:
        _emit(
            cfg,
            {"op": "spoof-search", "base": hit.candidate.base, "d": hit.d,
             "d_factorization": hit.d_factorization, "flag": hit.flag,
             "verdict": hit.verdict},
            f"base={hit.candidate.base.text()} d={hit.d} "
            f"d_factorization={hit.d_factorization.text()} flag={hit.flag} "
            f"q_vs_n={hit.verdict.q_vs_n.value}",
        )
    if not hits and cfg.output_format == "text":
        print("no candidates found")
    return 0


def _cmd_dris_check(args, cfg: RunConfig) -> int:
    form = eulerian.to_eulerian(_parse_factorization(args))
    sd = dris.special_decomposition(form)
    report = dris.check_dris_conditions(
        sd, max_terms=cfg.ln2_precision_cap, budget=cfg.budget()
    )
    if cfg.output_format == "records":
        print(record_line({"op": "dris-check", "q": form.q, "k": form.k, "s": sd.s,
                           "specials": sd.specials, "residual": sd.residual,
                           "report": report}))
    else:
        print(f"q={form.q} k={form.k} s={sd.s}")
        for sp in sd.specials:
            print(f"special p={sp.p} b={sp.b} t={sp.t} c={sp.c} c_q={sp.c_q}")
        print(f"case={report.case_tag.value}")
        conds = {name: getattr(report, name) for name in ("cond1", "cond2", "cond3")}
        cond_text = " ".join(
            f"{k}={'not-evaluated' if v is None else _bool_text(v)}" for k, v in conds.items()
        )
        print(cond_text)
        seven = report.threshold_seven.value if report.threshold_seven else "not-evaluated"
        exact = report.threshold_exact.value if report.threshold_exact else "not-evaluated"
        print(f"threshold_seven={seven} threshold_exact={exact}")
        print(f"guaranteed_qk_lt_n={_bool_text(report.guaranteed_qk_lt_n)}")
        print(f"direct: q {report.direct_q_lt_n.value} n, q^k {report.direct_qk_lt_n.value} n")
        if report.case1_witness_r is not None:
            print(f"case1_witness_r={report.case1_witness_r}")
    return 0


def _cmd_trace_k1(args, cfg: RunConfig) -> int:
    form = eulerian.to_eulerian(_parse_factorization(args))
    shape = dris.k1_shape_from_form(form)
    trace = dris.inequality_trace_k1(shape)
    if cfg.output_format == "records":
        print(record_line({"op": "trace-k1", "kind": "shape", "case": trace.case_label,
                           "q": shape.q, "p": shape.p, "b": shape.b,
                           "c_q": shape.c_q, "c_1": shape.c_1,
                           "N": trace.N_value, "n": trace.n_value}))
        for check in trace.premises:
            print(record_line({"op": "trace-k1", "kind": "premise", "name": check.name,
                               "holds": check.holds}))
        for line in trace.lines:
            print(record_line({"op": "trace-k1", "kind": "line", "line": line.line_id,
                               "relation": line.relation, "lhs": line.lhs,
                               "rhs": line.rhs, "holds": line.holds}))
        print(record_line({"op": "trace-k1", "kind": "verdict",
                           "final_holds": trace.final_holds, "q_lt_n": trace.q_lt_n}))
    else:
        print(f"case={trace.case_label} q={shape.q} p={shape.p} b={shape.b} "
              f"c_q={shape.c_q} c_1={shape.c_1} N={trace.N_value} n={trace.n_value}")
        for check in trace.premises:
            print(f"premise {check.name}: {_bool_text(check.holds)}")
        for line in trace.lines:
            print(f"line {line.line_id}: {line.lhs} {line.relation} {line.rhs} "
                  f"-> {_bool_text(line.holds)}")
        print(f"final_holds={_bool_text(trace.final_holds)} q_lt_n={_bool_text(trace.q_lt_n)}")
    return 0


def _cmd_gcd_diagnostic(args, cfg: RunConfig) -> int:
    form = eulerian.to_eulerian(_parse_factorization(args))
    sd = dris.special_decomposition(form)
    lhs, rhs, ordering = dris.gcd_product_diagnostic(sd)
    _emit(
        cfg,
        {"op": "gcd-diagnostic", "lhs": lhs, "rhs": rhs, "ordering": ordering},
        f"lhs={lhs} rhs={rhs} ordering={ordering.value}",
    )
    return 0


def _scan_mode(args) -> scans.ScanMode:
    return scans.ScanMode(args.mode)


def _parse_k_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok]


def _cmd_scan_squarefree(args, cfg: RunConfig) -> int:
    violations = scans.cyclotomic_squarefree_scan(
        args.qmax, _parse_k_list(args.k), mode=_scan_mode(args),
        budget=cfg.budget(), parallelism=cfg.parallelism,
    )
    for v in violations:
        _emit(
            cfg,
            {"op": "scan-squarefree", "q": v.q, "k": v.k, "prime": v.prime,
             "valuation": v.valuation, "e_value": v.e_value},
            f"q={v.q} k={v.k} prime={v.prime} valuation={v.valuation} E={v.e_value}",
        )
    if not violations and cfg.output_format == "text":
        print("no violations found")
    return 0


def _cmd_scan_residue(args, cfg: RunConfig) -> int:
    exceptions = scans.cyclotomic_residue_scan(
        args.qmax, _parse_k_list(args.k), mode=_scan_mode(args),
        budget=cfg.budget(), parallelism=cfg.parallelism,
    )
    for x in exceptions:
        _emit(
            cfg,
            {"op": "scan-residue", "q": x.q, "k": x.k, "r": x.r, "modulus": x.modulus,
             "residue": x.residue, "is_full_value": x.is_full_value},
            f"q={x.q} k={x.k} r={x.r} residue={x.residue} (mod {x.modulus}) "
            f"full_value={_bool_text(x.is_full_value)}",
        )
    if not exceptions and cfg.output_format == "text":
        print("no exceptions found")
    return 0


def _cmd_scan_lemma_u(args, cfg: RunConfig) -> int:
    triples = scans.lemma_u_scan(
        args.pmax, args.bmax, budget=cfg.budget(), parallelism=cfg.parallelism
    )
    for t in triples:
        _emit(
            cfg,
            {"op": "scan-lemma-u", "p": t.p, "b": t.b, "q": t.q, "t": t.t, "u": t.u,
             "congruence_ok": t.congruence_ok, "size_ok": t.size_ok, "flagged": t.flagged},
            f"p={t.p} b={t.b} q={t.q} t={t.t} u={t.u} "
            f"congruence_ok={_bool_text(t.congruence_ok)} size_ok={_bool_text(t.size_ok)}"
            + (" FLAGGED" if t.flagged else ""),
        )
    if not triples and cfg.output_format == "text":
        print("no triples found")
    return 0


# --- parser ----------------------------------------------------------------


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "records"), default="text",
                        help="output style: human text or JSON records, one per line")
    common.add_argument("--cache", metavar="PATH", default=None,
                        help=f"factor cache file (default: ${CACHE_ENV_VAR})")
    common.add_argument("--factor-budget", type=_positive_int,
                        default=arith.DEFAULT_BUDGET.trial_limit, metavar="N",
                        help="trial-division bound for factoring")
    common.add_argument("--ln2-cap", type=_positive_int, default=DEFAULT_MAX_TERMS,
                        metavar="N", help="refinement cap for exact ln(2) comparisons")
    common.add_argument("--parallelism", type=_positive_int, default=1, metavar="N",
                        help="worker processes for scans")

    parser = argparse.ArgumentParser(
        prog="oddperfect",
        description="Divisor-sum arithmetic and odd-perfect-candidate analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    def add(name, handler, help_text, **kwargs):
        p = sub.add_parser(name, parents=[common], help=help_text, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = add("factor", _cmd_factor, "factor N completely")
    p.add_argument("n", type=_positive_int)

    p = add("sigma", _cmd_sigma, "divisor sum of N")
    p.add_argument("n", type=_positive_int)

    p = add("perfect", _cmd_perfect, "is sigma(N) = 2N?")
    p.add_argument("n", type=_positive_int)

    p = add("abundancy", _cmd_abundancy, "sigma(N)/N in lowest terms")
    p.add_argument("n", type=_positive_int)

    p = add("valuation", _cmd_valuation, "largest e with p^e | m")
    p.add_argument("p", type=_positive_int)
    p.add_argument("m", type=_positive_int)

    p = add("two-thirds-check", _cmd_two_thirds,
            "exact bound checks for sigma(p^2b) against p^2b")
    p.add_argument("p", type=_positive_int)
    p.add_argument("b", type=_positive_int)

    def factorization_arg(p):
        p.add_argument("factorization", nargs="+", metavar="FACTORIZATION",
                       help=FACTORIZATION_GRAMMAR)
        p.add_argument("--assume-prime", type=int, action="append", metavar="D",
                       help="treat D as an opaque prime-like unit (repeatable)")

    p = add("reciprocal-sum", _cmd_reciprocal_sum,
            "sum of 1/p over the distinct primes, classified against ln(2)")
    factorization_arg(p)

    p = add("eulerian", _cmd_eulerian, "parse q^k * n^2 and report admissibility")
    factorization_arg(p)
    p.add_argument("--min-distinct", type=_positive_int, default=9, metavar="N",
                   help="distinct-prime floor to test against")

    p = add("spoof-verify", _cmd_spoof_verify, "verify a pretend-prime candidate")
    p.add_argument("base", nargs="+", metavar="BASE", help=FACTORIZATION_GRAMMAR)
    p.add_argument("d", type=_positive_int, help="the pretend prime")

    p = add("spoof-search", _cmd_spoof_search, "search for pretend-prime candidates")
    p.add_argument("--primes", required=True, metavar="LIST",
                   help="comma-separated odd primes for the square base")
    p.add_argument("--max-exp", type=_positive_int, required=True, metavar="E",
                   help="largest (even) exponent per base prime")
    p.add_argument("--d-limit", type=_positive_int, required=True, metavar="L",
                   help="largest pretend prime to accept")
    p.add_argument("--any-residue", action="store_true",
                   help="also accept d != 1 (mod 4)")

    p = add("dris-check", _cmd_dris_check,
            "special decomposition, case classification, and the q^k < n check")
    factorization_arg(p)

    p = add("trace-k1", _cmd_trace_k1, "numeric trace of the k = 1 inequality chain")
    factorization_arg(p)

    p = add("gcd-diagnostic", _cmd_gcd_diagnostic,
            "pairwise gcd product heuristic over the special primes")
    factorization_arg(p)

    def scan_args(p, with_mode=True):
        p.add_argument("--qmax", type=_positive_int, required=True, metavar="Q")
        p.add_argument("--k", required=True, metavar="LIST",
                       help="comma-separated exponents, each > 1 and 1 (mod 4)")
        if with_mode:
            p.add_argument("--mode", choices=[m.value for m in scans.ScanMode],
                           default=scans.ScanMode.PRIMES_1MOD4.value,
                           help="1mod4: primes 1 (mod 4); primes: all primes; "
                                "probe: every integer (composites included)")

    p = add("scan-squarefree", _cmd_scan_squarefree,
            "squared prime divisors of 1 + q^2 + ... + q^(k-1)")
    scan_args(p)

    p = add("scan-residue", _cmd_scan_residue,
            "prime divisors of 1 + q^2 + ... + q^(k-1) outside 1 mod (k+1)/2")
    scan_args(p)

    p = add("scan-lemma-u", _cmd_scan_lemma_u, "u-cofactor sweep over (p, b)")
    p.add_argument("--pmax", type=_positive_int, required=True, metavar="P")
    p.add_argument("--bmax", type=_positive_int, required=True, metavar="B")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        cfg = _config_from_args(args)
        return args.handler(args, cfg)
    except ParseError as exc:
        print(f"usage error: {exc} ({FACTORIZATION_GRAMMAR})", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc.name}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        # argument values the library refused (bad k residue, even prime, ...)
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
