"""Command-line interface binding every module.

Exit codes: 0 ok, 1 usage error, 2 infeasible instance or guard violation,
3 internal error.  Stochastic subcommands require --seed; --out writes the
payload to a file instead of stdout; --config FILE loads key=value defaults.
"""

import argparse
import json
import sys

from . import (aad, bench, gf, ilbounds, ildec, lrs, metric, netgap,
               qlrs, support)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_INTERNAL = 3


class GuardError(Exception):
    pass


def _field_from_args(args):
    q = args.q
    pe = gf.prime_power(q)
    if pe is None:
        raise GuardError(f"q = {q} is not a prime power")
    return gf.field(pe[0], pe[1], args.m)


def _emit(args, payload, text=None):
    """JSON by default; CSV/text payloads pass through as-is."""
    if args.format == "csv" and text is not None:
        out = text
    else:
        out = json.dumps(payload, indent=2, default=str) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _parse_ints(text):
    return [int(x) for x in text.replace(",", " ").split()]


def _parse_sets(text):
    """'1 2 3; 1 2 4' -> [{1,2,3}, {1,2,4}]."""
    return [set(_parse_ints(part)) for part in text.split(";") if part.strip()]


def _load_config(path):
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


def _require_seed(args):
    if args.seed is None:
        raise UsageError("--seed is required for stochastic operations")
    return args.seed


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# subcommand implementations

def cmd_skew_eval(args):
    fld = _field_from_args(args)
    from . import skew
    ring = skew.SkewRing(fld, args.theta, args.beta)
    poly = ring.poly(_parse_ints(args.coeffs))
    points = _parse_ints(args.points)
    values = {str(a): poly.evaluate(a) for a in points}
    _emit(args, {"field": repr(fld), "values": values})


def cmd_lrs_gen(args):
    fld = _field_from_args(args)
    spec = lrs.default_spec(fld, tuple(_parse_ints(args.lengths)), args.k)
    gen = lrs.generator_matrix(spec)
    payload = {"n": spec.n, "k": spec.k, "blocks": list(spec.lengths),
               "locators": lrs.code_locators(spec), "matrix": gen.data}
    if fld.has_tables:
        payload["matrix_gamma_exponents"] = [
            [None if x == 0 else fld.dlog(x) for x in row]
            for row in gen.data]
    text = "\n".join(",".join(str(x) for x in row) for row in gen.data) + "\n"
    _emit(args, payload, text)


def _pattern_from_args(args):
    zeros = _parse_sets(args.zeros)
    return support.ZeroPattern(args.n, zeros)


def cmd_support_check(args):
    pattern = _pattern_from_args(args)
    violation = support.gm_check(pattern)
    payload = {"n": pattern.n, "k": pattern.k,
               "gm_ok": violation is None,
               "ktilde": support.ktilde(pattern)}
    if violation is not None:
        payload["violating_rows"] = violation
    _emit(args, payload)


def cmd_support_build(args):
    seed = _require_seed(args)
    pattern = _pattern_from_args(args)
    fld = _field_from_args(args)
    spec = lrs.default_spec(fld, tuple(_parse_ints(args.lengths)), pattern.k)
    rng = bench.SplitMix64(seed)
    result = support.build_constrained_generator(spec, pattern, rng)
    _emit(args, {"attempts": result.attempts,
                 "padded_zeros": [sorted(z) for z in result.pattern.zeros],
                 "transform": result.t_matrix.data,
                 "generator": result.generator.data})


def cmd_dist_design(args):
    seed = _require_seed(args)
    inst = support.NetworkInstance(_parse_ints(args.lengths),
                                   _parse_sets(args.access),
                                   args.t, args.rho, args.ell)
    rng = bench.SplitMix64(seed)
    res = support.distributed_design(inst, rng)
    _emit(args, {
        "n": res.n, "ktilde": res.ktilde, "d": res.d,
        "q": res.q, "m": res.m, "blocks": list(res.block_lengths),
        "source_lengths": {" ".join(map(str, sorted(k))): v
                           for k, v in res.source_lengths.items()},
        "generator_rows": res.generator.nrows,
        "generator_cols": res.generator.ncols})


def cmd_netgap(args):
    params = netgap.CombNetParams(h=args.h, r=args.r, alpha=args.alpha,
                                  ell=args.ell, eps=args.eps, q=args.q,
                                  t=args.t)
    uppers = [{"name": b.name, "applicable": b.applicable,
               "value": str(b.value) if b.value is not None else None,
               "log2": b.log2} for b in netgap.rmax_upper(params)]
    lowers = [{"name": b.name, "applicable": b.applicable,
               "value": str(b.value) if b.value is not None else None,
               "log2": b.log2} for b in netgap.rmax_lower(params)]
    payload = {"theta": params.theta, "uppers": uppers, "lowers": lowers,
               "qt_curves": netgap.qt_conditions(params, args.tmax)}
    if params.alpha >= 2:
        payload["gap"] = netgap.gap_bounds(params)
    _emit(args, payload)


def _experiment_from_args(args):
    fld = _field_from_args(args)
    return bench.ExperimentConfig(kind=args.kind, field=fld, n=args.n,
                                  d=args.d, s=args.s, trials=args.trials,
                                  seed=_require_seed(args),
                                  support_mode=args.support_mode)


def cmd_il_sim(args):
    cfg = _experiment_from_args(args)
    if args.scan:
        thr = bench.threshold_scan(cfg, target=args.target,
                                   trials=args.trials)
        _emit(args, {"threshold": thr,
                     "expected": ildec.t_max_radius(args.d, args.s)})
        return
    text = bench.emit_curves(cfg)
    _emit(args, {"csv": text}, text)


def cmd_il_bounds(args):
    rows = []
    tmax = ildec.t_max_radius(args.d, args.s)
    lines = [bench.CSV_HEADER]
    for t in range(1, tmax + 3):
        inputs = ilbounds.BoundInputs(q=args.q, m=args.m, n=args.n,
                                      d=args.d, s=args.s, t=t)
        vals = ilbounds.all_bounds(inputs)
        rows.append({"t": t, **{k: (None if v is None else float(v))
                                for k, v in vals.items()}})
        cells = [str(t)] + ["" if vals[n] is None else
                            format(float(vals[n]), ".12g")
                            for n in ("L.RS", "L.A", "L.A1", "L.A2",
                                      "L.T", "U")] + [""]
        lines.append(",".join(cells))
    _emit(args, {"bounds": rows}, "\n".join(lines) + "\n")


def cmd_qlrs_dim(args):
    params = qlrs.QlrsParams(args.ell, args.r)
    payload = {"q": params.q, "r": args.r,
               "dimension": qlrs.dimension(params),
               "bad_monomials": qlrs.bad_star_count(params),
               "distance_bounds": qlrs.distance_bounds(params)}
    _emit(args, payload)


def cmd_qlrs_local(args):
    seed = _require_seed(args)
    params = qlrs.QlrsParams(args.ell, args.r)
    rng = bench.SplitMix64(seed)
    rate = qlrs.simulate_local(params, args.tau, args.trials, rng)
    _emit(args, {"q": params.q, "r": args.r, "tau": args.tau,
                 "trials": args.trials, "empirical_failure_rate": rate,
                 "lrs_closed_form_matched_r":
                     qlrs.lrs_fail_prob(params.q, args.r + 1, args.tau)})


def cmd_aad_build(args):
    fam = aad.construct(args.n, args.k, args.q)
    _emit(args, {"size": fam.size, "n": args.n, "k": args.k, "q": args.q,
                 "guaranteed_L": aad.guaranteed_l(args.n, args.k),
                 "generators": fam.generators})


def cmd_aad_verify(args):
    fam = aad.construct(args.n, args.k, args.q)
    l_bound = args.l_bound if args.l_bound is not None \
        else aad.guaranteed_l(args.n, args.k)
    spread = aad.verify_spread(fam)
    if args.mode == "sample":
        rng = bench.SplitMix64(_require_seed(args))
        ok = aad.verify_aad(fam, l_bound, mode="sample",
                            samples=args.samples, rng=rng)
    else:
        ok = aad.verify_aad(fam, l_bound)
    upper, as_lower = aad.bounds(args.n, args.k, l_bound, args.q)
    _emit(args, {"size": fam.size, "spread": spread, "aad_ok": ok,
                 "L": l_bound, "upper_bound": str(upper),
                 "asymptotic_lower": as_lower})


def cmd_bounds_table(args):
    part = None
    if args.partition:
        part = metric.OrderedPartition(tuple(_parse_ints(args.partition)))
    reports = metric.classical_bounds(args.metric, args.n, args.d, args.q,
                                      args.m, part)
    _emit(args, {"bounds": [{"name": r.name, "value": str(r.value),
                             "log10": r.log10} for r in reports]})


# ---------------------------------------------------------------------------
# parser

def build_parser():
    parser = argparse.ArgumentParser(
        prog="skewcodes",
        description="Exact-arithmetic workbench for skew-polynomial codes")
    parser.add_argument("--seed", type=int, default=None,
                        help="master seed (required for stochastic ops)")
    parser.add_argument("--out", default=None, help="output file path")
    parser.add_argument("--config", default=None,
                        help="key=value defaults file")
    parser.add_argument("--format", choices=("csv", "json"), default="json")
    # the global flags are also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS)
    common.add_argument("--config", default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("csv", "json"),
                        default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("skew-eval", help="evaluate a skew polynomial")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--theta", type=int, default=1)
    p.add_argument("--beta", type=int, default=0)
    p.add_argument("--coeffs", required=True)
    p.add_argument("--points", required=True)
    p.set_defaults(func=cmd_skew_eval)

    p = add_parser("lrs-gen", help="LRS generator matrix")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lengths", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_lrs_gen)

    p = add_parser("support-check", help="GM condition and ktilde")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--zeros", required=True,
                   help="semicolon-separated rows of zero positions")
    p.set_defaults(func=cmd_support_check)

    p = add_parser("support-build",
                       help="support-constrained LRS generator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--zeros", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lengths", required=True)
    p.set_defaults(func=cmd_support_build)

    p = add_parser("dist-design", help="distributed LRS design")
    p.add_argument("--lengths", required=True, help="message lengths r_i")
    p.add_argument("--access", required=True,
                   help="semicolon-separated access sets")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--rho", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_dist_design)

    p = add_parser("netgap", help="combination-network bounds")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--eps", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--tmax", type=int, default=8)
    p.set_defaults(func=cmd_netgap)

    p = add_parser("il-sim", help="interleaved decoding simulation")
    p.add_argument("--kind", choices=("grs", "alternant"), default="grs")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--support-mode", choices=("random", "fixed"),
                   default="random")
    p.add_argument("--scan", action="store_true",
                   help="threshold scan instead of curves")
    p.add_argument("--target", type=float, default=0.9)
    p.set_defaults(func=cmd_il_sim)

    p = add_parser("il-bounds", help="closed-form bound table")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_il_bounds)

    p = add_parser("qlrs-dim", help="QLRS dimension and bad counts")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_qlrs_dim)

    p = add_parser("qlrs-local", help="QLRS local-recovery simulation")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.set_defaults(func=cmd_qlrs_local)

    p = add_parser("aad-build", help="AAD family construction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_aad_build)

    p = add_parser("aad-verify", help="verify spread/AAD properties")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--l-bound", type=int, default=None)
    p.add_argument("--mode", choices=("exhaustive", "sample"),
                   default="exhaustive")
    p.add_argument("--samples", type=int, default=2000)
    p.set_defaults(func=cmd_aad_verify)

    p = add_parser("bounds-table", help="classical metric bounds")
    p.add_argument("--metric", choices=(metric.HAMMING, metric.RANK,
                                        metric.SUMRANK), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--partition", default=None)
    p.set_defaults(func=cmd_bounds_table)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.config:
        try:
            defaults = _load_config(args.config)
        except OSError as exc:
            sys.stderr.write(f"config: {exc}\n")
            return EXIT_USAGE
        for key, value in defaults.items():
            attr = key.replace("-", "_")
            if getattr(args, attr, None) is None:
                setattr(args, attr, type_coerce(value))
    try:
        args.func(args)
        return EXIT_OK
    except UsageError as exc:
        sys.stderr.write(f"usage: {exc}\n")
        return EXIT_USAGE
    except (GuardError, support.InfeasibleDesign, ValueError) as exc:
        sys.stderr.write(f"infeasible: {exc}\n")
        return EXIT_INFEASIBLE
    except OSError as exc:
        sys.stderr.write(f"io: {exc}\n")
        return EXIT_INFEASIBLE
    except Exception as exc:     # noqa: BLE001 - CLI boundary
        sys.stderr.write(f"internal: {exc}\n")
        return EXIT_INTERNAL


def type_coerce(value):
    try:
        return int(value)
    except ValueError:
        try:
            return float(value)
        except ValueError:
            return value


if __name__ == "__main__":
    sys.exit(main())
