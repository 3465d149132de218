"""Command-line interface.

Scalar queries print one value to stdout; table and figure subcommands
write delimited files (and optionally a rendered image next to them).
Exit codes: 0 success, 2 invalid input, 3 unreachable threshold,
4 quadrature failure.
"""

import argparse
import math
import sys

from . import baselines, cases, dynamics, report, threshold
from .dynamics import NoOscillation
from .errors import QuadratureFailureError, ValidationError
from .hamiltonian import HamiltonianParams, matrix_rep, validate_params
from .overlap_prior import PriorSpec, prob_overlap_at_least, uniform_prob_overlap

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNREACHABLE = 3
EXIT_QUADRATURE = 4

# Flags (by dest) that may also come from a `key = value` config file;
# command-line values win.
_CONFIG_CASTS = {
    "alpha": float,
    "delta": float,
    "beta_re": float,
    "beta_im": float,
    "gamma_re": float,
    "gamma_im": float,
    "energy": float,
    "planck": float,
    "x": float,
    "t": float,
    "p": float,
    "t_end": float,
    "samples": int,
    "n": int,
    "k": int,
    "x_bar": float,
    "mu_theta": float,
    "sigma_sq": float,
    "format": str,
}


def load_config(path: str) -> dict[str, str]:
    """Parse `key = value` lines; `#` starts a comment, blanks are skipped."""
    values: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValidationError(f"{path}:{lineno}: expected `key = value`")
            key, _, value = line.partition("=")
            values[key.strip().lower().replace("-", "_")] = value.strip()
    return values


def _merge_config(args: argparse.Namespace) -> None:
    if not getattr(args, "config", None):
        return
    cfg = load_config(args.config)
    for key, cast in _CONFIG_CASTS.items():
        if hasattr(args, key) and getattr(args, key) is None and key in cfg:
            try:
                setattr(args, key, cast(cfg[key]))
            except ValueError as exc:
                raise ValidationError(f"config key {key!r}: {exc}") from exc


def _need(args: argparse.Namespace, key: str, flag: str):
    value = getattr(args, key, None)
    if value is None:
        raise ValidationError(f"missing required value {flag} (flag or config)")
    return value


def _params_from_args(args: argparse.Namespace) -> HamiltonianParams:
    alpha = _need(args, "alpha", "--alpha")
    delta = _need(args, "delta", "--delta")
    beta = complex(args.beta_re or 0.0, args.beta_im or 0.0)
    gamma = None
    if args.gamma_re is not None or args.gamma_im is not None:
        gamma = complex(args.gamma_re or 0.0, args.gamma_im or 0.0)
    return validate_params(
        alpha=alpha,
        delta=delta,
        beta=beta,
        energy_E=args.energy if args.energy is not None else 1.0,
        planck_h=args.planck if args.planck is not None else 1.0,
        gamma=gamma,
    )


def _emit_scalar(value: float) -> None:
    print(f"{value:.12g}")


def _samples(args: argparse.Namespace) -> int:
    return args.samples if args.samples is not None else report.CURVE_SAMPLES


def _write_with_optional_plot(args, artifact, renderer=None) -> None:
    fmt = args.format or "csv"
    report.write_artifact(artifact, args.out, fmt)
    if getattr(args, "plot", None):
        if renderer is None:
            raise ValidationError("this subcommand has no plot renderer")
        from . import plots

        plots.RENDERERS[renderer](artifact, args.plot)


def cmd_eval(args) -> int:
    p = _params_from_args(args)
    x = _need(args, "x", "--x")
    t = _need(args, "t", "--t")
    _emit_scalar(dynamics.transition_probability(matrix_rep(p, x), x, t, p.hbar))
    return EXIT_OK


def cmd_pmax(args) -> int:
    p = _params_from_args(args)
    _emit_scalar(dynamics.p_max(p, _need(args, "x", "--x")))
    return EXIT_OK


def cmd_tstar(args) -> int:
    p = _params_from_args(args)
    value = dynamics.t_star(p, _need(args, "x", "--x"))
    if isinstance(value, NoOscillation):
        print("no-oscillation")
    else:
        _emit_scalar(value)
    return EXIT_OK


def cmd_threshold(args) -> int:
    p = _params_from_args(args)
    x = _need(args, "x", "--x")
    thr = _need(args, "p", "--p")
    result = threshold.time_to_threshold(p, x, thr)
    if not result.reachable:
        print(
            f"threshold {thr:.12g} unreachable: peak probability is "
            f"{result.p_max:.12g}",
            file=sys.stderr,
        )
        return EXIT_UNREACHABLE
    _emit_scalar(result.t_hit)
    return EXIT_OK


def cmd_classify(args) -> int:
    p = _params_from_args(args)
    print(cases.classify(p).value)
    return EXIT_OK


def cmd_curve(args) -> int:
    p = _params_from_args(args)
    x = _need(args, "x", "--x")
    t_end = _need(args, "t_end", "--t-end")
    artifact = report.curve_artifact(p, x, t_end, _samples(args))
    if args.out:
        _write_with_optional_plot(args, artifact, renderer="curve")
    else:
        if getattr(args, "plot", None):
            from . import plots

            plots.render_curve(artifact, args.plot)
        for line in report.render_lines(artifact, "," if (args.format or "csv") == "csv" else "\t"):
            print(line)
    return EXIT_OK


def cmd_table1(args) -> int:
    x = args.x if args.x is not None else 0.5
    artifact = report.table1_artifact(
        x=x,
        energy_E=args.energy if args.energy is not None else 1.0,
        planck_h=args.planck if args.planck is not None else 1.0,
    )
    _write_with_optional_plot(args, artifact)
    return EXIT_OK


def cmd_table2(args) -> int:
    artifact = report.table2_artifact(
        alpha=args.alpha if args.alpha is not None else 1.0,
        beta=args.beta_re if args.beta_re is not None else 1.0,
        x=args.x if args.x is not None else 0.5,
        energy_E=args.energy if args.energy is not None else 1.0,
        planck_h=args.planck if args.planck is not None else 1.0,
    )
    _write_with_optional_plot(args, artifact)
    return EXIT_OK


def cmd_table3(args) -> int:
    _write_with_optional_plot(args, report.table3_artifact())
    return EXIT_OK


def cmd_fig4(args) -> int:
    artifact = report.fig4_artifact(n=_samples(args))
    _write_with_optional_plot(args, artifact, renderer="fig4")
    return EXIT_OK


def cmd_fig5(args) -> int:
    artifact = report.fig5_artifact(n=_samples(args))
    _write_with_optional_plot(args, artifact, renderer="fig5")
    return EXIT_OK


def cmd_fig6(args) -> int:
    artifact = report.fig6_artifact(n=_samples(args))
    _write_with_optional_plot(args, artifact, renderer="fig6")
    return EXIT_OK


def cmd_grover(args) -> int:
    n = int(_need(args, "n", "--n"))
    if args.k is None:
        k = baselines.grover_optimal_k(n)
        print(f"{k} {baselines.grover_probability(k, n):.12g}")
    else:
        _emit_scalar(baselines.grover_probability(int(args.k), n))
    return EXIT_OK


def cmd_fg(args) -> int:
    t = _need(args, "t", "--t")
    x = _need(args, "x", "--x")
    _emit_scalar(
        baselines.farhi_gutmann_probability(
            t,
            x,
            energy_E=args.energy if args.energy is not None else 1.0,
            planck_h=args.planck if args.planck is not None else 1.0,
        )
    )
    return EXIT_OK


def cmd_prior(args) -> int:
    n = int(_need(args, "n", "--n"))
    x_bar = args.x_bar if args.x_bar is not None else math.cos(math.pi / 8.0)
    if args.uniform:
        _emit_scalar(uniform_prob_overlap(x_bar, n))
        return EXIT_OK
    spec = PriorSpec(
        hilbert_dim_n=n,
        mu_theta=args.mu_theta if args.mu_theta is not None else 3.0 * math.pi / 8.0,
        sigma_sq=args.sigma_sq if args.sigma_sq is not None else 1.0,
    )
    _emit_scalar(prob_overlap_at_least(x_bar, spec))
    return EXIT_OK


def _add_param_flags(parser: argparse.ArgumentParser, with_x: bool = True) -> None:
    parser.add_argument("--alpha", type=float, help="weight of |w><w|")
    parser.add_argument("--delta", type=float, help="weight of |s><s|")
    parser.add_argument("--beta-re", type=float, dest="beta_re",
                        help="real part of the |w><s| weight (default 0)")
    parser.add_argument("--beta-im", type=float, dest="beta_im",
                        help="imaginary part of the |w><s| weight (default 0)")
    parser.add_argument("--gamma-re", type=float, dest="gamma_re",
                        help="optional |s><w| weight, checked against conj(beta)")
    parser.add_argument("--gamma-im", type=float, dest="gamma_im",
                        help="imaginary part of the optional |s><w| weight")
    parser.add_argument("--energy", type=float, help="energy scale E (default 1)")
    parser.add_argument("--planck", type=float, help="Planck constant h (default 1)")
    if with_x:
        parser.add_argument("--x", type=float, help="source-target overlap in (0, 1)")


def _add_output_flags(parser: argparse.ArgumentParser, out_required: bool = True,
                      with_plot: bool = False) -> None:
    parser.add_argument("--out", required=out_required,
                        help="output file path" + ("" if out_required else " (default stdout)"))
    parser.add_argument("--format", choices=("csv", "tsv"),
                        help="delimiter (default csv)")
    if with_plot:
        parser.add_argument("--plot", help="also render the data to this image file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsearch",
        description="Two-level analog quantum search: probabilities, peak "
                    "times, thresholds, and report tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="`key = value` file; flags override it")
        p.set_defaults(func=func)
        return p

    p = add("eval", cmd_eval, "success probability at a given time")
    _add_param_flags(p)
    p.add_argument("--t", type=float, help="evolution time")

    p = add("pmax", cmd_pmax, "peak success probability")
    _add_param_flags(p)

    p = add("tstar", cmd_tstar, "first time the success probability peaks")
    _add_param_flags(p)

    p = add("threshold", cmd_threshold, "earliest time to reach a probability")
    _add_param_flags(p)
    p.add_argument("--p", type=float, help="success-probability threshold")

    p = add("classify", cmd_classify, "which coupling case the parameters fall in")
    _add_param_flags(p, with_x=False)

    p = add("curve", cmd_curve, "sampled success-probability curve")
    _add_param_flags(p)
    p.add_argument("--t-end", type=float, dest="t_end", help="end of the time grid")
    p.add_argument("--samples", type=int, help="number of grid points (default 400)")
    _add_output_flags(p, out_required=False, with_plot=True)

    p = add("table1", cmd_table1, "per-case peak probability/time summary")
    _add_param_flags(p, with_x=True)
    _add_output_flags(p)

    p = add("table2", cmd_table2, "peak times of the unit-peak cases")
    _add_param_flags(p, with_x=True)
    _add_output_flags(p)

    p = add("table3", cmd_table3, "overlap-bound probabilities under target priors")
    _add_output_flags(p)

    p = add("fig4", cmd_fig4, "vanishing-overlap peak probability sweeps")
    p.add_argument("--samples", type=int, help="points per curve (default 400)")
    _add_output_flags(p, with_plot=True)

    p = add("fig5", cmd_fig5, "peak time vs overlap and P(t) for unit-peak cases")
    p.add_argument("--samples", type=int, help="points per curve (default 400)")
    _add_output_flags(p, with_plot=True)

    p = add("fig6", cmd_fig6, "threshold race between two benchmark Hamiltonians")
    p.add_argument("--samples", type=int, help="points per curve (default 400)")
    _add_output_flags(p, with_plot=True)

    p = add("grover", cmd_grover, "digital search success probability")
    p.add_argument("--n", type=int, help="database size N >= 2")
    p.add_argument("--k", type=int, help="iteration count (default: optimal)")

    p = add("fg", cmd_fg, "constant analog baseline success probability")
    p.add_argument("--t", type=float, help="evolution time")
    p.add_argument("--x", type=float, help="source-target overlap in (0, 1)")
    p.add_argument("--energy", type=float, help="energy scale E (default 1)")
    p.add_argument("--planck", type=float, help="Planck constant h (default 1)")

    p = add("prior", cmd_prior, "probability the overlap exceeds a bound")
    p.add_argument("--n", type=int, help="Hilbert dimension N >= 2")
    p.add_argument("--x-bar", type=float, dest="x_bar",
                   help="overlap bound (default cos(pi/8))")
    p.add_argument("--mu-theta", type=float, dest="mu_theta",
                   help="prior center angle (default 3*pi/8)")
    p.add_argument("--sigma-sq", type=float, dest="sigma_sq",
                   help="prior variance (default 1)")
    p.add_argument("--uniform", action="store_true",
                   help="use the maximum-ignorance prior instead")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _merge_config(args)
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except QuadratureFailureError as exc:
        print(f"quadrature failure: {exc}", file=sys.stderr)
        return EXIT_QUADRATURE


if __name__ == "__main__":
    sys.exit(main())
