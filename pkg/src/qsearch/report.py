"""Deterministic table and figure-data artifacts.

Every builder returns a TableArtifact whose rows are plain Python values;
the writer renders floats with 12 significant digits in fixed scientific
notation and LF line endings, so repeated runs are byte-identical.  Row
computations may be spread over QSEARCH_WORKERS threads, but rows are
always assembled and emitted in input order.
"""

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import cases, dynamics, threshold
from .cases import CaseLabel
from .dynamics import NoOscillation
from .hamiltonian import HamiltonianParams, validate_params
from .overlap_prior import PriorSpec, prob_overlap_at_least, uniform_prob_overlap

WORKERS_ENV_VAR = "QSEARCH_WORKERS"

#: Samples per figure curve; fixed so regression fixtures stay stable.
CURVE_SAMPLES = 400


@dataclass(frozen=True)
class TableArtifact:
    """Rectangular table plus `#` comment lines echoing its inputs."""

    header: list[str]
    rows: list[tuple]
    comments: list[str] = field(default_factory=list)

    def __post_init__(self):
        width = len(self.header)
        for row in self.rows:
            if len(row) != width:
                raise ValueError(f"row width {len(row)} != header width {width}")


def _worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV_VAR, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_ordered(fn, items):
    """Apply fn across items, optionally on worker threads, keeping order."""
    workers = _worker_count()
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def format_value(value) -> str:
    """Render one cell: ints verbatim, floats as 12-significant-digit
    scientific notation, everything else through str()."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if v == 0.0:
            v = 0.0  # normalize -0.0
        return f"{v:.11E}"
    return str(value)


def render_lines(artifact: TableArtifact, delimiter: str = ",") -> list[str]:
    lines = [f"# {comment}" for comment in artifact.comments]
    lines.append(delimiter.join(artifact.header))
    for row in artifact.rows:
        lines.append(delimiter.join(format_value(v) for v in row))
    return lines


def write_artifact(artifact: TableArtifact, path: str, fmt: str = "csv") -> None:
    if fmt not in ("csv", "tsv"):
        raise ValueError(f"format must be 'csv' or 'tsv', got {fmt!r}")
    delimiter = "," if fmt == "csv" else "\t"
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        for line in render_lines(artifact, delimiter):
            fh.write(line + "\n")


def _t_star_cell(value: float | NoOscillation):
    return "no-oscillation" if isinstance(value, NoOscillation) else value


# Representative coupling tuples, one per case, used for the case-summary
# table.  Values match the worked examples scattered through the package
# tests (beta given as (re, im)).
_CASE_SUMMARY_PARAMS: list[tuple[str, float, float, complex]] = [
    ("general", 1.0, 2.0, 1.0 + 1.0j),
    ("case1", 1.0, 1.0, 0.0),
    ("case2", 1.0, 0.5, 0.0),
    ("case3", 0.0, 0.0, 0.5),
    ("case4", 0.0, 0.0, 1.0j),
    ("case5", 1.0, 1.0, 1.0),
    ("case6", 1.0, 1.0, 1.0 + 1.0j),
    ("case7", 1.0, 0.5, 1.0),
]


def table1_artifact(
    x: float = 0.5, energy_E: float = 1.0, planck_h: float = 1.0
) -> TableArtifact:
    """Case summary: representative couplings with peak probability/time."""

    def build_row(entry):
        name, alpha, delta, beta = entry
        p = validate_params(alpha, delta, beta, energy_E, planck_h)
        label = cases.classify(p)
        pm = cases.case_p_max(label, p, x)
        ts = cases.case_t_star(label, p, x)
        unit = 1 if abs(pm - 1.0) <= 1e-12 else 0
        return (name, alpha, delta, complex(beta).real, complex(beta).imag,
                pm, ts, unit)

    rows = _map_ordered(build_row, _CASE_SUMMARY_PARAMS)
    return TableArtifact(
        header=["case", "alpha", "delta", "beta_re", "beta_im",
                "p_max", "t_star", "unit_p_max"],
        rows=rows,
        comments=[
            "peak success probability and peak time per coupling case",
            f"x = {x!r}, E = {energy_E!r}, h = {planck_h!r}",
        ],
    )


def table2_artifact(
    alpha: float = 1.0, beta: float = 1.0, x: float = 0.5,
    energy_E: float = 1.0, planck_h: float = 1.0,
) -> TableArtifact:
    """Unit-fidelity sub-family: peak times of cases 1, 3, and 5."""
    triples = [
        ("case1", validate_params(alpha, alpha, 0.0, energy_E, planck_h)),
        ("case3", validate_params(0.0, 0.0, beta, energy_E, planck_h)),
        ("case5", validate_params(alpha, alpha, beta, energy_E, planck_h)),
    ]

    def build_row(entry):
        name, p = entry
        label = cases.classify(p)
        return (name, p.alpha, p.delta, complex(p.beta).real, x,
                cases.case_p_max(label, p, x), cases.case_t_star(label, p, x))

    rows = _map_ordered(build_row, triples)
    return TableArtifact(
        header=["case", "alpha", "delta", "beta", "x", "p_max", "t_star"],
        rows=rows,
        comments=[
            "peak times of the unit-peak cases",
            f"alpha = {alpha!r}, beta = {beta!r}, x = {x!r}, "
            f"E = {energy_E!r}, h = {planck_h!r}",
        ],
    )


TABLE3_DIMENSIONS = (4, 8, 16)
TABLE3_VARIANCES = (0.1, 1.0, 10.0)
TABLE3_MU_THETA = 3.0 * math.pi / 8.0
TABLE3_X_BAR = math.cos(math.pi / 8.0)


def table3_artifact() -> TableArtifact:
    """Prob(x >= cos(pi/8)) under uniform and Gaussian-bump target priors."""
    grid = [(n, sig) for n in TABLE3_DIMENSIONS for sig in TABLE3_VARIANCES]
    uniform_by_n = {n: uniform_prob_overlap(TABLE3_X_BAR, n) for n in TABLE3_DIMENSIONS}

    def build_row(cell):
        n, sig = cell
        spec = PriorSpec(hilbert_dim_n=n, mu_theta=TABLE3_MU_THETA, sigma_sq=sig)
        return (n, sig, uniform_by_n[n], prob_overlap_at_least(TABLE3_X_BAR, spec))

    rows = _map_ordered(build_row, grid)
    return TableArtifact(
        header=["N", "sigma_sq", "prob_uniform", "prob_nonuniform"],
        rows=rows,
        comments=[
            "probability that the source-target overlap exceeds cos(pi/8)",
            f"x_bar = {TABLE3_X_BAR!r}, mu_theta = {TABLE3_MU_THETA!r}",
        ],
    )


FIG4_BETA_MAGNITUDES = (0.25, 0.5, 1.0)
FIG4_ASYMMETRIES = (0.0, 0.25, 0.5)
FIG4_ASYMMETRY_SPAN = (-2.0, 2.0)
FIG4_BETA_SPAN = (0.0, 2.0)


def fig4_artifact(n: int = CURVE_SAMPLES) -> TableArtifact:
    """Vanishing-overlap peak probability vs asymmetry and vs |beta|.

    Block `pmax_vs_asymmetry` sweeps alpha - delta at fixed |beta|; block
    `pmax_vs_beta` sweeps |beta| at fixed alpha - delta.
    """
    rows = []
    asym_grid = np.linspace(*FIG4_ASYMMETRY_SPAN, n)
    for b in FIG4_BETA_MAGNITUDES:
        for asym in asym_grid:
            p = validate_params(float(asym), 0.0, b)
            rows.append(("pmax_vs_asymmetry", b, float(asym),
                         cases.p_max_x_zero_limit(p)))
    beta_grid = np.linspace(*FIG4_BETA_SPAN, n)
    for asym in FIG4_ASYMMETRIES:
        for b in beta_grid:
            p = validate_params(asym, 0.0, float(b))
            rows.append(("pmax_vs_beta", asym, float(b),
                         cases.p_max_x_zero_limit(p)))
    return TableArtifact(
        header=["block", "curve", "abscissa", "p_max"],
        rows=rows,
        comments=[
            "peak success probability in the x -> 0 limit",
            "curve = fixed |beta| (first block) or fixed alpha - delta (second)",
        ],
    )


FIG5_PROB_X = 0.5
FIG5_T_END = 0.6


def _fig5_hamiltonians(alpha: float, beta: float) -> list[tuple[str, HamiltonianParams]]:
    return [
        ("case1", validate_params(alpha, alpha, 0.0)),
        ("case3", validate_params(0.0, 0.0, beta)),
        ("case5", validate_params(alpha, alpha, beta)),
    ]


def fig5_artifact(
    alpha: float = 1.0, beta: float = 1.0, n: int = CURVE_SAMPLES
) -> TableArtifact:
    """Peak time vs overlap, and probability vs time, for cases 1/3/5.

    Block `tstar_vs_x` uses an interior overlap grid i/(n+1); block
    `prob_vs_time` samples P(t) at x = 0.5 on [0, 0.6].
    """
    rows = []
    hams = _fig5_hamiltonians(alpha, beta)
    x_grid = np.arange(1, n + 1) / (n + 1)
    for name, p in hams:
        label = cases.classify(p)
        for x in x_grid:
            rows.append(("tstar_vs_x", name, float(x),
                         cases.case_t_star(label, p, float(x))))
    times = np.linspace(0.0, FIG5_T_END, n)
    for name, p in hams:
        probs = dynamics.curve_probabilities(p, FIG5_PROB_X, times)
        for t, prob in zip(times, probs):
            rows.append(("prob_vs_time", name, float(t), float(prob)))
    return TableArtifact(
        header=["block", "case", "abscissa", "value"],
        rows=rows,
        comments=[
            "peak time vs overlap, and success probability vs time, "
            "for the unit-peak cases",
            f"alpha = {alpha!r}, beta = {beta!r}, E = h = 1, "
            f"prob block at x = {FIG5_PROB_X!r}",
        ],
    )


FIG6_THRESHOLD = 0.95
FIG6_X = 0.5
FIG6_T_END = 0.4
FIG6_OPTIMAL = dict(alpha=0.5, delta=0.5, beta=1.0)
FIG6_SUBOPTIMAL = dict(alpha=0.5, delta=1.0, beta=1.0)


def fig6_artifact(n: int = CURVE_SAMPLES) -> TableArtifact:
    """The threshold race: a sub-unit-peak Hamiltonian crossing 0.95 before
    the unit-peak one."""
    entries = [
        ("suboptimal", validate_params(**FIG6_SUBOPTIMAL)),
        ("optimal", validate_params(**FIG6_OPTIMAL)),
    ]
    times = np.linspace(0.0, FIG6_T_END, n)
    rows = []
    for name, p in entries:
        probs = dynamics.curve_probabilities(p, FIG6_X, times)
        for t, prob in zip(times, probs):
            rows.append((name, float(t), float(prob)))
    race = threshold.compare_speed(
        entries[0][1], entries[1][1], FIG6_X, FIG6_THRESHOLD
    )
    return TableArtifact(
        header=["hamiltonian", "t", "prob"],
        rows=rows,
        comments=[
            f"threshold = {FIG6_THRESHOLD!r}, x = {FIG6_X!r}, E = h = 1",
            f"suboptimal: {FIG6_SUBOPTIMAL!r}; optimal: {FIG6_OPTIMAL!r}",
            f"threshold hit times: suboptimal = {race.result_a.t_hit!r}, "
            f"optimal = {race.result_b.t_hit!r}",
        ],
    )


def curve_artifact(
    p: HamiltonianParams, x: float, t_end: float, n: int
) -> TableArtifact:
    """Success probability samples for one Hamiltonian."""
    curve = dynamics.sample_curve(p, x, t_end, n)
    rows = [(float(t), float(prob)) for t, prob in zip(curve.times, curve.probs)]
    return TableArtifact(
        header=["t", "prob"],
        rows=rows,
        comments=[
            f"alpha = {p.alpha!r}, delta = {p.delta!r}, "
            f"beta = {complex(p.beta)!r}, E = {p.energy_E!r}, "
            f"h = {p.planck_h!r}, x = {x!r}",
        ],
    )
