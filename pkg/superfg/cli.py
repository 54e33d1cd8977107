"""Command-line front end: one subcommand per capability, a JSON RunReport on stdout.

Labels on the command line and in files are 1-based.
"""
import functools
import logging
import sys
import time
from typing import List, Optional, Sequence

import fire
import numpy as np

from superfg.boundary.bcfw import bcfw_check
from superfg.boundary.io import parse_labels, read_boundary_matrix
from superfg.boundary.matrix import positivity_failures
from superfg.double.dataclasses import DoublePoint
from superfg.double.exactness import DEFAULT_H, DEFAULT_TOL, convergence_ratio, exactness_suite, omega_a_invariance
from superfg.double.moment import dirac_identities
from superfg.fiber.elimination import eliminate as eliminate_system
from superfg.fiber.io import curve_to_json, parse_support, read_vertical_system
from superfg.fiber.newton import newton_genus as newton_report
from superfg.hexagon.gfunctions import g_function as g_value
from superfg.hexagon.gfunctions import g_spectral
from superfg.hexagon.period import FlagChart, chen_period, hexagon_period
from superfg.quantum.mutation import q_mutate, relation_check
from superfg.quantum.pentagon import initial_rank2, pentagon_check
from superfg.report import EXIT_PASS, EXIT_USAGE, RunReport
from superfg.seeds.dataclasses import ASeed
from superfg.seeds.io import exchange_to_json, parse_a_seed, parse_x_seed, read_json, seed_to_json
from superfg.seeds.mutation import alternating, is_laurent_orbit, mutate_a, mutate_x, orbit
from superfg.sfrat.io import format_sfrat
from superfg.superseed.bracket import check_bracket_preservation, preservation_suite
from superfg.superseed.duality import dual_exchange, dual_seed, langlands_dual
from superfg.superseed.horizontal import check_isotropy, horizontal_residuals, is_admissible
from superfg.superseed.io import read_super_seed
from superfg.superseed.mutation import mutate_super
from superfg.utils.misc_utils import SuiteConfig, random_positive_point

logger = logging.getLogger(__name__)

HORIZONTAL_TOL = 1e-10
CONVERGENCE_RANGE = (3.5, 4.5)
# agreement required between quadrature and spectral G-values
METHOD_TOL = 1e-8


def _command(name: str):
    def decorator(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            report = fn(*args, **kwargs)
            report.command = name
            report.wall_clock = time.perf_counter() - start
            return report

        return wrapper

    return decorator


def _numbers(value, kind=float) -> List:
    """'1,1,1', (1, 1, 1) or a scalar, as fire may hand any of them over."""
    if isinstance(value, (list, tuple)):
        items = list(value)
    elif isinstance(value, str):
        items = [t for t in value.replace(" ", "").split(",") if t]
    else:
        items = [value]
    try:
        return [kind(t) for t in items]
    except (TypeError, ValueError) as e:
        raise ValueError(f"Invalid number list: {value!r}") from e


@_command("mutate")
def mutate(
    seed: str, at: int = 1, then: Optional[int] = None, times: int = 5, period: Optional[int] = None
) -> RunReport:
    """Alternate mutations at `at` and `then` on the X- and A-seeds of a seed file.

    With `period`, the X-seed must first return (up to the swap of the two
    indices) after exactly that many mutations.
    """
    data = read_json(seed)
    xs, a_seed = parse_x_seed(data), parse_a_seed(data)
    n_mut = xs.exchange.n_mut
    k0 = int(at) - 1
    k1 = (k0 + 1) % max(n_mut, 1) if then is None else int(then) - 1
    xs.exchange.check_mutable(k0)
    xs.exchange.check_mutable(k1)
    if period is not None and not 1 <= int(period) <= int(times):
        raise ValueError(f"Expected return must lie within the sequence: {period=}, {times=}")
    ks = alternating(int(times), k0, k1)
    report = RunReport(
        "mutate", {"seed": data, "at": at, "then": k1 + 1, "times": times, "period": period}
    )

    x_orbit = orbit(xs, ks)
    a_orbit = orbit(a_seed, ks)
    perm = list(range(xs.exchange.n))
    perm[k0], perm[k1] = perm[k1], perm[k0]
    swapped = xs.permuted(perm)
    return_step = next((t for t in range(1, len(x_orbit)) if x_orbit[t] in (xs, swapped)), None)

    report.outputs = {
        "sequence": [k + 1 for k in ks],
        "final": seed_to_json(x_orbit[-1]),
        "a_sequence": [format_sfrat(a_seed.a[k0]), format_sfrat(a_seed.a[k1])]
        + [format_sfrat(t.a[k]) for t, k in zip(a_orbit[1:], ks)],
        "return_step": return_step,
        "returns_up_to_swap": x_orbit[-1] == swapped or x_orbit[-1] == xs,
    }
    report.check("x_involution", mutate_x(mutate_x(xs, k0), k0) == xs)
    report.check("a_involution", mutate_a(mutate_a(a_seed, k0), k0) == a_seed)
    report.check("laurent_orbit", is_laurent_orbit(a_orbit))
    if period is None:
        report.skip("orbit_return", "no --period requested")
    else:
        report.check("orbit_return", return_step == int(period), f"first return at step {return_step}")
    return report


@_command("verify-bracket")
def verify_bracket(
    seed: Optional[str] = None,
    trials: int = 50,
    mode: Optional[str] = None,
    rng_seed: int = 0,
    progress: bool = False,
) -> RunReport:
    """Bracket preservation for every mutation of a super seed file, or a random suite without one."""
    config = SuiteConfig(int(trials), int(rng_seed), progress)
    if seed is None:
        mode = mode or "consistent"
        report = RunReport("verify-bracket", {"trials": trials, "mode": mode, "rng_seed": rng_seed})
        suite = preservation_suite(config, mode=mode)
        report.outputs = {"checked": suite.checked, "failures": suite.failures[:20]}
        report.check("bracket_suite", suite.ok, f"{len(suite.failures)} failed relations")
        return report

    s, file_mode = read_super_seed(seed)
    mode = mode or file_mode
    report = RunReport("verify-bracket", {"seed": read_json(seed), "mode": mode, "rng_seed": rng_seed})
    isotropy = check_isotropy(s)
    report.outputs["isotropy"] = vars(isotropy)
    rng = config.rng()
    invertible = s.exchange.mutable_epsilon_hat().det() != 0
    for k in range(s.exchange.n_mut):
        result = check_bracket_preservation(s, k, mode)
        report.check(f"bracket_at_{k + 1}", result.ok, "; ".join(map(str, result.failures[:5])))
        name = f"horizontal_at_{k + 1}"
        if s.r == 0 or not isotropy.admissible or not invertible or mode != "consistent":
            report.skip(name, "needs odd weights, an admissible seed, invertible eps_hat and consistent mode")
            continue
        points = [random_positive_point(rng, list(s.x_names)) for _ in range(20)]
        residual = horizontal_residuals(s, mutate_super(s, k, mode), points)
        report.check(name, residual < HORIZONTAL_TOL, f"residual {residual:.2e}")
    return report


@_command("verify-double")
def verify_double(
    seed: str,
    trials: int = 20,
    h: float = DEFAULT_H,
    mode: str = "paper_literal",
    rng_seed: int = 0,
    progress: bool = False,
) -> RunReport:
    """Finite-difference exactness of the lifted mutation and invariance of the A-side two-form."""
    s, _ = read_super_seed(seed)
    config = SuiteConfig(int(trials), int(rng_seed), progress)
    report = RunReport("verify-double", {"seed": read_json(seed), "h": h, "mode": mode, "rng_seed": rng_seed})
    worst = exactness_suite(s, config, float(h), mode)
    report.outputs["residuals"] = vars(worst)
    report.check("lambda_exact", worst.lambda_residual < DEFAULT_TOL, f"{worst.lambda_residual:.2e}")
    report.check("omega_preserved", worst.omega_residual < DEFAULT_TOL, f"{worst.omega_residual:.2e}")
    if mode == "paper_literal":
        report.check("odd_exact", worst.odd_residual < DEFAULT_TOL, f"{worst.odd_residual:.2e}")
    else:
        report.skip("odd_exact", f"the odd one-form is exact for paper_literal only, {mode=}")

    rng = config.rng()
    n = s.exchange.n_mut
    ratio = convergence_ratio(s, 0, DoublePoint.random(rng, n, s.r))
    report.outputs["convergence_ratio"] = ratio
    lo, hi = CONVERGENCE_RANGE
    report.check("second_order", lo <= ratio <= hi, f"ratio {ratio:.3f}")

    a_seed = ASeed.initial(s.exchange)
    point = np.exp(rng.uniform(-1, 1, s.exchange.n))
    residual = max(omega_a_invariance(a_seed, k, point, float(h)) for k in range(n))
    report.check("omega_a_invariance", residual < DEFAULT_TOL, f"{residual:.2e}")

    if s.exchange.mutable_epsilon_hat().det() == 0:
        report.skip("dirac", "eps_hat is singular on the mutable block")
    else:
        dirac = dirac_identities(s)
        report.outputs["dirac"] = vars(dirac)
        report.check("dirac", dirac.recovers_weights and dirac.agrees_with_isotropy)
    return report


@_command("quantum-pentagon")
def quantum_pentagon(order: int = 8, weights=None) -> RunReport:
    """Rank-2 quantum pentagon at truncation order `order`, optionally with one odd generator."""
    W = None if weights is None else [_numbers(weights, int)]
    report = RunReport("quantum-pentagon", {"order": order, "weights": W})
    report.check("pentagon", pentagon_check(int(order), W=W))
    relations = relation_check(q_mutate(initial_rank2(int(order), W=W), 0))
    report.outputs["relations_checked"] = relations.checked
    report.check("relations_after_mutation", relations.ok, str(relations.failures))
    return report


@_command("eliminate")
def eliminate(system: str) -> RunReport:
    """Reduce a vertical system to its fiber curve P(x, y) = 0."""
    report = RunReport("eliminate", {"system": read_json(system)})
    curve = eliminate_system(read_vertical_system(system))
    report.outputs = curve_to_json(curve)
    report.check("pick", newton_report(list(curve.P)).pick_check)
    return report


@_command("newton-genus")
def newton_genus(support) -> RunReport:
    """Interior lattice points of the Newton polygon of a support such as '0,0;3,0;0,3' or a JSON file."""
    if isinstance(support, str) and support.endswith(".json"):
        data = read_json(support)
        points = parse_support(data["support"] if isinstance(data, dict) else data)
    else:
        points = parse_support(support)
    report = RunReport("newton-genus", {"support": [list(p) for p in points]})
    result = newton_report(points)
    report.outputs = {
        "polygon": [list(p) for p in result.polygon],
        "interior_count": result.interior_count,
        "boundary_count": result.boundary_count,
        "genus": result.genus,
    }
    report.check("pick", result.pick_check)
    return report


@_command("bcfw")
def bcfw(matrix: str, anchor, window) -> RunReport:
    """Odd delta function of the projector at `anchor` against its BCFW expansion over `window`."""
    C = read_boundary_matrix(matrix)
    O, B = parse_labels(anchor), parse_labels(window)
    report = RunReport("bcfw", {"matrix": read_json(matrix), "anchor": [o + 1 for o in O], "window": [b + 1 for b in B]})
    result = bcfw_check(C, O, B)
    report.outputs = {
        "lhs": repr(result.lhs),
        "rhs": repr(result.rhs),
        "cofactors": [format_sfrat(c) for c in result.support.cofactors],
        "non_positive_minors": [[o + 1 for o in bad] for bad in positivity_failures(C)],
    }
    report.check("bcfw_expansion", result.equal)
    report.check("null_vector", result.null_vector)
    return report


def _read_chart(filename: str) -> FlagChart:
    data = read_json(filename)
    anchor = int(data.get("anchor", 1)) - 1
    if "f_o" in data:
        return FlagChart(data["f_o"], data["f_e"], anchor)
    try:
        return FlagChart.from_uvw(*data["uvw"], data["y"], anchor=anchor)
    except (KeyError, TypeError) as e:
        raise ValueError(f"Chart needs f_o and f_e, or uvw and y: {e}") from e


@_command("hexagon")
def hexagon(uvw=None, y=None, chart: Optional[str] = None, chen: bool = False) -> RunReport:
    """Two-loop hexagon period at (u, v, w), optionally with y-letters, or at a flag chart file."""
    if (uvw is None) == (chart is None):
        raise ValueError("Give exactly one of --uvw and --chart")
    if chart is not None:
        flag = _read_chart(chart)
        report = RunReport("hexagon", {"chart": read_json(chart)})
        record = hexagon_period(flag)
    else:
        point = _numbers(uvw)
        if len(point) != 3:
            raise ValueError(f"Need three cross-ratios: {uvw=}")
        letters = None if y is None else _numbers(y)
        report = RunReport("hexagon", {"uvw": point, "y": letters})
        record = hexagon_period(point, y=letters)
        flag = None
    report.outputs = record.to_json()
    if chen:
        if flag is None:
            report.skip("chen_period", "needs a flag chart")
        else:
            value = chen_period(flag)
            report.outputs["chen_period"] = [value.real, value.imag]
    report.check("finite", bool(np.isfinite(record.total)))
    return report


@_command("gfun")
def gfun(letters, depth: Optional[int] = None, endpoint: float = 1.0) -> RunReport:
    """G(a_1, ..., a_m; endpoint); a single letter with --depth m is repeated m times."""
    values = _numbers(letters, complex)
    if depth is not None:
        depth = int(depth)
        if len(values) == 1:
            values = values * depth
        elif len(values) != depth:
            raise ValueError(f"Number of letters does not match the depth: {len(values)=}, {depth=}")
    report = RunReport("gfun", {"letters": [[a.real, a.imag] for a in values], "endpoint": endpoint})
    value = g_value(values, float(endpoint))
    report.outputs = {"value": [value.real, value.imag], "depth": len(values)}
    if len(values) <= 2:
        other = g_spectral(values, float(endpoint))
        report.check("methods_agree", abs(other - value) < METHOD_TOL, f"spectral differs by {abs(other - value):.2e}")
    else:
        report.skip("methods_agree", "nested quadrature is limited to depth 2")
    return report


@_command("dual")
def dual(seed: str) -> RunReport:
    """Langlands dual exchange data and weights of a super seed file."""
    s, mode = read_super_seed(seed)
    report = RunReport("dual", {"seed": read_json(seed)})
    exchange, W = langlands_dual(s)
    report.outputs = {"exchange": exchange_to_json(exchange), "W": W.tolist(), "mode": mode}
    report.check("symmetrizer", exchange.is_skew_symmetrizable() and np.array_equal(exchange.d, s.exchange.d))
    report.check("involution", dual_exchange(exchange) == s.exchange)
    if is_admissible(s):
        report.check("admissible", is_admissible(dual_seed(s)))
    else:
        report.skip("admissible", "input seed is not admissible")
    return report


COMMANDS = {
    "mutate": mutate,
    "verify-bracket": verify_bracket,
    "verify-double": verify_double,
    "quantum-pentagon": quantum_pentagon,
    "eliminate": eliminate,
    "newton-genus": newton_genus,
    "bcfw": bcfw,
    "hexagon": hexagon,
    "gfun": gfun,
    "dual": dual,
}


def _strip_verbose(argv: Sequence[str]):
    rest = [a for a in argv if a not in ("--verbose", "-v")]
    return len(rest) != len(argv), rest


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    verbose, argv = _strip_verbose(argv)
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING)
    if not argv or argv[0] not in COMMANDS and argv[0] not in ("--help", "-h"):
        logger.error("Expected one of the subcommands %s, got %s", sorted(COMMANDS), argv[:1])
        return EXIT_USAGE
    try:
        report = fire.Fire(COMMANDS, command=argv, name="superfg")
    except fire.core.FireExit as e:
        return EXIT_PASS if e.code == 0 else EXIT_USAGE
    except (ValueError, ZeroDivisionError, OSError) as e:
        logger.error("%s", e)
        command = argv[0] if argv else ""
        print(RunReport(command, {"argv": argv}, {"error": str(e)}))
        return EXIT_USAGE
    if not isinstance(report, RunReport):
        return EXIT_USAGE
    logger.info("%s finished in %.3fs, passed=%s", report.command, report.wall_clock, report.passed)
    return report.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
