"""Command-line entry point for the radar ambiguity toolkit.

Every command writes JSON to stdout (or to ``-o``), except ``pulse grid``
which writes CSV. Exit codes: 0 when the tested predicate holds or the
command succeeded, 1 when the predicate fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from dataclasses import replace
from pathlib import Path
from typing import Any

import numpy as np
import voluptuous as vol

from . import ambiguity, hermite, lambda_sets, matrix_kron, pulse, search, selftest
from .const import (
    CONF_MODE,
    CONF_SEED,
    CONF_TOL,
    CONF_VERBOSE,
    CONF_WORKERS,
    DEFAULT_CERT_TOL,
    DEFAULT_GENERIC_TOL,
    DEFAULT_LAGUERRE_JMAX,
    DEFAULT_PULSE_SAMPLES,
    DEFAULT_PULSE_TOL,
    DEFAULT_RESTARTS,
    DEFAULT_SEARCH_TOL,
    EXIT_FALSE,
    EXIT_TRUE,
    EXIT_USAGE,
    LAGUERRE_TOL,
    MODE_EXACT,
    MODE_FLOAT,
    MODES,
)
from .exceptions import AmbiguityError, InvalidInput
from .models import (
    HermiteExpansion,
    Multiplier,
    PulseDescriptor,
    RunConfig,
    Signal,
)
from .parsing import (
    contains_float,
    parse_eta,
    parse_factors,
    parse_flips,
    parse_grid_shape,
    parse_int_set,
    parse_range,
    parse_unit,
    parse_values,
    read_document,
)
from .polynomial import Poly
from .scalar import scalar_to_json, to_complex
from .schemas import (
    CONFIG_SCHEMA,
    HERMITE_SCHEMA,
    MULTIPLIER_SCHEMA,
    POLY_SCHEMA,
    PULSE_SCHEMA,
    SIGNAL_SCHEMA,
    validate,
)

_LOGGER = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, RunConfig], int]


def _exit(flag: bool) -> int:
    return EXIT_TRUE if flag else EXIT_FALSE


def _emit(args: argparse.Namespace, payload: Any) -> None:
    """Write a JSON payload with sorted keys to -o or stdout."""
    text = json.dumps(payload, sort_keys=True, indent=2)
    output = getattr(args, "output", None)
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _tol(args: argparse.Namespace, run: RunConfig, default: float) -> float:
    """Return --tol when given, else the command's own default."""
    return run.tol if CONF_TOL in vars(args) else default


def _load(run: RunConfig, paths: Sequence[str], schema: vol.Schema) -> list[dict]:
    """Read and validate documents; a float literal switches the run to float mode."""
    documents = [validate(schema, read_document(path), path) for path in paths]
    for path, document in zip(paths, documents, strict=True):
        if run.mode == MODE_EXACT and contains_float(document):
            _LOGGER.warning("Float literal in %s, switching to float mode", path)
            run.mode = MODE_FLOAT
    return documents


def _in_mode(run: RunConfig, value: Any) -> Any:
    """Embed a model into floats when the run is in float mode."""
    if run.mode != MODE_FLOAT:
        return value
    match value:
        case Signal() | Poly():
            return value.to_float()
        case HermiteExpansion():
            return HermiteExpansion(tuple(to_complex(a) for a in value.alphas))
        case Multiplier():
            return Multiplier(value.support, tuple(to_complex(v) for v in value.values))
    return value


def _signals(run: RunConfig, *paths: str) -> list[Signal]:
    documents = _load(run, paths, SIGNAL_SCHEMA)
    return [_in_mode(run, Signal.from_dict(d)) for d in documents]


def _polys(run: RunConfig, *paths: str) -> list[Poly]:
    documents = _load(run, paths, POLY_SCHEMA)
    return [_in_mode(run, Poly.from_dict(d)) for d in documents]


def _pulse(run: RunConfig, args: argparse.Namespace) -> PulseDescriptor:
    (document,) = _load(run, [args.signal], PULSE_SCHEMA)
    eta = parse_eta(args.eta) if args.eta is not None else None
    u = PulseDescriptor.from_dict(document, eta=eta)
    return replace(u, signal=_in_mode(run, u.signal))


def _pair_report(a: Signal, b: Signal, tol: float) -> dict[str, Any]:
    witness = ambiguity.is_trivial_partner(a, b, tol)
    return {
        "a": a.to_dict(),
        "b": b.to_dict(),
        "partner": ambiguity.is_partner(a, b, tol),
        "trivial": witness is not None,
    }


def _partner_check(args: argparse.Namespace, run: RunConfig) -> int:
    a, b = _signals(run, args.a, args.b)
    partner = ambiguity.is_partner(a, b, run.tol)
    difference = None
    if not partner and a.degree == b.degree:
        sig_a, sig_b = ambiguity.signature(a), ambiguity.signature(b)
        difference = sig_a.first_difference(sig_b, run.tol)
    _emit(args, {"partner": partner, "first_difference": difference})
    return _exit(partner)


def _trivial_check(args: argparse.Namespace, run: RunConfig) -> int:
    a, b = _signals(run, args.a, args.b)
    witness = ambiguity.is_trivial_partner(a, b, run.tol)
    _emit(args, {"witness": witness.to_dict() if witness is not None else "none"})
    return _exit(witness is not None)


def _restricted_check(args: argparse.Namespace, run: RunConfig) -> int:
    a, b = _signals(run, args.a, args.b)
    etas = ambiguity.restricted_partner_check(a, b, run.tol)
    payload = [scalar_to_json(e) for e in etas] if etas is not None else "none"
    _emit(args, {"etas": payload})
    return _exit(etas is not None)


def _multiplier(run: RunConfig, path: str) -> Multiplier:
    (document,) = _load(run, [path], MULTIPLIER_SCHEMA)
    return _in_mode(run, Multiplier.from_dict(document))


def _multiplier_check(args: argparse.Namespace, run: RunConfig) -> int:
    c = _multiplier(run, args.multiplier)
    holds = ambiguity.check_multiplier_condition(c, run.tol)
    _emit(args, {"condition": holds})
    return _exit(holds)


def _multiplier_apply(args: argparse.Namespace, run: RunConfig) -> int:
    c = _multiplier(run, args.multiplier)
    (a,) = _signals(run, args.signal)
    b = ambiguity.apply_multiplier(c, a)
    report = _pair_report(a, b, run.tol)
    report["condition"] = ambiguity.check_multiplier_condition(c, run.tol)
    _emit(args, report)
    return _exit(report["partner"])


def _multiplier_dense(args: argparse.Namespace, run: RunConfig) -> int:
    c = ambiguity.dense_family_multiplier(
        args.n, parse_unit(args.inner), parse_unit(args.outer)
    )
    holds = ambiguity.check_multiplier_condition(c, run.tol)
    _emit(args, {"multiplier": c.to_dict(), "condition": holds})
    return _exit(holds)


def _bset_test(args: argparse.Namespace, run: RunConfig) -> int:
    holds = lambda_sets.is_Bk(parse_int_set(args.set), args.order)
    _emit(args, {"order": args.order, "holds": holds})
    return _exit(holds)


def _bset_recover(args: argparse.Namespace, run: RunConfig) -> int:
    base, other = parse_int_set(args.base), parse_int_set(args.other)
    witness = lambda_sets.recover_shift(base, other)
    _emit(args, {"witness": witness.to_dict() if witness is not None else "none"})
    return _exit(witness is not None)


def _bset_random(args: argparse.Namespace, run: RunConfig) -> int:
    rng = np.random.default_rng(run.seed)
    chosen = lambda_sets.random_bset(args.order, args.size, args.bound, rng)
    _emit(args, {"order": args.order, "set": list(chosen)})
    return EXIT_TRUE


def _matrix_build(args: argparse.Namespace, run: RunConfig) -> int:
    (a,) = _signals(run, args.signal)
    _emit(args, matrix_kron.build_K(a).to_dict())
    return EXIT_TRUE


def _matrix_gram_check(args: argparse.Namespace, run: RunConfig) -> int:
    a, b = _signals(run, args.a, args.b)
    equal = matrix_kron.gram_equal(a, b, run.tol)
    _emit(args, {"gram_equal": equal})
    return _exit(equal)


def _strange_kron(args: argparse.Namespace, run: RunConfig) -> int:
    a, b = _signals(run, args.a, args.b)
    if args.tight:
        c = matrix_kron.kron_signal_tight(a, b)
    else:
        c = matrix_kron.kron_signal(a, b, args.degree)
    _emit(args, c.to_dict())
    return EXIT_TRUE


def _single_value(text: str) -> Any:
    values = parse_values(text)
    if len(values) != 1:
        raise InvalidInput(f"expected one number, got {text!r}")
    return values[0]


def _strange_interleave(args: argparse.Namespace, run: RunConfig) -> int:
    lam = _single_value(args.lam)
    alpha = _in_mode(run, Signal(tuple(parse_values(args.alpha))))
    a, b = matrix_kron.interleave(alpha, lam)
    report = _pair_report(a, b, run.tol)
    _emit(args, report)
    return _exit(report["partner"])


def _strange_iterate(args: argparse.Namespace, run: RunConfig) -> int:
    factors = parse_factors(args.factors)
    base = matrix_kron.iterated_product(factors)
    flipped = matrix_kron.iterated_product(factors, parse_flips(args.flips))
    report = _pair_report(base, flipped, run.tol)
    _emit(args, report)
    return _exit(report["partner"])


def _strange_epsilon(args: argparse.Namespace, run: RunConfig) -> int:
    eps = _single_value(args.eps)
    if run.mode == MODE_FLOAT:
        eps = to_complex(eps)
    a, b = matrix_kron.epsilon_kron_example(eps)
    report = _pair_report(a, b, run.tol)
    _emit(args, report)
    return _exit(report["partner"])


def _strange_padded(args: argparse.Namespace, run: RunConfig) -> int:
    a, b = matrix_kron.padded_strange_pair(args.n)
    report = _pair_report(a, b, run.tol)
    _emit(args, report)
    return _exit(report["partner"])


def _strange_search(args: argparse.Namespace, run: RunConfig) -> int:
    (a,) = _signals(run, args.signal)
    starts = _signals(run, *args.start) if args.start else None
    candidates = search.strange_search(
        a,
        args.restarts,
        _tol(args, run, DEFAULT_SEARCH_TOL),
        seed=run.seed,
        workers=run.workers,
        starts=starts,
    )
    _emit(
        args,
        {
            "restarts": args.restarts,
            "candidates": [c.to_dict() for c in candidates],
            "certified": sum(c.certified for c in candidates),
        },
    )
    return _exit(bool(candidates))


def _hermite_ambpoly(args: argparse.Namespace, run: RunConfig) -> int:
    (p,) = _polys(run, args.poly)
    _emit(args, hermite.ambiguity_polynomial(p).to_dict())
    return EXIT_TRUE


def _hermite_partner_scan(args: argparse.Namespace, run: RunConfig) -> int:
    (p,) = _polys(run, args.poly)
    partners = hermite.partner_scan(
        p, _tol(args, run, DEFAULT_GENERIC_TOL), DEFAULT_CERT_TOL, run.workers
    )
    _emit(args, {"partners": [q.to_dict() for q in partners]})
    return EXIT_TRUE


def _hermite_generic_check(args: argparse.Namespace, run: RunConfig) -> int:
    (p,) = _polys(run, args.poly)
    generic = hermite.is_generic(p, _tol(args, run, DEFAULT_GENERIC_TOL))
    _emit(args, {"generic": generic})
    return _exit(generic)


def _hermite_laguerre_verify(args: argparse.Namespace, run: RunConfig) -> int:
    shape = parse_grid_shape(args.grid)
    worst = hermite.laguerre_verify(args.jmax, shape)
    tol = _tol(args, run, LAGUERRE_TOL)
    _emit(
        args, {"jmax": args.jmax, "grid": list(shape), "max_error": worst, "tol": tol}
    )
    return _exit(worst <= tol)


def _hermite_signal_check(args: argparse.Namespace, run: RunConfig) -> int:
    documents = _load(run, [args.p, args.q], HERMITE_SCHEMA)
    p, q = (_in_mode(run, HermiteExpansion.from_dict(d)) for d in documents)
    partner = hermite.hermite_signal_partner_test(p, q, run.tol)
    _emit(args, {"partner": partner})
    return _exit(partner)


def _pulse_grid(args: argparse.Namespace, run: RunConfig) -> int:
    u = _pulse(run, args)
    xs, ys = parse_range(args.xrange), parse_range(args.yrange)
    table = pulse.export_grid(u, xs, ys, run.workers)
    output = getattr(args, "output", None)
    if output:
        pulse.write_grid_csv(table, output)
    else:
        pulse.write_grid_csv(table, sys.stdout)
    return EXIT_TRUE


def _pulse_verify(args: argparse.Namespace, run: RunConfig) -> int:
    u = _pulse(run, args)
    report = pulse.verify_pulse(
        u, args.samples, _tol(args, run, DEFAULT_PULSE_TOL), run.seed
    )
    _emit(args, report.to_dict())
    return _exit(report.passed)


def _selftest(args: argparse.Namespace, run: RunConfig) -> int:
    results = selftest.run_selftest()
    if args.json:
        _emit(args, {"results": [r.to_dict() for r in results]})
    else:
        print(selftest.format_table(results))
    return _exit(all(r.passed for r in results))


def _common_options() -> argparse.ArgumentParser:
    """Options accepted before the command and after it."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        default=argparse.SUPPRESS,
        help="log debug messages to stderr",
    )
    common.add_argument("--mode", choices=MODES, default=argparse.SUPPRESS)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS)
    common.add_argument("-o", "--output", default=argparse.SUPPRESS, help="output file")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser with every command registered."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="radar-ambiguity",
        description="Ambiguity functions and ambiguity-partner tools",
        parents=[common],
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def add(
        into: Any, name: str, handler: Handler, help_text: str
    ) -> argparse.ArgumentParser:
        sub = into.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    def group(name: str, help_text: str) -> Any:
        return commands.add_parser(name, help=help_text).add_subparsers(
            dest="action", required=True
        )

    def add_pair(into: Any, name: str, handler: Handler, help_text: str) -> None:
        sub = add(into, name, handler, help_text)
        sub.add_argument("a", help="signal JSON (- for stdin)")
        sub.add_argument("b", help="signal JSON")

    add_pair(commands, "partner-check", _partner_check, "decide ambiguity partners")
    add_pair(commands, "trivial-check", _trivial_check, "find a trivial witness")
    add_pair(commands, "restricted-check", _restricted_check, "unit factors per shift")

    multiplier = group("multiplier", "unit multipliers")
    sub = add(multiplier, "check", _multiplier_check, "test the multiplier condition")
    sub.add_argument("multiplier")
    sub = add(multiplier, "apply", _multiplier_apply, "multiply a signal")
    sub.add_argument("multiplier")
    sub.add_argument("signal")
    sub = add(multiplier, "dense", _multiplier_dense, "multiplier on {-n..n} and 3n+1")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--inner", default="1", help="unit on {-n..n}: @theta or tan:t")
    sub.add_argument("--outer", default="1", help="unit at 3n+1")

    bset = group("bset", "B_k sets")
    sub = add(bset, "test", _bset_test, "test sum uniqueness")
    sub.add_argument("--order", type=int, default=2)
    sub.add_argument("set", help='integers such as "0,1,5"')
    sub = add(bset, "recover", _bset_recover, "recover the shift between B_3 sets")
    sub.add_argument("base")
    sub.add_argument("other")
    sub = add(bset, "random", _bset_random, "random B_k set")
    sub.add_argument("--order", type=int, default=3)
    sub.add_argument("--size", type=int, required=True)
    sub.add_argument("--bound", type=int, required=True)

    matrix = group("matrix", "ambiguity matrices")
    sub = add(matrix, "build", _matrix_build, "print K_a")
    sub.add_argument("signal")
    add_pair(matrix, "gram-check", _matrix_gram_check, "compare K*K")

    strange = group("strange", "strange partners")
    sub = add(strange, "kron", _strange_kron, "Kronecker product of two signals")
    sub.add_argument("a")
    sub.add_argument("b")
    sub.add_argument("--tight", action="store_true", help="use the N+1 stride")
    sub.add_argument("--degree", type=int, default=None, help="nominal degree of a")
    sub = add(strange, "interleave", _strange_interleave, "interleaved partners")
    sub.add_argument("--alpha", required=True, help='coefficients such as "1,2"')
    sub.add_argument("--lambda", dest="lam", required=True)
    sub = add(strange, "iterate", _strange_iterate, "flip factors of a product")
    sub.add_argument("--factors", required=True, help='pairs such as "1:2,1:2"')
    sub.add_argument("--flips", default="", help='such as "1:swap,0:modulate:@1.2"')
    sub = add(strange, "epsilon", _strange_epsilon, "the (1,eps) Kronecker pair")
    sub.add_argument("--eps", required=True)
    sub = add(strange, "padded", _strange_padded, "zero-padded Kronecker pair")
    sub.add_argument("--n", type=int, required=True)
    sub = add(strange, "search", _strange_search, "numerical strange-partner search")
    sub.add_argument("signal")
    sub.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    sub.add_argument("--start", action="append", help="signal JSON to start near")

    hermite_cmd = group("hermite", "Hermite signals")
    sub = add(hermite_cmd, "ambpoly", _hermite_ambpoly, "ambiguity polynomial")
    sub.add_argument("poly")
    sub = add(hermite_cmd, "partner-scan", _hermite_partner_scan, "scan factorizations")
    sub.add_argument("poly")
    sub = add(hermite_cmd, "generic-check", _hermite_generic_check, "test genericity")
    sub.add_argument("poly")
    sub = add(hermite_cmd, "laguerre-verify", _hermite_laguerre_verify, "closed form")
    sub.add_argument("--jmax", type=int, default=DEFAULT_LAGUERRE_JMAX)
    sub.add_argument("--grid", default="3x3")
    sub = add(hermite_cmd, "signal-check", _hermite_signal_check, "partner test")
    sub.add_argument("p", help="Hermite expansion JSON")
    sub.add_argument("q")

    pulse_cmd = group("pulse", "pulse trains")
    sub = add(pulse_cmd, "grid", _pulse_grid, "tabulate A(u) as CSV")
    sub.add_argument("signal")
    sub.add_argument("--eta", default=None)
    sub.add_argument("--xrange", required=True, help="start:stop:step")
    sub.add_argument("--yrange", required=True)
    sub = add(pulse_cmd, "verify", _pulse_verify, "closed form vs quadrature")
    sub.add_argument("signal")
    sub.add_argument("--eta", default=None)
    sub.add_argument("--samples", type=int, default=DEFAULT_PULSE_SAMPLES)

    sub = add(commands, "selftest", _selftest, "run the built-in examples")
    sub.add_argument("--json", action="store_true")
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    options = {
        key: getattr(args, key)
        for key in (CONF_MODE, CONF_TOL, CONF_SEED, CONF_WORKERS, CONF_VERBOSE)
        if key in vars(args)
    }
    return RunConfig.from_dict(validate(CONFIG_SCHEMA, options, "options"))


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_USAGE if err.code else EXIT_TRUE

    logging.basicConfig(
        level=logging.DEBUG if getattr(args, CONF_VERBOSE, False) else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        run = _run_config(args)
        return args.handler(args, run)
    except InvalidInput as err:
        _LOGGER.error("Invalid input: %s", err)
    except AmbiguityError as err:
        _LOGGER.error("%s: %s", type(err).__name__, err)
    except OSError as err:
        _LOGGER.error("Cannot write output: %s", err)
    return EXIT_USAGE
