"""Batch driver: run monoid, cone and p-adic pipelines from a JSON job config and emit canonical reports."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from . import cones as C
from .basicfn import partition_table, quasi_polynomial_fit
from .monoid import (character_semigroup, find_nu, monoid_presentation, monomial_charts,
                     orbit_generators, renner_datum, toric_ideal, weight_cone, weight_data_from_json)
from .padic import gl2, tate
from .padic.cyclo import Cyc, sqrt_power
from .padic.radial import RadialFunction
from .padic.schwartz import PAdicContext

TASKS = ("cone", "monoid", "resolve", "partition-table", "padic-check", "satake", "zeta")
SUBCOMMANDS = {"cone": "cone", "monoid": "monoid", "resolve": "resolve", "basic": "partition-table",
               "padic": "padic-check", "satake": "satake", "zeta": "zeta"}
LIMITS = {"n": 8, "depth": 40, "satake_depth": 4, "q": 13}
DEFAULT_CONFIG = {"weights": {"builtin": "sym", "n": 2}}


class UsageError(Exception):
    """Schema or bound violation in a job config."""


class IdentityFailure(Exception):
    """An exact identity that the task checks did not hold."""


@dataclass
class Report:
    config: dict
    tasks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(t["status"] == "ok" for t in self.tasks)

    def to_json(self):
        return {"tool": {"name": "monoidkit", "version": __version__}, "config": self.config,
                "tasks": self.tasks}


def exact(x):
    """Exact values as strings; containers recursively."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, Cyc):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): exact(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [exact(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_fixture(report, path):
    text = canonical_json(report.to_json())
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text


def _int_param(task, key, default, limit):
    v = task.get(key, default)
    if not isinstance(v, int) or isinstance(v, bool):
        raise UsageError(f"{key} must be an integer")
    if not 0 <= v <= limit:
        raise UsageError(f"{key}={v} outside the desk-scale range 0..{limit}")
    return v


def _prime_param(task, default=3):
    q = _int_param(task, "q", default, LIMITS["q"])
    try:
        PAdicContext(q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return q


def _weights(config):
    desc = config.get("weights")
    if desc is None:
        raise UsageError("config needs a 'weights' descriptor")
    if "n" in desc and int(desc["n"]) > LIMITS["n"]:
        raise UsageError(f"n={desc['n']} exceeds the desk-scale limit {LIMITS['n']}")
    try:
        return weight_data_from_json(desc)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad weights descriptor: {exc}") from exc


def _ambient(w, pts, side="char"):
    lat = w.datum.char_lattice if side == "char" else w.datum.cochar_lattice
    return [lat.to_ambient(x) for x in pts]


def task_cone(config, task):
    w = _weights(config)
    xi = weight_cone(w)
    out = {"weight_cone": {"rays": xi.rays, "ambient_rays": xi.ambient_rays(), "facets": xi.facets,
                           "strictly_convex": xi.strict_convex}}
    if xi.strict_convex and xi.full_dimensional:
        dual = C.dual_cone(xi, w.datum.char_lattice)
        hb = C.hilbert_basis(dual)
        out["dual_cone"] = {"rays": dual.rays, "ambient_rays": dual.ambient_rays(),
                            "hilbert_basis": hb, "ambient_hilbert_basis": _ambient(w, hb)}
    return out


def task_monoid(config, task):
    w = _weights(config)
    sg = character_semigroup(w)
    nu = find_nu(w)
    pres = monoid_presentation(w)
    return {"generators": _ambient(w, sg.generators),
            "nu": None if nu is None else w.datum.char_lattice.to_ambient(nu.coords),
            "ideal": str(toric_ideal(sg.generators)),
            "presentation": {"kind": pres.kind, "equations": pres.equations},
            "orbit_generators": _ambient(w, orbit_generators(w, sg))}


def task_resolve(config, task):
    w = _weights(config)
    xi = weight_cone(w)
    fan = C.resolve_to_smooth_fan(xi)
    lat = w.datum.cochar_lattice
    charts = monomial_charts(renner_datum(w), fan)
    amb = [c for c in charts if c.kind == "ambient"]
    return {"rays": fan.rays, "ambient_rays": [lat.to_ambient(r) for r in fan.rays],
            "inserted": [r for r in fan.rays if r not in xi.rays],
            "cones": [list(c) for c in fan.cones], "multiplicities": fan.multiplicities(),
            "certificate": fan.certificate,
            "charts": [{"kind": c.kind, "cone": c.cone, "exponents": c.exponents, "jacobian": c.jacobian,
                        "jacobian_det": c.jacobian_det, "equation": c.equation} for c in charts],
            "jacobian_exponent": max((max(c.jacobian) for c in amb), default=None)}


def task_partition_table(config, task):
    w = _weights(config)
    bound = _int_param(task, "depth", 10, LIMITS["depth"])
    sg = character_semigroup(w)
    table = partition_table(sg.generators, bound)
    out = {"generators": sg.generators, "bound": bound, "table": table.to_json()}
    nu = find_nu(w)
    period = task.get("period")
    if nu is not None and nu.integral and period is not None:
        fit = quasi_polynomial_fit(table, int(period), int(task.get("degree", 1)),
                                   line=tuple(int(x) for x in nu.coords))
        out["quasi_polynomial"] = {"period": fit.period, "degree": fit.degree, "certified": fit.certified,
                                   "pieces": {",".join(map(str, k)): v for k, v in sorted(fit.pieces.items())}}
        if not fit.certified:
            raise IdentityFailure(f"quasi-polynomial fit failed at {fit.witness}")
    return out


def _gamma_json(g):
    return {"independent": g.independent, "tested": g.tested, "gamma": g.gamma.coefficient_arrays()}


def task_padic_check(config, task):
    q = _prime_param(task)
    ctx = PAdicContext(q)
    check = task.get("check", "basic-decomposition")
    if check == "basic-decomposition":
        m = tate.basic_membership(ctx, RadialFunction.ball(q, 0))
        out = {"f1_coefficients": m.f1_coefficients, "f2_coefficients": m.f2_coefficients,
               "verified": m.verified, "unit_coefficient_identity": m.unit_coefficient_identity}
        if not m.verified:
            raise IdentityFailure("decomposition does not reproduce char(O)")
        return out
    if check == "gamma":
        chars = {"trivial": tate.TameCharacter(q)}
        if q != 2:
            chars["quadratic"] = tate.quadratic_character(q)
        out = {}
        for name, chi in chars.items():
            g = tate.tate_gamma(ctx, chi)
            out[name] = _gamma_json(g)
            if not g.independent or g.gamma != tate.expected_gamma(ctx, chi):
                raise IdentityFailure(f"gamma factor check failed for {name}")
        return out
    raise UsageError(f"unknown padic check {check!r}")


def _half_power_form(p, c):
    """c = p^(k/2) * r with k in {0, 1} and r rational: returns (k, r)."""
    for k in (0, 1):
        r = c * sqrt_power(p, -k)
        if r.is_rational():
            return k, r.rational_value()
    raise ValueError("coefficient is not in Q(q^(1/2))")


def task_satake(config, task):
    q = _prime_param(task)
    depth = _int_param(task, "depth", 2, LIMITS["satake_depth"])
    out = []
    for l1 in range(depth + 1):
        for l2 in range(l1 + 1):
            h = gl2.HeckeElement.basis(q, (l1, l2))
            s = gl2.satake(h)
            if s != gl2.satake_oracle(h):
                raise IdentityFailure(f"satake disagrees with coset enumeration at {(l1, l2)}")
            terms = []
            for mu, c in sorted(s.terms.items()):
                k, r = _half_power_form(q, c)
                terms.append({"mu": mu, "q_half_power": k, "coefficient": r})
            out.append({"lambda": (l1, l2), "satake": terms})
    return {"q": q, "elements": out}


def _alpha(task):
    raw = task.get("alpha", ["2", "1/3"])
    try:
        return tuple(Fraction(str(x)) for x in raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad alpha {raw!r}") from exc


def task_zeta(config, task):
    q = _prime_param(task)
    alpha = _alpha(task)
    order = _int_param(task, "depth", 6, LIMITS["depth"])
    phi = gl2.BiKFunction(q, {}, {0: 1})
    z = gl2.zeta_gl2_spherical(phi, alpha)
    from .padic.laurent import X
    target = 1 / ((1 - X * alpha[0]) * (1 - X * alpha[1]))
    series = gl2.zeta_gl2_series(phi, alpha, order)
    ser = z.series(order)
    ok = z == target and all(ser.get(t, 0) == series.get(t, 0) for t in range(order))
    if not ok:
        raise IdentityFailure("zeta integral differs from the L-factor")
    return {"q": q, "alpha": alpha, "zeta": z.coefficient_arrays(),
            "series": {str(t): series[t] for t in sorted(series)}}


RUNNERS = {"cone": task_cone, "monoid": task_monoid, "resolve": task_resolve,
           "partition-table": task_partition_table, "padic-check": task_padic_check,
           "satake": task_satake, "zeta": task_zeta}


def validate(config):
    if not isinstance(config, dict):
        raise UsageError("config must be a JSON object")
    tasks = config.get("tasks")
    if not isinstance(tasks, list) or not tasks:
        raise UsageError("config needs a nonempty 'tasks' list")
    for t in tasks:
        if not isinstance(t, dict) or t.get("task") not in TASKS:
            raise UsageError(f"unknown task {t!r}; expected one of {', '.join(TASKS)}")


def run(config):
    """Run every task in order; a failing task is recorded and the rest still run."""
    validate(config)
    report = Report(config)
    for task in config["tasks"]:
        entry = {"task": task["task"]}
        try:
            entry["result"] = exact(RUNNERS[task["task"]](config, task))
            entry["status"] = "ok"
        except IdentityFailure as exc:
            entry["status"], entry["error"] = "identity-failure", str(exc)
        except UsageError as exc:
            entry["status"], entry["error"] = "usage-error", str(exc)
        except (ValueError, ArithmeticError) as exc:
            entry["status"], entry["error"] = "error", f"{type(exc).__name__}: {exc}"
        report.tasks.append(entry)
    return report


def exit_code(report):
    statuses = {t["status"] for t in report.tasks}
    if "usage-error" in statuses:
        return 1
    return 0 if statuses == {"ok"} else 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(prog="monoidkit", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {"cone": "cone of the monoid: rays, facets, Hilbert basis",
             "monoid": "monoid data: generators, toric ideal, shifts",
             "resolve": "toric resolution with certificate and charts",
             "basic": "partition table and quasi-polynomial fit",
             "padic": "GL1 p-adic identity checks",
             "satake": "Satake transform of the GL2 basic function",
             "zeta": "GL2 zeta integral as a rational function",
             "run": "run every task listed in the config"}
    for name in list(SUBCOMMANDS) + ["run"]:
        sp = sub.add_parser(name, help=helps.get(name))
        sp.add_argument("--config", help="JSON job config")
        sp.add_argument("--out", help="write the canonical JSON report here")
        sp.add_argument("--task", help="task name (run) or check name (padic)")
        sp.add_argument("--depth", type=int, help="depth or box bound")
        sp.add_argument("--q", type=int, help="residue field size (a prime)")
    sp = sub.add_parser("selftest", help="run the acceptance checks")
    sp.add_argument("--task", help="comma-separated criterion numbers")
    sp.add_argument("--out", help="write the JSON summary here")
    return parser


def _load_config(args):
    if not args.config:
        return dict(DEFAULT_CONFIG)
    try:
        with open(args.config, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config is not valid JSON: {exc}") from exc


def _config_for(args):
    config = _load_config(args)
    if args.command == "run":
        if args.task:
            config = dict(config, tasks=[t for t in config.get("tasks", []) if t.get("task") == args.task])
        return config
    task = {"task": SUBCOMMANDS[args.command]}
    for t in config.get("tasks", []):
        if t.get("task") == task["task"]:
            task.update(t)
            break
    if args.depth is not None:
        task["depth"] = args.depth
    if args.q is not None:
        task["q"] = args.q
    if args.task:
        task["check"] = args.task
    return dict(config, tasks=[task])


def _write(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _selftest(args):
    from .acceptance import run_all
    try:
        numbers = [int(x) for x in args.task.split(",")] if args.task else None
    except ValueError:
        raise UsageError("--task must list criterion numbers")
    results = run_all(numbers)
    for r in results:
        print(r.line())
    if args.out:
        _write(canonical_json([{"criterion": r.number, "title": r.title, "passed": r.passed}
                               for r in results]), args.out)
    return 0 if all(r.passed for r in results) else 2


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "selftest":
            return _selftest(args)
        report = run(_config_for(args))
        _write(canonical_json(report.to_json()), args.out)
    except UsageError as exc:
        print(f"monoidkit: usage error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"monoidkit: {exc}", file=sys.stderr)
        return 1
    for t in report.tasks:
        if t["status"] != "ok":
            print(f"monoidkit: {t['task']}: {t['status']}: {t['error']}", file=sys.stderr)
    return exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
