"""``workbench``: batch front-end over problem files.

    workbench <task> --input FILE [--order N] [--out DIR]

Exit codes: 0 success, 2 parse or validation failure, 3 a failing property
suite (contract violation).
"""

import argparse
import os
import sys
from fractions import Fraction

import mpmath

from . import linalg as la
from . import problem as pf
from .dual import precision_bits, radius_estimate, to_power_series
from .errors import ContractViolation, WorkbenchError
from .fock import character_check, evaluate_poly, r_norm
from .gns import check_positivity, generator_matrices, gns_quotient, gram_matrix
from .props import SEED, run_suite
from .rep_state import moment_state, representative_functional, state_from_rep
from .scalar import parse_rational

EXIT_OK, EXIT_INVALID, EXIT_CONTRACT = 0, 2, 3


def _s(x):
    return x.exact_str()


def _vec(v):
    return "(" + ", ".join(_s(x) for x in v) + ")"


def _matrix_lines(mat, indent="  "):
    if not mat:
        return [indent + "[]"]
    return [indent + "[" + ", ".join(_s(x) for x in row) + "]" for row in mat]


def _state(problem):
    if problem.cyclic is not None:
        return state_from_rep(problem.cyclic)
    return moment_state(problem.moments)


def _state_order(problem, order):
    if problem.moments is not None and order > problem.moments.order:
        raise WorkbenchError(f"order {order} exceeds the {problem.moments.order} given moments")
    return order


# tasks ---------------------------------------------------------------------

def report_series(problem, order=6):
    order = _state_order(problem, order)
    out = [f"task series order {order}", "functional omega"]
    out.append(to_power_series(_state(problem), order).serialize().rstrip("\n"))
    for k, xi in enumerate(problem.xi, 1):
        out.append(f"functional e_xi[{k}] xi={_vec(xi)}")
        e = representative_functional(problem.cyclic, xi)
        out.append(to_power_series(e, order).serialize().rstrip("\n"))
    return "\n".join(out) + "\n"


def report_gns(problem, order=2):
    _state_order(problem, 2 * order)
    module = gns_quotient(_state(problem), order)
    names = problem.algebra.names
    out = [f"task gns order {order}"]
    summary = f"rank {module.rank}, " + ("stabilized" if module.stabilized else "not stabilized")
    if module.stabilized:
        polys = [f"charpoly {n}: {la.format_charpoly(la.charpoly(m))}"
                 for n, m in zip(names, generator_matrices(module))]
        summary += ", " + ", ".join(polys)
    out.append(summary)
    out.append("rank profile: " + " ".join(str(r) for r in module.rank_profile))
    out.append("quotient basis: " + ", ".join(
        str(_monomial(problem.algebra, a)) for a in module.quotient_basis))
    out.append("cyclic class: " + _vec(module.cyclic_class))
    out.append("gram (quotient):")
    out += _matrix_lines(module.gram_reduced)
    out.append(f"null basis ({len(module.null_basis)}):")
    out += ["  " + str(e) for e in module.null_basis]
    label = "rho" if module.stabilized else "truncated action"
    for n, m in zip(names, module.action):
        out.append(f"{label}({n}):")
        out += _matrix_lines(m)
    return "\n".join(out) + "\n"


def _monomial(alg, alpha):
    from .pbw import PbwElement

    return PbwElement.monomial(alg, alpha)


def report_positivity(problem, order=2):
    _state_order(problem, 2 * order)
    if problem.cyclic is not None:
        omega = state_from_rep(problem.cyclic)
    else:
        omega = moment_state(problem.moments, certify=False)
    cert = check_positivity(gram_matrix(omega, order))
    out = [f"task positivity order {order}"]
    if cert.psd:
        out.append("PSD certificate")
        out.append("pivots:")
        out += [f"  {_monomial(problem.algebra, a)}: {_s(d)}" for a, d in cert.pivots]
    else:
        out.append(f"NOT PSD: {cert.reason}")
        if cert.witness is not None:
            out.append("witness vector: " + _vec(cert.witness))
            out.append(f"witness element: {cert.witness_element}")
            out.append(f"omega(A* A) = {_s(cert.witness_value)}")
    return "\n".join(out) + "\n"


def _direction(text, dim):
    if text is None:
        return [Fraction(1)] * dim
    if isinstance(text, list):
        parts = text
    else:
        parts = [p for p in str(text).split(",") if p.strip()]
    d = [parse_rational(str(p).strip()) for p in parts]
    if len(d) != dim:
        raise WorkbenchError(f"direction has {len(d)} entries, algebra has dimension {dim}")
    return d


def report_radius(problem, order=16, direction=None):
    order = _state_order(problem, order)
    d = _direction(direction, problem.algebra.dim)
    est = radius_estimate(to_power_series(_state(problem), order), d)
    out = [f"task radius order {order}",
           "direction: (" + ", ".join(str(x) for x in d) + ")",
           f"precision bits: {est.precision}"]
    with mpmath.workprec(est.precision):
        out.append(f"radius estimate: {mpmath.nstr(est.value, 20)}")
        out += [f"  k={k} |c_k|^(-1/k)={mpmath.nstr(v, 20)}" for k, v in sorted(est.ratios.items())]
    return "\n".join(out) + "\n"


def report_props(problem=None, suite="all", seed=SEED):
    results = run_suite(suite, seed)
    out = [f"task props suite {suite} seed {seed}"]
    for name, ok, detail in results:
        out.append(f"{'PASS' if ok else 'FAIL'} {name}" + (f"  [{detail}]" if detail else ""))
    failed = sum(1 for r in results if not r[1])
    out.append(f"{len(results) - failed} passed, {failed} failed")
    text = "\n".join(out) + "\n"
    if failed:
        raise ContractViolation(text)
    return text


def report_fock(problem, evaluate=True, norm=None):
    if problem.fock_space is None:
        raise WorkbenchError("problem file has no 'fock' section")
    polys = problem.fock_polynomials
    out = ["task fock", f"space dimension {problem.fock_space.dim}"]
    if evaluate:
        for k, pt in enumerate(problem.fock_points, 1):
            out.append(f"point[{k}] = {_vec(pt)}")
            for name, p in polys.items():
                out.append(f"  {name}(xi) = {_s(evaluate_poly(p, pt))}")
            rep = character_check(list(polys.values()), pt)
            mult = sum(1 for f in rep.failures if f[0] == "multiplicative")
            real = sum(1 for f in rep.failures if f[0] == "real")
            out.append(f"  character check: {rep.checked} relations, "
                       f"{mult} multiplicativity failures, {real} reality failures")
    if norm is not None:
        r = parse_rational(str(norm))
        out.append(f"r-norm at r = {r} ({precision_bits()} bits)")
        for name, p in polys.items():
            total, sq = r_norm(p, r)
            with mpmath.workprec(precision_bits()):
                out.append(f"  {name}: {mpmath.nstr(total, 30)}")
            out += [f"    ||phi_{n}||^2 = {s}" for n, s in sq.items()]
    return "\n".join(out) + "\n"


def run_task(problem, task, **opts):
    opts = {k: v for k, v in opts.items() if v is not None}
    if task == "series":
        return report_series(problem, opts.get("order", 6))
    if task == "gns":
        return report_gns(problem, opts.get("order", 2))
    if task == "positivity":
        return report_positivity(problem, opts.get("order", 2))
    if task == "radius":
        return report_radius(problem, opts.get("order", 16), opts.get("direction"))
    if task == "props":
        return report_props(problem, opts.get("suite", "all"), opts.get("seed", SEED))
    if task == "fock":
        norm = opts.get("norm")
        return report_fock(problem, opts.get("eval", norm is None), norm)
    raise WorkbenchError(f"unknown task {task!r}")


def run_file(problem):
    """Run the file's own task list; returns [(filename, report)]."""
    out = []
    for k, t in enumerate(problem.tasks, 1):
        opts = {key: v for key, v in t.items() if key != "task"}
        out.append((f"{k:02d}_{t['task']}.txt", run_task(problem, t["task"], **opts)))
    return out


# entry point ---------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="workbench", description="Exact enveloping-algebra workbench.")
    p.add_argument("task", choices=pf.TASKS + ("run", "canonical"))
    p.add_argument("--input", "-i", help="problem file (JSON)")
    p.add_argument("--order", "-N", type=int)
    p.add_argument("--out", "-o", help="directory for report files")
    p.add_argument("--direction", help="comma-separated rationals, e.g. 1,1/2")
    p.add_argument("--suite", default=None, help="property suite: lie, pbw, dual, rep, gns, fock or all")
    p.add_argument("--seed", type=int)
    p.add_argument("--eval", action="store_true", help="evaluate Fock polynomials at the file's points")
    p.add_argument("--norm", help="radius r for the r-norm of Fock polynomials")
    return p


def _emit(reports, out_dir, stdout):
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
    for name, text in reports:
        stdout.write(text)
        if out_dir:
            with open(os.path.join(out_dir, name), "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        problem = None
        if args.input:
            problem = pf.load(args.input)
        elif args.task != "props":
            raise WorkbenchError(f"'{args.task}' needs --input FILE")
        if args.task == "canonical":
            reports = [("canonical.json", pf.dumps(problem))]
        elif args.task == "run":
            reports = run_file(problem)
        else:
            opts = dict(order=args.order, direction=args.direction, suite=args.suite, seed=args.seed,
                        norm=args.norm, eval=args.eval or None)
            reports = [(f"{args.task}.txt", run_task(problem, args.task, **opts))]
    except ContractViolation as e:
        _emit([(f"{args.task}.txt", str(e))], args.out, stdout)
        return EXIT_CONTRACT
    except WorkbenchError as e:
        stderr.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_INVALID
    except OSError as e:
        stderr.write(f"error: {e}\n")
        return EXIT_INVALID
    _emit(reports, args.out, stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
