"""Declarative problem files (JSON).

Schema::

    {
      "algebra": {"dim": n, "names": [...],
                  "brackets": [[i, j, [[k, "p/q"], ...]], ...]},     # 1-based, i < j
      "representation": {"matrices": [[["p/q+p'/q'i", ...], ...], ...],
                         "nu": [...], "J_unitary": [[...]], "unitary_flag": true},
      "moments": ["p/q", ...],
      "xi": [[...], ...],
      "fock": {"dim": d, "J_unitary": [[...]],
               "polynomials": {"name": [[[i1, ..., in], "coeff"], ...]},
               "points": [[...], ...]},
      "tasks": [{"task": "series", "order": 6}, ...]
    }

Rationals are strings; plain JSON integers are accepted too.  Floats are
rejected because they are not exact.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError, ValidationError
from .fock import FSpace, SymPolynomial
from .lie import validate_lie_algebra
from .rep_state import CyclicData, MatrixRep, MomentState
from .scalar import Scalar, parse_rational, parse_scalar

TASKS = ("series", "gns", "positivity", "radius", "props", "fock")


@dataclass
class Problem:
    algebra: object
    names: list
    brackets: list
    representation: dict = None
    cyclic: CyclicData = None
    moments: MomentState = None
    xi: list = field(default_factory=list)
    fock_space: FSpace = None
    fock_polynomials: dict = field(default_factory=dict)
    fock_points: list = field(default_factory=list)
    tasks: list = field(default_factory=list)
    raw_fock: dict = None

    @property
    def has_state(self):
        return self.cyclic is not None or self.moments is not None


def _scalar(x, where):
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"{where}: expected an exact rational string, got {x!r}")
    if isinstance(x, int):
        return Scalar(x)
    if isinstance(x, str):
        try:
            return parse_scalar(x)
        except ParseError as e:
            raise ParseError(f"{where}: {e}") from None
    raise ParseError(f"{where}: expected an exact rational string, got {x!r}")


def _rational(x, where):
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"{where}: expected a rational string, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return parse_rational(x)
        except ParseError as e:
            raise ParseError(f"{where}: {e}") from None
    raise ParseError(f"{where}: expected a rational string, got {x!r}")


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{where}: expected an integer, got {x!r}")
    return x


def _list(x, where):
    if not isinstance(x, list):
        raise ParseError(f"{where}: expected a list")
    return x


def _matrix(rows, where):
    return [[_scalar(x, f"{where}[{i}][{j}]") for j, x in enumerate(_list(r, f"{where}[{i}]"))]
            for i, r in enumerate(_list(rows, where))]


def _vector(v, where):
    return [_scalar(x, f"{where}[{i}]") for i, x in enumerate(_list(v, where))]


def loads(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    return from_dict(data)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def from_dict(data):
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    unknown = set(data) - {"algebra", "representation", "moments", "xi", "fock", "tasks"}
    if unknown:
        raise ParseError(f"unknown sections: {sorted(unknown)}")
    if "algebra" not in data:
        raise ParseError("missing 'algebra' section")
    a = data["algebra"]
    if not isinstance(a, dict):
        raise ParseError("algebra: expected an object")
    dim = _int(a.get("dim"), "algebra.dim")
    names = a.get("names") or [f"X{i + 1}" for i in range(dim)]
    if not all(isinstance(n, str) for n in _list(names, "algebra.names")):
        raise ParseError("algebra.names: expected strings")
    structure = {}
    brackets = []
    for idx, entry in enumerate(_list(a.get("brackets", []), "algebra.brackets")):
        where = f"algebra.brackets[{idx}]"
        entry = _list(entry, where)
        if len(entry) != 3:
            raise ParseError(f"{where}: expected [i, j, [[k, coeff], ...]]")
        i, j = _int(entry[0], where + "[0]"), _int(entry[1], where + "[1]")
        row = {}
        for t, term in enumerate(_list(entry[2], where + "[2]")):
            term = _list(term, f"{where}[2][{t}]")
            if len(term) != 2:
                raise ParseError(f"{where}[2][{t}]: expected [k, coeff]")
            k = _int(term[0], f"{where}[2][{t}][0]")
            c = _rational(term[1], f"{where}[2][{t}][1]")
            row[k - 1] = row.get(k - 1, 0) + c
        key = (i - 1, j - 1)
        if key in structure:
            raise ValidationError(f"{where}: bracket ({i}, {j}) given twice")
        structure[key] = row
        brackets.append((i, j, sorted((k + 1, c) for k, c in row.items())))
    algebra = validate_lie_algebra(dim, names, structure)
    problem = Problem(algebra, list(names), sorted(brackets))

    if "representation" in data and "moments" in data:
        raise ValidationError("give exactly one of 'representation' or 'moments'")
    if "representation" in data:
        r = data["representation"]
        if not isinstance(r, dict):
            raise ParseError("representation: expected an object")
        mats = [_matrix(m, f"representation.matrices[{i}]")
                for i, m in enumerate(_list(r.get("matrices"), "representation.matrices"))]
        nu = _vector(r.get("nu"), "representation.nu")
        u = r.get("J_unitary")
        u = _matrix(u, "representation.J_unitary") if u is not None else None
        flag = r.get("unitary_flag", False)
        if not isinstance(flag, bool):
            raise ParseError("representation.unitary_flag: expected true/false")
        rep = MatrixRep(algebra, mats, unitary_flag=flag)
        problem.cyclic = CyclicData(rep, nu, u)
        problem.representation = {"matrices": mats, "nu": nu, "J_unitary": u, "unitary_flag": flag}
    if "moments" in data:
        moms = [_rational(m, f"moments[{i}]") for i, m in enumerate(_list(data["moments"], "moments"))]
        problem.moments = MomentState(algebra, moms)
    problem.xi = [_vector(v, f"xi[{i}]") for i, v in enumerate(_list(data.get("xi", []), "xi"))]
    if problem.xi and problem.cyclic is None:
        raise ValidationError("'xi' needs a representation")

    if "fock" in data:
        f = data["fock"]
        if not isinstance(f, dict):
            raise ParseError("fock: expected an object")
        fdim = _int(f.get("dim"), "fock.dim")
        u = f.get("J_unitary")
        space = FSpace(fdim, _matrix(u, "fock.J_unitary") if u is not None else None)
        polys = {}
        raw = {}
        pdata = f.get("polynomials", {})
        if not isinstance(pdata, dict):
            raise ParseError("fock.polynomials: expected an object")
        for name in sorted(pdata):
            terms = {}
            for t, term in enumerate(_list(pdata[name], f"fock.polynomials.{name}")):
                where = f"fock.polynomials.{name}[{t}]"
                term = _list(term, where)
                if len(term) != 2:
                    raise ParseError(f"{where}: expected [[i1, ...], coeff]")
                key = tuple(sorted(_int(i, where) - 1 for i in _list(term[0], where + "[0]")))
                terms[key] = terms.get(key, Scalar(0)) + _scalar(term[1], where + "[1]")
            polys[name] = SymPolynomial.from_terms(space, terms)
            raw[name] = terms
        problem.fock_space = space
        problem.fock_polynomials = polys
        problem.fock_points = [_vector(p, f"fock.points[{i}]") for i, p in enumerate(_list(f.get("points", []), "fock.points"))]
        problem.raw_fock = {"dim": fdim, "J_unitary": space.unitary if u is not None else None}

    for t, task in enumerate(_list(data.get("tasks", []), "tasks")):
        if not isinstance(task, dict) or task.get("task") not in TASKS:
            raise ParseError(f"tasks[{t}]: expected an object with 'task' in {TASKS}")
        if task["task"] in ("series", "gns", "positivity", "radius") and not problem.has_state:
            raise ValidationError(f"tasks[{t}]: '{task['task']}' needs a representation or moments")
        problem.tasks.append(dict(task))
    return problem


def _s(x):
    return x.exact_str(spaced=False)


def to_dict(problem):
    """Canonical dictionary form: every scalar as ``p/q+p'/q'i``, sorted brackets."""
    out = {
        "algebra": {
            "dim": problem.algebra.dim,
            "names": list(problem.names),
            "brackets": [[i, j, [[k, f"{c.numerator}/{c.denominator}"] for k, c in row]]
                         for i, j, row in problem.brackets],
        }
    }
    if problem.representation is not None:
        r = problem.representation
        rep = {
            "matrices": [[[_s(x) for x in row] for row in m] for m in r["matrices"]],
            "nu": [_s(x) for x in r["nu"]],
            "unitary_flag": r["unitary_flag"],
        }
        if r["J_unitary"] is not None:
            rep["J_unitary"] = [[_s(x) for x in row] for row in r["J_unitary"]]
        out["representation"] = rep
    if problem.moments is not None:
        out["moments"] = [f"{m.re.numerator}/{m.re.denominator}" for m in problem.moments.moments]
    if problem.xi:
        out["xi"] = [[_s(x) for x in v] for v in problem.xi]
    if problem.fock_space is not None:
        fock = {"dim": problem.fock_space.dim}
        if problem.raw_fock.get("J_unitary") is not None:
            fock["J_unitary"] = [[_s(x) for x in row] for row in problem.fock_space.unitary]
        fock["polynomials"] = {
            name: [[[i + 1 for i in key], _s(c)] for key, c in sorted(p.terms().items(), key=lambda t: (len(t[0]), t[0]))]
            for name, p in problem.fock_polynomials.items()
        }
        fock["points"] = [[_s(x) for x in v] for v in problem.fock_points]
        out["fock"] = fock
    if problem.tasks:
        out["tasks"] = [dict(sorted(t.items())) for t in problem.tasks]
    return out


def dumps(problem):
    return json.dumps(to_dict(problem), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
