"""Exact dense linear algebra over Gaussian rationals.

Matrices are lists of rows of :class:`Scalar`.  Elimination is fraction-free
(Bareiss) after clearing denominators, so intermediate entries stay Gaussian
integers and all divisions are exact.
"""

from math import lcm

from .scalar import ONE, ZERO, Scalar, as_scalar


def matrix(rows):
    return [[as_scalar(x) for x in row] for row in rows]


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[ZERO] * n for _ in range(m)]


def matmul(a, b):
    bt = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            s = ZERO
            for x, y in zip(row, col):
                if x and y:
                    s = s + x * y
            out_row.append(s)
        out.append(out_row)
    return out


def matvec(a, v):
    out = []
    for row in a:
        s = ZERO
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


def add(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def scale(a, c):
    return [[c * x for x in r] for r in a]


def adjoint(a):
    """Conjugate transpose."""
    return [[x.conjugate() for x in col] for col in zip(*a)]


def conj(a):
    return [[x.conjugate() for x in r] for r in a]


def inner(u, v):
    """<u, v>, conjugate-linear in the first slot."""
    s = ZERO
    for x, y in zip(u, v):
        if x and y:
            s = s + x.conjugate() * y
    return s


def is_zero(a):
    return all(not x for r in a for x in r)


def _clear_denominators(rows):
    out = []
    for row in rows:
        den = 1
        for x in row:
            den = lcm(den, x.re.denominator, x.im.denominator)
        out.append([x * den for x in row])
    return out


def echelon(a):
    """Fraction-free row echelon form.

    Returns ``(rows, pivots)`` where ``pivots`` are the pivot columns chosen
    left to right; the first nonzero entry of each column below the current
    row is used as the pivot, so the pivot columns are the greedy maximal
    independent set of columns.
    """
    m = _clear_denominators([list(r) for r in a])
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    prev = ONE
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            lead = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - lead * row_r[j]) / prev
            row_i[c] = ZERO
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a):
    if not a:
        return 0
    return len(echelon(a)[1])


def kernel(a):
    """Basis of {v : a v = 0}, one vector per free column, free entry set to 1."""
    ncols = len(a[0]) if a else 0
    rows, pivots = echelon(a)
    rows = rows[: len(pivots)]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            s = ZERO
            for j in range(c + 1, ncols):
                if rows[r][j] and v[j]:
                    s = s + rows[r][j] * v[j]
            v[c] = -s / rows[r][c]
        basis.append(v)
    return basis


def solve_in_span(columns_matrix, target):
    """Solve ``M x = target`` for x (M with independent columns); None if inconsistent."""
    ncols = len(columns_matrix[0])
    aug = [list(row) + [t] for row, t in zip(columns_matrix, target)]
    rows, pivots = echelon(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        s = rows[r][ncols]
        for j in range(c + 1, ncols):
            if rows[r][j] and x[j]:
                s = s - rows[r][j] * x[j]
        x[c] = s / rows[r][c]
    return x


class LdlResult:
    """Outcome of :func:`hermitian_ldl`.

    ``pivots`` lists ``(index, value)`` for each diagonal pivot taken;
    ``witness`` (when the matrix is not PSD) is a vector v with
    ``v* G v = witness_value < 0``.
    """

    def __init__(self, psd, pivots, witness=None, witness_value=None):
        self.psd = psd
        self.pivots = pivots
        self.witness = witness
        self.witness_value = witness_value

    @property
    def rank(self):
        return sum(1 for _, d in self.pivots if d)


def hermitian_ldl(g):
    """Exact LDL* with diagonal pivoting on a Hermitian matrix.

    Maintains ``S = T G T*``; pivoting on the first nonzero remaining
    diagonal entry.  A negative pivot, or a zero diagonal with a nonzero
    off-diagonal entry, yields an explicit negative-direction witness.
    """
    n = len(g)
    s = [list(r) for r in g]
    t = identity(n)
    remaining = list(range(n))
    pivots = []
    while remaining:
        p = next((i for i in remaining if s[i][i]), None)
        if p is None:
            for i in remaining:
                for j in remaining:
                    if i != j and s[i][j]:
                        c = -s[i][j]
                        row = [x + c * y for x, y in zip(t[i], t[j])]
                        w = [x.conjugate() for x in row]
                        return LdlResult(False, pivots, w, Scalar(-2 * s[i][j].abs2()))
            break
        d = s[p][p]
        if d.im != 0:
            raise ValueError("matrix is not Hermitian")
        if d.re < 0:
            return LdlResult(False, pivots + [(p, d)], [x.conjugate() for x in t[p]], d)
        pivots.append((p, d))
        remaining.remove(p)
        for r in remaining:
            f = s[r][p] / d
            if not f:
                continue
            fc = f.conjugate()
            row_r, row_p = s[r], s[p]
            for j in range(n):
                row_r[j] = row_r[j] - f * row_p[j]
            for i in range(n):
                s[i][r] = s[i][r] - fc * s[i][p]
            t[r] = [x - f * y for x, y in zip(t[r], t[p])]
    for i in remaining:
        pivots.append((i, ZERO))
    return LdlResult(True, pivots)


def quadratic_form(g, v):
    """v* G v."""
    return inner(v, matvec(g, v))


def charpoly(a):
    """Characteristic polynomial det(lambda I - A) by Faddeev-LeVerrier.

    Returns coefficients ``[1, c_{n-1}, ..., c_0]`` (highest degree first).
    """
    n = len(a)
    coeffs = [ONE]
    m = zeros(n, n)
    ident = identity(n)
    for k in range(1, n + 1):
        m = add(matmul(a, m), scale(ident, coeffs[-1]))
        am = matmul(a, m)
        trace = ZERO
        for i in range(n):
            trace = trace + am[i][i]
        coeffs.append(trace * Scalar(-1) / k)
    return coeffs


def format_charpoly(coeffs, var="λ"):
    n = len(coeffs) - 1
    parts = []
    for k, c in enumerate(coeffs):
        power = n - k
        if not c:
            continue
        mono = "" if power == 0 else (var if power == 1 else f"{var}^{power}")
        if not mono:
            term = str(c)
        elif c == 1:
            term = mono
        elif c == -1:
            term = "-" + mono
        else:
            cs = str(c) if c.is_real() else f"({c})"
            term = f"{cs}{mono}"
        parts.append(term)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out
