"""Local monodromy gauges in truncated sl2 enveloping algebras.

Operators are realized as exact matrices on a fleet of finite-dimensional
irreducible sl2 modules, with formal-parameter series truncated at a fixed
order.  The reference leading term is the triple exponential
exp(e) exp(-f) exp(e), whose matrix is exact on each module because e and f
are nilpotent; conjugation by it negates the Cartan generator.

Given two operator families of the shape (triple exponential) x (1 + higher
order weight-zero corrections) that satisfy the same twisted-coproduct
identity, the corrector at each order is forced to be a multiple of the
Cartan generator, and the solver reconstructs the unique scalar series u
with S2 = exp(u h) S1 exp(-u h).  A corrector outside the Cartan line is
reported as an error.
"""

from __future__ import annotations

from fractions import Fraction

from .bialgebra import Matrix, eye, madd, matmul, mscale, zeros
from .linalg import solve


def sl2_irrep(m: int) -> tuple[Matrix, Matrix, Matrix]:
    """The (m+1)-dimensional irreducible module: returns (e, f, h)."""
    dim = m + 1
    e = [[Fraction(0)] * dim for _ in range(dim)]
    f = [[Fraction(0)] * dim for _ in range(dim)]
    h = [[Fraction(0)] * dim for _ in range(dim)]
    for k in range(dim):
        h[k][k] = Fraction(m - 2 * k)
        if k + 1 < dim:
            f[k + 1][k] = Fraction(1)
            e[k][k + 1] = Fraction((k + 1) * (m - k))
    return tuple(map(tuple, e)), tuple(map(tuple, f)), tuple(map(tuple, h))


def mat_exp_nilpotent(a: Matrix) -> Matrix:
    """Exact exponential of a nilpotent matrix."""
    dim = len(a)
    out = eye(dim)
    term = eye(dim)
    k = 1
    while True:
        term = mscale(Fraction(1, k), matmul(term, a))
        if all(not x for row in term for x in row):
            break
        out = madd(out, term)
        k += 1
        if k > dim + 2:
            raise ArithmeticError("matrix is not nilpotent")
    return out


def triple_exponential(e: Matrix, f: Matrix) -> Matrix:
    return matmul(mat_exp_nilpotent(e),
                  matmul(mat_exp_nilpotent(mscale(-1, f)),
                         mat_exp_nilpotent(e)))


def mat_inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ArithmeticError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                fct = aug[r][col]
                aug[r] = [x - fct * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


# matrix series: list of matrices indexed by the formal-parameter power


def series_mul(a: list[Matrix], b: list[Matrix], order: int) -> list[Matrix]:
    dim = len(a[0])
    out = [zeros(dim) for _ in range(order + 1)]
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            if i + j <= order:
                out[i + j] = madd(out[i + j], matmul(ai, bj))
    return out


def series_scalar_h_exp(coeffs: list[Fraction], h: Matrix,
                        order: int) -> list[Matrix]:
    """exp(sum_k coeffs[k] t^k h) as a matrix series; coeffs[0] must be 0."""
    dim = len(h)
    arg = [zeros(dim) for _ in range(order + 1)]
    for k, c in enumerate(coeffs):
        if k == 0 and c:
            raise ValueError("exponent must start at order 1")
        if 1 <= k <= order and c:
            arg[k] = mscale(c, h)
    out = [eye(dim)] + [zeros(dim) for _ in range(order)]
    power = [eye(dim)] + [zeros(dim) for _ in range(order)]
    fact = 1
    for k in range(1, order + 1):
        power = series_mul(power, arg, order)
        fact *= k
        if all(all(not x for row in m for x in row) for m in power):
            break
        out = [madd(o, mscale(Fraction(1, fact), p))
               for o, p in zip(out, power)]
    return out


class MonodromyMismatch(ValueError):
    """The degree corrector is not proportional to the Cartan generator."""


def solve_local_monodromy(s1: dict, s2: dict, fleet: dict,
                          order: int) -> list[Fraction]:
    """Recover the scalar series u with S2 = exp(u h) S1 exp(-u h).

    ``fleet`` maps module names to (e, f, h) matrices; ``s1``/``s2`` map the
    same names to matrix series (lists of order+1 matrices).  Both inputs
    must have leading term equal to the triple exponential and weight-zero
    corrections; the identity shape makes each degree corrector a multiple
    of h, which is checked on every module simultaneously.
    """
    names = sorted(fleet)
    stilde = {}
    for name in names:
        e, f, h = fleet[name]
        st = triple_exponential(e, f)
        stilde[name] = (st, mat_inverse(st), h)
        for s in (s1, s2):
            if s[name][0] != st:
                raise ValueError("leading term is not the triple exponential")
            for k in range(1, order + 1):
                corr = matmul(stilde[name][1], s[name][k])
                if matmul(corr, h) != matmul(h, corr):
                    raise ValueError("corrections are not weight zero")
    coeffs: list[Fraction] = [Fraction(0)] * (order + 1)
    for k in range(1, order + 1):
        c_found = None
        for name in names:
            st, st_inv, h = stilde[name]
            eu = series_scalar_h_exp(coeffs, h, order)
            eu_inv = series_scalar_h_exp([-c for c in coeffs], h, order)
            s1c = series_mul(series_mul(eu, s1[name], order), eu_inv, order)
            diff = matmul(st_inv, madd(s2[name][k], mscale(-1, s1c[k])))
            # solve diff == c * h on this module
            entries = [(i, j) for i in range(len(h)) for j in range(len(h))
                       if h[i][j] or diff[i][j]]
            c_local = None
            for i, j in entries:
                if not h[i][j]:
                    if diff[i][j]:
                        raise MonodromyMismatch(
                            "inputs not monodromy pair: corrector leaves "
                            "the Cartan line")
                    continue
                ratio = diff[i][j] / h[i][j]
                if c_local is None:
                    c_local = ratio
                elif c_local != ratio:
                    raise MonodromyMismatch(
                        "inputs not monodromy pair: corrector leaves the "
                        "Cartan line")
            c_local = c_local if c_local is not None else Fraction(0)
            if c_found is None:
                c_found = c_local
            elif c_found != c_local:
                raise MonodromyMismatch(
                    "inputs not monodromy pair: fleet disagreement")
        coeffs[k] = coeffs[k] - (c_found or Fraction(0)) / 2
    for name in names:
        _, _, h = stilde[name]
        eu = series_scalar_h_exp(coeffs, h, order)
        eu_inv = series_scalar_h_exp([-c for c in coeffs], h, order)
        s1c = series_mul(series_mul(eu, s1[name], order), eu_inv, order)
        if s1c != s2[name]:
            raise AssertionError("monodromy reconstruction failed to close")
    return coeffs


def conjugate_by_scalar_h(s: dict, fleet: dict, coeffs: list[Fraction],
                          order: int) -> dict:
    """exp(u h) S exp(-u h) on every fleet module."""
    out = {}
    for name, (e, f, h) in fleet.items():
        eu = series_scalar_h_exp(coeffs, h, order)
        eu_inv = series_scalar_h_exp([-c for c in coeffs], h, order)
        out[name] = series_mul(series_mul(eu, s[name], order), eu_inv, order)
    return out


def weight_zero_correction_series(fleet: dict, corrections: list,
                                  order: int) -> dict:
    """Build S = (triple exponential) (1 + sum_k t^k w_k) from universal
    weight-zero words w_k given as lists of (coefficient, word) with words
    over the letters 'e', 'f', 'h'."""
    out = {}
    for name, (e, f, h) in fleet.items():
        dim = len(h)
        letters = {"e": e, "f": f, "h": h}
        series = [eye(dim)] + [zeros(dim) for _ in range(order)]
        for k, terms in enumerate(corrections, start=1):
            if k > order:
                break
            acc = zeros(dim)
            for coeff, word in terms:
                m = eye(dim)
                for ch in word:
                    m = matmul(m, letters[ch])
                acc = madd(acc, mscale(coeff, m))
            series[k] = acc
        st = triple_exponential(e, f)
        out[name] = [matmul(st, m) for m in series]
    return out
