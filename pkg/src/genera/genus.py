"""Elliptic genera of almost-complex manifolds from Chern numbers.

The genus of M (complex dimension k) is the integral over M of a product of
one universal factor per Chern root x_j:

    F(x) = y^{1/2} * x/(1-e^{-x}) * (1 - y^{-1} e^{-x})
           * prod_{m>=1} (1-q^m y e^x)(1-q^m y^{-1} e^{-x})
                       / ((1-q^m e^x)(1-q^m e^{-x}))

F(0) equals the weight -2 Jacobi generator a, which is not a unit of the
Laurent ring (its q^0 layer has two monomials), so log(F/F(0)) does not
exist there. The power-sum pipeline below therefore runs in the localization
at D = F(0)^[all variables]: every intermediate coefficient is a pair
(numerator series, power of D), no division ever happens, and the final
multiplication by D^k always clears the denominator because the accumulated
power never exceeds the partition weight.

Pipeline: log(prod_j F(x_j)/D) = sum_d g_d p_d over power sums p_d of the
Chern roots; exponentiate via the closed per-partition formula
coeff of p_lambda = prod_d g_d^{m_d} / m_d!; convert p_lambda to elementary
symmetric polynomials by Newton's identities with e_j = 0 for j > k (there
are exactly k Chern roots); pair e-monomials with the Chern numbers.

With n elliptic variables the same factor appears once per variable and the
result has index2 = dimc in every variable (for n = 1 this is the usual
statement that the genus of a k-fold has index k/2).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from genera.jacobi import JacobiForm, generator_a
from genera.series import LaurentSeries


class ChernDataError(ValueError):
    pass


def partition_key(parts: tuple[int, ...]) -> str:
    return ",".join(str(p) for p in parts)


def parse_partition_key(key: str) -> tuple[int, ...]:
    if key == "":
        return ()
    parts = tuple(int(p) for p in key.split(","))
    if list(parts) != sorted(parts, reverse=True) or any(p < 1 for p in parts):
        raise ChernDataError(f"bad partition key {key!r}: need descending positive parts")
    return parts


def partitions(n: int, max_part: int | None = None):
    """Partitions of n with parts <= max_part, descending tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class ChernData:
    """Chern numbers of a (stably almost) complex manifold.

    numbers maps partitions of dimc (descending tuples) to integers; the
    entry for (l1, ..., lr) is the integral of c_{l1} ... c_{lr}.
    """
    label: str
    dimc: int
    numbers: dict

    def __post_init__(self):
        if self.dimc < 0:
            raise ChernDataError("dimc must be >= 0")
        for parts, val in self.numbers.items():
            if sum(parts) != self.dimc:
                raise ChernDataError(
                    f"{self.label}: partition {parts} does not sum to dimc={self.dimc}")
            if not isinstance(val, int):
                raise ChernDataError(f"{self.label}: number for {parts} is not an integer")

    def number(self, parts: tuple[int, ...]) -> int:
        if parts not in self.numbers:
            raise ChernDataError(
                f"{self.label}: missing Chern number for partition {partition_key(parts) or '()'}")
        return self.numbers[parts]

    def to_obj(self) -> dict:
        return {
            "label": self.label,
            "dimc": self.dimc,
            "numbers": {partition_key(p): v for p, v in sorted(self.numbers.items())},
        }

    @classmethod
    def from_obj(cls, obj) -> "ChernData":
        numbers = {parse_partition_key(k): int(v)
                   for k, v in obj.get("numbers", {}).items()}
        if "dimc" not in obj:
            raise ChernDataError("missing dimc")
        return cls(str(obj.get("label", "unnamed")), int(obj["dimc"]), numbers)

    @classmethod
    def load(cls, path) -> "ChernData":
        with open(path) as fh:
            return cls.from_obj(json.load(fh))


def euler_number(M: ChernData) -> int:
    """The top Chern number: integral of c_dimc (1 for a point)."""
    return M.number((M.dimc,) if M.dimc else ())


def chern_product(M: ChernData, N: ChernData) -> ChernData:
    """Chern numbers of the product manifold M x N.

    Uses c_t(M x N) = c_t(M) c_t(N): each part l of a partition of
    dimc(M) + dimc(N) splits as i + j over the two factors, and only splits
    with total i-degree dimc(M) survive integration.
    """
    k = M.dimc + N.dimc
    out: dict = {}
    for lam in partitions(k):
        total = 0
        # distribute each part between the factors
        def walk(idx, left, right):
            nonlocal total
            if idx == len(lam):
                if sum(left) == M.dimc and sum(right) == N.dimc:
                    mu = tuple(sorted((p for p in left if p), reverse=True))
                    nu = tuple(sorted((p for p in right if p), reverse=True))
                    total += M.number(mu) * N.number(nu)
                return
            for i in range(0, lam[idx] + 1):
                walk(idx + 1, left + [i], right + [lam[idx] - i])
        walk(0, [], [])
        out[lam] = total
    return ChernData(f"{M.label}x{N.label}", k, out)


# ----------------------------------------------------------------------
# the universal factor as a polynomial in one Chern root


def _todd_coeffs(xdeg: int) -> list[Fraction]:
    """Taylor coefficients of x/(1 - e^{-x}) up to x^xdeg."""
    # invert u(x) = (1 - e^{-x})/x = sum (-1)^d x^d/(d+1)!
    u = []
    fact = 1
    for d in range(xdeg + 1):
        fact *= d + 1
        u.append(Fraction((-1) ** d, fact))
    t = [Fraction(1)]
    for d in range(1, xdeg + 1):
        t.append(-sum(u[j] * t[d - j] for j in range(1, d + 1)))
    return t


def _pmul(A: list, B: list, xdeg: int) -> list:
    zero = A[0] * 0
    out = []
    for d in range(xdeg + 1):
        acc = zero
        for i in range(max(0, d - len(B) + 1), min(d, len(A) - 1) + 1):
            acc = acc + A[i] * B[d - i]
        out.append(acc)
    return out


def factor_polynomial(qmax: int, xdeg: int, nvars: int = 1, slot: int = 0) -> list[LaurentSeries]:
    """Coefficients [F_0, ..., F_xdeg] of the universal factor in one root.

    The elliptic variable sits in the given slot of an nvars-variable ring.
    F_0 is exactly the Jacobi generator a in that slot.
    """
    if nvars < 1 or not 0 <= slot < nvars:
        raise ValueError("need nvars >= 1 and a valid slot")
    one = LaurentSeries.one(nvars, qmax)

    def ymon(r, n=0, c=1):
        R = [0] * nvars
        R[slot] = r
        return LaurentSeries.monomial(nvars, qmax, n, tuple(R), c)

    def scalar_poly(coeffs):
        return [one * c for c in coeffs]

    # Todd factor and the zero factor (1 - y^{-1} e^{-x})
    todd = scalar_poly(_todd_coeffs(xdeg))
    fact = 1
    zero_factor = [one - ymon(-2)]
    for d in range(1, xdeg + 1):
        fact *= d
        zero_factor.append(ymon(-2, c=Fraction(-((-1) ** d), fact)))

    F = _pmul(todd, zero_factor, xdeg)

    facts = [1]
    for d in range(1, xdeg + 1):
        facts.append(facts[-1] * d)

    for m in range(1, qmax + 1):
        # 1 - q^m y e^x  and  1 - q^m y^{-1} e^{-x}
        f1 = [one - ymon(2, n=m)]
        f2 = [one - ymon(-2, n=m)]
        for d in range(1, xdeg + 1):
            f1.append(ymon(2, n=m, c=Fraction(-1, facts[d])))
            f2.append(ymon(-2, n=m, c=Fraction(-((-1) ** d), facts[d])))
        F = _pmul(F, f1, xdeg)
        F = _pmul(F, f2, xdeg)
        # (1 - q^m e^{+-x})^{-1} = sum_j q^{mj} e^{+-jx}, truncating at qmax
        g1 = [LaurentSeries.zero(nvars, qmax) for _ in range(xdeg + 1)]
        g2 = [LaurentSeries.zero(nvars, qmax) for _ in range(xdeg + 1)]
        for j in range(0, qmax // m + 1):
            for d in range(xdeg + 1):
                c = Fraction(j ** d, facts[d])
                g1[d] = g1[d] + ymon(0, n=m * j, c=c)
                g2[d] = g2[d] + ymon(0, n=m * j, c=c * (-1) ** d)
        F = _pmul(F, g1, xdeg)
        F = _pmul(F, g2, xdeg)

    return [ymon(1) * Fd for Fd in F]


# ----------------------------------------------------------------------
# localized power-sum pipeline


def _newton_p_in_e(dmax: int, emax: int) -> list[dict]:
    """p_d as integer polynomials in e-partitions, with e_j = 0 for j > emax.

    Returns a list where entry d maps partition tuples (the e-monomial
    e_mu = prod e_{mu_i}) to integer coefficients. Entry 0 is unused.
    """
    p: list[dict] = [dict() for _ in range(dmax + 1)]
    for d in range(1, dmax + 1):
        acc: dict = {}
        for i in range(1, d):
            if i > emax:
                continue
            for mu, c in p[d - i].items():
                key = tuple(sorted(mu + (i,), reverse=True))
                acc[key] = acc.get(key, 0) + (-1) ** (i - 1) * c
        if d <= emax:
            key = (d,)
            acc[key] = acc.get(key, 0) + (-1) ** (d - 1) * d
        p[d] = {mu: c for mu, c in acc.items() if c}
    return p


def _emul(P: dict, Q: dict) -> dict:
    out: dict = {}
    for mu, c in P.items():
        for nu, e in Q.items():
            key = tuple(sorted(mu + nu, reverse=True))
            out[key] = out.get(key, 0) + c * e
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class SymmetricExpansion:
    """The integrand prod_j F(x_j) expanded over elementary symmetric monomials.

    by_degree[d] maps partitions mu of d to the Laurent-series coefficient of
    e_mu in the total-degree-d part. Pairing by_degree[dimc] with Chern
    numbers gives the genus.
    """
    dimc: int
    nvars: int
    qmax: int
    by_degree: tuple


class _Loc:
    """Element num * D^{-pow} of the localization at D. Minimal arithmetic."""
    __slots__ = ("num", "pow")

    def __init__(self, num: LaurentSeries, pw: int = 0):
        self.num = num
        self.pow = pw

    def add(self, other: "_Loc", D: LaurentSeries) -> "_Loc":
        p = max(self.pow, other.pow)
        a = self.num * (D ** (p - self.pow)) if p > self.pow else self.num
        b = other.num * (D ** (p - other.pow)) if p > other.pow else other.num
        return _Loc(a + b, p)

    def mul(self, other: "_Loc") -> "_Loc":
        return _Loc(self.num * other.num, self.pow + other.pow)

    def scale(self, c) -> "_Loc":
        return _Loc(self.num * c, self.pow)

    def clear(self, D: LaurentSeries, total: int) -> LaurentSeries:
        """num * D^{total - pow}; total must dominate the denominator power."""
        if self.pow > total:
            raise AssertionError("denominator power exceeded the partition weight")
        return self.num * (D ** (total - self.pow))


def _expand_product(phi: list[LaurentSeries], dimc: int, nvars: int, qmax: int) -> SymmetricExpansion:
    """Symmetric expansion of prod_{j=1}^{dimc} Phi(x_j) for one-root poly Phi."""
    D = phi[0]
    zero = LaurentSeries.zero(nvars, qmax)
    k = dimc

    # v = Phi/D - 1 in the localization; v_0 = 0
    v = [_Loc(zero, 0)] + [_Loc(phi[d], 1) for d in range(1, k + 1)]

    # g = log(1 + v): accumulate (-1)^{i+1} v^i / i degree by degree;
    # g_d picks up denominator power at most d since v starts in degree 1
    g = [_Loc(zero, 0) for _ in range(k + 1)]
    cur = list(v)  # v^1
    for i in range(1, k + 1):
        coef = Fraction((-1) ** (i + 1), i)
        for d in range(i, k + 1):
            g[d] = g[d].add(cur[d].scale(coef), D)
        if i < k:
            nxt = [_Loc(zero, 0) for _ in range(k + 1)]
            for d1 in range(i, k + 1):
                for d2 in range(1, k + 1 - d1):
                    nxt[d1 + d2] = nxt[d1 + d2].add(cur[d1].mul(v[d2]), D)
            cur = nxt

    p_in_e = _newton_p_in_e(k, k)

    by_degree = []
    for d in range(k + 1):
        layer: dict = {}
        for lam in partitions(d):
            # coefficient of p_lambda in exp(sum g_d p_d)
            mult: dict = {}
            for part in lam:
                mult[part] = mult.get(part, 0) + 1
            A = _Loc(LaurentSeries.one(nvars, qmax), 0)
            denom = 1
            for part, m in mult.items():
                for _ in range(m):
                    A = A.mul(g[part])
                for j in range(1, m + 1):
                    denom *= j
            A = A.scale(Fraction(1, denom))
            # convert p_lambda to the e-basis
            e_poly = {(): 1}
            for part in lam:
                e_poly = _emul(e_poly, p_in_e[part])
            for mu, c in e_poly.items():
                prev = layer.get(mu, _Loc(zero, 0))
                layer[mu] = prev.add(A.scale(c), D)
        cleared = {mu: val.clear(D, k) for mu, val in layer.items()}
        by_degree.append({mu: s for mu, s in cleared.items() if not s.is_zero})
    return SymmetricExpansion(k, nvars, qmax, tuple(by_degree))


@lru_cache(maxsize=None)
def integrand_expansion(dimc: int, nvars: int = 1, qmax: int = 10) -> SymmetricExpansion:
    """Universal genus integrand for dimension dimc, in the Chern basis."""
    xdeg = dimc
    phi = factor_polynomial(qmax, xdeg, nvars=nvars, slot=0)
    for i in range(1, nvars):
        phi = _pmul(phi, factor_polynomial(qmax, xdeg, nvars=nvars, slot=i), xdeg)
    return _expand_product(phi, dimc, nvars, qmax)


def elliptic_genus(M: ChernData, nvars: int = 1, qmax: int = 10) -> JacobiForm:
    """The elliptic genus of M as a weak Jacobi form.

    Weight 0; index2 = dimc in each of the nvars elliptic variables.
    Raises ChernDataError if a needed Chern number is absent.
    """
    if M.dimc == 0:
        s = LaurentSeries.const(max(nvars, 1), qmax, M.number(()))
        return JacobiForm(0, 0, s)
    exp = integrand_expansion(M.dimc, nvars, qmax)
    top = exp.by_degree[M.dimc]
    s = LaurentSeries.zero(nvars, qmax)
    for mu, series in sorted(top.items()):
        s = s + series * M.number(mu)
    return JacobiForm(0, M.dimc, s)
