"""Witt vectors: ghost components, the integral ring laws, and W_n(F_p).

The ghost (phantom) polynomials

    w_l = x_0^(p^l) + p*x_1^(p^(l-1)) + ... + p^l*x_l

turn coordinatewise ring operations into polynomial identities: the sum
law S, product law P and negation law I are the unique solutions of

    w_l(S) = w_l(x) + w_l(y),   w_l(P) = w_l(x) * w_l(y),
    w_l(I) = -w_l(x)

and have integer coefficients even though each recursion step divides by
p^l.  We solve the recursions with exact integer arithmetic and assert
the divisibility instead of assuming it.

Vector arithmetic is over F_p (truncated length n): evaluate the laws
componentwise.  Frobenius, Verschiebung, multiplication by p and the
Teichmueller lift act by the componentwise rules

    F(x_0, x_1, ...) = (x_0^p, x_1^p, ...)
    V(x_0, x_1, ...) = (0, x_0, x_1, ...)      (top component dropped)
    p(x_0, x_1, ...) = (0, x_0^p, x_1^p, ...)  (top component dropped)
    tau(a) = (a, 0, ..., 0)

and W_n(F_p) is isomorphic to Z/p^n, which ring_iso_table verifies by
building the full addition and multiplication tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError
from .polynomials import NonIntegralCoefficient, Poly, PolyRing

__all__ = [
    "WittVec",
    "WittPoly",
    "NotPrime",
    "LengthMismatch",
    "PrimeMismatch",
    "TableTooLarge",
    "NonIntegralCoefficient",
    "ghost_polynomial",
    "ghost_apply",
    "sum_polynomials",
    "product_polynomials",
    "negation_polynomials",
    "witt_add",
    "witt_mul",
    "witt_neg",
    "frobenius",
    "verschiebung",
    "p_multiple",
    "teichmuller",
    "ring_iso_table",
    "RingIsoReport",
]

WittPoly = Poly


class NotPrime(InputError):
    pass


class LengthMismatch(InputError):
    pass


class PrimeMismatch(InputError):
    pass


class TableTooLarge(InputError):
    pass


def _check_prime(p: int) -> None:
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise NotPrime(f"{p} is not prime")


@lru_cache(maxsize=None)
def _xy_ring(p: int, n: int) -> PolyRing:
    names = [f"x_{i}" for i in range(n)] + [f"y_{i}" for i in range(n)]
    return PolyRing(names, max_exponent=p ** max(n - 1, 1))


@lru_cache(maxsize=None)
def _x_ring(p: int, n: int) -> PolyRing:
    return PolyRing([f"x_{i}" for i in range(n)], max_exponent=p ** max(n - 1, 1))


def ghost_polynomial(p: int, l: int) -> Poly:
    """The l-th ghost polynomial in variables x_0..x_l."""
    _check_prime(p)
    if l < 0:
        raise ValueError("ghost index must be >= 0")
    ring = PolyRing([f"x_{i}" for i in range(l + 1)], max_exponent=p ** max(l, 1))
    acc = ring.zero()
    for i in range(l + 1):
        acc = acc + ring.var(i, exponent=p ** (l - i), coeff=p**i)
    return acc


def ghost_apply(polys: tuple[Poly, ...], p: int, l: int) -> Poly:
    """w_l evaluated on a vector of polynomials: sum p^i * polys[i]^(p^(l-i))."""
    acc = polys[0].ring.zero()
    for i in range(l + 1):
        acc = acc + (polys[i] ** (p ** (l - i))).scale(p**i)
    return acc


def _ghost_of_vars(ring: PolyRing, p: int, l: int, offset: int) -> Poly:
    acc = ring.zero()
    for i in range(l + 1):
        acc = acc + ring.var(offset + i, exponent=p ** (l - i), coeff=p**i)
    return acc


def _solve_law(p: int, n: int, ring: PolyRing, rhs_for_level) -> tuple[Poly, ...]:
    """Solve w_l(result) = rhs(l) for l = 0..n-1, asserting integrality."""
    out: list[Poly] = []
    for l in range(n):
        rhs = rhs_for_level(l)
        for i in range(l):
            rhs = rhs - (out[i] ** (p ** (l - i))).scale(p**i)
        out.append(rhs.divexact(p**l))
    return tuple(out)


@lru_cache(maxsize=None)
def sum_polynomials(p: int, n: int) -> tuple[Poly, ...]:
    """S_0..S_{n-1} with w_l(S) = w_l(x) + w_l(y)."""
    _check_prime(p)
    if n < 1:
        raise ValueError("length must be >= 1")
    ring = _xy_ring(p, n)
    return _solve_law(
        p, n, ring,
        lambda l: _ghost_of_vars(ring, p, l, 0) + _ghost_of_vars(ring, p, l, n),
    )


@lru_cache(maxsize=None)
def product_polynomials(p: int, n: int) -> tuple[Poly, ...]:
    """P_0..P_{n-1} with w_l(P) = w_l(x) * w_l(y)."""
    _check_prime(p)
    if n < 1:
        raise ValueError("length must be >= 1")
    ring = _xy_ring(p, n)
    return _solve_law(
        p, n, ring,
        lambda l: _ghost_of_vars(ring, p, l, 0) * _ghost_of_vars(ring, p, l, n),
    )


@lru_cache(maxsize=None)
def negation_polynomials(p: int, n: int) -> tuple[Poly, ...]:
    """I_0..I_{n-1} with w_l(I) = -w_l(x); for odd p this is just -x_l."""
    _check_prime(p)
    if n < 1:
        raise ValueError("length must be >= 1")
    ring = _x_ring(p, n)
    return _solve_law(p, n, ring, lambda l: -_ghost_of_vars(ring, p, l, 0))


# -- truncated Witt vectors over F_p ------------------------------------------


@dataclass(frozen=True)
class WittVec:
    p: int
    components: tuple[int, ...]

    def __post_init__(self):
        _check_prime(self.p)
        if len(self.components) < 1:
            raise LengthMismatch("Witt vector needs at least one component")
        object.__setattr__(
            self, "components", tuple(a % self.p for a in self.components)
        )

    @property
    def n(self) -> int:
        return len(self.components)

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.components) + ")"


def _match(x: WittVec, y: WittVec) -> None:
    if x.p != y.p:
        raise PrimeMismatch(f"p={x.p} vs p={y.p}")
    if x.n != y.n:
        raise LengthMismatch(f"length {x.n} vs {y.n}")


def witt_add(x: WittVec, y: WittVec) -> WittVec:
    _match(x, y)
    laws = sum_polynomials(x.p, x.n)
    values = x.components + y.components
    return WittVec(x.p, tuple(s.eval_mod(values, x.p) for s in laws))


def witt_mul(x: WittVec, y: WittVec) -> WittVec:
    _match(x, y)
    laws = product_polynomials(x.p, x.n)
    values = x.components + y.components
    return WittVec(x.p, tuple(s.eval_mod(values, x.p) for s in laws))


def witt_neg(x: WittVec) -> WittVec:
    laws = negation_polynomials(x.p, x.n)
    return WittVec(x.p, tuple(s.eval_mod(x.components, x.p) for s in laws))


def frobenius(x: WittVec) -> WittVec:
    return WittVec(x.p, tuple(pow(a, x.p, x.p) for a in x.components))


def verschiebung(x: WittVec) -> WittVec:
    return WittVec(x.p, (0,) + x.components[:-1])


def p_multiple(x: WittVec) -> WittVec:
    return WittVec(x.p, (0,) + tuple(pow(a, x.p, x.p) for a in x.components[:-1]))


def teichmuller(a: int, p: int, n: int) -> WittVec:
    return WittVec(p, (a,) + (0,) * (n - 1))


@dataclass(frozen=True)
class RingIsoReport:
    p: int
    n: int
    size: int
    passed: bool
    failure: str | None = None


def ring_iso_table(p: int, n: int) -> RingIsoReport:
    """Check W_n(F_p) = Z/p^n via the full addition/multiplication tables.

    The witness map sends m to the m-fold Witt sum of tau(1); it must be
    a bijection onto all p^n vectors and transport both ring tables.
    """
    _check_prime(p)
    size = p**n
    if size > 100_000:
        raise TableTooLarge(f"p^n = {size} exceeds the enumeration guard")
    one = teichmuller(1, p, n)
    vec_of = [WittVec(p, (0,) * n)]
    for _ in range(size - 1):
        vec_of.append(witt_add(vec_of[-1], one))
    if len(set(vec_of)) != size:
        return RingIsoReport(p, n, size, False, "m -> m*tau(1) is not injective")
    for a in range(size):
        for b in range(size):
            if witt_add(vec_of[a], vec_of[b]) != vec_of[(a + b) % size]:
                return RingIsoReport(p, n, size, False, f"addition table fails at ({a},{b})")
            if witt_mul(vec_of[a], vec_of[b]) != vec_of[a * b % size]:
                return RingIsoReport(
                    p, n, size, False, f"multiplication table fails at ({a},{b})"
                )
    return RingIsoReport(p, n, size, True)
