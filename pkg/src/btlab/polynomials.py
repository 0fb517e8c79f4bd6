"""Exact multivariate polynomials over the integers.

Built for the Witt-law recursions: coefficients are arbitrary-precision
ints, exponent vectors are packed into a single int key (a fixed bit
field per variable, wide enough that key addition never carries between
fields), and the only hot operation - multiply-accumulate - is delegated
to a kernel.  The compiled Cython kernel is used when the extension
built; set BTLAB_PURE_PYTHON=1 to force the pure-Python fallback.

Division only ever happens by powers of p and must be exact; a remainder
means the integrality guarantee of the Witt construction was violated
somewhere, which is reported as NonIntegralCoefficient rather than
silently rounded.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, Sequence

from .errors import VerificationError

if os.environ.get("BTLAB_PURE_PYTHON") == "1":
    from . import _poly_kernel_py as _kernel
else:
    try:
        from . import _poly_kernel as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _poly_kernel_py as _kernel

KERNEL_NAME: str = _kernel.KERNEL_NAME
_mul = _kernel.mul


class NonIntegralCoefficient(VerificationError):
    pass


class PolyRing:
    """Polynomial ring Z[names] with a per-variable exponent cap.

    ``max_exponent`` bounds every exponent that can appear in any value
    of this ring (callers know their degree growth); the packing width
    leaves one spare bit so sums formed inside a product cannot carry.
    """

    def __init__(self, names: Sequence[str], max_exponent: int):
        if not names:
            raise ValueError("ring needs at least one variable")
        if max_exponent < 1:
            raise ValueError("max_exponent must be >= 1")
        self.names = tuple(names)
        self.max_exponent = max_exponent
        self.bits = (2 * max_exponent).bit_length() + 1
        self._field_mask = (1 << self.bits) - 1

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)}; max_exponent={self.max_exponent})"

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.bits == other.bits
        )

    def __hash__(self):
        return hash((self.names, self.bits))

    # -- exponent packing ------------------------------------------------

    def pack(self, exponents: Sequence[int]) -> int:
        if len(exponents) != len(self.names):
            raise ValueError(f"expected {len(self.names)} exponents, got {len(exponents)}")
        key = 0
        for i, e in enumerate(exponents):
            if not 0 <= e <= self.max_exponent:
                raise ValueError(f"exponent {e} outside 0..{self.max_exponent}")
            key |= e << (self.bits * i)
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        return tuple(
            (key >> (self.bits * i)) & self._field_mask for i in range(len(self.names))
        )

    # -- element constructors --------------------------------------------

    def zero(self) -> "Poly":
        return Poly(self, {})

    def constant(self, c: int) -> "Poly":
        return Poly(self, {0: c} if c else {})

    def var(self, i: int, exponent: int = 1, coeff: int = 1) -> "Poly":
        if coeff == 0:
            return self.zero()
        key = self.pack(tuple(exponent if j == i else 0 for j in range(len(self.names))))
        return Poly(self, {key: coeff})

    def from_terms(self, terms: Iterable[tuple[Sequence[int], int]]) -> "Poly":
        data: dict[int, int] = {}
        for exponents, coeff in terms:
            key = self.pack(exponents)
            c = data.get(key, 0) + coeff
            if c:
                data[key] = c
            else:
                data.pop(key, None)
        return Poly(self, data)


class Poly:
    """Immutable polynomial; don't mutate ``terms`` after construction."""

    __slots__ = ("ring", "terms", "_eval_cache")

    def __init__(self, ring: PolyRing, terms: dict[int, int]):
        self.ring = ring
        self.terms = terms
        self._eval_cache: dict[int, list[tuple[tuple[int, ...], int]]] = {}

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return Poly(self.ring, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) - c
            if s:
                out[k] = s
            else:
                del out[k]
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.ring, _mul(self.terms, other.terms))

    def scale(self, c: int) -> "Poly":
        if c == 0:
            return self.ring.zero()
        return Poly(self.ring, {k: c * v for k, v in self.terms.items()})

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divexact(self, d: int) -> "Poly":
        """Divide every coefficient by d, failing loudly on a remainder."""
        out = {}
        for k, c in self.terms.items():
            q, r = divmod(c, d)
            if r:
                mono = self.render_monomial(k)
                raise NonIntegralCoefficient(
                    f"coefficient {c} of {mono} is not divisible by {d}"
                )
            out[k] = q
        return Poly(self.ring, out)

    # -- queries ------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def iter_terms(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """(exponent vector, coefficient) pairs in canonical order."""
        for key in self._sorted_keys():
            yield self.ring.unpack(key), self.terms[key]

    def _sorted_keys(self) -> list[int]:
        # total degree ascending, then exponent vector descending lex
        def order(key: int):
            exps = self.ring.unpack(key)
            return (sum(exps), tuple(-e for e in exps))

        return sorted(self.terms, key=order)

    def eval_mod(self, values: Sequence[int], p: int) -> int:
        """Evaluate at ``values`` (one per variable) in Z/p."""
        cached = self._eval_cache.get(p)
        if cached is None:
            cached = [(self.ring.unpack(k), c % p) for k, c in self.terms.items()]
            self._eval_cache[p] = cached
        total = 0
        for exps, c in cached:
            if c == 0:
                continue
            term = c
            for v, e in zip(values, exps):
                if e:
                    term = term * pow(v, e, p) % p
            total += term
        return total % p

    # -- rendering ------------------------------------------------------------

    def render_monomial(self, key: int) -> str:
        parts = []
        for name, e in zip(self.ring.names, self.ring.unpack(key)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def render(self) -> str:
        """Canonical text form, e.g. ``x_1 + y_1 - x_0*y_0``."""
        if not self.terms:
            return "0"
        pieces = []
        for key in self._sorted_keys():
            c = self.terms[key]
            mono = self.render_monomial(key)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = body if sign == "+" else f"-{body}"
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Poly({self.render()})"
