"""Exact arithmetic in GF(p) and GF(p^k), plus small multivariate polynomials.

Extension fields are represented as GF(p)[X] modulo a fixed monic irreducible
polynomial.  The modulus is always the lexicographically least monic
irreducible of the requested degree, so serialized fields are reproducible.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import (
    CapExceeded,
    DivisionByZero,
    NoSuchOrder,
    NotPrime,
    SpecMismatch,
    ZeroElement,
)

DEFAULT_FIELD_CAP = 2 ** 24
# Discrete-log tables are only built for fields small enough to enumerate.
LOG_TABLE_CAP = 2 ** 21


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, as {prime: multiplicity}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient lists are low-degree-first


def _poldeg(a: Sequence[int]) -> int:
    d = len(a) - 1
    while d >= 0 and a[d] == 0:
        d -= 1
    return d


def _polmulmod(a, b, modulus, p):
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = (res[i + j] + ai * bj) % p
    k = len(modulus) - 1
    for i in range(len(res) - 1, k - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(k):
                res[i - k + j] = (res[i - k + j] - c * modulus[j]) % p
    res = res[:k]
    return res + [0] * (k - len(res))

def _polpowmod(a, e, modulus, p):
    k = len(modulus) - 1
    result = [1] + [0] * (k - 1)
    base = list(a)
    while e:
        if e & 1:
            result = _polmulmod(result, base, modulus, p)
        base = _polmulmod(base, base, modulus, p)
        e >>= 1
    return result


def _polgcd(a, b, p):
    a, b = list(a), list(b)
    while _poldeg(b) >= 0:
        da, db = _poldeg(a), _poldeg(b)
        if da < db:
            a, b = b, a
            continue
        inv = pow(b[db], p - 2, p)
        while _poldeg(a) >= db:
            da = _poldeg(a)
            c = a[da] * inv % p
            for j in range(db + 1):
                a[da - db + j] = (a[da - db + j] - c * b[j]) % p
        a, b = b, a
    return a


def _is_irreducible(modulus, p):
    """Deterministic irreducibility test for a monic polynomial over GF(p)."""
    k = len(modulus) - 1
    if k == 1:
        return True
    x = [0, 1] + [0] * (k - 2)
    t = list(x)
    for _ in range(k):
        t = _polpowmod(t, p, modulus, p)
    if t != x:
        return False
    for d in factorize(k):
        t = list(x)
        for _ in range(k // d):
            t = _polpowmod(t, p, modulus, p)
        diff = [(t[i] - x[i]) % p for i in range(k)]
        if _poldeg(_polgcd(list(modulus), diff, p)) != 0:
            return False
    return True


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree k over GF(p)."""
    if k == 1:
        return (0, 1)
    for coeffs in itertools.product(range(p), repeat=k):
        cand = list(coeffs) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------


class FieldSpec:
    """A concrete GF(p^k): prime p, degree k and the reducing polynomial.

    Instances are immutable; element arithmetic lives on :class:`FieldElement`
    with the heavy lifting done by tuple-level methods here so that hot loops
    can bypass element objects.
    """

    __slots__ = ("p", "k", "modulus", "size", "_hash", "_primitive", "_logs")

    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        self.p = p
        self.k = k
        self.modulus = tuple(int(c) % p for c in modulus[:-1]) + (1,)
        if len(self.modulus) != k + 1:
            raise SpecMismatch(f"modulus degree {len(modulus) - 1} != k={k}")
        self.size = p ** k
        self._hash = hash((p, k, self.modulus))
        self._primitive = None
        self._logs = None

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FieldSpec(GF({self.p}^{self.k}))" if self.k > 1 else f"FieldSpec(GF({self.p}))"

    # -- element construction

    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.k)

    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    def element(self, coeffs: int | Iterable[int]) -> FieldElement:
        if isinstance(coeffs, int):
            coeffs = (coeffs,) + (0,) * (self.k - 1)
        t = tuple(int(c) % self.p for c in coeffs)
        if len(t) != self.k:
            raise SpecMismatch(f"expected {self.k} coefficients, got {len(t)}")
        return FieldElement(self, t)

    def elements(self):
        """All field elements in canonical (coefficient-lexicographic) order."""
        for coeffs in itertools.product(range(self.p), repeat=self.k):
            yield FieldElement(self, coeffs)

    # -- tuple-level arithmetic

    def add_t(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub_t(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg_t(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul_t(self, a, b):
        if self._logs is not None:
            la = self._logs.log.get(a)
            if la is None:
                return (0,) * self.k
            lb = self._logs.log.get(b)
            if lb is None:
                return (0,) * self.k
            return self._logs.exp[(la + lb) % (self.size - 1)]
        return tuple(_polmulmod(a, b, self.modulus, self.p))

    def inv_t(self, a):
        if not any(a):
            raise DivisionByZero("inverse of zero")
        if self._logs is not None:
            la = self._logs.log[a]
            return self._logs.exp[(-la) % (self.size - 1)]
        # extended Euclid on polynomials
        p = self.p
        r0, r1 = list(self.modulus), list(a) + [0]
        s0, s1 = [0] * (self.k + 1), [1] + [0] * self.k
        while _poldeg(r1) > 0:
            d0, d1 = _poldeg(r0), _poldeg(r1)
            while d0 >= d1:
                c = r0[d0] * pow(r1[d1], p - 2, p) % p
                for j in range(d1 + 1):
                    r0[d0 - d1 + j] = (r0[d0 - d1 + j] - c * r1[j]) % p
                for j in range(len(s1) - (d0 - d1)):
                    s0[d0 - d1 + j] = (s0[d0 - d1 + j] - c * s1[j]) % p
                d0 = _poldeg(r0)
            r0, r1 = r1, r0
            s0, s1 = s1, s0
        c = pow(r1[0], p - 2, p)
        out = [x * c % p for x in s1[: self.k]]
        return tuple(out + [0] * (self.k - len(out)))

    def pow_t(self, a, e: int):
        n = self.size - 1
        if not any(a):
            if e == 0:
                return (1,) + (0,) * (self.k - 1)
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return a
        e %= n
        if self._logs is not None:
            la = self._logs.log[a]
            return self._logs.exp[la * e % n]
        return tuple(_polpowmod(a, e, self.modulus, self.p))

    def frob_t(self, a, i: int = 1):
        """Apply the Frobenius x -> x^p, i times (i may be negative)."""
        return self.pow_t(a, self.p ** (i % self.k))

    # -- multiplicative structure

    def order_t(self, a) -> int:
        if not any(a):
            raise ZeroElement("order of zero is undefined")
        n = self.size - 1
        o = n
        for ell in factorize(n):
            while o % ell == 0 and self.pow_t(a, o // ell) == self.one().coeffs:
                o //= ell
        return o

    def primitive_element(self) -> FieldElement:
        """Least primitive element under coefficient-vector lexicographic order."""
        if self._primitive is None:
            n = self.size - 1
            one = self.one().coeffs
            primes = list(factorize(n)) if n > 1 else []
            for coeffs in itertools.product(range(self.p), repeat=self.k):
                if not any(coeffs):
                    continue
                if all(self.pow_t(coeffs, n // ell) != one for ell in primes):
                    self._primitive = FieldElement(self, coeffs)
                    break
        return self._primitive

    def log_table(self) -> _LogTable:
        """Discrete-log tables w.r.t. the canonical primitive element."""
        if self._logs is None:
            if self.size > LOG_TABLE_CAP:
                raise CapExceeded(
                    f"field of size {self.size} exceeds log-table cap {LOG_TABLE_CAP}"
                )
            g = self.primitive_element().coeffs
            n = self.size - 1
            exp = [None] * n
            log = {}
            acc = self.one().coeffs
            for i in range(n):
                exp[i] = acc
                log[acc] = i
                acc = tuple(_polmulmod(acc, g, self.modulus, self.p))
            self._logs = _LogTable(exp, log)
        return self._logs

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, obj: dict) -> FieldSpec:
        p, k = int(obj["p"]), int(obj["k"])
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        modulus = [int(c) for c in obj["modulus"]]
        if modulus[-1] % p != 1 or not _is_irreducible([c % p for c in modulus], p):
            raise SpecMismatch("modulus is not monic irreducible over GF(p)")
        return cls(p, k, modulus)


class _LogTable:
    __slots__ = ("exp", "log")

    def __init__(self, exp, log):
        self.exp = exp
        self.log = log


class FieldElement:
    """An element of GF(p^k) as a reduced coefficient vector."""

    __slots__ = ("spec", "coeffs", "_hash")

    def __init__(self, spec: FieldSpec, coeffs: Iterable[int]):
        self.spec = spec
        self.coeffs = tuple(int(c) % spec.p for c in coeffs)
        self._hash = hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatch("operands from different fields")
            return other.coeffs
        if isinstance(other, int):
            return ((other % self.spec.p),) + (0,) * (self.spec.k - 1)
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add_t(self.coeffs, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub_t(self.coeffs, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub_t(c, self.coeffs))

    def __mul__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul_t(self.coeffs, c))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg_t(self.coeffs))

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul_t(self.coeffs, self.spec.inv_t(c)))

    def __pow__(self, e: int):
        if e < 0:
            base = self.spec.inv_t(self.coeffs)
            return FieldElement(self.spec, self.spec.pow_t(base, -e))
        return FieldElement(self.spec, self.spec.pow_t(self.coeffs, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv_t(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.coeffs == other.coeffs and self.spec == other.spec
        if isinstance(other, int):
            return self.coeffs == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.spec.k == 1:
            return f"GF{self.spec.p}({self.coeffs[0]})"
        return f"GF({self.spec.p}^{self.spec.k}){list(self.coeffs)}"


# ---------------------------------------------------------------------------
# spec-level operations


def field_create(p: int, k: int, cap: int = DEFAULT_FIELD_CAP) -> FieldSpec:
    """Build GF(p^k) with the canonical (lex-least) irreducible modulus."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise SpecMismatch("extension degree must be >= 1")
    if p ** k > cap:
        raise CapExceeded(f"{p}^{k} exceeds field cap {cap}")
    return FieldSpec(p, k, least_irreducible(p, k))


def field_arith(op: str, *operands: FieldElement) -> FieldElement:
    """Dispatch {add|mul|inv|pow} on field elements; pow takes (a, e)."""
    if op == "add":
        a, b = operands
        return a + b
    if op == "mul":
        a, b = operands
        return a * b
    if op == "inv":
        (a,) = operands
        return a.inverse()
    if op == "pow":
        a, e = operands
        return a ** e
    raise ValueError(f"unknown field operation {op!r}")


def element_order(a: FieldElement) -> int:
    """Least n >= 1 with a^n = 1."""
    return a.spec.order_t(a.coeffs)


def element_of_order(spec: FieldSpec, n: int) -> FieldElement:
    """Deterministic element of exact multiplicative order n.

    Takes the canonical primitive element to the power (p^k - 1)/n.
    """
    size = spec.size - 1
    if n < 1 or size % n != 0:
        raise NoSuchOrder(f"{n} does not divide {size}")
    g = spec.primitive_element()
    return g ** (size // n)


def frobenius_map(a: FieldElement, i: int = 1) -> FieldElement:
    """Apply the Frobenius automorphism x -> x^p of GF(p^k), i times."""
    return FieldElement(a.spec, a.spec.frob_t(a.coeffs, i))


# ---------------------------------------------------------------------------
# multivariate polynomials over a FieldSpec (bivariate is the common case)


class Poly:
    """Polynomial in `nvars` commuting indeterminates over a FieldSpec.

    Terms map exponent tuples to nonzero FieldElements; the zero polynomial
    has an empty term map.
    """

    __slots__ = ("spec", "nvars", "terms")

    def __init__(self, spec: FieldSpec, nvars: int, terms: dict | None = None):
        self.spec = spec
        self.nvars = nvars
        self.terms = {}
        if terms:
            for exps, coeff in terms.items():
                if not coeff.is_zero():
                    self.terms[tuple(exps)] = coeff

    @classmethod
    def zero(cls, spec, nvars=2):
        return cls(spec, nvars)

    @classmethod
    def constant(cls, spec, value, nvars=2):
        if isinstance(value, int):
            value = spec.element(value)
        return cls(spec, nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, spec, index, nvars=2):
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(spec, nvars, {exps: spec.one()})

    def _check(self, other):
        if self.spec != other.spec:
            raise SpecMismatch("polynomials over different fields")
        if self.nvars != other.nvars:
            raise SpecMismatch("polynomials in different numbers of variables")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (FieldElement, int)):
            return Poly.constant(self.spec, other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            acc = terms.get(exps)
            s = c if acc is None else acc + c
            if s.is_zero():
                terms.pop(exps, None)
            else:
                terms[exps] = s
        return Poly(self.spec, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.spec, self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc = terms.get(e)
                s = c if acc is None else acc + c
                if s.is_zero():
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return Poly(self.spec, self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = Poly.constant(self.spec, 1, self.nvars)
        for _ in range(e):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, values: Sequence[FieldElement]) -> FieldElement:
        """Evaluation homomorphism at a point."""
        if len(values) != self.nvars:
            raise SpecMismatch("wrong number of evaluation points")
        acc = self.spec.zero()
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term = term * v ** e
            acc = acc + term
        return acc

    def monomial_certificate(self):
        """If this is a single term c * prod(x_i^e_i), return (coeff, exps)."""
        if len(self.terms) != 1:
            return None
        ((exps, coeff),) = self.terms.items()
        return coeff, exps

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        names = "abcdefghijklmnopqrstuvwxyz"
        parts = []
        for exps in sorted(self.terms):
            coeff = self.terms[exps]
            mono = "".join(
                (names[i % 26] if e == 1 else f"{names[i % 26]}^{e}")
                for i, e in enumerate(exps)
                if e
            )
            parts.append(f"{coeff!r}*{mono}" if mono else repr(coeff))
        return "Poly(" + " + ".join(parts) + ")"


def bipoly_arith(op: str, f: Poly, g: Poly) -> Poly:
    """Dispatch {add|mul|sub} on polynomials."""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "sub":
        return f - g
    raise ValueError(f"unknown polynomial operation {op!r}")
