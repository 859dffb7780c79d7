"""Exact arithmetic over a small tower of coefficient rings.

Supported rings: the integers ZZ, the rationals QQ, prime fields
Fp(p), and multivariate polynomial rings over any of those three.
Polynomial rings never nest; a tower such as A[u][t] is expressed as a
univariate polynomial (see unipoly) whose coefficients live in the flat
ring A[u].

Raw element values by ring:

    ZZ        Python int (arbitrary precision)
    QQ        fractions.Fraction (reduced, positive denominator)
    Fp(p)     int residue in [0, p)
    R[u,...]  MultiPoly (sparse exponent-vector map, no zero terms)

Everything is immutable and every operation is a pure function, so
values can be shared freely between threads.
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    ExactDivisionError,
    ParameterError,
    RingMismatchError,
    UnsupportedRingError,
)

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

_MAX_PRIME = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Ring:
    """Descriptor of a coefficient ring; subclasses implement raw-value ops.

    The raw-value protocol (underscore methods) operates on the plain
    Python values listed in the module docstring.  User code works with
    RingElement wrappers obtained from element()/zero/one/from_int.
    """

    def element(self, value) -> "RingElement":
        return RingElement(self, self.coerce(value))

    @property
    def zero(self) -> "RingElement":
        return self.element(0)

    @property
    def one(self) -> "RingElement":
        return self.element(1)

    def from_int(self, n: int) -> "RingElement":
        return self.element(n)

    # raw-value protocol -------------------------------------------------

    def coerce(self, value):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _sub(self, a, b):
        return self._add(a, self._neg(b))

    def _mul(self, a, b):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError

    def _is_one(self, a) -> bool:
        raise NotImplementedError

    def _is_unit(self, a) -> bool:
        raise NotImplementedError

    def _is_nilpotent(self, a) -> bool:
        # every supported ring is an integral domain
        return self._is_zero(a)

    def _exact_div(self, a, b):
        """a / b when b divides a exactly; ExactDivisionError otherwise."""
        raise NotImplementedError

    def _format(self, a) -> str:
        raise NotImplementedError

    def _sign_mag(self, a):
        """Split a into (sign, magnitude string, atomic) for term printing.

        atomic means the magnitude can be juxtaposed with '*' without
        parentheses.  Residues and multi-term polynomials have sign +1.
        """
        raise NotImplementedError


class IntegerRing(Ring):
    def coerce(self, value):
        if isinstance(value, RingElement):
            if value.ring != self:
                raise RingMismatchError(f"cannot coerce element of {value.ring} into ZZ")
            return value.value
        if isinstance(value, bool):
            raise ParameterError("booleans are not ring values")
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        raise RingMismatchError(f"cannot coerce {value!r} into ZZ")

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _is_zero(self, a):
        return a == 0

    def _is_one(self, a):
        return a == 1

    def _is_unit(self, a):
        return a in (1, -1)

    def _exact_div(self, a, b):
        if b == 0:
            raise ExactDivisionError("division by zero in ZZ")
        q, r = divmod(a, b)
        if r:
            raise ExactDivisionError(f"{a} is not divisible by {b} in ZZ")
        return q

    def _format(self, a):
        return str(a)

    def _sign_mag(self, a):
        return (1 if a >= 0 else -1), str(abs(a)), True

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")

    def __str__(self):
        return "ZZ"

    __repr__ = __str__


class RationalRing(Ring):
    def coerce(self, value):
        if isinstance(value, RingElement):
            if value.ring != self:
                raise RingMismatchError(f"cannot coerce element of {value.ring} into QQ")
            return value.value
        if isinstance(value, bool):
            raise ParameterError("booleans are not ring values")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise RingMismatchError(f"cannot coerce {value!r} into QQ")

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _is_zero(self, a):
        return a == 0

    def _is_one(self, a):
        return a == 1

    def _is_unit(self, a):
        return a != 0

    def _exact_div(self, a, b):
        if b == 0:
            raise ExactDivisionError("division by zero in QQ")
        return a / b

    def _format(self, a):
        return str(a)

    def _sign_mag(self, a):
        return (1 if a >= 0 else -1), str(abs(a)), True

    def __eq__(self, other):
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash("QQ")

    def __str__(self):
        return "QQ"

    __repr__ = __str__


class PrimeField(Ring):
    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise ParameterError("field characteristic must be an integer")
        if p >= _MAX_PRIME:
            raise ParameterError(f"prime {p} exceeds the supported bound 2^31")
        if not _is_prime(p):
            raise ParameterError(f"{p} is not prime")
        self.p = p

    def coerce(self, value):
        if isinstance(value, RingElement):
            if value.ring != self:
                raise RingMismatchError(f"cannot coerce element of {value.ring} into {self}")
            return value.value
        if isinstance(value, bool):
            raise ParameterError("booleans are not ring values")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ParameterError(f"denominator {value.denominator} is not invertible mod {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        raise RingMismatchError(f"cannot coerce {value!r} into {self}")

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _is_zero(self, a):
        return a == 0

    def _is_one(self, a):
        return a == 1

    def _is_unit(self, a):
        return a != 0

    def _exact_div(self, a, b):
        if b == 0:
            raise ExactDivisionError(f"division by zero in {self}")
        return a * pow(b, -1, self.p) % self.p

    def _format(self, a):
        return str(a)

    def _sign_mag(self, a):
        return 1, str(a), True

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __str__(self):
        return f"Fp({self.p})"

    __repr__ = __str__


ZZ = IntegerRing()
QQ = RationalRing()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


class PolynomialRing(Ring):
    """Sparse multivariate polynomials over ZZ, QQ, or a prime field."""

    def __init__(self, base: Ring, names: Iterable[str]):
        if isinstance(base, PolynomialRing):
            raise UnsupportedRingError(
                "polynomial rings do not nest; flatten the variables instead"
            )
        if not isinstance(base, Ring):
            raise UnsupportedRingError(f"unsupported base ring {base!r}")
        names = tuple(names)
        if not names:
            raise ParameterError("a polynomial ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ParameterError(f"duplicate variable names in {names}")
        for name in names:
            if not _NAME_RE.match(name):
                raise ParameterError(f"bad variable name {name!r}")
        self.base = base
        self.names = names

    def variable(self, name: str) -> "RingElement":
        if name not in self.names:
            raise ParameterError(
                f"{self} has no variable {name!r}; its variables are {', '.join(self.names)}"
            )
        i = self.names.index(name)
        exps = tuple(1 if k == i else 0 for k in range(len(self.names)))
        return RingElement(self, MultiPoly(self, {exps: self.base.coerce(1)}))

    def variables(self) -> tuple["RingElement", ...]:
        return tuple(self.variable(n) for n in self.names)

    def coerce(self, value):
        if isinstance(value, RingElement):
            if value.ring == self:
                return value.value
            if value.ring == self.base:
                return self._const(value.value)
            raise RingMismatchError(f"cannot coerce element of {value.ring} into {self}")
        if isinstance(value, MultiPoly):
            if value.ring != self:
                raise RingMismatchError(f"cannot coerce polynomial over {value.ring} into {self}")
            return value
        return self._const(self.base.coerce(value))

    def _const(self, raw_base) -> "MultiPoly":
        if self.base._is_zero(raw_base):
            return MultiPoly(self, {})
        zero_exps = (0,) * len(self.names)
        return MultiPoly(self, {zero_exps: raw_base})

    def _add(self, a, b):
        return a._add(b)

    def _neg(self, a):
        return a._neg()

    def _mul(self, a, b):
        return a._mul(b)

    def _is_zero(self, a):
        return not a.terms

    def _is_one(self, a):
        c = a.constant_raw()
        return c is not None and self.base._is_one(c)

    def _is_unit(self, a):
        c = a.constant_raw()
        return c is not None and not self.base._is_zero(c) and self.base._is_unit(c)

    def _exact_div(self, a, b):
        return a.exact_div(b)

    def _format(self, a):
        return str(a)

    def _sign_mag(self, a):
        if len(a.terms) == 1:
            (exps, coeff), = a.terms.items()
            sign, cmag, _ = self.base._sign_mag(coeff)
            mono = _monomial_str(self.names, exps)
            if not mono:
                return sign, cmag, True
            if self.base._is_one(coeff) or (sign < 0 and self.base._is_one(self.base._neg(coeff))):
                return sign, mono, True
            return sign, f"{cmag}*{mono}", True
        return 1, f"({a})", False

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and other.base == self.base
            and other.names == self.names
        )

    def __hash__(self):
        return hash(("Poly", self.base, self.names))

    def __str__(self):
        return f"{self.base}[{','.join(self.names)}]"

    __repr__ = __str__


def polynomial_ring(base: Ring, names: Iterable[str]) -> PolynomialRing:
    return PolynomialRing(base, names)


def _grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


def _monomial_str(names: tuple[str, ...], exps: tuple[int, ...]) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class MultiPoly:
    """Sparse multivariate polynomial; raw value type of PolynomialRing.

    Invariant: terms maps full-length exponent vectors to nonzero base
    coefficients.  Term order for printing and leading-term extraction
    is graded lexicographic on the declared variable order.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # construction helpers ------------------------------------------------

    def _new(self, terms: dict) -> "MultiPoly":
        return MultiPoly(self.ring, terms)

    # queries --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_raw(self):
        """Base coefficient if the polynomial is constant, else None."""
        if not self.terms:
            return self.ring.base.coerce(0)
        if len(self.terms) == 1:
            (exps, coeff), = self.terms.items()
            if not any(exps):
                return coeff
        return None

    def total_degree(self):
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.ring.names.index(name)
        if not self.terms:
            return 0
        return max(e[i] for e in self.terms)

    def coefficient_of(self, name: str, power: int) -> "MultiPoly":
        """Coefficient of name**power, as a polynomial in the same ring."""
        i = self.ring.names.index(name)
        out = {}
        for exps, coeff in self.terms.items():
            if exps[i] == power:
                reduced = exps[:i] + (0,) + exps[i + 1:]
                out[reduced] = coeff
        return self._new(out)

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ExactDivisionError("zero polynomial has no leading term")
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    # arithmetic -----------------------------------------------------------

    def _add(self, other: "MultiPoly") -> "MultiPoly":
        base = self.ring.base
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            s = base._add(out.get(exps, 0), coeff) if exps in out else coeff
            if exps in out and base._is_zero(s):
                del out[exps]
            else:
                out[exps] = s
        return self._new(out)

    def _neg(self) -> "MultiPoly":
        base = self.ring.base
        return self._new({e: base._neg(c) for e, c in self.terms.items()})

    def _mul(self, other: "MultiPoly") -> "MultiPoly":
        base = self.ring.base
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                prod = base._mul(c1, c2)
                if e in out:
                    s = base._add(out[e], prod)
                    if base._is_zero(s):
                        del out[e]
                    else:
                        out[e] = s
                elif not base._is_zero(prod):
                    out[e] = prod
        return self._new(out)

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Quotient self / divisor when the division is exact.

        Repeated graded-lex leading-term cancellation; raises
        ExactDivisionError as soon as a leading term fails to divide,
        which over an integral domain happens iff divisor does not
        divide self.
        """
        if divisor.is_zero():
            raise ExactDivisionError("division by zero polynomial")
        base = self.ring.base
        div_e, div_c = divisor.leading_term()
        rem = dict(self.terms)
        out: dict = {}
        while rem:
            e = max(rem, key=_grlex_key)
            c = rem[e]
            diff = tuple(x - y for x, y in zip(e, div_e))
            if any(x < 0 for x in diff):
                raise ExactDivisionError("inexact polynomial division (monomial)")
            q = base._exact_div(c, div_c)
            out[diff] = q
            for de, dc in divisor.terms.items():
                ke = tuple(x + y for x, y in zip(diff, de))
                prod = base._mul(q, dc)
                if ke in rem:
                    s = base._sub(rem[ke], prod)
                    if base._is_zero(s):
                        del rem[ke]
                    else:
                        rem[ke] = s
                elif not base._is_zero(prod):
                    rem[ke] = base._neg(prod)
        return self._new(out)

    # comparisons ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        if self._hash is None:
            items = tuple(sorted(self.terms.items()))
            self._hash = hash((self.ring, items))
        return self._hash

    # printing -------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        base = self.ring.base
        names = self.ring.names
        chunks = []
        for exps, coeff in self.sorted_terms():
            sign, cmag, _ = base._sign_mag(coeff)
            mono = _monomial_str(names, exps)
            if not mono:
                mag = cmag
            elif base._is_one(coeff) or (sign < 0 and base._is_one(base._neg(coeff))):
                mag = mono
            else:
                mag = f"{cmag}*{mono}"
            if not chunks:
                chunks.append(mag if sign > 0 else f"-{mag}")
            else:
                chunks.append(f" + {mag}" if sign > 0 else f" - {mag}")
        return "".join(chunks)

    __repr__ = __str__


class RingElement:
    """Immutable wrapper pairing a ring descriptor with a raw value."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        self.ring = ring
        self.value = value

    def _coerce_other(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"ring mismatch: {self.ring} versus {other.ring}"
                )
            return other.value
        return self.ring.coerce(other)

    def __add__(self, other):
        return RingElement(self.ring, self.ring._add(self.value, self._coerce_other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return RingElement(self.ring, self.ring._sub(self.value, self._coerce_other(other)))

    def __rsub__(self, other):
        return RingElement(self.ring, self.ring._sub(self._coerce_other(other), self.value))

    def __mul__(self, other):
        return RingElement(self.ring, self.ring._mul(self.value, self._coerce_other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring._neg(self.value))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ParameterError(f"exponent must be a nonnegative integer, got {n!r}")
        result = self.ring.one
        square = self
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    def exact_div(self, other) -> "RingElement":
        return RingElement(self.ring, self.ring._exact_div(self.value, self._coerce_other(other)))

    def is_zero(self) -> bool:
        return self.ring._is_zero(self.value)

    def is_one(self) -> bool:
        return self.ring._is_one(self.value)

    def is_unit(self) -> bool:
        return self.ring._is_unit(self.value)

    def is_nilpotent(self) -> bool:
        return self.ring._is_nilpotent(self.value)

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return other.ring == self.ring and other.value == self.value
        try:
            return self.value == self.ring.coerce(other)
        except (RingMismatchError, ParameterError):
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return self.ring._format(self.value)

    __repr__ = __str__


class RingHom:
    """Ring map described by a base-ring coercion plus variable images.

    The base map is inferred: ZZ embeds anywhere, QQ maps to QQ or to
    Fp (failing on non-invertible denominators), Fp maps only to the
    same Fp.  For a polynomial domain each variable needs an image in
    the codomain; omitted variables default to the same-named codomain
    variable when one exists.
    """

    def __init__(self, domain: Ring, codomain: Ring, images: Mapping[str, object] | None = None):
        self.domain = domain
        self.codomain = codomain
        self._images: dict[str, RingElement] = {}
        if isinstance(domain, PolynomialRing):
            images = dict(images or {})
            for name in domain.names:
                if name in images:
                    self._images[name] = codomain.element(images.pop(name))
                elif isinstance(codomain, PolynomialRing) and name in codomain.names:
                    self._images[name] = codomain.variable(name)
                else:
                    raise ParameterError(f"no image given for variable {name!r}")
            if images:
                raise ParameterError(f"images for unknown variables {sorted(images)}")
        elif images:
            raise ParameterError("variable images supplied for a scalar domain")
        self._scalar_domain = domain.base if isinstance(domain, PolynomialRing) else domain
        self._check_scalar_map()

    def _check_scalar_map(self):
        src, dst = self._scalar_domain, self.codomain
        dst_scalar = dst.base if isinstance(dst, PolynomialRing) else dst
        if isinstance(src, IntegerRing):
            return
        if isinstance(src, RationalRing) and isinstance(dst_scalar, (RationalRing, PrimeField)):
            return
        if isinstance(src, PrimeField) and src == dst_scalar:
            return
        raise UnsupportedRingError(f"no ring map from {src} into {dst_scalar}")

    def _map_scalar(self, raw) -> RingElement:
        return self.codomain.element(raw)

    def __call__(self, x) -> RingElement:
        if isinstance(x, RingElement):
            if x.ring != self.domain:
                raise RingMismatchError(f"element of {x.ring} fed to a map from {self.domain}")
            raw = x.value
        else:
            raw = self.domain.coerce(x)
        if not isinstance(self.domain, PolynomialRing):
            return self._map_scalar(raw)
        acc = self.codomain.zero
        var_images = [self._images[name] for name in self.domain.names]
        for exps, coeff in sorted(raw.terms.items()):
            term = self._map_scalar(coeff)
            for img, e in zip(var_images, exps):
                if e:
                    term = term * img**e
            acc = acc + term
        return acc
