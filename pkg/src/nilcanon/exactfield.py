"""Exact arithmetic over the rationals, prime fields and extension towers.

Every value is immutable and canonically represented (rationals in lowest
terms, extension elements reduced mod the modulus), so equality is
structural and values hash safely.  Extension fields are quotient rings
``base[t]/(f)`` where ``f`` is the lexicographically smallest monic
irreducible polynomial of the required degree; this makes every field and
every canonical form built on top of it bit-for-bit reproducible.

The quadratic extension of F_q carries the q-power map x -> x^q, an
order-two automorphism with fixed field F_q, plus the trace x + x^q into
the base.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NoIrreducibleFound,
    NonPrime,
    NotPrimePower,
    WrongField,
)


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q):
    """Split q = p^m with p prime, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            m = 0
            r = q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                raise NotPrimePower(f"{q} is not a prime power")
            return p, m
        p += 1
    return q, 1  # q itself prime


# ---------------------------------------------------------------------------
# field objects
# ---------------------------------------------------------------------------


class RationalField:
    """The field of rational numbers; elements are fractions.Fraction."""

    characteristic = 0
    order = None
    kind = "rationals"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def element(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise FieldMismatch(f"cannot coerce {value!r} into Q")

    def parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational literal {text!r}") from exc

    def format(self, value):
        return str(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PFElement:
    """Element of a prime field, stored as the least nonnegative residue."""

    __slots__ = ("field", "val", "_h")

    def __init__(self, field, val):
        self.field = field
        self.val = val % field.p
        self._h = hash((field.p, self.val))

    def _coerce(self, other):
        if isinstance(other, PFElement):
            if other.field is self.field or other.field == self.field:
                return other
            raise FieldMismatch("elements of different prime fields")
        if isinstance(other, int):
            return PFElement(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PFElement(self.field, self.val + other.val)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PFElement(self.field, self.val - other.val)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PFElement(self.field, other.val - self.val)

    def __neg__(self):
        return PFElement(self.field, -self.val)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PFElement(self.field, self.val * other.val)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.val == 0:
            raise DivisionByZero("division by zero in prime field")
        inv = pow(other.val, self.field.p - 2, self.field.p)
        return PFElement(self.field, self.val * inv)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, e):
        if e < 0:
            if self.val == 0:
                raise DivisionByZero("inverting zero")
            return PFElement(self.field, pow(self.val, -e * (self.field.p - 2), self.field.p))
        return PFElement(self.field, pow(self.val, e, self.field.p))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.val == other % self.field.p
        return (
            isinstance(other, PFElement)
            and other.field == self.field
            and other.val == self.val
        )

    def __hash__(self):
        return self._h

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"{self.val}"


class PrimeField:
    """F_p for a prime p."""

    kind = "prime"

    def __init__(self, p):
        if not is_prime(p):
            raise NonPrime(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p

    def zero(self):
        return PFElement(self, 0)

    def one(self):
        return PFElement(self, 1)

    def from_int(self, k):
        return PFElement(self, k)

    def element(self, value):
        if isinstance(value, PFElement) and value.field == self:
            return value
        if isinstance(value, int):
            return PFElement(self, value)
        raise FieldMismatch(f"cannot coerce {value!r} into F_{self.p}")

    def elements(self):
        """All elements in the canonical enumeration order 0, 1, ..., p-1."""
        for v in range(self.p):
            yield PFElement(self, v)

    def element_index(self, a):
        return a.val

    def element_by_index(self, i):
        return PFElement(self, i)

    def parse(self, text):
        return PFElement(self, int(text.strip()))

    def format(self, value):
        return str(value.val)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"F{self.p}"


# ---------------------------------------------------------------------------
# polynomial helpers over an arbitrary field object (dense coefficient lists,
# index = degree, trailing zeros trimmed)
# ---------------------------------------------------------------------------


def _ptrim(F, c):
    while c and not _nz(c[-1]):
        c = c[:-1]
    return c


def _nz(x):
    return bool(x) if not isinstance(x, Fraction) else x != 0


def _padd(F, a, b):
    n = max(len(a), len(b))
    z = F.zero()
    out = [(a[i] if i < len(a) else z) + (b[i] if i < len(b) else z) for i in range(n)]
    return _ptrim(F, out)


def _pneg(F, a):
    return [-x for x in a]


def _pmul(F, a, b):
    if not a or not b:
        return []
    z = F.zero()
    out = [z] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not _nz(ai):
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return _ptrim(F, out)


def _pdivmod(F, a, b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    q = [F.zero()] * max(0, len(a) - len(b) + 1)
    inv_lead = F.one() / b[-1]
    while len(a) >= len(b) and a:
        if not _nz(a[-1]):
            a.pop()
            continue
        coef = a[-1] * inv_lead
        shift = len(a) - len(b)
        q[shift] = q[shift] + coef
        for i, bi in enumerate(b):
            a[shift + i] = a[shift + i] - coef * bi
        a.pop()
    return _ptrim(F, q), _ptrim(F, a)


def _pgcd(F, a, b):
    a, b = _ptrim(F, list(a)), _ptrim(F, list(b))
    while b:
        _, r = _pdivmod(F, a, b)
        a, b = b, r
    if a:
        inv = F.one() / a[-1]
        a = [x * inv for x in a]
    return a


def _pxgcd(F, a, b):
    """Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = _ptrim(F, list(a)), _ptrim(F, list(b))
    s0, s1 = [F.one()], []
    t0, t1 = [], [F.one()]
    while r1:
        q, r = _pdivmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _padd(F, s0, _pneg(F, _pmul(F, q, s1)))
        t0, t1 = t1, _padd(F, t0, _pneg(F, _pmul(F, q, t1)))
    if r0:
        inv = F.one() / r0[-1]
        r0 = [x * inv for x in r0]
        s0 = [x * inv for x in s0]
        t0 = [x * inv for x in t0]
    return r0, s0, t0


def _ppowmod(F, base, e, mod):
    result = [F.one()]
    base = _pdivmod(F, base, mod)[1]
    while e > 0:
        if e & 1:
            result = _pdivmod(F, _pmul(F, result, base), mod)[1]
        base = _pdivmod(F, _pmul(F, base, base), mod)[1]
        e >>= 1
    return result


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(F, poly):
    """Rabin test for a monic polynomial over a finite field F of order q0."""
    d = len(poly) - 1
    q0 = F.order
    t = [F.zero(), F.one()]
    # t^(q0^d) == t mod poly
    xq = _ppowmod(F, t, q0**d, poly)
    if _ptrim(F, _padd(F, xq, _pneg(F, t))):
        return False
    for ell in _prime_divisors(d):
        xqe = _ppowmod(F, t, q0 ** (d // ell), poly)
        g = _pgcd(F, _padd(F, xqe, _pneg(F, t)), poly)
        if len(g) - 1 != 0:
            return False
    return True


def _tuple_iter(F, length):
    """All coefficient tuples of the given length, lexicographic by the
    canonical enumeration of F, leftmost coordinate slowest."""
    if length == 0:
        yield ()
        return
    for head in F.elements():
        for tail in _tuple_iter(F, length - 1):
            yield (head,) + tail


def lex_smallest_irreducible(F, degree):
    """Monic irreducible t^d + c_{d-1} t^{d-1} + ... + c_0 over F with the
    lexicographically smallest (c_{d-1}, ..., c_0)."""
    for coeffs in _tuple_iter(F, degree):
        # coeffs is (c_{d-1}, ..., c_0)
        poly = list(reversed(coeffs)) + [F.one()]
        if _is_irreducible(F, poly):
            return tuple(reversed(coeffs))  # (c_0, ..., c_{d-1})
    raise NoIrreducibleFound(f"no irreducible of degree {degree}")


# ---------------------------------------------------------------------------
# extension fields
# ---------------------------------------------------------------------------


class ExtElement:
    """Element of an extension field, a reduced polynomial in the generator."""

    __slots__ = ("field", "coeffs", "_h")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)
        self._h = hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, ExtElement):
            if other.field is self.field or other.field == self.field:
                return other
            raise FieldMismatch("elements of different extension fields")
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        memo = self.field._add_memo
        if memo is not None:
            key = (self.coeffs, other.coeffs)
            r = memo.get(key)
            if r is None:
                r = ExtElement(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])
                memo[key] = r
            return r
        return ExtElement(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtElement(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return ExtElement(self.field, [-a for a in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field._reduce_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def inverse(self):
        F = self.field
        base = F.base
        if not self:
            raise DivisionByZero("inverting zero")
        if F.q_subfield_order is not None:
            # x^{-1} = x^q / N(x) with the norm N(x) = x * x^q in the base
            conj = F.frobenius(self)
            norm = self * conj
            inv_norm = base.one() / norm.coeffs[0]
            return ExtElement(F, tuple(c * inv_norm for c in conj.coeffs))
        poly = _ptrim(base, list(self.coeffs))
        g, u, _ = _pxgcd(base, poly, F._modulus_poly())
        if len(g) - 1 != 0:
            raise DivisionByZero("element not invertible")  # cannot happen: modulus irreducible
        inv_g = base.one() / g[0]
        u = [x * inv_g for x in u]
        u = u + [base.zero()] * (F.degree - len(u))
        return ExtElement(F, u[: F.degree])

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.field.from_int(other)
        return (
            isinstance(other, ExtElement)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return self._h

    def __bool__(self):
        return any(_nz(c) for c in self.coeffs)

    def __repr__(self):
        return self.field.format(self)


class ExtensionField:
    """base[t]/(f) for a monic irreducible f; elements are coefficient tuples."""

    kind = "extension"

    def __init__(self, base, modulus_tail, gen_name):
        # modulus_tail = (c_0, ..., c_{d-1}) for t^d + c_{d-1} t^{d-1} + ... + c_0
        self.base = base
        self.modulus_tail = tuple(modulus_tail)
        self.degree = len(modulus_tail)
        self.gen_name = gen_name
        self.characteristic = base.characteristic
        self.order = base.order**self.degree
        self.q_subfield_order = None  # set for quadratic extensions of F_q
        self._gen_frob = None
        # small fields memoise products and sums; one table per field object
        self._mul_memo = {} if self.order <= 4096 else None
        self._add_memo = {} if self.order <= 4096 else None

    def _modulus_poly(self):
        return list(self.modulus_tail) + [self.base.one()]

    def zero(self):
        return ExtElement(self, [self.base.zero()] * self.degree)

    def one(self):
        return self.from_int(1)

    def from_int(self, k):
        c = [self.base.zero()] * self.degree
        c[0] = self.base.from_int(k)
        return ExtElement(self, c)

    def from_base(self, b):
        c = [self.base.zero()] * self.degree
        c[0] = self.base.element(b)
        return ExtElement(self, c)

    def gen(self):
        c = [self.base.zero()] * self.degree
        if self.degree == 1:
            # degenerate, never used in practice
            return ExtElement(self, [-self.modulus_tail[0]])
        c[1] = self.base.one()
        return ExtElement(self, c)

    def element(self, value):
        if isinstance(value, ExtElement) and value.field == self:
            return value
        if isinstance(value, int):
            return self.from_int(value)
        raise FieldMismatch(f"cannot coerce {value!r} into {self!r}")

    def _reduce_mul(self, a, b):
        memo = self._mul_memo
        if memo is not None:
            key = (a.coeffs, b.coeffs)
            r = memo.get(key)
            if r is None:
                r = self._reduce_mul_raw(a, b)
                memo[key] = r
            return r
        return self._reduce_mul_raw(a, b)

    def _reduce_mul_raw(self, a, b):
        base = self.base
        d = self.degree
        if d == 2:
            a0, a1 = a.coeffs
            b0, b1 = b.coeffs
            m0, m1 = self.modulus_tail
            hi = a1 * b1
            return ExtElement(self, (a0 * b0 - hi * m0, a0 * b1 + a1 * b0 - hi * m1))
        z = base.zero()
        prod = [z] * (2 * d - 1)
        for i, ai in enumerate(a.coeffs):
            if not _nz(ai):
                continue
            for j, bj in enumerate(b.coeffs):
                prod[i + j] = prod[i + j] + ai * bj
        # reduce: t^d = -(c_{d-1} t^{d-1} + ... + c_0)
        for k in range(2 * d - 2, d - 1, -1):
            ck = prod[k]
            if _nz(ck):
                prod[k] = z
                for i, mi in enumerate(self.modulus_tail):
                    prod[k - d + i] = prod[k - d + i] - ck * mi
        return ExtElement(self, prod[:d])

    def _frobenius_image_of_gen(self):
        """gen^q, cached; lets the q-power map act linearly on coefficients."""
        if self._gen_frob is None:
            self._gen_frob = self.gen() ** self.q_subfield_order
        return self._gen_frob

    def frobenius(self, a):
        """a^q for a quadratic extension, computed coefficientwise."""
        gq = self._frobenius_image_of_gen()
        c0, c1 = a.coeffs
        g0, g1 = gq.coeffs
        return ExtElement(self, (c0 + c1 * g0, c1 * g1))

    def elements(self):
        """Canonical enumeration: coefficient tuples by base-field order,
        highest-degree coefficient slowest (integer encoding ascending)."""
        def rec(k):
            if k == 0:
                yield []
                return
            for head in self.base.elements():
                for tail in rec(k - 1):
                    yield [head] + tail

        for rev in rec(self.degree):
            # rev = (c_{d-1}, ..., c_0); store little-endian
            yield ExtElement(self, list(reversed(rev)))

    def element_index(self, a):
        idx = 0
        for c in reversed(a.coeffs):
            idx = idx * self.base.order + self.base.element_index(c)
        return idx

    def element_by_index(self, i):
        coeffs = []
        for _ in range(self.degree):
            coeffs.append(self.base.element_by_index(i % self.base.order))
            i //= self.base.order
        return ExtElement(self, coeffs)

    # -- rendering ---------------------------------------------------------

    def _coeff_str(self, c):
        s = self.base.format(c)
        if "+" in s or "*" in s or "^" in s:
            return f"({s})"
        return s

    def format(self, value):
        terms = []
        for k in range(self.degree - 1, -1, -1):
            c = value.coeffs[k]
            if not _nz(c):
                continue
            g = self.gen_name if k == 1 else (f"{self.gen_name}^{k}" if k > 1 else "")
            if k == 0:
                terms.append(self._coeff_str(c))
            elif c == self.base.one():
                terms.append(g)
            else:
                terms.append(f"{self._coeff_str(c)}*{g}")
        return "+".join(terms) if terms else "0"

    def parse(self, text):
        text = text.strip().replace(" ", "")
        if text == "0":
            return self.zero()
        total = self.zero()
        # split on top-level '+' (coefficients may be parenthesized)
        parts, depth, cur = [], 0, ""
        for ch in text:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "+" and depth == 0 and cur:
                parts.append(cur)
                cur = ""
            else:
                cur += ch
        if cur:
            parts.append(cur)
        for term in parts:
            neg = term.startswith("-")
            if neg:
                term = term[1:]
            if "*" in term:
                cstr, gstr = term.split("*", 1)
            elif term.startswith(self.gen_name):
                cstr, gstr = "1", term
            else:
                cstr, gstr = term, ""
            if cstr.startswith("(") and cstr.endswith(")"):
                cstr = cstr[1:-1]
            if gstr == "":
                k = 0
            elif gstr == self.gen_name:
                k = 1
            elif gstr.startswith(self.gen_name + "^"):
                k = int(gstr[len(self.gen_name) + 1 :])
            else:
                raise ValueError(f"bad term {term!r}")
            if k >= self.degree:
                raise ValueError(f"term degree too large in {text!r}")
            cval = self.base.parse(cstr)
            coeffs = [self.base.zero()] * self.degree
            coeffs[k] = cval
            t = ExtElement(self, coeffs)
            total = total - t if neg else total + t
        return total

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus_tail == self.modulus_tail
        )

    def __hash__(self):
        return hash(("ext", hash(self.base), len(self.modulus_tail)))

    def __repr__(self):
        return f"F{self.order}"


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

_RATIONALS = RationalField()
_FIELD_CACHE = {}


def rationals():
    return _RATIONALS


def prime_field(p):
    key = ("p", p)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = PrimeField(p)
    return _FIELD_CACHE[key]


def galois_field(q, gen_name="b"):
    """F_q for a prime power q; prime fields come back as PrimeField."""
    p, m = prime_power(q)
    if m == 1:
        return prime_field(p)
    key = ("gf", q, gen_name)
    if key not in _FIELD_CACHE:
        base = prime_field(p)
        tail = lex_smallest_irreducible(base, m)
        _FIELD_CACHE[key] = ExtensionField(base, tail, gen_name)
    return _FIELD_CACHE[key]


def quadratic_ext(q, gen_name="a"):
    """F_{q^2} as a degree-2 extension of F_q with canonical modulus.

    The generator (printed as ``a``) is the class of the indeterminate; it
    satisfies gen**q != gen, i.e. it lies outside F_q.
    """
    key = ("quad", q, gen_name)
    if key in _FIELD_CACHE:
        return _FIELD_CACHE[key]
    base = galois_field(q)
    tail = lex_smallest_irreducible(base, 2)
    F = ExtensionField(base, tail, gen_name)
    F.q_subfield_order = q
    g = F.gen()
    if g**q == g:  # impossible for an irreducible modulus; defensive
        raise NoIrreducibleFound("generator unexpectedly fixed by the q-power map")
    _FIELD_CACHE[key] = F
    return F


def field_make(kind, param=None):
    """Spec-level factory: kind in {"rationals", "prime", "quadratic"}."""
    if kind in ("rationals", "Q", "q"):
        return rationals()
    if kind in ("prime", "Prime"):
        return prime_field(param)
    if kind in ("quadratic", "QuadraticExt"):
        return quadratic_ext(param)
    raise ValueError(f"unknown field kind {kind!r}")


# ---------------------------------------------------------------------------
# spec-surface operations
# ---------------------------------------------------------------------------


def scalar_arith(a, b, op):
    """Field arithmetic dispatch; both operands must carry the same field."""
    fa = getattr(a, "field", _RATIONALS if isinstance(a, Fraction) else None)
    fb = getattr(b, "field", _RATIONALS if isinstance(b, Fraction) else None)
    if fa is None or fb is None or fa != fb:
        raise FieldMismatch("operands live in different fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DivisionByZero("scalar division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def frobenius_q(a):
    """The q-power map on F_{q^2}; an order-two automorphism fixing F_q."""
    F = getattr(a, "field", None)
    if not isinstance(F, ExtensionField) or F.q_subfield_order is None:
        raise WrongField("frobenius_q needs an element of a quadratic extension")
    return F.frobenius(a)


def trace_to_base(a):
    """a + a^q, landing in the base field F_q of the quadratic extension."""
    F = getattr(a, "field", None)
    if not isinstance(F, ExtensionField) or F.q_subfield_order is None:
        raise WrongField("trace_to_base needs an element of a quadratic extension")
    s = a + frobenius_q(a)
    if _nz(s.coeffs[1]):
        raise WrongField("trace left the base field; internal error")
    return s.coeffs[0]


def format_scalar(a):
    if isinstance(a, Fraction):
        return str(a)
    return a.field.format(a)


def parse_scalar(field, text):
    return field.parse(text)
