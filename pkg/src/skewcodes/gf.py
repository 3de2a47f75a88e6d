"""Exact arithmetic in GF(q) and GF(q^m) plus generic exact linear algebra.

Fields are built as towers F_p -> F_q=F_{p^e} -> F_{q^m}.  Moduli are the
lexicographically smallest irreducible polynomials (ordered by the integer
encoding of their low-order coefficients) and the primitive element gamma is
the smallest element of full multiplicative order, so field tables are
reproducible across runs.  Fields up to 2^20 elements carry full log/antilog
tables; larger fields fall back to polynomial-vector arithmetic.

Element codes are plain ints: an element sum(c_i * z^i) with c_i in F_q is
encoded as sum(code(c_i) * q^i), and a base-field element sum(b_j * x^j) with
b_j in F_p as sum(b_j * p^j).  Base-field codes double as the embedded copy
of F_q inside F_{q^m} (constant polynomials), so the subfield embedding is
the identity on codes.
"""

import itertools
from dataclasses import dataclass

TABLE_LIMIT = 1 << 20


# ---------------------------------------------------------------------------
# small number theory helpers

def factorize(n):
    """Prime factorization by trial division, as a {prime: exponent} dict."""
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_prime(n):
    if n < 2:
        return False
    return factorize(n) == {n: 1}


def prime_power(n):
    """Return (p, e) with n = p^e, or None if n is not a prime power."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) != 1:
        return None
    (p, e), = f.items()
    return p, e


def next_prime_power(n):
    """Smallest prime power >= n."""
    k = max(2, n)
    while prime_power(k) is None:
        k += 1
    return k


# ---------------------------------------------------------------------------
# dense polynomials over F_p (coefficient tuples, used only to build fields)

def _fp_poly_trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def _fp_poly_mulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _fp_poly_rem(res, mod, p)


def _fp_poly_rem(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) > dm:
        c = a[-1] % p
        if c:
            f = (c * inv_lead) % p
            shift = len(a) - 1 - dm
            for i, mi in enumerate(mod):
                a[shift + i] = (a[shift + i] - f * mi) % p
        a.pop()
    return tuple(_fp_poly_trim(tuple(a)))


def _fp_poly_powmod(a, n, mod, p):
    result = (1,)
    a = _fp_poly_rem(a, mod, p)
    while n:
        if n & 1:
            result = _fp_poly_mulmod(result, a, mod, p)
        a = _fp_poly_mulmod(a, a, mod, p)
        n >>= 1
    return result


def _fp_poly_gcd(a, b, p):
    a, b = tuple(_fp_poly_trim(a)), tuple(_fp_poly_trim(b))
    while b:
        a, b = b, _fp_poly_mod_full(a, b, p)
    return a


def _fp_poly_mod_full(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        c = a[-1] % p
        if c:
            f = (c * inv_lead) % p
            shift = len(a) - 1 - db
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - f * bi) % p
        a.pop()
    return tuple(_fp_poly_trim(tuple(a)))


def _fp_irreducible(f, p):
    """Rabin irreducibility test for a monic f over F_p."""
    d = len(f) - 1
    x = (0, 1)
    xq = _fp_poly_powmod(x, p ** d, f, p)
    # x^(p^d) == x mod f
    if _fp_poly_trim(tuple((xi - yi) % p for xi, yi in
                           itertools.zip_longest(xq, x, fillvalue=0))):
        return False
    for r in factorize(d):
        xr = _fp_poly_powmod(x, p ** (d // r), f, p)
        diff = tuple((xi - yi) % p for xi, yi in
                     itertools.zip_longest(xr, x, fillvalue=0))
        if len(_fp_poly_gcd(diff, f, p)) != 1:
            return False
    return True


def smallest_irreducible_fp(p, degree):
    """Lexicographically smallest monic irreducible of given degree over F_p.

    Ordering: integer encoding sum(c_i * p^i) of the non-leading coefficients.
    """
    if degree == 1:
        return (0, 1)  # x itself
    for code in range(p ** degree):
        coeffs = []
        c = code
        for _ in range(degree):
            coeffs.append(c % p)
            c //= p
        f = tuple(coeffs) + (1,)
        if _fp_irreducible(f, p):
            return f
    raise RuntimeError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# base field GF(p^e), always table-backed

class PrimePowerField:
    """GF(p^e) with full exp/log tables; element codes in [0, p^e)."""

    def __init__(self, p, e):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.order = p ** e
        if self.order > TABLE_LIMIT:
            raise ValueError("base field too large for tables")
        self.modulus = smallest_irreducible_fp(p, e)
        self._build_tables()

    def _code_to_poly(self, code):
        c, out = code, []
        for _ in range(self.e):
            out.append(c % self.p)
            c //= self.p
        return tuple(out)

    def _poly_to_code(self, poly):
        code = 0
        for c in reversed(poly):
            code = code * self.p + c
        return code

    def _raw_mul(self, x, y):
        a, b = self._code_to_poly(x), self._code_to_poly(y)
        return self._poly_to_code(_fp_poly_mulmod(a, b, self.modulus, self.p)
                                  + (0,) * self.e)

    def _build_tables(self):
        q = self.order
        factors = list(factorize(q - 1)) if q > 2 else []
        gamma = None
        for cand in range(2, q):
            if all(self._pow_raw(cand, (q - 1) // r) != 1 for r in factors):
                gamma = cand
                break
        if gamma is None:
            gamma = 1  # q == 2
        self.gamma = gamma
        exp = [0] * (q - 1)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, gamma)
        self.exp = exp
        self.log = log
        if self.p != 2:
            self._add = [[self._poly_to_code(tuple((a + b) % self.p for a, b in
                                                   zip(self._code_to_poly(x),
                                                       self._code_to_poly(y))))
                          for y in range(q)] for x in range(q)]

    def _pow_raw(self, x, n):
        r = 1
        while n:
            if n & 1:
                r = self._raw_mul(r, x)
            x = self._raw_mul(x, x)
            n >>= 1
        return r

    def add(self, x, y):
        if self.p == 2:
            return x ^ y
        return self._add[x][y]

    def neg(self, x):
        if self.p == 2:
            return x
        return self._poly_to_code(tuple((-c) % self.p
                                        for c in self._code_to_poly(x)))

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.log[x] + self.log[y]) % (self.order - 1)]

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inversion of zero")
        return self.exp[(-self.log[x]) % (self.order - 1)]

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def power(self, x, n):
        if x == 0:
            if n == 0:
                return 1
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self.exp[(self.log[x] * n) % (self.order - 1)]

    def elements(self):
        return range(self.order)


# ---------------------------------------------------------------------------
# polynomials over a PrimePowerField (digit lists), used to build the top field

def _fq_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _fq_mulmod(base, a, b, mod):
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    mul, add = base.mul, base.add
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = add(res[i + j], mul(ai, bj))
    return _fq_rem(base, res, mod)


def _fq_rem(base, a, mod):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = base.inv(mod[-1])
    while len(a) > dm:
        c = a[-1]
        if c:
            f = base.mul(c, inv_lead)
            shift = len(a) - 1 - dm
            for i, mi in enumerate(mod):
                a[shift + i] = base.sub(a[shift + i], base.mul(f, mi))
        a.pop()
    return _fq_trim(a)


def _fq_powmod(base, a, n, mod):
    result = [1]
    a = _fq_rem(base, list(a), mod)
    while n:
        if n & 1:
            result = _fq_mulmod(base, result, a, mod)
        a = _fq_mulmod(base, a, a, mod)
        n >>= 1
    return result


def _fq_gcd(base, a, b):
    a, b = _fq_trim(list(a)), _fq_trim(list(b))
    while b:
        a, b = b, _fq_rem_full(base, a, b)
    return a


def _fq_rem_full(base, a, b):
    a = list(a)
    db = len(b) - 1
    inv_lead = base.inv(b[-1])
    while a and len(a) - 1 >= db:
        c = a[-1]
        if c:
            f = base.mul(c, inv_lead)
            shift = len(a) - 1 - db
            for i, bi in enumerate(b):
                a[shift + i] = base.sub(a[shift + i], base.mul(f, bi))
        a.pop()
    return _fq_trim(a)


def _fq_irreducible(base, f):
    m = len(f) - 1
    q = base.order
    x = [0, 1]
    xq = _fq_powmod(base, x, q ** m, f)
    diff = [base.sub(a, b) for a, b in itertools.zip_longest(xq, x, fillvalue=0)]
    if _fq_trim(diff):
        return False
    for r in factorize(m):
        xr = _fq_powmod(base, x, q ** (m // r), f)
        diff = [base.sub(a, b)
                for a, b in itertools.zip_longest(xr, x, fillvalue=0)]
        if len(_fq_gcd(base, diff, list(f))) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# the extension field GF(q^m)

_FIELD_CACHE = {}


def field(p, e, m):
    """Cached ExtensionField constructor."""
    key = (p, e, m)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = ExtensionField(p, e, m)
    return _FIELD_CACHE[key]


def field_q(q, m):
    """Cached field from a prime-power base size q."""
    pe = prime_power(q)
    if pe is None:
        raise ValueError(f"q = {q} is not a prime power")
    return field(pe[0], pe[1], m)


class ExtensionField:
    """GF(q^m) over GF(q) = GF(p^e), with Frobenius sigma(a) = a^q.

    The fixed F_q-basis is the polynomial basis (1, z, ..., z^(m-1)) of the
    top modulus, so F_q-coordinates of an element are exactly its digits.
    """

    def __init__(self, p, e, m):
        if m < 1:
            raise ValueError("m must be >= 1")
        self.base = PrimePowerField(p, e)
        self.p = p
        self.e = e
        self.m = m
        self.q = self.base.order
        self.order = self.q ** m
        self.base_modulus = self.base.modulus
        if m == 1:
            self.top_modulus = (self.base.neg(self.base.gamma), 1)
        else:
            self.top_modulus = self._find_top_modulus()
        self._mod_digits = list(self.top_modulus)
        self.has_tables = self.order <= TABLE_LIMIT
        self._fast_gf2 = (p == 2 and e == 1)
        if self._fast_gf2:
            self._gf2_mod = sum(c << i for i, c in enumerate(self.top_modulus))
        self.gamma = self._find_gamma()
        if self.has_tables:
            self._build_tables()
        self.basis = tuple(self.q ** i for i in range(m)) if m > 1 else (1,)

    # -- construction helpers ------------------------------------------------

    def _find_top_modulus(self):
        m, q = self.m, self.q
        for code in range(q ** m):
            digits = self._digits_raw(code)
            f = tuple(digits) + (1,)
            if _fq_irreducible(self.base, f):
                return f
        raise RuntimeError("no irreducible polynomial found")  # unreachable

    def _digits_raw(self, code):
        out, c = [], code
        for _ in range(self.m):
            out.append(c % self.q)
            c //= self.q
        return out

    def _from_digits_raw(self, digits):
        code = 0
        for d in reversed(digits):
            code = code * self.q + d
        return code

    def _poly_mul(self, x, y):
        if self.m == 1:
            return self.base.mul(x, y)
        if self._fast_gf2:
            r = 0
            while y:
                if y & 1:
                    r ^= x
                x <<= 1
                y >>= 1
            # reduce modulo the degree-m GF(2) modulus
            mod, m = self._gf2_mod, self.m
            top = r.bit_length() - 1
            while top >= m:
                r ^= mod << (top - m)
                top = r.bit_length() - 1
            return r
        a, b = self._digits_raw(x), self._digits_raw(y)
        prod = _fq_mulmod(self.base, a, b, self._mod_digits)
        return self._from_digits_raw(prod + [0] * (self.m - len(prod)))

    def _poly_pow(self, x, n):
        r = 1
        while n:
            if n & 1:
                r = self._poly_mul(r, x)
            x = self._poly_mul(x, x)
            n >>= 1
        return r

    def _find_gamma(self):
        n1 = self.order - 1
        factors = list(factorize(n1)) if n1 > 1 else []
        for cand in range(2, self.order):
            if all(self._poly_pow(cand, n1 // r) != 1 for r in factors):
                return cand
        return 1  # order == 2

    def _build_tables(self):
        n1 = self.order - 1
        exp = [0] * n1
        log = [0] * self.order
        # multiplication by gamma is F_p-linear; precompute basis images
        dim = self.e * self.m
        if self.p == 2:
            # packed codes are F_2 vectors: combine images over set bits
            images = [self._poly_mul(1 << j, self.gamma)
                      for j in range(dim)]
            x = 1
            for i in range(n1):
                exp[i] = x
                log[x] = i
                y, nxt = x, 0
                while y:
                    low = y & -y
                    nxt ^= images[low.bit_length() - 1]
                    y ^= low
                x = nxt
        else:
            images = []
            for j in range(dim):
                unit = self._from_fp_vec([1 if i == j else 0
                                          for i in range(dim)])
                images.append(self._to_fp_vec(self._poly_mul(unit,
                                                             self.gamma)))
            x = 1
            p = self.p
            vec = self._to_fp_vec(1)
            for i in range(n1):
                exp[i] = x
                log[x] = i
                acc = [0] * dim
                for j, c in enumerate(vec):
                    if c:
                        img = images[j]
                        for t in range(dim):
                            a = acc[t] + c * img[t]
                            acc[t] = a % p
                x = self._from_fp_vec(acc)
                vec = acc
        self.exp = exp
        self.log = log

    def _to_fp_vec(self, code):
        out = []
        for d in self._digits_raw(code):
            c = d
            for _ in range(self.e):
                out.append(c % self.p)
                c //= self.p
        return out

    def _from_fp_vec(self, vec):
        digits = []
        for i in range(self.m):
            chunk = vec[i * self.e:(i + 1) * self.e]
            c = 0
            for b in reversed(chunk):
                c = c * self.p + b
            digits.append(c)
        return self._from_digits_raw(digits)

    # -- arithmetic on codes ---------------------------------------------------

    def add(self, x, y):
        if self.p == 2:
            return x ^ y
        if self.m == 1:
            return self.base.add(x, y)
        xd, yd = self._digits_raw(x), self._digits_raw(y)
        return self._from_digits_raw([self.base.add(a, b)
                                      for a, b in zip(xd, yd)])

    def neg(self, x):
        if self.p == 2:
            return x
        if self.m == 1:
            return self.base.neg(x)
        return self._from_digits_raw([self.base.neg(d)
                                      for d in self._digits_raw(x)])

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        if self.has_tables:
            return self.exp[(self.log[x] + self.log[y]) % (self.order - 1)]
        return self._poly_mul(x, y)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inversion of zero")
        if self.has_tables:
            return self.exp[(-self.log[x]) % (self.order - 1)]
        return self._poly_pow(x, self.order - 2)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def power(self, x, n):
        """x^n for any integer n (negative n inverts a nonzero x)."""
        if x == 0:
            if n == 0:
                return 1
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        if self.has_tables:
            return self.exp[(self.log[x] * n) % (self.order - 1)]
        n %= self.order - 1
        return self._poly_pow(x, n)

    def frob(self, x, j=1):
        """Frobenius sigma^j: x -> x^(q^j); j may be any integer."""
        j %= self.m
        if x == 0:
            return 0
        if self.has_tables:
            return self.exp[(self.log[x] * pow(self.q, j, self.order - 1))
                            % (self.order - 1)]
        for _ in range(j):
            x = self._poly_pow(x, self.q)
        return x

    def norm(self, x):
        """Field norm onto F_q: x^((q^m-1)/(q-1)); result is a base code."""
        if self.q == self.order:
            return x
        return self.power(x, (self.order - 1) // (self.q - 1))

    def coords(self, x):
        """F_q-coordinates of x in the polynomial basis (a tuple of m codes)."""
        return tuple(self._digits_raw(x))

    def from_coords(self, digits):
        return self._from_digits_raw(list(digits))

    def dlog(self, x):
        """Discrete log base gamma (table fields only)."""
        if x == 0:
            raise ValueError("dlog of zero")
        if not self.has_tables:
            raise NotImplementedError("no tables for this field size")
        return self.log[x]

    def gamma_pow(self, i):
        return self.power(self.gamma, i)

    def elements(self):
        return range(self.order)

    def base_elements(self):
        """Codes of the embedded subfield F_q (identity embedding)."""
        if self.q == self.order:
            return range(self.order)
        eta = self.power(self.gamma, (self.order - 1) // (self.q - 1))
        out = [0]
        x = 1
        for _ in range(self.q - 1):
            out.append(x)
            x = self.mul(x, eta)
        return sorted(out)

    def random_element(self, rng):
        return rng.randrange(self.order)

    def random_nonzero(self, rng):
        return 1 + rng.randrange(self.order - 1)

    def element(self, code):
        return Element(self, code)

    def __repr__(self):
        return f"GF({self.p}^{self.e * self.m})[q={self.q},m={self.m}]"


class Element:
    """Convenience wrapper around (field, code) with operator overloads."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = code

    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError("field element expected")
        if other.field is not self.field:
            raise ValueError("elements from different fields")
        return other

    def __add__(self, other):
        return Element(self.field, self.field.add(self.code,
                                                  self._check(other).code))

    def __sub__(self, other):
        return Element(self.field, self.field.sub(self.code,
                                                  self._check(other).code))

    def __mul__(self, other):
        return Element(self.field, self.field.mul(self.code,
                                                  self._check(other).code))

    def __truediv__(self, other):
        return Element(self.field, self.field.div(self.code,
                                                  self._check(other).code))

    def __pow__(self, n):
        return Element(self.field, self.field.power(self.code, n))

    def __neg__(self):
        return Element(self.field, self.field.neg(self.code))

    def inverse(self):
        return Element(self.field, self.field.inv(self.code))

    def frobenius(self, j=1):
        return Element(self.field, self.field.frob(self.code, j))

    def __eq__(self, other):
        return (isinstance(other, Element) and other.field is self.field
                and other.code == self.code)

    def __hash__(self):
        return hash((id(self.field), self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"<{self.code} in {self.field!r}>"


# ---------------------------------------------------------------------------
# matrices and exact linear algebra (row lists of int codes)

@dataclass
class Matrix:
    """Dense matrix over a field; data is a row-major list of row lists."""
    field: object
    data: list

    @property
    def nrows(self):
        return len(self.data)

    @property
    def ncols(self):
        return len(self.data[0]) if self.data else 0

    def row(self, i):
        return self.data[i]

    def mul(self, other):
        return Matrix(self.field, mat_mul(self.field, self.data, other.data))

    def rank(self):
        return rank(self.field, self.data)


def mat_mul(field, a, b):
    add, mul = field.add, field.mul
    nb = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * nb
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(nb):
                    y = brow[j]
                    if y:
                        acc[j] = add(acc[j], mul(x, y))
        out.append(acc)
    return out


def mat_vec(field, a, v):
    add, mul = field.add, field.mul
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = add(acc, mul(x, y))
        out.append(acc)
    return out


def rref(field, rows):
    """Reduced row echelon form; returns (new_rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    add, mul, inv, neg = field.add, field.mul, field.inv, field.neg
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pr = rows[r]
        f = inv(pr[c])
        if f != 1:
            for j in range(c, ncols):
                if pr[j]:
                    pr[j] = mul(pr[j], f)
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = neg(rows[i][c])
                ri = rows[i]
                for j in range(c, ncols):
                    if pr[j]:
                        ri[j] = add(ri[j], mul(f, pr[j]))
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(field, rows):
    return len(rref(field, rows)[1])


def rank_bruteforce(field, rows):
    """Rank via exhaustive minor search; test oracle for matrices <= 4x4."""
    n, m = len(rows), len(rows[0]) if rows else 0
    if n > 4 or m > 4:
        raise ValueError("oracle limited to 4x4")
    for k in range(min(n, m), 0, -1):
        for ri in itertools.combinations(range(n), k):
            for ci in itertools.combinations(range(m), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                if _det(field, sub) != 0:
                    return k
    return 0


def _det(field, rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    add, mul, neg = field.add, field.mul, field.neg
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            term = mul(rows[0][j], _det(field, minor))
            total = add(total, term if j % 2 == 0 else neg(term))
    return total


def right_kernel(field, rows):
    """Basis of {x : rows * x = 0}, as a list of vectors."""
    ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[1 if i == j else 0 for j in range(ncols)]
                for i in range(ncols)]
    red, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    neg = field.neg
    for fcol in free:
        vec = [0] * ncols
        vec[fcol] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = neg(red[r][fcol])
        basis.append(vec)
    return basis


def solve(field, rows, rhs):
    """Solve rows * x = rhs; returns (particular, kernel_basis) or None.

    A None return signals an inconsistent system, not an error.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(field, aug)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x, right_kernel(field, rows)


def expand_matrix(field, vector):
    """F_q-coordinate expansion of a vector over F_{q^m}: an m x n matrix.

    Column j holds the coordinates of v_j in the fixed polynomial basis; the
    map is F_q-linear and invertible on its image.
    """
    m = field.m
    cols = [field.coords(v) for v in vector]
    return [[col[i] for col in cols] for i in range(m)]


def rank_q(field, vector):
    """F_q-rank of a vector over F_{q^m}."""
    return rank(field.base, expand_matrix(field, vector))
