"""Exact arithmetic over finite fields F_q, q = p^e.

Field elements are encoded as integers in ``range(q)``: the base-p digits of
the code are the coefficients of a polynomial in the generator modulo the
field's modulus (lowest degree first).  The prime subfield is therefore
``range(p)`` with its usual arithmetic.  Vectors and matrices are numpy int64
arrays of codes.
"""

from __future__ import annotations

import random
from functools import lru_cache

import numpy as np

from .errors import InputError, ResourceError

MAX_FIELD_SIZE = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """The finite field with ``p**e`` elements.  Use :func:`GF` to construct."""

    def __init__(self, p: int, e: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise InputError(f"characteristic {p} is not prime")
        if e < 1:
            raise InputError("field degree must be positive")
        self.p = p
        self.e = e
        self.q = p ** e
        if e == 1:
            self.modulus = (0, 1)
            self._inv_table = None
            if p <= 1 << 20:
                inv = np.zeros(p, dtype=np.int64)
                for a in range(1, p):
                    inv[a] = pow(a, p - 2, p)
                self._inv_table = inv
            return
        if self.q > MAX_FIELD_SIZE:
            raise ResourceError(f"field of size {self.q} exceeds the supported range")
        if modulus is None:
            modulus = find_irreducible(p, e)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise InputError("modulus must be monic of degree e")
        if not is_irreducible(GF(p), list(modulus)):
            raise InputError("modulus is not irreducible")
        self.modulus = modulus
        q = self.q
        self._pw = p ** np.arange(e, dtype=np.int64)
        codes = np.arange(q, dtype=np.int64)
        self._digits = (codes[:, None] // self._pw[None, :]) % p
        self._build_log_tables()

    # ---------------------------------------------------------- construction

    def _poly_mulmod(self, a: list[int], b: list[int]) -> list[int]:
        p, e, m = self.p, self.e, self.modulus
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for k in range(len(prod) - 1, e - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(e):
                    prod[k - e + i] = (prod[k - e + i] - c * m[i]) % p
        return prod[:e]

    def _decode(self, code: int) -> list[int]:
        return [(code // self.p ** i) % self.p for i in range(self.e)]

    def _encode(self, digits) -> int:
        return int(sum(int(d) * self.p ** i for i, d in enumerate(digits)))

    def _build_log_tables(self) -> None:
        q = self.q
        order = q - 1
        for cand in range(2, q):
            g = self._decode(cand)
            exp = [1]
            x = [1] + [0] * (self.e - 1)
            ok = True
            for k in range(1, order):
                x = self._poly_mulmod(x, g)
                code = self._encode(x)
                if code == 1:
                    ok = False
                    break
                exp.append(code)
            if ok:
                break
        else:  # pragma: no cover - a generator always exists
            raise ResourceError("no multiplicative generator found")
        self._exp = np.array(exp + exp, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        log[np.array(exp, dtype=np.int64)] = np.arange(order, dtype=np.int64)
        self._log = log
        self.generator = cand

    # ---------------------------------------------------------- identity

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.e, self.modulus) == (
            other.p, other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def describe(self) -> dict:
        return {"characteristic": self.p, "degree": self.e, "modulus": list(self.modulus)}

    # ---------------------------------------------------------- element ops

    def asarray(self, x) -> np.ndarray:
        a = np.asarray(x, dtype=np.int64)
        if self.e == 1:
            return a % self.p
        if np.any((a < 0) | (a >= self.q)):
            raise InputError("field element code out of range")
        return a

    def from_int(self, n) -> np.ndarray | int:
        """Image of an integer (or integer array) in the prime subfield."""
        return np.asarray(n, dtype=np.int64) % self.p if not isinstance(n, int) else n % self.p

    def add(self, a, b):
        if self.e == 1:
            return (np.asarray(a) + b) % self.p
        D = self._digits
        return ((D[a] + D[b]) % self.p) @ self._pw

    def neg(self, a):
        if self.e == 1:
            return (-np.asarray(a)) % self.p
        return ((-self._digits[a]) % self.p) @ self._pw

    def sub(self, a, b):
        if self.e == 1:
            return (np.asarray(a) - b) % self.p
        D = self._digits
        return ((D[a] - D[b]) % self.p) @ self._pw

    def mul(self, a, b):
        if self.e == 1:
            return (np.asarray(a) * b) % self.p
        a = np.asarray(a)
        b = np.asarray(b)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        if self.e == 1:
            if self._inv_table is not None:
                return self._inv_table[a]
            return np.vectorize(lambda x: pow(int(x), self.p - 2, self.p))(a)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a: int, n: int) -> int:
        a = int(a)
        if self.e == 1:
            return pow(a, n, self.p)
        if a == 0:
            return 0 if n > 0 else 1
        return int(self._exp[(int(self._log[a]) * n) % (self.q - 1)])

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        n = self.q - 1
        order = n
        for f in prime_factors(n):
            while order % f == 0 and self.power(a, order // f) == 1:
                order //= f
        return order

    def frobenius_root(self, a: int) -> int:
        """The unique b with b^p = a."""
        return self.power(a, self.q // self.p)

    def random(self, rng: random.Random, shape) -> np.ndarray:
        n = int(np.prod(shape)) if shape else 1
        vals = [rng.randrange(self.q) for _ in range(n)]
        return np.array(vals, dtype=np.int64).reshape(shape)

    def elements(self) -> range:
        return range(self.q)

    # ---------------------------------------------------------- matrices

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.shape[-1] != B.shape[0]:
            raise InputError(f"shape mismatch {A.shape} @ {B.shape}")
        if self.e == 1:
            p = self.p
            inner = A.shape[-1]
            chunk = max(1, (1 << 62) // max(1, (p - 1) ** 2))
            if inner <= chunk:
                return (A @ B) % p
            out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
            for s in range(0, inner, chunk):
                out = (out + A[:, s:s + chunk] @ B[s:s + chunk]) % p
            return out
        p, e = self.p, self.e
        Ad = self._digits[A]  # (m, n, e)
        Bd = self._digits[B]
        planes = [np.zeros((A.shape[0], B.shape[1]), dtype=np.int64) for _ in range(2 * e - 1)]
        for i in range(e):
            Ai = Ad[..., i]
            if not Ai.any():
                continue
            for j in range(e):
                planes[i + j] = (planes[i + j] + Ai @ Bd[..., j]) % p
        m = self.modulus
        for k in range(2 * e - 2, e - 1, -1):
            c = planes[k]
            if c.any():
                for i in range(e):
                    if m[i]:
                        planes[k - e + i] = (planes[k - e + i] - m[i] * c) % p
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for i in range(e):
            out += planes[i] * self._pw[i]
        return out

    def matpow(self, A: np.ndarray, n: int) -> np.ndarray:
        result = self.eye(A.shape[0])
        base = A
        while n:
            if n & 1:
                result = self.matmul(result, base)
            base = self.matmul(base, base)
            n >>= 1
        return result

    def rref(self, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and the pivot columns."""
        R = np.array(A, dtype=np.int64, copy=True)
        if R.ndim != 2:
            raise InputError("rref needs a matrix")
        m, n = R.shape
        pivots: list[int] = []
        r = 0
        for c in range(n):
            if r == m:
                break
            nz = np.flatnonzero(R[r:, c])
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                R[[r, i]] = R[[i, r]]
            piv = R[r, c]
            if piv != 1:
                R[r] = self.mul(R[r], self.inv(piv))
            col = R[:, c].copy()
            col[r] = 0
            rows = np.flatnonzero(col)
            if rows.size:
                R[rows] = self.sub(R[rows], self.mul(col[rows, None], R[r][None, :]))
            pivots.append(c)
            r += 1
        return R, pivots

    def row_space(self, A: np.ndarray) -> np.ndarray:
        """Basis (in reduced echelon form) of the span of the rows of A."""
        A = np.asarray(A, dtype=np.int64)
        if A.shape[0] == 0:
            return A.reshape(0, A.shape[1])
        R, piv = self.rref(A)
        return R[:len(piv)]

    def rank(self, A: np.ndarray) -> int:
        A = np.asarray(A)
        if A.size == 0:
            return 0
        return len(self.rref(A)[1])

    def nullspace(self, A: np.ndarray) -> np.ndarray:
        """Rows spanning {x : A x = 0}."""
        A = np.asarray(A, dtype=np.int64)
        n = A.shape[1]
        if A.shape[0] == 0:
            return self.eye(n)
        R, piv = self.rref(A)
        free = [c for c in range(n) if c not in set(piv)]
        N = np.zeros((len(free), n), dtype=np.int64)
        for k, f in enumerate(free):
            N[k, f] = 1
            for i, c in enumerate(piv):
                N[k, c] = self.neg(R[i, f])
        return N

    def left_nullspace(self, A: np.ndarray) -> np.ndarray:
        """Rows spanning {y : y A = 0}."""
        return self.nullspace(np.asarray(A).T)

    def inverse(self, A: np.ndarray) -> np.ndarray:
        n = A.shape[0]
        if A.shape != (n, n):
            raise InputError("inverse of a non-square matrix")
        R, piv = self.rref(np.hstack([A, self.eye(n)]))
        if piv[:n] != list(range(n)) or len(piv) < n:
            raise InputError("matrix is singular")
        return R[:, n:]

    def is_invertible(self, A: np.ndarray) -> bool:
        return A.shape[0] == A.shape[1] and self.rank(A) == A.shape[0]

    def solve_rows(self, basis: np.ndarray, vectors: np.ndarray) -> np.ndarray | None:
        """Coefficients C with C @ basis == vectors, or None if not in the span.

        ``basis`` must have linearly independent rows.
        """
        k = basis.shape[0]
        if vectors.shape[0] == 0:
            return np.zeros((0, k), dtype=np.int64)
        if k == 0:
            return None if vectors.any() else np.zeros((vectors.shape[0], 0), dtype=np.int64)
        R, piv = self.rref(np.hstack([basis.T, vectors.T]))
        if any(c >= k for c in piv):
            return None
        return R[:k, k:].T

    def charpoly(self, A: np.ndarray) -> list[int]:
        """Characteristic polynomial det(xI - A), coefficients lowest first."""
        H = np.array(A, dtype=np.int64, copy=True)
        n = H.shape[0]
        for m in range(1, n - 1):
            nz = np.flatnonzero(H[m:, m - 1])
            if nz.size == 0:
                continue
            i = m + int(nz[0])
            if i != m:
                H[[m, i]] = H[[i, m]]
                H[:, [m, i]] = H[:, [i, m]]
            u = self.mul(H[m + 1:, m - 1], self.inv(H[m, m - 1]))
            if u.any():
                H[m + 1:] = self.sub(H[m + 1:], self.mul(u[:, None], H[m][None, :]))
                H[:, m] = self.add(H[:, m], self.matmul(H[:, m + 1:], u[:, None])[:, 0])
        polys = [np.zeros(n + 1, dtype=np.int64)]
        polys[0][0] = 1
        for k in range(1, n + 1):
            prev = polys[k - 1]
            shifted = np.zeros(n + 1, dtype=np.int64)
            shifted[1:] = prev[:-1]
            cur = self.sub(shifted, self.mul(prev, H[k - 1, k - 1]))
            prod = 1
            for i in range(k - 1, 0, -1):
                prod = int(self.mul(prod, H[i, i - 1]))
                if prod == 0:
                    break
                c = int(self.mul(H[i - 1, k - 1], prod))
                if c:
                    cur = self.sub(cur, self.mul(polys[i - 1], c))
            polys.append(cur)
        return [int(c) for c in polys[n]]


@lru_cache(maxsize=None)
def GF(p: int, e: int = 1) -> Field:
    """Shared field instance with a canonical modulus."""
    return Field(p, e)


# ------------------------------------------------------------------ polynomials
# Polynomials are lists of field codes, lowest degree first, without trailing
# zeros (the zero polynomial is []).

def ptrim(a: list[int]) -> list[int]:
    a = [int(c) for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(F: Field, a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return ptrim(F.add(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)).tolist()) if n else []


def psub(F: Field, a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return ptrim(F.sub(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)).tolist()) if n else []


def pscale(F: Field, a: list[int], c: int) -> list[int]:
    if not a:
        return []
    return ptrim(F.mul(np.array(a, dtype=np.int64), c).tolist())


def pmul(F: Field, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    B = np.array(b, dtype=np.int64)
    for i, c in enumerate(a):
        if c:
            out[i:i + len(b)] = F.add(out[i:i + len(b)], F.mul(B, c))
    return ptrim(out.tolist())


def pdivmod(F: Field, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = np.array(a, dtype=np.int64)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], ptrim(a)
    qt = np.zeros(len(a) - db, dtype=np.int64)
    B = np.array(b, dtype=np.int64)
    lead_inv = int(F.inv(b[-1]))
    for k in range(len(a) - 1, db - 1, -1):
        c = int(r[k])
        if c:
            c = int(F.mul(c, lead_inv))
            qt[k - db] = c
            r[k - db:k + 1] = F.sub(r[k - db:k + 1], F.mul(B, c))
    return ptrim(qt.tolist()), ptrim(r[:db].tolist())


def pmod(F: Field, a: list[int], b: list[int]) -> list[int]:
    return pdivmod(F, a, b)[1]


def pmonic(F: Field, a: list[int]) -> list[int]:
    if not a:
        return []
    return pscale(F, a, int(F.inv(a[-1])))


def pgcd(F: Field, a: list[int], b: list[int]) -> list[int]:
    a, b = ptrim(a), ptrim(b)
    while b:
        a, b = b, pmod(F, a, b)
    return pmonic(F, a)


def ppowmod(F: Field, base: list[int], n: int, mod: list[int]) -> list[int]:
    result = [1]
    base = pmod(F, base, mod)
    while n:
        if n & 1:
            result = pmod(F, pmul(F, result, base), mod)
        base = pmod(F, pmul(F, base, base), mod)
        n >>= 1
    return result


def pderiv(F: Field, a: list[int]) -> list[int]:
    return ptrim([int(F.mul(c, i % F.p)) for i, c in enumerate(a)][1:])


def is_irreducible(F: Field, f: list[int]) -> bool:
    """Ben-Or irreducibility test for a polynomial over F."""
    f = pmonic(F, ptrim(f))
    n = len(f) - 1
    if n < 1:
        return False
    h = [0, 1]
    for _ in range(n // 2):
        h = ppowmod(F, h, F.q, f)
        if len(pgcd(F, f, psub(F, h, [0, 1]))) > 1:
            return False
    return True


def find_irreducible(p: int, e: int, seed: int = 0) -> tuple[int, ...]:
    """Monic irreducible polynomial of degree e over F_p.

    Seeded random search first, then deterministic enumeration.
    """
    F = GF(p)
    rng = random.Random(seed)
    for _ in range(64):
        f = [rng.randrange(p) for _ in range(e)] + [1]
        if f[0] and is_irreducible(F, f):
            return tuple(f)
    for code in range(p ** e):
        f = [(code // p ** i) % p for i in range(e)] + [1]
        if f[0] and is_irreducible(F, f):
            return tuple(f)
    raise ResourceError(f"no irreducible polynomial of degree {e} over F_{p}")  # pragma: no cover


def _pth_root(F: Field, f: list[int]) -> list[int]:
    p = F.p
    return ptrim([F.frobenius_root(f[i]) for i in range(0, len(f), p)])


def _distinct_degree(F: Field, f: list[int]) -> list[tuple[list[int], int]]:
    out = []
    x = [0, 1]
    h = x
    i = 1
    while len(f) - 1 >= 2 * i:
        h = ppowmod(F, h, F.q, f)
        g = pgcd(F, f, psub(F, h, x))
        if len(g) > 1:
            out.append((g, i))
            f = pdivmod(F, f, g)[0]
            h = pmod(F, h, f)
        i += 1
    if len(f) > 1:
        out.append((pmonic(F, f), len(f) - 1))
    return out


def _equal_degree(F: Field, g: list[int], d: int, rng: random.Random) -> list[list[int]]:
    n = len(g) - 1
    if n == d:
        return [g]
    while True:
        a = ptrim([rng.randrange(F.q) for _ in range(n)])
        if len(a) < 2:
            continue
        if F.p == 2:
            t = a
            s = a
            for _ in range(F.e * d - 1):
                s = pmod(F, pmul(F, s, s), g)
                t = padd(F, t, s)
            b = t
        else:
            b = psub(F, ppowmod(F, a, (F.q ** d - 1) // 2, g), [1])
        u = pgcd(F, g, b)
        if 1 < len(u) < len(g):
            v = pdivmod(F, g, u)[0]
            return _equal_degree(F, u, d, rng) + _equal_degree(F, pmonic(F, v), d, rng)


def irreducible_factors(F: Field, f: list[int], seed: int = 0) -> list[list[int]]:
    """Distinct monic irreducible factors of f, sorted by (degree, coefficients)."""
    rng = random.Random(seed)
    f = pmonic(F, ptrim(f))
    found: list[list[int]] = []
    _collect_factors(F, f, rng, found)
    uniq = {tuple(g) for g in found}
    return sorted((list(g) for g in uniq), key=lambda g: (len(g), g[::-1]))


def _collect_factors(F: Field, f: list[int], rng: random.Random, out: list) -> None:
    if len(f) <= 1:
        return
    d = pderiv(F, f)
    if not d:
        _collect_factors(F, pmonic(F, _pth_root(F, f)), rng, out)
        return
    g = pgcd(F, f, d)
    w = pdivmod(F, f, g)[0]
    w = pmonic(F, w)
    new = []
    for part, deg in _distinct_degree(F, w):
        new += _equal_degree(F, part, deg, rng)
    out += new
    rest = g
    for fac in new:
        while True:
            qt, r = pdivmod(F, rest, fac)
            if r or len(rest) <= 1:
                break
            rest = qt
    rest = pmonic(F, rest)
    if len(rest) > 1:
        _collect_factors(F, rest, rng, out)


def poly_of_matrix(F: Field, f: list[int], A: np.ndarray) -> np.ndarray:
    """f(A) by Horner's rule."""
    n = A.shape[0]
    out = F.zeros((n, n))
    eye = F.eye(n)
    for c in reversed(f):
        out = F.matmul(out, A)
        if c:
            out = F.add(out, F.mul(eye, c))
    return out
