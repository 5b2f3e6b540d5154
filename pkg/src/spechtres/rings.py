"""Exact scalar and matrix arithmetic.

Prime-field scalars and matrices, integer Laurent polynomials, cyclotomic
quotients Z[z]/(1 + z + ... + z^(p-1)) with optional mod-p coefficients,
balanced quantum integers, and deterministic Gaussian elimination.

Everything here is exact.  Python integers cannot overflow; numpy int64 is
used only where intermediate values are provably below 2**63 (the matmul
helper chunks its accumulation to guarantee that).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "is_prime",
    "FpScalar",
    "FpMatrix",
    "fp_matmul",
    "fp_rref",
    "fp_rank_kernel_image",
    "fp_solve",
    "fp_inverse",
    "frac_solve",
    "int_det",
    "LaurentInt",
    "quantum_integer",
    "CyclotomicElem",
    "cyclotomic_eval",
    "zeta_quantum",
]

# Auxiliary prime for Z-computations done through a single modular image.
# Any integer result with known absolute value < AUX_PRIME // 2 is recovered
# exactly from its symmetric residue.
AUX_PRIME = 67108859


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


# ---------------------------------------------------------------------------
# prime field scalars


@dataclass(frozen=True)
class FpScalar:
    """A residue in the field with p elements, p an odd prime."""

    value: int
    p: int

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"modulus must be an odd prime, got {self.p}")
        object.__setattr__(self, "value", self.value % self.p)

    def _other(self, x) -> int:
        if isinstance(x, FpScalar):
            if x.p != self.p:
                raise ValueError("modulus mismatch")
            return x.value
        return int(x)

    def __add__(self, x):
        return FpScalar(self.value + self._other(x), self.p)

    __radd__ = __add__

    def __sub__(self, x):
        return FpScalar(self.value - self._other(x), self.p)

    def __rsub__(self, x):
        return FpScalar(self._other(x) - self.value, self.p)

    def __mul__(self, x):
        return FpScalar(self.value * self._other(x), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.value, self.p)

    def inverse(self) -> "FpScalar":
        if self.value == 0:
            raise ZeroDivisionError("0 is not invertible")
        return FpScalar(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, x):
        return self * FpScalar(self._other(x), self.p).inverse()

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


# ---------------------------------------------------------------------------
# matrices over F_p

# Entries live in [0, p).  The elimination scan is fixed: columns left to
# right, within a column the first nonzero entry from the top.  Every basis
# produced downstream inherits its determinism from this rule.


class FpMatrix:
    """Dense matrix over F_p backed by an int64 array."""

    __slots__ = ("p", "a")

    def __init__(self, p: int, data):
        if p < 3 or not is_prime(p):
            raise ValueError(f"modulus must be an odd prime, got {p}")
        a = np.asarray(data, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        self.p = p
        self.a = a % p

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        return cls(p, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "FpMatrix":
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.p, self.a.T)

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p:
            raise ValueError("modulus mismatch")
        return FpMatrix(self.p, fp_matmul(self.a, other.a, self.p))

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p:
            raise ValueError("modulus mismatch")
        return FpMatrix(self.p, self.a + other.a)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpMatrix)
            and self.p == other.p
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __repr__(self):
        return f"FpMatrix(p={self.p}, shape={self.a.shape})"


def fp_matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact a @ b mod p.  Chunks the inner dimension so that int64
    accumulation cannot overflow even for a large auxiliary modulus."""
    a = a % p
    b = b % p
    inner = a.shape[-1]
    safe = max(1, (2**62) // max(1, (p - 1) * (p - 1)))
    if inner <= safe:
        return (a @ b) % p
    acc = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for lo in range(0, inner, safe):
        acc = (acc + a[:, lo : lo + safe] @ b[lo : lo + safe]) % p
    return acc


def fp_rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p with the fixed pivot scan.

    Returns the reduced matrix and the list of pivot column indices.
    """
    m = (np.asarray(a, dtype=np.int64) % p).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        others = np.flatnonzero(m[:, c])
        others = others[others != r]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def fp_kernel_basis(a: np.ndarray, p: int) -> list[np.ndarray]:
    """Column vectors spanning the null space, one per free column."""
    rref, pivots = fp_rref(a, p)
    cols = a.shape[1]
    pivot_set = set(pivots)
    basis = []
    for f in range(cols):
        if f in pivot_set:
            continue
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-rref[i, f]) % p
        basis.append(v)
    return basis


def fp_rank_kernel_image(m: FpMatrix):
    """Rank, kernel basis and image basis of a matrix over F_p.

    The image basis consists of the original columns at the pivot
    positions; together with the fixed pivot rule this makes all three
    outputs deterministic.
    """
    _, pivots = fp_rref(m.a, m.p)
    kernel = fp_kernel_basis(m.a, m.p)
    image = [m.a[:, c].copy() for c in pivots]
    rank = len(pivots)
    assert rank + len(kernel) == m.cols
    return rank, kernel, image


def fp_solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Solve a @ x = b mod p for each column of b.

    Free variables are set to zero, so the solution is deterministic.
    Raises ValueError when the system is inconsistent.
    """
    b = np.asarray(b, dtype=np.int64)
    single = b.ndim == 1
    if single:
        b = b[:, None]
    ncols = a.shape[1]
    aug = np.concatenate([a % p, b % p], axis=1)
    rref, pivots = fp_rref(aug, p)
    if any(c >= ncols for c in pivots):
        raise ValueError("inconsistent linear system over F_p")
    x = np.zeros((ncols, b.shape[1]), dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = rref[i, ncols:]
    return x[:, 0] if single else x


def fp_inverse(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    if a.shape[1] != n:
        raise ValueError("inverse needs a square matrix")
    aug = np.concatenate([a % p, np.eye(n, dtype=np.int64)], axis=1)
    rref, pivots = fp_rref(aug, p)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular mod p")
    return rref[:, n:]


# ---------------------------------------------------------------------------
# exact rational / integer elimination (small systems only)


def frac_solve(a, b):
    """Exact solution of a @ x = b over Q via fraction elimination.

    a is m x n with full column rank expected; b is m x k.  Raises
    ValueError if the system is inconsistent or underdetermined.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    k = len(b[0])
    rows = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(b[i][j]) for j in range(k)] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if len(pivots) < n:
        raise ValueError("system is underdetermined")
    for i in range(r, m):
        if any(x != 0 for x in rows[i][n:]):
            raise ValueError("inconsistent linear system over Q")
    x = [[Fraction(0)] * k for _ in range(n)]
    for i, c in enumerate(pivots):
        x[c] = rows[i][n:]
    return x


def int_det(a) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(map(int, row)) for row in a]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# integer Laurent polynomials


class LaurentInt:
    """Integer Laurent polynomial, stored sparsely as {exponent: coefficient}.

    Zero coefficients are never stored, so equality is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {int(e): int(c) for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def zero(cls) -> "LaurentInt":
        return cls()

    @classmethod
    def one(cls) -> "LaurentInt":
        return cls({0: 1})

    @classmethod
    def x(cls, exp: int = 1, coeff: int = 1) -> "LaurentInt":
        return cls({exp: coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self):
        return sorted(self.coeffs.items())

    def __add__(self, other):
        other = _as_laurent(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentInt(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) + (-self)

    def __neg__(self):
        return LaurentInt({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentInt({e: c * other for e, c in self.coeffs.items()})
        other = _as_laurent(other)
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentInt(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            inv = LaurentInt({-e: c for e, c in self.coeffs.items()})
            if len(self.coeffs) != 1 or abs(next(iter(self.coeffs.values()))) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            return inv ** (-n)
        result = LaurentInt.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = _as_laurent(other)
        return isinstance(other, LaurentInt) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.terms()))

    def __repr__(self):
        if not self.coeffs:
            return "LaurentInt(0)"
        bits = []
        for e, c in self.terms():
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"{c}*x")
            else:
                bits.append(f"{c}*x^{e}")
        return "LaurentInt(" + " + ".join(bits) + ")"


def _as_laurent(x) -> LaurentInt:
    if isinstance(x, LaurentInt):
        return x
    if isinstance(x, int):
        return LaurentInt({0: x})
    raise TypeError(f"cannot coerce {type(x)!r} to LaurentInt")


def quantum_integer(n: int, x=None):
    """Balanced quantum integer x^(n-1) + x^(n-3) + ... + x^(1-n).

    The balanced sum avoids the quotient form, so the result is defined in
    any commutative ring in which x is invertible; in particular it makes
    sense at roots of unity where x - x^(-1) fails to be a unit.
    """
    if n < 0:
        raise ValueError("quantum integers are defined for n >= 0 here")
    if x is None:
        x = LaurentInt.x()
    result = x * 0
    for i in range(n):
        result = result + x ** (n - 1 - 2 * i)
    return result


# ---------------------------------------------------------------------------
# cyclotomic quotients


class CyclotomicElem:
    """Element of Z[z]/(1 + z + ... + z^(p-1)), coefficients optionally mod p.

    Coordinates are stored in the fixed basis z^0 ... z^(p-2); the relation
    z^(p-1) = -(1 + z + ... + z^(p-2)) performs the reduction.  `mod=None`
    means integer coefficients, `mod=p` reduces them to F_p.
    """

    __slots__ = ("p", "coords", "mod")

    def __init__(self, p: int, coords, mod: int | None = None):
        if p < 3 or not is_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if mod is not None and mod != p:
            raise ValueError("coefficient modulus must equal p when given")
        coords = [int(c) for c in coords]
        if len(coords) != p - 1:
            raise ValueError(f"need {p - 1} coordinates, got {len(coords)}")
        if mod is not None:
            coords = [c % mod for c in coords]
        self.p = p
        self.coords = tuple(coords)
        self.mod = mod

    @classmethod
    def zero(cls, p: int, mod: int | None = None) -> "CyclotomicElem":
        return cls(p, [0] * (p - 1), mod)

    @classmethod
    def one(cls, p: int, mod: int | None = None) -> "CyclotomicElem":
        return cls.from_powers(p, {0: 1}, mod)

    @classmethod
    def zeta(cls, p: int, exp: int = 1, mod: int | None = None) -> "CyclotomicElem":
        return cls.from_powers(p, {exp: 1}, mod)

    @classmethod
    def from_powers(cls, p: int, powers: dict, mod: int | None = None) -> "CyclotomicElem":
        """Build from a {exponent: coefficient} map; exponents wrap mod p."""
        coords = [0] * (p - 1)
        for e, c in powers.items():
            e %= p
            if e == p - 1:
                for j in range(p - 1):
                    coords[j] -= c
            else:
                coords[e] += c
        return cls(p, coords, mod)

    def _check(self, other: "CyclotomicElem"):
        if not isinstance(other, CyclotomicElem):
            raise TypeError("expected a CyclotomicElem")
        if other.p != self.p or other.mod != self.mod:
            raise ValueError("mixed cyclotomic rings")

    def __add__(self, other):
        self._check(other)
        return CyclotomicElem(self.p, [a + b for a, b in zip(self.coords, other.coords)], self.mod)

    def __sub__(self, other):
        self._check(other)
        return CyclotomicElem(self.p, [a - b for a, b in zip(self.coords, other.coords)], self.mod)

    def __neg__(self):
        return CyclotomicElem(self.p, [-a for a in self.coords], self.mod)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicElem(self.p, [a * other for a in self.coords], self.mod)
        self._check(other)
        powers: dict[int, int] = {}
        for e1, c1 in enumerate(self.coords):
            if c1 == 0:
                continue
            for e2, c2 in enumerate(other.coords):
                if c2 == 0:
                    continue
                e = (e1 + e2) % self.p
                powers[e] = powers.get(e, 0) + c1 * c2
        return CyclotomicElem.from_powers(self.p, powers, self.mod)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = CyclotomicElem.one(self.p, self.mod)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "CyclotomicElem":
        """The involution z -> z^(-1)."""
        return CyclotomicElem.from_powers(
            self.p, {(-e) % self.p: c for e, c in enumerate(self.coords)}, self.mod
        )

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def invariant_coords(self) -> tuple[int, ...]:
        """Coordinates in the canonical basis of the conjugation-invariant
        subring: the unit together with z^m + z^(p-m) for 2 <= m <= (p-1)/2.

        Raises ValueError when the element is not conjugation-invariant.
        """
        if self.conjugate() != self:
            raise ValueError("element is not conjugation-invariant")
        a = self.coords
        return (a[0],) + tuple(a[m] for m in range(2, (self.p - 1) // 2 + 1))

    def __eq__(self, other):
        return (
            isinstance(other, CyclotomicElem)
            and self.p == other.p
            and self.mod == other.mod
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.p, self.mod, self.coords))

    def __repr__(self):
        ring = f"F_{self.p}" if self.mod else "Z"
        return f"CyclotomicElem(p={self.p}, {ring}, coords={list(self.coords)})"


def cyclotomic_eval(f: LaurentInt, p: int, sign: int = 1, mod_p: bool = False) -> CyclotomicElem:
    """Substitute x = sign * zeta_p into an integer Laurent polynomial.

    With `mod_p` the coefficients are additionally reduced modulo p.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    powers = {}
    for e, c in f.coeffs.items():
        s = c if (sign == 1 or e % 2 == 0) else -c
        powers[e] = powers.get(e, 0) + s
    return CyclotomicElem.from_powers(p, powers, p if mod_p else None)


def zeta_quantum(p: int, n: int, sign: int = 1, mod_p: bool = False) -> CyclotomicElem:
    """The quantum integer [n] evaluated at sign * zeta_p."""
    return cyclotomic_eval(quantum_integer(n), p, sign, mod_p)
