"""Exact arithmetic in GF(p^m) backed by log/antilog tables.

Elements are identified by a canonical index in [0, q): the index is the
base-p evaluation of the coefficient vector (ascending degree), so index 0
is the zero element and indices below p are the constants.

The construction is deterministic: with no modulus given, the
lexicographically smallest monic irreducible polynomial is selected
(coefficients compared from the highest degree down), and the primitive
element is the one with the smallest canonical index.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import (
    BadDecomposition,
    DependentBasis,
    FieldTooLarge,
    KDoesNotDivide,
    MixedFields,
    NotPrime,
    ReducibleModulus,
)

DEFAULT_TABLE_CAP = 1 << 20


def is_prime(n: int) -> bool:
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


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending, by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# --- polynomial helpers over F_p; coefficients ascending by degree ---

def _trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _poly_mul(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _trim(tuple(out))


def _poly_rem(f, g, p):
    """Remainder of f modulo monic g."""
    f = list(f)
    dg = len(g) - 1
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] % p
        if c:
            for j in range(dg + 1):
                f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p
    return _trim(tuple(f[:dg]))


def _is_irreducible(f, p):
    m = len(f) - 1
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = low + (1,)
            if not _poly_rem(f, g, p):
                return False
    return True


def find_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m (high-degree-first lex order)."""
    for high_first in itertools.product(range(p), repeat=m):
        f = tuple(reversed(high_first)) + (1,)
        if _is_irreducible(f, p):
            return f
    raise ReducibleModulus(f"no irreducible polynomial found for p={p}, m={m}")


class FieldElement:
    """An element of a fixed FiniteField, identified by canonical index."""

    __slots__ = ("field", "index")

    def __init__(self, field: "FiniteField", index: int):
        self.field = field
        self.index = index

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.digits(self.index)

    def _check(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other)!r}")
        if other.field.key != self.field.key:
            raise MixedFields("elements belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.add_idx(self.index, other.index))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.sub_idx(self.index, other.index))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_idx(self.index))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul_idx(self.index, other.index))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_idx(self.index, e))

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and other.field.key == self.field.key
            and other.index == self.index
        )

    def __hash__(self):
        return hash((self.field.key, self.index))

    def __bool__(self):
        return self.index != 0

    def __repr__(self):
        return f"FieldElement({self.index} in GF({self.field.p}^{self.field.m}))"


class FiniteField:
    """GF(p^m) with full exp/log tables; immutable after construction."""

    def __init__(self, p, m, modulus=None, omega=None, table_cap=DEFAULT_TABLE_CAP):
        if not is_prime(p):
            raise NotPrime(f"p={p} is not prime")
        if m < 1:
            raise ValueError(f"m={m} must be >= 1")
        q = p**m
        if q > table_cap:
            raise FieldTooLarge(f"q={q} exceeds table cap {table_cap}")
        self.p = p
        self.m = m
        self.q = q
        if modulus is None:
            modulus = find_modulus(p, m)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ReducibleModulus(
                    f"modulus must be monic of degree {m}, got {modulus}"
                )
            if not _is_irreducible(modulus, p):
                raise ReducibleModulus(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus

        self._digits = [self._index_digits(i) for i in range(q)]

        if omega is None:
            omega = self._find_primitive()
        elif not self._is_primitive(omega):
            raise ValueError(f"element {omega} is not primitive")
        self.omega_idx = omega

        # exp/log: exp[i] = omega^i as an index, log inverts it on nonzeros
        exp = [0] * (q - 1)
        log = [None] * q
        cur = 1  # the constant 1
        for i in range(q - 1):
            exp[i] = cur
            log[cur] = i
            cur = self._mul_raw(cur, omega)
        if cur != 1 or any(log[i] is None for i in range(1, q)):
            raise ValueError("exp table did not close; omega is not primitive")
        self.exp = exp
        self.log = log

        self._add_table = None
        self._neg_table = None
        self._subfield_maps = {}

    # --- canonical index <-> digit vector ---

    def _index_digits(self, i):
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(i % p)
            i //= p
        return tuple(out)

    def digits(self, i: int) -> tuple[int, ...]:
        return self._digits[i]

    def index_of(self, coeffs) -> int:
        idx = 0
        for c in reversed(tuple(coeffs)):
            idx = idx * self.p + (c % self.p)
        return idx

    # --- raw arithmetic on indices (no tables needed) ---

    def _mul_raw(self, i, j):
        prod = _poly_mul(self._digits[i], self._digits[j], self.p)
        return self.index_of(_poly_rem(prod, self.modulus, self.p))

    def _pow_raw(self, i, e):
        acc, base = 1, i
        while e:
            if e & 1:
                acc = self._mul_raw(acc, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return acc

    def _is_primitive(self, i):
        if i == 0:
            return False
        n = self.q - 1
        if n == 1:
            return True
        return all(self._pow_raw(i, n // f) != 1 for f in prime_factors(n))

    def _find_primitive(self):
        for i in range(1, self.q):
            if self._is_primitive(i):
                return i
        raise ValueError("no primitive element found (impossible)")

    # --- table-backed arithmetic ---

    def add_idx(self, i, j):
        p = self.p
        a, b = self._digits[i], self._digits[j]
        idx = 0
        for t in range(self.m - 1, -1, -1):
            idx = idx * p + (a[t] + b[t]) % p
        return idx

    def neg_idx(self, i):
        p = self.p
        a = self._digits[i]
        idx = 0
        for t in range(self.m - 1, -1, -1):
            idx = idx * p + (-a[t]) % p
        return idx

    def sub_idx(self, i, j):
        return self.add_idx(i, self.neg_idx(j))

    def mul_idx(self, i, j):
        if i == 0 or j == 0:
            return 0
        return self.exp[(self.log[i] + self.log[j]) % (self.q - 1)]

    def pow_idx(self, i, e):
        if e < 0:
            raise ValueError("negative exponent")
        if i == 0:
            return 0 if e > 0 else 1
        return self.exp[(self.log[i] * e) % (self.q - 1)]

    def frobenius_idx(self, i, times=1):
        return self.pow_idx(i, self.p**times)

    # --- element helpers ---

    def element(self, index: int) -> FieldElement:
        if not 0 <= index < self.q:
            raise ValueError(f"index {index} out of range for q={self.q}")
        return FieldElement(self, index)

    def from_coeffs(self, coeffs) -> FieldElement:
        if len(tuple(coeffs)) != self.m:
            raise ValueError(f"expected {self.m} coefficients")
        return FieldElement(self, self.index_of(coeffs))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def omega(self) -> FieldElement:
        return FieldElement(self, self.omega_idx)

    def elements(self):
        return (FieldElement(self, i) for i in range(self.q))

    # --- vectorized tables (built lazily; used by graph/oracle code) ---

    @property
    def add_table(self) -> np.ndarray:
        if self._add_table is None:
            p, q = self.p, self.q
            dtype = np.int16 if q <= (1 << 15) - 1 else np.int32
            idx = np.arange(q)
            table = np.zeros((q, q), dtype=dtype)
            for t in range(self.m):
                d = (idx // p**t) % p
                table += (((d[:, None] + d[None, :]) % p) * p**t).astype(dtype)
            self._add_table = table
        return self._add_table

    @property
    def neg_table(self) -> np.ndarray:
        if self._neg_table is None:
            self._neg_table = np.array(
                [self.neg_idx(i) for i in range(self.q)], dtype=np.int32
            )
        return self._neg_table

    @property
    def key(self):
        return (self.p, self.m, self.modulus, self.omega_idx)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.key == self.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return (
            f"FiniteField(p={self.p}, m={self.m}, modulus={self.modulus}, "
            f"omega={self.omega_idx})"
        )

    def subfield_map(self, a: int, b: int, k: int) -> "SubfieldMap":
        key = (a, b, k)
        if key not in self._subfield_maps:
            self._subfield_maps[key] = SubfieldMap(self, a, b, k)
        return self._subfield_maps[key]


def build_field(p, m, modulus=None, omega=None, table_cap=DEFAULT_TABLE_CAP):
    return FiniteField(p, m, modulus=modulus, omega=omega, table_cap=table_cap)


class ResidueSet:
    """Nonzero k-th powers R_k of a field, as a multiplicative subgroup."""

    __slots__ = ("field", "k", "indices")

    def __init__(self, field: FiniteField, k: int, indices: frozenset):
        self.field = field
        self.k = k
        self.indices = indices

    def __contains__(self, x):
        if isinstance(x, FieldElement):
            x = x.index
        return x in self.indices

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(sorted(self.indices))

    @property
    def elements(self):
        return [self.field.element(i) for i in sorted(self.indices)]


def kth_power_residues(field: FiniteField, k: int) -> ResidueSet:
    """R_k = {x^k : x nonzero}, of size (q-1)/k; requires k | q-1."""
    n = field.q - 1
    if n % k != 0:
        raise KDoesNotDivide(f"k={k} does not divide q-1={n}")
    members = frozenset(field.exp[(j * k) % n] for j in range(n // k))
    return ResidueSet(field, k, members)


# --- F_p linear algebra for the subfield coordinate map ---

def _invert_matrix_mod_p(mat, p):
    """Inverse of a square matrix over F_p, or None if singular."""
    n = len(mat)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] % p), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [(v * inv) % p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(v - f * w) % p for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class SubfieldMap:
    """Coordinates of GF(p^{ab}) over GF(p^a) in the basis {omega^{ik}}.

    The subfield GF(p^a) sits inside the big field as the fixed points of
    the a-fold Frobenius; tau = omega^{(q-1)/(p^a-1)} generates its
    multiplicative group and {1, tau, ..., tau^{a-1}} is an F_p-basis.
    One (ab)x(ab) linear system over F_p is inverted at construction, so
    each coordinate query is a single matrix-vector product.
    """

    def __init__(self, field: FiniteField, a: int, b: int, k: int):
        if a * b != field.m:
            raise BadDecomposition(f"m={field.m} != a*b = {a}*{b}")
        self.field = field
        self.a = a
        self.b = b
        self.k = k
        p, q, m = field.p, field.q, field.m
        sub_order = p**a - 1
        n = q - 1
        self.tau_pows = [field.exp[(j * (n // sub_order)) % n] for j in range(a)]
        self.basis = [field.exp[(i * k) % n] for i in range(b)]

        # column (i*a + j) holds the F_p digits of tau^j * omega^{ik}
        cols = []
        for i in range(b):
            for j in range(a):
                cols.append(field.digits(field.mul_idx(self.tau_pows[j], self.basis[i])))
        mat = [[cols[c][r] for c in range(m)] for r in range(m)]
        inv = _invert_matrix_mod_p(mat, p)
        if inv is None:
            raise DependentBasis(
                f"{{omega^(ik)}} is not a GF({p}^{a})-basis for k={k}"
            )
        self._inv = inv

    def coords_idx(self, x_idx: int) -> tuple[int, ...]:
        """Coordinates of x as b subfield elements (canonical indices)."""
        field, p, a = self.field, self.field.p, self.a
        d = field.digits(x_idx)
        sol = [sum(r * v for r, v in zip(row, d)) % p for row in self._inv]
        out = []
        for i in range(self.b):
            acc = 0
            for j in range(a):
                c = sol[i * a + j]
                if c:
                    acc = field.add_idx(acc, field.mul_idx(c, self.tau_pows[j]))
            out.append(acc)
        return tuple(out)

    def coords(self, x: FieldElement) -> tuple[FieldElement, ...]:
        return tuple(self.field.element(i) for i in self.coords_idx(x.index))

    def reconstruct_idx(self, coord_indices) -> int:
        field = self.field
        acc = 0
        for c, w in zip(coord_indices, self.basis):
            acc = field.add_idx(acc, field.mul_idx(c, w))
        return acc


def subfield_coordinates(field, a, b, k, x):
    """Coordinates of x in (F_{p^a})^b for the basis {1, w^k, ..., w^{(b-1)k}}."""
    smap = field.subfield_map(a, b, k)
    if isinstance(x, FieldElement):
        return smap.coords(x)
    return smap.coords_idx(x)


def zero_pattern(coords) -> tuple[bool, ...]:
    """Per-coordinate zero indicator; the only datum the count formula reads."""
    out = []
    for c in coords:
        idx = c.index if isinstance(c, FieldElement) else c
        out.append(idx == 0)
    return tuple(out)
