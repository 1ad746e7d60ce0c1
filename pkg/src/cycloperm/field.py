"""Finite fields F_q = F_p[x]/(m(x)) at desk scale.

Elements are length-k coefficient vectors over Z/pZ (constant term
first); a field carries a fixed primitive root omega, so every nonzero
element has a canonical discrete-log normal form ``w^E`` used in all
textual I/O.  Construction verifies the modulus is irreducible and
omega is primitive (against the factorization of q-1).

Default moduli come from a small table of Conway polynomials (plus the
degree-1 case x - r with r the least primitive root, computed on the
fly); outside the table we fall back to the lexicographically smallest
primitive polynomial, which keeps the defining property that matters
here: the class of x generates F_q^*.

Discrete logarithms use baby-step giant-step; keep q below ~2^20 on
dlog-dependent paths (BSGS memory grows like sqrt(q)).
"""

from __future__ import annotations

import math

from .arith import factorize, is_prime, multiplicative_order

# Conway polynomials, coefficient lists c0..ck (constant first, monic).
# Every entry is checked in the test suite: irreducible and x primitive.
CONWAY_TABLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}


class FqElem:
    """Element of F_q as an immutable coefficient vector mod (p, modulus)."""

    __slots__ = ("cfg", "coeffs")

    def __init__(self, cfg: "FqConfig", coeffs):
        coeffs = tuple(c % cfg.p for c in coeffs)
        if len(coeffs) != cfg.k:
            raise ValueError(
                f"need exactly {cfg.k} coefficients, got {len(coeffs)}")
        self.cfg = cfg
        self.coeffs = coeffs

    def _check(self, other):
        if not isinstance(other, FqElem) or other.cfg is not self.cfg:
            raise ValueError("elements belong to different fields")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        self._check(other)
        return FqElem(self.cfg,
                      [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return FqElem(self.cfg,
                      [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return FqElem(self.cfg, [-a for a in self.coeffs])

    def __mul__(self, other):
        self._check(other)
        cfg = self.cfg
        k, p = cfg.k, cfg.p
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        # reduce by the monic modulus: x^k = -(m_0 + ... + m_{k-1} x^{k-1})
        red = cfg._reduction
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg] % p
            if c:
                base = deg - k
                for j, r in enumerate(red):
                    prod[base + j] += c * r
            prod[deg] = 0
        return FqElem(cfg, prod[:k])

    def inverse(self) -> "FqElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self ** (self.cfg.q - 2)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __pow__(self, e: int) -> "FqElem":
        if self.is_zero():
            if e < 0:
                raise ZeroDivisionError("negative power of 0 in F_q")
            return self.cfg.one if e == 0 else self
        e %= self.cfg.q - 1
        out = self.cfg.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, FqElem) and other.cfg is self.cfg
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return self.cfg.elem_str(self)

    def __repr__(self):
        return f"FqElem({self.cfg.p}^{self.cfg.k}, {list(self.coeffs)})"


class FqConfig:
    """A constructed field F_q with a fixed primitive root omega."""

    def __init__(self, p: int, k: int, modulus, omega_coeffs):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(c % p for c in modulus)
        if len(self.modulus) != k + 1 or self.modulus[k] != 1:
            raise ValueError("modulus must be monic of degree k")
        # coefficients of x^k in terms of lower powers
        self._reduction = tuple((-c) % p for c in self.modulus[:k])
        self.zero = FqElem(self, (0,) * k)
        self.one = FqElem(self, (1,) + (0,) * (k - 1))
        self.omega = FqElem(self, omega_coeffs)
        self.q_minus_1_factors = factorize(self.q - 1)
        self._dlog_table: dict[tuple, int] | None = None
        if not _is_irreducible(self.modulus, p):
            raise ValueError(f"modulus {list(self.modulus)} is reducible over F_{p}")
        if not self._is_primitive(self.omega):
            raise ValueError(f"omega {list(omega_coeffs)} is not a primitive root")

    def _is_primitive(self, x: FqElem) -> bool:
        if x.is_zero():
            return False
        n = self.q - 1
        return all(not (x ** (n // ell)) == self.one
                   for ell, _ in self.q_minus_1_factors)

    def from_int(self, n: int) -> FqElem:
        """Image of the integer n under Z -> F_q."""
        return FqElem(self, (n,) + (0,) * (self.k - 1))

    def omega_pow(self, e: int) -> FqElem:
        return self.omega**e

    def elements(self):
        """All q elements (coefficient-vector order)."""
        import itertools
        for coeffs in itertools.product(range(self.p), repeat=self.k):
            yield FqElem(self, coeffs)

    def dlog_table(self) -> dict[tuple, int]:
        """coeffs -> e with omega^e; built once by iterating powers."""
        if self._dlog_table is None:
            table = {}
            acc = self.one
            for e in range(self.q - 1):
                table[acc.coeffs] = e
                acc = acc * self.omega
            self._dlog_table = table
        return self._dlog_table

    def elem_str(self, x: FqElem) -> str:
        """Canonical text form: '0' or 'w^E' with 0 <= E < q-1."""
        if x.is_zero():
            return "0"
        return f"w^{self.dlog_table()[x.coeffs]}"

    def parse_elem(self, text: str) -> FqElem:
        """Parse '0', 'w^E', 'w', '[c0,c1,...]', or a plain integer."""
        text = text.strip()
        if text == "0":
            return self.zero
        if text == "w":
            return self.omega
        if text.startswith("w^"):
            return self.omega ** int(text[2:])
        if text.startswith("[") and text.endswith("]"):
            coeffs = [int(c) for c in text[1:-1].split(",")] if text[1:-1].strip() else []
            if len(coeffs) != self.k:
                raise ValueError(f"need {self.k} coefficients in {text!r}")
            return FqElem(self, coeffs)
        try:
            return self.from_int(int(text))
        except ValueError:
            raise ValueError(f"cannot parse field element {text!r}") from None

    def __repr__(self):
        return f"FqConfig(p={self.p}, k={self.k}, modulus={list(self.modulus)})"


def _poly_mod(a: list[int], mod, p: int) -> list[int]:
    a = [c % p for c in a]
    k = len(mod) - 1
    inv_lead = pow(mod[k], -1, p)
    for deg in range(len(a) - 1, k - 1, -1):
        c = a[deg] * inv_lead % p
        if c:
            for j in range(k + 1):
                a[deg - k + j] = (a[deg - k + j] - c * mod[j]) % p
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_mul_mod(a, b, mod, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] += ca * cb
    return _poly_mod(prod, mod, p)


def _trim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_gcd(a, b, p):
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while any(b):
        a = _poly_mod(a, b, p)
        a, b = b, _trim(a)
    return a


def _x_power_mod(e: int, mod, p: int):
    """x^e mod (mod, p) by square and multiply."""
    result = [1]
    base = _poly_mod([0, 1], mod, p)
    while e:
        if e & 1:
            result = _poly_mul_mod(result, base, mod, p)
        base = _poly_mul_mod(base, base, mod, p)
        e >>= 1
    return result


def _is_irreducible(modulus, p: int) -> bool:
    k = len(modulus) - 1
    if k == 1:
        return True
    if k <= 3:
        # degree 2 or 3: irreducible iff no root in F_p
        for r in range(p):
            acc = 0
            for c in reversed(modulus):
                acc = (acc * r + c) % p
            if acc == 0:
                return False
        return True
    # no irreducible factor of degree <= k/2: gcd(modulus, x^{p^i} - x) = 1
    mod = list(modulus)
    for i in range(1, k // 2 + 1):
        xp = _x_power_mod(p**i, mod, p)
        diff = list(xp)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(mod, diff, p)
        if len(g) > 1:
            return False
    return True


def least_primitive_root(p: int) -> int:
    for g in range(2, p):
        if multiplicative_order(g, p) == p - 1:
            return g
    raise ValueError(f"{p} has no primitive root (not prime?)")


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Default monic primitive modulus for F_{p^k}.

    Conway polynomial from the built-in table when available; x - r with
    r the least primitive root for k = 1; otherwise the lexicographically
    smallest primitive polynomial (by the coefficient tuple c0..c_{k-1}).
    """
    if k == 1:
        return ((-least_primitive_root(p)) % p, 1)
    if (p, k) in CONWAY_TABLE:
        return CONWAY_TABLE[(p, k)]
    import itertools
    for tail in itertools.product(range(p), repeat=k):
        cand = tuple(tail) + (1,)
        if cand[0] == 0 or not _is_irreducible(cand, p):
            continue
        try:
            FqConfig(p, k, cand, (0, 1) + (0,) * (k - 2))
        except ValueError:
            continue
        return cand
    raise ValueError(f"no primitive polynomial found for p={p}, k={k}")


def make_field(p: int, k: int, modulus=None, omega=None) -> FqConfig:
    """Construct F_{p^k}; all invariants verified.

    With the default modulus, omega is the class of x (for k = 1: the
    least primitive root).  A supplied omega is always checked to have
    order exactly q - 1; a supplied modulus is checked irreducible.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if modulus is None:
        modulus = default_modulus(p, k)
    modulus = tuple(c % p for c in modulus)
    if omega is None:
        if k == 1:
            omega_coeffs = ((p - modulus[0]) % p,)  # the root of x + c0
        else:
            omega_coeffs = (0, 1) + (0,) * (k - 2)
    elif isinstance(omega, FqElem):
        omega_coeffs = omega.coeffs
    else:
        omega_coeffs = tuple(omega)
    return FqConfig(p, k, modulus, omega_coeffs)


def dlog(cfg: FqConfig, base: FqElem, x: FqElem) -> int:
    """Least e >= 0 with base^e = x, by baby-step giant-step.

    Raises ValueError when x is outside the subgroup generated by base.
    """
    if base.is_zero() or x.is_zero():
        raise ValueError("dlog needs nonzero base and argument")
    n = cfg.q - 1
    order = n
    for ell, _ in cfg.q_minus_1_factors:
        while order % ell == 0 and base ** (order // ell) == cfg.one:
            order //= ell
    bound = math.isqrt(order - 1) + 1 if order > 1 else 1
    baby = {}
    acc = cfg.one
    for j in range(bound):
        baby.setdefault(acc.coeffs, j)
        acc = acc * base
    giant = (base**bound).inverse()
    cur = x
    for i in range(bound + 1):
        j = baby.get(cur.coeffs)
        if j is not None and i * bound + j < order:
            return i * bound + j
        cur = cur * giant
    raise ValueError("element is not in the subgroup generated by the base")


class CyclotomicContext:
    """A field together with a divisor d of q-1 and the subgroup data.

    C is the index-d subgroup of F_q^*, of order m = (q-1)/d, with cosets
    C_i = omega^i C; zeta = omega^m is a primitive d-th root of unity.
    """

    def __init__(self, field: FqConfig, d: int):
        if d < 1 or (field.q - 1) % d != 0:
            raise ValueError(f"d={d} does not divide q-1={field.q - 1}")
        self.field = field
        self.d = d
        self.m = (field.q - 1) // d
        self.zeta = field.omega**self.m
        self._omega_inv = field.omega.inverse()
        self._coset_cache: dict[tuple, int] = {}

    def coset_index(self, x: FqElem) -> int:
        """The unique i with x in C_i, by testing (omega^-i x)^m = 1.

        This avoids discrete logarithms entirely.
        """
        if x.is_zero():
            raise ValueError("0 belongs to no coset of C")
        cached = self._coset_cache.get(x.coeffs)
        if cached is not None:
            return cached
        y = x
        for i in range(self.d):
            if y**self.m == self.field.one:
                self._coset_cache[x.coeffs] = i
                return i
            y = y * self._omega_inv
        raise ValueError("element outside F_q^* (unreachable for x != 0)")

    def __repr__(self):
        return (f"CyclotomicContext(q={self.field.q}, d={self.d}, "
                f"m={self.m})")
