"""Cycle types and exact cycle-index polynomials.

A cycle type is the monomial x_1^k1 * x_2^k2 * ... recording how many
cycles of each length a permutation has; a cycle index is a rational
linear combination of such monomials (for a group: the average of its
elements' cycle types, so the coefficients sum to 1; for a plain set of
permutations we keep the un-normalized "cycle counter", whose
coefficients sum to the set's cardinality).

Implemented here:

* the cycle indices of Sym(d), of the regular representation of Z/mZ,
  and of the holomorph Hol(Z/p^kZ) (closed formulas), assembled to
  Hol(Z/mZ) with the star product along the CRT splitting;
* the star product on cycle-type polynomials, which computes cycle
  types/indices of direct products of permutation groups:
  x_i^e * x_j^f -> x_lcm(i,j)^(e*f*gcd(i,j)), extended bilinearly;
* substitution of cycle indices into cycle indices (the imprimitive
  wreath-product composition), giving the cycle indices of the groups
  W(d,m) and W1(d,m) of wreath elements over Hol(Z/mZ) resp. the
  translations only;
* the equal-multiplier subgroup W=(d,m): its cycle index is assembled
  from per-multiplier cycle counters, grouped by the "unit signature"
  of the multiplier (its order data per prime power).

All coefficients are exact Fractions; no floating point anywhere.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction

from .arith import divisors, factorize, multiplicative_order, nu, phi

# A unit signature mod p^k: for odd p (and p^0 = 1) a positive divisor of
# phi(p^k); for p = 2, k >= 1 a pair (eps, o2) with eps in {0,1} and o2 a
# power of 2 dividing max(1, 2^(k-2)).  A signature vector pairs each
# prime power of m with its signature: tuple of (p, k, sig).
Signature = "int | tuple[int, int]"
SignatureVec = "tuple[tuple[int, int, object], ...]"


class CycleType:
    """Multiset of cycle lengths, as an immutable exponent-map monomial."""

    __slots__ = ("counts",)

    def __init__(self, counts):
        """counts: mapping or iterable of (length, multiplicity) pairs."""
        if isinstance(counts, dict):
            items = counts.items()
        else:
            items = counts
        merged: dict[int, int] = {}
        for length, mult in items:
            if length < 1 or mult < 0:
                raise ValueError(f"bad cycle-type entry ({length}, {mult})")
            if mult:
                merged[length] = merged.get(length, 0) + mult
        self.counts = tuple(sorted(merged.items()))

    @classmethod
    def identity(cls, n: int) -> "CycleType":
        """Cycle type of the identity on n points."""
        return cls([(1, n)]) if n else cls([])

    def degree(self) -> int:
        return sum(length * mult for length, mult in self.counts)

    def mul(self, other: "CycleType") -> "CycleType":
        """Ordinary monomial product (disjoint union of cycle multisets)."""
        return CycleType(list(self.counts) + list(other.counts))

    def star(self, other: "CycleType") -> "CycleType":
        """Star product: cycle type of the direct-product permutation.

        x_i^e * x_j^f contributes x_lcm(i,j)^(e*f*gcd(i,j)); the result is
        the monomial product over all variable-power pairs.
        """
        out: dict[int, int] = {}
        for i, e in self.counts:
            for j, f in other.counts:
                g = math.gcd(i, j)
                length = i * j // g
                out[length] = out.get(length, 0) + e * f * g
        return CycleType(out)

    def stretch(self, t: int) -> "CycleType":
        """Substitute x_i -> x_{i*t}."""
        if t < 1:
            raise ValueError(f"stretch factor must be >= 1, got {t}")
        return CycleType([(length * t, mult) for length, mult in self.counts])

    def __eq__(self, other):
        return isinstance(other, CycleType) and self.counts == other.counts

    def __hash__(self):
        return hash(self.counts)

    def __lt__(self, other):
        return self.counts < other.counts

    def __str__(self):
        if not self.counts:
            return "1"
        return "*".join(
            f"x{length}" if mult == 1 else f"x{length}^{mult}"
            for length, mult in self.counts)

    def __repr__(self):
        return f"CycleType({str(self)})"

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """Parse 'x1^3*x2^2' (exponent 1 may be omitted)."""
        text = text.strip()
        if text == "1":
            return cls([])
        pairs = []
        for part in text.split("*"):
            m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", part.strip())
            if not m:
                raise ValueError(f"bad cycle-type term {part!r}")
            pairs.append((int(m.group(1)), int(m.group(2) or 1)))
        return cls(pairs)


class CycleIndex:
    """Rational linear combination of cycle types of one common degree."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[CycleType, Fraction] = {}
        if terms:
            for ct, coeff in (terms.items() if isinstance(terms, dict) else terms):
                self._add_term(ct, Fraction(coeff))

    def _add_term(self, ct: CycleType, coeff: Fraction):
        c = self.terms.get(ct, Fraction(0)) + coeff
        if c:
            self.terms[ct] = c
        else:
            self.terms.pop(ct, None)

    @classmethod
    def of(cls, ct: CycleType, coeff=1) -> "CycleIndex":
        return cls([(ct, Fraction(coeff))])

    def degree(self) -> int:
        degs = {ct.degree() for ct in self.terms}
        if len(degs) > 1:
            raise ValueError(f"mixed degrees {sorted(degs)} in cycle index")
        return degs.pop() if degs else 0

    def coefficient_sum(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def __add__(self, other: "CycleIndex") -> "CycleIndex":
        out = CycleIndex(self.terms)
        for ct, c in other.terms.items():
            out._add_term(ct, c)
        return out

    def scale(self, factor) -> "CycleIndex":
        factor = Fraction(factor)
        if not factor:
            return CycleIndex()
        return CycleIndex({ct: c * factor for ct, c in self.terms.items()})

    def __mul__(self, other: "CycleIndex") -> "CycleIndex":
        """Ordinary polynomial product."""
        out = CycleIndex()
        for ct1, c1 in self.terms.items():
            for ct2, c2 in other.terms.items():
                out._add_term(ct1.mul(ct2), c1 * c2)
        return out

    def star(self, other: "CycleIndex") -> "CycleIndex":
        """Bilinear extension of the star product on monomials."""
        out = CycleIndex()
        for ct1, c1 in self.terms.items():
            for ct2, c2 in other.terms.items():
                out._add_term(ct1.star(ct2), c1 * c2)
        return out

    def stretch(self, t: int) -> "CycleIndex":
        return CycleIndex({ct.stretch(t): c for ct, c in self.terms.items()})

    def power(self, e: int) -> "CycleIndex":
        out = CycleIndex.of(CycleType([]))
        for _ in range(e):
            out = out * self
        return out

    def substitute(self, polys: list["CycleIndex"]) -> "CycleIndex":
        """Substitute polys[i-1] for x_i in every monomial, then expand."""
        out = CycleIndex()
        for ct, coeff in self.terms.items():
            term = CycleIndex.of(CycleType([]), coeff)
            for length, mult in ct.counts:
                if length > len(polys):
                    raise ValueError(f"no substitute supplied for x{length}")
                term = term * polys[length - 1].power(mult)
            out = out + term
        return out

    def sorted_terms(self) -> list[tuple[CycleType, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: item[0].counts)

    def __eq__(self, other):
        return isinstance(other, CycleIndex) and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for ct, coeff in self.sorted_terms():
            mono = "*".join(f"x{length}^{mult}" for length, mult in ct.counts)
            frac = f"{coeff.numerator}/{coeff.denominator}"
            parts.append(f"{frac}*{mono}" if mono else frac)
        return " + ".join(parts)

    def __repr__(self):
        return f"CycleIndex({str(self)})"

    @classmethod
    def parse(cls, text: str) -> "CycleIndex":
        """Parse the output of __str__ (terms 'N/D*x1^e1*...' joined by +)."""
        out = cls()
        for chunk in text.split("+"):
            parts = chunk.strip().split("*")
            m = re.fullmatch(r"(-?\d+)/(\d+)", parts[0].strip())
            if not m:
                raise ValueError(f"bad coefficient in {chunk!r}")
            coeff = Fraction(int(m.group(1)), int(m.group(2)))
            pairs = []
            for part in parts[1:]:
                pm = re.fullmatch(r"x(\d+)\^(\d+)", part.strip())
                if not pm:
                    raise ValueError(f"bad variable power {part!r}")
                pairs.append((int(pm.group(1)), int(pm.group(2))))
            out._add_term(CycleType(pairs), coeff)
        return out


def star_product(f: CycleIndex, g: CycleIndex) -> CycleIndex:
    return f.star(g)


def ci_stretch(f: CycleIndex, t: int) -> CycleIndex:
    return f.stretch(t)


def partitions_multiplicity(d: int):
    """Partitions of d in multiplicity form: dicts {part: multiplicity}."""

    def rec(remaining, max_part):
        if remaining == 0:
            yield {}
            return
        for part in range(min(remaining, max_part), 0, -1):
            for mult in range(remaining // part, 0, -1):
                for rest in rec(remaining - part * mult, part - 1):
                    out = dict(rest)
                    out[part] = mult
                    yield out

    return rec(d, d)


def ci_sym(d: int) -> CycleIndex:
    """Cycle index of Sym(d): sum over partitions with 1/prod(i^li * li!)."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    out = CycleIndex()
    for lam in partitions_multiplicity(d):
        weight = 1
        for part, mult in lam.items():
            weight *= part**mult * math.factorial(mult)
        out._add_term(CycleType(lam), Fraction(1, weight))
    return out


def cc_sym(d: int) -> CycleIndex:
    """Cycle counter of Sym(d) (d! times the cycle index)."""
    return ci_sym(d).scale(math.factorial(d))


def ci_regular(m: int) -> CycleIndex:
    """Cycle index of the regular representation of Z/mZ."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    out = CycleIndex()
    for o in divisors(m):
        out._add_term(CycleType([(o, m // o)]), Fraction(phi(o), m))
    return out


def ci_hol_pp(p: int, k: int) -> CycleIndex:
    """Cycle index of Hol(Z/p^kZ), by the closed formulas per parity of p.

    The coefficient of x_{2^k} for p = 2, k >= 3 is 2^(2k-3): the affine
    map ax+b is a full cycle iff a = 1 (mod 4) and b is odd, giving
    2^(k-2) * 2^(k-1) elements.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    q = p**k
    out = CycleIndex()
    if p > 2:
        group_order = p ** (2 * k - 1) * (p - 1)
        for w in range(1, k + 1):
            out._add_term(CycleType([(p**w, p ** (k - w))]),
                          Fraction(p ** (2 * w - 2) * (p - 1), group_order))
        for w in range(k):
            ct = {1: p ** (k - w)}
            for u in range(1, w + 1):
                ct[p**u] = p ** (k - w - 1) * (p - 1)
            out._add_term(CycleType(ct), Fraction(phi(p**w) * p**w, group_order))
        for w in range(k):
            for l in divisors(p - 1):
                if l == 1:
                    continue
                ct = {1: 1, l: (p ** (k - w) - 1) // l}
                for u in range(1, w + 1):
                    ct[l * p**u] = p ** (k - 1 - w) * (p - 1) // l
                out._add_term(CycleType(ct),
                              Fraction(p**k * phi(p**w) * phi(l), group_order))
        return out
    if k == 1:
        return CycleIndex([(CycleType([(1, 2)]), Fraction(1, 2)),
                           (CycleType([(2, 1)]), Fraction(1, 2))])
    if k == 2:
        return CycleIndex([(CycleType([(1, 4)]), Fraction(1, 8)),
                           (CycleType([(1, 2), (2, 1)]), Fraction(1, 4)),
                           (CycleType([(2, 2)]), Fraction(3, 8)),
                           (CycleType([(4, 1)]), Fraction(1, 4))])
    group_order = 2 ** (2 * k - 1)
    out._add_term(CycleType([(q, 1)]), Fraction(2 ** (2 * k - 3), group_order))
    for w in range(1, k):
        coeff = 2 ** (2 * w - 2) + phi(2 ** (w - 1)) * 2 ** (k - 1)
        out._add_term(CycleType([(2**w, 2 ** (k - w))]),
                      Fraction(coeff, group_order))
    for w in range(k - 1):
        ct = {1: 2 ** (k - w)}
        for u in range(1, w + 1):
            ct[2**u] = 2 ** (k - 1 - w)
        out._add_term(CycleType(ct), Fraction(phi(2**w) * 2**w, group_order))
    out._add_term(CycleType({1: 2, 2: 2 ** (k - 1) - 1}),
                  Fraction(2**k, group_order))
    for w in range(2, k - 1):
        ct = {1: 2, 2: 2 ** (k - w) - 1}
        for u in range(2, w + 1):
            ct[2**u] = 2 ** (k - 1 - w)
        out._add_term(CycleType(ct), Fraction(2 ** (k + w - 2), group_order))
    return out


def ci_hol(m: int) -> CycleIndex:
    """Cycle index of Hol(Z/mZ): star product over the CRT prime powers."""
    out = CycleIndex.of(CycleType([(1, 1)]))
    for p, k in factorize(m):
        out = out.star(ci_hol_pp(p, k))
    return out


def polya_compose(ci_top: CycleIndex, ci_base: CycleIndex) -> CycleIndex:
    """Cycle index of the imprimitive wreath product base wr top.

    Substitutes the i-stretched base cycle index for x_i in the top group's
    cycle index and expands.
    """
    d = ci_top.degree()
    return ci_top.substitute([ci_base.stretch(i) for i in range(1, d + 1)])


def ci_gcp(d: int, m: int) -> CycleIndex:
    """Cycle index of W(d,m) = Hol(Z/mZ) wr Sym(d).

    For m = (q-1)/d this is the cycle index of the group of index-d
    generalized cyclotomic permutations of F_q restricted to F_q^*.
    """
    return polya_compose(ci_sym(d), ci_hol(m))


def ci_focp(d: int, m: int) -> CycleIndex:
    """Cycle index of W1(d,m) = (Z/mZ)_reg wr Sym(d) (first-order case)."""
    return polya_compose(ci_sym(d), ci_regular(m))


# -- equal-multiplier subgroup ------------------------------------------------

def signatures_pp(p: int, k: int) -> list:
    """All unit signatures mod p^k, deterministically ordered.

    Odd p: divisors of phi(p^k) ascending.  p = 2: the single (0, 1) for
    k <= 1; otherwise pairs (eps, o2) with o2 | 2^(k-2), ordered by
    (o2, eps).
    """
    if p == 2:
        if k <= 1:
            return [(0, 1)]
        return [(eps, o2) for o2 in divisors(2 ** (k - 2)) for eps in (0, 1)]
    return divisors(phi(p**k))


def two_adic_split(a: int, k: int) -> tuple[int, int]:
    """Write the unit a of Z/2^kZ (k >= 2) as (-1)^eps * 5^e; return (eps, e).

    eps is read off a mod 4; e is recovered by baby-step giant-step in the
    subgroup generated by 5, which has order 2^(k-2).
    """
    q = 2**k
    if a % 2 == 0:
        raise ValueError(f"{a} is not a unit mod 2^{k}")
    eps = 0 if a % 4 == 1 else 1
    target = (-a) % q if eps else a % q
    n = 2 ** (k - 2)
    baby = {}
    acc = 1
    bound = math.isqrt(n - 1) + 1 if n > 1 else 1
    for j in range(bound):
        baby.setdefault(acc, j)
        acc = acc * 5 % q
    giant = pow(pow(5, bound, q), -1, q)
    cur = target
    for i in range(bound + 1):
        if cur in baby:
            return eps, (i * bound + baby[cur]) % n
        cur = cur * giant % q
    raise ValueError(f"{a} mod 2^{k} is not +/- a power of 5")


def signature_of(m: int, a: int) -> tuple:
    """Unit signature vector of a mod m: ((p, k, sig), ...) per prime power."""
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit mod {m}")
    out = []
    for p, k in factorize(m):
        pk = p**k
        if p == 2:
            if k == 1:
                out.append((p, k, (0, 1)))
            else:
                eps, e = two_adic_split(a % pk, k)
                o2 = multiplicative_order(pow(5, e, pk), pk) if e else 1
                out.append((p, k, (eps, o2)))
        else:
            out.append((p, k, multiplicative_order(a % pk, pk)))
    return tuple(out)


def signature_pow(p: int, k: int, sig, ell: int):
    """Signature of a^ell given the signature of a."""
    if p == 2:
        eps, o2 = sig
        eps_new = 1 if (eps == 1 and ell % 2 == 1) else 0
        return (eps_new, o2 // math.gcd(o2, ell))
    return sig // math.gcd(sig, ell)


def signature_count(m: int, sigvec) -> int:
    """Number of units of Z/mZ with the given signature vector."""
    out = 1
    for p, k, sig in sigvec:
        out *= phi(sig[1]) if p == 2 else phi(sig)
    return out


def affine_counter_pp(p: int, k: int, sig) -> CycleIndex:
    """Cycle counter of {x -> ax+b : b in Z/p^kZ} for any unit a with the
    given signature.  Coefficients sum to p^k; degree p^k.
    """
    if sig not in signatures_pp(p, k):
        raise ValueError(f"{sig} is not a valid signature mod {p}^{k}")
    q = p**k
    out = CycleIndex()
    if p > 2:
        o = sig
        nu_o = nu(p, o) if o > 1 else 0
        o_part = p**nu_o
        o_prime = o // o_part
        if o_prime > 1:  # a is not 1 mod p: one cycle type for all b
            ct = {1: 1, o_prime: (p ** (k - nu_o) - 1) // o_prime}
            for u in range(1, nu_o + 1):
                length = p**u * o_prime
                ct[length] = ct.get(length, 0) + \
                    p ** (k - 1 - nu_o) * (p - 1) // o_prime
            out._add_term(CycleType(ct), Fraction(q))
            return out
        # a = 1 mod p (o is a power of p)
        ct = {1: q // o}
        for u in range(1, nu_o + 1):
            ct[p**u] = (p ** (k - 1) // o) * (p - 1)
        out._add_term(CycleType(ct), Fraction(o))
        for v in range(k - nu_o):
            out._add_term(CycleType([(p ** (k - v), p**v)]),
                          Fraction(phi(p ** (k - v))))
        return out
    if k == 0:
        return CycleIndex.of(CycleType([(1, 1)]))
    if k == 1:
        return CycleIndex([(CycleType([(1, 2)]), Fraction(1)),
                           (CycleType([(2, 1)]), Fraction(1))])
    eps, o2 = sig
    if k == 2:
        if eps == 0:
            return CycleIndex([(CycleType([(1, 4)]), Fraction(1)),
                               (CycleType([(2, 2)]), Fraction(1)),
                               (CycleType([(4, 1)]), Fraction(2))])
        return CycleIndex([(CycleType([(1, 2), (2, 1)]), Fraction(2)),
                           (CycleType([(2, 2)]), Fraction(2))])
    v = k - 2 - nu(2, o2) if o2 > 1 else k - 2
    v_cap = min(k - 3, v)
    if eps == 1:
        out._add_term(CycleType([(2 ** (k - 1 - v), 2 ** (1 + v))]),
                      Fraction(2 ** (k - 1)))
        ct = {1: 2, 2: 2 ** (2 + v_cap) - 1}
        for u in range(2, k - 2 - v_cap + 1):
            ct[2**u] = 2 ** (1 + v_cap)
        out._add_term(CycleType(ct), Fraction(2 ** (k - 1)))
        return out
    ct = {1: 2 ** (2 + v)}
    for u in range(1, k - 2 - v + 1):
        ct[2**u] = 2 ** (1 + v)
    out._add_term(CycleType(ct), Fraction(2 ** (k - 2 - v)))
    for w in range(2 + v):
        out._add_term(CycleType([(2 ** (k - w), 2**w)]),
                      Fraction(phi(2 ** (k - w))))
    return out


def affine_counter(m: int, sigvec, ell: int) -> CycleIndex:
    """Cycle counter of {x -> a^ell x + b : b in Z/mZ}, stretched by ell.

    The star product runs over the prime powers of m with each signature
    raised to the ell-th power; the result is then stretched x_i -> x_{i*ell}.
    Coefficients sum to m.
    """
    out = CycleIndex.of(CycleType([(1, 1)]))
    for p, k, sig in sigvec:
        out = out.star(affine_counter_pp(p, k, signature_pow(p, k, sig, ell)))
    return out.stretch(ell)


def ci_cp(d: int, m: int) -> CycleIndex:
    """Cycle index of the equal-multiplier subgroup W=(d,m) of W(d,m).

    For each unit signature vector, the per-power-cycle counters
    affine_counter(m, sig, ell), normalized by m, are substituted into
    CI(Sym(d)); the contributions are weighted by the number of units
    with that signature over phi(m).  (Substituting the raw counters
    into the cycle counter of Sym(d) undercounts by m^(d - #cycles);
    the normalized substitution keeps every coefficient sum at 1, which
    is also how the ordinary wreath-product composition works.)
    """
    if d < 1 or m < 1:
        raise ValueError("need d, m >= 1")
    sym = ci_sym(d)
    per_prime = [signatures_pp(p, k) for p, k in factorize(m)]
    primes = factorize(m)
    total = CycleIndex()
    for combo in itertools.product(*per_prime):
        sigvec = tuple((p, k, sig) for (p, k), sig in zip(primes, combo))
        n = signature_count(m, sigvec)
        deltas = [affine_counter(m, sigvec, ell).scale(Fraction(1, m))
                  for ell in range(1, d + 1)]
        total = total + sym.substitute(deltas).scale(Fraction(n, phi(m)))
    return total
