"""Polynomial and cyclotomic forms of maps on F_q, and switching between them.

A cyclotomic form (a, r) over a context with subgroup C of index d sends
0 to 0 and x in C_i to a_i * x^(r_i), with each r_i in {1, ..., m},
m = (q-1)/d.  Every such map has a unique polynomial form of degree at
most q-1, computed by a d-point DFT over the d-th roots of unity:

    (1/d) * sum_{i,j} zeta^(-ij) a_i T^(j*m + r_i).

The reverse direction groups the coefficients of the candidate
polynomial by the {1..m}-normalized remainders of their degrees and
inverts the Vandermonde system; the (i, j) entry of
d * V(1, zeta^-1, ..., zeta^-(d-1))^-1 is just zeta^(ij), so recovery
is an O(d^2) exact DFT, no linear algebra needed (d is invertible in
F_q because d | q-1).

Non-form inputs are reported by raising ``Rejected`` with a machine
readable reason code mirroring the halting conditions of the decision
procedure:

    nonzero-constant-term   constant term of the input is not 0
    too-many-terms          more than d^2 nonzero terms
    too-many-remainders     more than d distinct degree remainders
    not-a-partition         grouped coefficient supports overlap
    zero-branch-coefficient permutation check: some a_i = 0
    exponent-not-coprime    permutation check: gcd(r_i, m) > 1
    psi-not-bijective       induced coset map is not a bijection

Also here: the inverse of a permutation form in polynomial form
(exponents inverted mod m by extended Euclid), and the affine-shift
variant that peels a constant off the polynomial first.
"""

from __future__ import annotations

import math

from .arith import rem1
from .field import CyclotomicContext, FqElem
from .wreath import CosetPerm


class Rejected(Exception):
    """Input is not (the polynomial form of) a cyclotomic map/permutation."""

    def __init__(self, code: str, detail: str = ""):
        self.code = code
        super().__init__(f"{code}: {detail}" if detail else code)


class PolyForm:
    """Dense polynomial of degree <= q-1 over F_q (coefficient of T^0 first)."""

    __slots__ = ("cfg", "coeffs")

    def __init__(self, cfg, coeffs):
        if len(coeffs) > cfg.q:
            raise ValueError(f"degree exceeds q-1 = {cfg.q - 1}")
        coeffs = list(coeffs)
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            coeffs = [cfg.zero]
        self.cfg = cfg
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, cfg) -> "PolyForm":
        return cls(cfg, [cfg.zero])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, deg: int) -> FqElem:
        return self.coeffs[deg] if deg < len(self.coeffs) else self.cfg.zero

    def terms(self) -> list[tuple[int, FqElem]]:
        """Nonzero (degree, coefficient) pairs, ascending degree."""
        return [(i, c) for i, c in enumerate(self.coeffs) if not c.is_zero()]

    def eval(self, x: FqElem) -> FqElem:
        """Horner evaluation."""
        acc = self.cfg.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return (isinstance(other, PolyForm) and other.cfg is self.cfg
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for deg, c in self.terms():
            cs = self.cfg.elem_str(c)
            if deg == 0:
                parts.append(cs)
            elif deg == 1:
                parts.append(f"{cs}*T")
            else:
                parts.append(f"{cs}*T^{deg}")
        return " + ".join(parts)

    def __repr__(self):
        return f"PolyForm({str(self)})"

    @staticmethod
    def _split_terms(text: str) -> list[str]:
        """Split on top-level + and unary -, leaving brackets intact."""
        out = []
        buf = ""
        depth = 0
        for ch in text:
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            if depth == 0 and ch == "+":
                out.append(buf)
                buf = ""
            elif depth == 0 and ch == "-" and buf.strip():
                out.append(buf)
                buf = ch
            else:
                buf += ch
        out.append(buf)
        return out

    @classmethod
    def parse(cls, cfg, text: str) -> "PolyForm":
        """Parse 'COEF*T^DEG' terms joined by + or -; 'T' means T^1,
        a bare COEF is the constant term, a bare 'T^D' has coefficient 1."""
        coeffs = [cfg.zero] * cfg.q
        for raw in cls._split_terms(text.strip()):
            term = raw.strip()
            if not term:
                continue
            negate = term.startswith("-")
            if negate:
                term = term[1:].strip()
            if "T" in term:
                head, _, tail = term.partition("T")
                head = head.strip().rstrip("*").strip()
                coef = cfg.parse_elem(head) if head else cfg.one
                tail = tail.strip()
                if tail.startswith("^"):
                    deg = int(tail[1:])
                elif tail == "":
                    deg = 1
                else:
                    raise ValueError(f"cannot parse term {raw!r}")
            else:
                coef = cfg.parse_elem(term)
                deg = 0
            if deg >= cfg.q:
                raise ValueError(f"term degree {deg} exceeds q-1 = {cfg.q - 1}")
            if negate:
                coef = -coef
            coeffs[deg] = coeffs[deg] + coef
        return cls(cfg, coeffs)


class CyclotomicForm:
    """The pair (a, r): x -> a_i x^(r_i) on the coset C_i, 0 -> 0."""

    __slots__ = ("ctx", "a", "r")

    def __init__(self, ctx: CyclotomicContext, a, r):
        a = tuple(a)
        r = tuple(r)
        if len(a) != ctx.d or len(r) != ctx.d:
            raise ValueError(f"need d={ctx.d} branch coefficients and exponents")
        for ri in r:
            if not 1 <= ri <= ctx.m:
                raise ValueError(f"exponent {ri} outside 1..{ctx.m}")
        self.ctx = ctx
        self.a = a
        self.r = r

    @classmethod
    def identity(cls, ctx) -> "CyclotomicForm":
        one = ctx.field.one
        return cls(ctx, (one,) * ctx.d, (1,) * ctx.d)

    def __eq__(self, other):
        return (isinstance(other, CyclotomicForm) and other.ctx is self.ctx
                and other.a == self.a and other.r == self.r)

    def __hash__(self):
        return hash((self.a, self.r))

    def __str__(self):
        cfg = self.ctx.field
        alist = ",".join(cfg.elem_str(ai) for ai in self.a)
        rlist = ",".join(str(ri) for ri in self.r)
        return f"f(a=[{alist}], r=[{rlist}])"

    def __repr__(self):
        return f"CyclotomicForm({str(self)})"

    @classmethod
    def parse(cls, ctx, text: str) -> "CyclotomicForm":
        import re
        m = re.fullmatch(r"f\(a=\[(.*?)\],\s*r=\[(.*?)\]\)", text.strip())
        if not m:
            raise ValueError(f"cannot parse cyclotomic form {text!r}")
        a = [ctx.field.parse_elem(s) for s in m.group(1).split(",")]
        r = [int(s) for s in m.group(2).split(",")]
        return cls(ctx, a, r)


class PermutationAnalysis:
    """Verdict of the permutation check: form, coset map, flag."""

    __slots__ = ("form", "psi", "is_permutation")

    def __init__(self, form: CyclotomicForm, psi: CosetPerm,
                 is_permutation: bool = True):
        self.form = form
        self.psi = psi
        self.is_permutation = is_permutation


def eval_cyclotomic(f: CyclotomicForm, x: FqElem) -> FqElem:
    """Apply the piecewise map: 0 at 0, a_i x^(r_i) on C_i."""
    if x.is_zero():
        return f.ctx.field.zero
    i = f.ctx.coset_index(x)
    return f.a[i] * x ** f.r[i]


def cyclotomic_to_poly(f: CyclotomicForm) -> PolyForm:
    """Polynomial form (1/d) sum_{i,j} zeta^(-ij) a_i T^(j*m + r_i)."""
    ctx = f.ctx
    cfg = ctx.field
    d, m = ctx.d, ctx.m
    inv_d = cfg.from_int(d).inverse()
    zeta_inv_pows = [ctx.zeta ** (-e) for e in range(d)]
    coeffs = [cfg.zero] * cfg.q
    for i in range(d):
        if f.a[i].is_zero():
            continue
        scaled = inv_d * f.a[i]
        for j in range(d):
            deg = j * m + f.r[i]
            coeffs[deg] = coeffs[deg] + scaled * zeta_inv_pows[i * j % d]
    return PolyForm(cfg, coeffs)


def poly_to_cyclotomic(P: PolyForm, ctx: CyclotomicContext) -> CyclotomicForm:
    """Decide whether P is the polynomial form of an index-d cyclotomic map
    and recover a canonical (a, r) if so; raise Rejected otherwise.

    Branches with a_i = 0 receive the minimal exponent occurring among the
    nonzero branches (they land in the first remainder group), which is the
    normalization the round-trip guarantees rely on.
    """
    cfg = ctx.field
    d, m = ctx.d, ctx.m
    if P.cfg is not cfg:
        raise ValueError("polynomial belongs to a different field")
    if not P.coeff(0).is_zero():
        raise Rejected("nonzero-constant-term")
    if P.is_zero():
        return CyclotomicForm(ctx, (cfg.zero,) * d, (1,) * d)
    terms = P.terms()
    if len(terms) > d * d:
        raise Rejected("too-many-terms", f"{len(terms)} > d^2 = {d * d}")
    rhos = sorted({rem1(deg, m) for deg, _ in terms})
    if len(rhos) > d:
        raise Rejected("too-many-remainders", f"{len(rhos)} > d = {d}")
    # b_l = d * V(1, zeta^-1, ...)^-1 v_l, via the DFT identity: the (i, j)
    # entry of that matrix is zeta^(ij)
    zeta_pows = [ctx.zeta**e for e in range(d)]
    b = []
    for rho in rhos:
        v = [P.coeff(j * m + rho) for j in range(d)]
        b.append([sum((zeta_pows[i * j % d] * v[j] for j in range(d)),
                      cfg.zero) for i in range(d)])
    lcount = len(rhos)
    membership: list[list[int]] = [[] for _ in range(d)]
    for i in range(d):
        if not b[0][i].is_zero() or all(b[l][i].is_zero() for l in range(lcount)):
            membership[i].append(0)
        for l in range(1, lcount):
            if not b[l][i].is_zero():
                membership[i].append(l)
    if any(len(groups) != 1 for groups in membership):
        raise Rejected("not-a-partition")
    a = tuple(b[membership[i][0]][i] for i in range(d))
    r = tuple(rhos[membership[i][0]] for i in range(d))
    return CyclotomicForm(ctx, a, r)


def coset_map_of(f: CyclotomicForm) -> CosetPerm:
    """The induced map on cosets: psi(i) = coset index of a_i omega^(r_i i).

    Raises Rejected('psi-not-bijective') when the induced map is not a
    permutation of {0, ..., d-1}.
    """
    ctx = f.ctx
    omega = ctx.field.omega
    images = []
    for i in range(ctx.d):
        y = f.a[i] * omega ** (f.r[i] * i)
        images.append(ctx.coset_index(y))
    if sorted(images) != list(range(ctx.d)):
        raise Rejected("psi-not-bijective", f"images {images}")
    return CosetPerm(images)


def analyze_permutation(P: PolyForm, ctx: CyclotomicContext) -> PermutationAnalysis:
    """Full permutation check: recover the form, screen the branch data,
    and verify the induced coset map is a bijection."""
    form = poly_to_cyclotomic(P, ctx)
    for i in range(ctx.d):
        if form.a[i].is_zero():
            raise Rejected("zero-branch-coefficient", f"a_{i} = 0")
    for i in range(ctx.d):
        if math.gcd(form.r[i], ctx.m) > 1:
            raise Rejected("exponent-not-coprime",
                           f"gcd(r_{i}={form.r[i]}, m={ctx.m}) > 1")
    psi = coset_map_of(form)
    return PermutationAnalysis(form, psi, True)


def is_permutation_form(f: CyclotomicForm) -> bool:
    if any(ai.is_zero() for ai in f.a):
        return False
    if any(math.gcd(ri, f.ctx.m) > 1 for ri in f.r):
        return False
    try:
        coset_map_of(f)
    except Rejected:
        return False
    return True


def invert_permutation(f: CyclotomicForm) -> PolyForm:
    """Polynomial form of the inverse of a permutation form.

    With r_i rtilde_i + m t_i = 1 (extended Euclid, rtilde_i in {1..m}),
    the inverse is (1/d) sum_{i,j} zeta^(i (t_i - j r_i)) a_i^(-rtilde_i - j m)
    T^(rtilde_i + j m).
    """
    ctx = f.ctx
    cfg = ctx.field
    d, m = ctx.d, ctx.m
    if not is_permutation_form(f):
        raise ValueError("form is not a permutation; it has no inverse")
    inv_d = cfg.from_int(d).inverse()
    coeffs = [cfg.zero] * cfg.q
    for i in range(d):
        r_i = f.r[i]
        rt = rem1(pow(r_i, -1, m) if m > 1 else 1, m)
        t_i = (1 - r_i * rt) // m
        for j in range(d):
            deg = rt + j * m
            zeta_pow = ctx.zeta ** (i * (t_i - j * r_i))
            coeffs[deg] = coeffs[deg] + inv_d * zeta_pow * f.a[i] ** (-rt - j * m)
    return PolyForm(cfg, coeffs)


def analyze_affine_shift(Q: PolyForm, ctx: CyclotomicContext):
    """Peel the constant b = Q(0) and convert Q - b: returns (b, form),
    representing x -> a_i x^(r_i) + b.  Rejections propagate."""
    b = Q.coeff(0)
    shifted = PolyForm(Q.cfg, [Q.cfg.zero] + list(Q.coeffs[1:]))
    return b, poly_to_cyclotomic(shifted, ctx)
