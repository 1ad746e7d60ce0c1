"""Conjugacy in Hol(Z/mZ) and in the wreath groups, and complete
representative systems for full cycles and involutions.

Hol(Z/mZ): conjugating lam(a,b) yields lam(a, (1-a)z + c*b) for z in
Z/mZ and units c, so two maps are conjugate iff their multipliers agree
and their translation parts lie in the same orbit; the minimal orbit
member is the canonical class id.  lam(a,b) is an m-cycle iff
a = 1 (mod rad'(m)) and gcd(b, m) = 1 (the classical full-period
criterion for linear congruential generators).

W(d,m) = Hol wr Sym(d): two elements are conjugate iff their top
permutations have equal cycle type and, for every length l, the
multisets of Hol-conjugacy classes of forward cycle products along
l-cycles agree.  For the equal-multiplier subgroup W=(d,m) the same
test plus equality of the multipliers decides conjugacy *within*
W=(d,m); note that W(d,m)-conjugacy is strictly coarser (a conjugator
with non-constant components can change the multiplier), so the two
modes genuinely differ.

Representative systems:

* W long cycles: L_a = ((0..d-1), (lam(a,1), id, ..., id)) for
  a = 1 + k*rad'(m), exactly m/rad'(m) classes;
* W involutions: pair off the first 2k coordinates with identity maps
  and put a lexicographically ordered multiset of Hol involution class
  representatives on the fixed coordinates;
* W1 (translations only): a single long-cycle class; involutions are
  the same shape with translation parts in {b : 2b = 0}, zeros first;
* W= long cycles: L_a with all components sharing the multiplier a,
  for every unit a with a^d = 1 (mod rad'(m)); involutions as for W
  but with one involution multiplier a throughout.

The transposition pattern for involution representatives is always
(0,1)(2,3)...(2k-2,2k-1) with the fixed points at the end.
"""

from __future__ import annotations

import itertools
import math
from typing import NamedTuple

from .arith import crt_basis, factorize, nu_cap, rad_prime, units
from .field import CyclotomicContext
from .wreath import AffineMapZ, CosetPerm, WreathElem, fcp


def knuth_is_full_cycle(a: int, b: int, m: int) -> bool:
    """True iff x -> ax+b is an m-cycle on Z/mZ.

    Criterion: a = 1 (mod rad'(m)) and gcd(b, m) = 1.
    """
    if math.gcd(a, m) != 1:
        raise ValueError(f"multiplier {a} is not a unit mod {m}")
    return (a - 1) % rad_prime(m) == 0 and math.gcd(b, m) == 1


class HolClassId(NamedTuple):
    """Canonical conjugacy class label in Hol(Z/mZ)."""

    m: int
    a: int
    b_canon: int


def hol_class_id(g: AffineMapZ) -> HolClassId:
    """Minimal member of the orbit {(1-a)z + c*b} as the class label."""
    m = g.m
    if g.b == 0:
        return HolClassId(m, g.a, 0)
    step = math.gcd((1 - g.a) % m, m)
    best = min((w + c * g.b) % m
               for w in range(0, m, step)
               for c in units(m))
    return HolClassId(m, g.a, best)


def hol_conjugate(g: AffineMapZ, h: AffineMapZ) -> bool:
    """Conjugacy in Hol(Z/mZ), decided prime power by prime power."""
    if g.m != h.m:
        raise ValueError(f"modulus mismatch: {g.m} vs {h.m}")
    for p, k in factorize(g.m):
        pk = p**k
        if (g.a - h.a) % pk != 0:
            return False
        ideal_val = nu_cap(p, k, (1 - g.a) % pk)
        x_val = nu_cap(p, k, g.b % pk)
        y_val = nu_cap(p, k, h.b % pk)
        x_in = x_val >= ideal_val
        y_in = y_val >= ideal_val
        if x_in != y_in:
            return False
        if not x_in and x_val != y_val:
            return False
    return True


def conjugacy_invariant(g: WreathElem, mode: str = "W"):
    """Hashable complete invariant for wreath conjugacy.

    mode 'W': (cycle type of psi, per-length sorted class ids of forward
    cycle products).  mode 'Weq' (conjugacy within the equal-multiplier
    subgroup): additionally the common multiplier; input must have
    constant multipliers.
    """
    gz = g.to_z()
    by_len: dict[int, list[HolClassId]] = {}
    for cycle in gz.psi.cycles():
        by_len.setdefault(len(cycle), []).append(hol_class_id(fcp(gz, cycle)))
    fingerprint = tuple(sorted(
        (length, tuple(sorted(ids))) for length, ids in by_len.items()))
    if mode == "W":
        return (gz.psi.cycle_type(), fingerprint)
    if mode == "Weq":
        multipliers = {m.a for m in gz.maps}
        if len(multipliers) != 1:
            raise ValueError("Weq mode needs a constant multiplier")
        return (gz.psi.cycle_type(), multipliers.pop(), fingerprint)
    raise ValueError(f"unknown mode {mode!r}")


def wreath_conjugate(g: WreathElem, h: WreathElem, mode: str = "W") -> bool:
    """Conjugacy test: in W(d,m) for mode 'W', within W=(d,m) for 'Weq'."""
    if g.to_z().m != h.to_z().m or g.d != h.d:
        raise ValueError("wreath elements have different shapes")
    return conjugacy_invariant(g, mode) == conjugacy_invariant(h, mode)


def hol_involution_reps_pp(p: int, k: int) -> list[tuple[int, int]]:
    """Involution conjugacy class representatives in Hol(Z/p^kZ), as (a, b)."""
    pk = p**k
    if p > 2:
        return [(1, 0), (pk - 1, 0)]
    if k == 1:
        return [(1, 0), (1, 1)]
    if k == 2:
        return [(1, 0), (1, 2), (3, 0), (3, 1)]
    half = pk // 2
    return [(1, 0), (1, half), (pk - 1, 0), (pk - 1, 1),
            (half - 1, 0), (half + 1, 0)]


def hol_involution_reps(m: int) -> list[AffineMapZ]:
    """Involution conjugacy class representatives in Hol(Z/mZ).

    Per-prime-power representatives combined through the effective CRT;
    all output normalized to least nonnegative residues.
    """
    if m == 1:
        return [AffineMapZ.identity(1)]
    fac = factorize(m)
    basis = crt_basis([p**k for p, k in fac])
    per_prime = [hol_involution_reps_pp(p, k) for p, k in fac]
    out = []
    for combo in itertools.product(*per_prime):
        a = sum(ai * Mi for (ai, _), Mi in zip(combo, basis)) % m
        b = sum(bi * Mi for (_, bi), Mi in zip(combo, basis)) % m
        out.append(AffineMapZ(m, a, b))
    return out


def is_long_cycle(g: WreathElem) -> bool:
    """True iff g is a (d*m)-cycle: psi a single d-cycle whose forward
    cycle product satisfies the full-cycle criterion."""
    gz = g.to_z()
    cycles = gz.psi.cycles()
    if len(cycles) != 1:
        return False
    prod = fcp(gz, cycles[0])
    return knuth_is_full_cycle(prod.a, prod.b, prod.m)


def is_involution_elem(g: WreathElem) -> bool:
    """True iff g*g is the identity (the identity itself counts): psi an
    involution, paired components mutually inverse, fixed components
    involutions in Hol."""
    gz = g.to_z()
    if not gz.psi.is_involution():
        return False
    for cycle in gz.psi.cycles():
        if len(cycle) == 2:
            i, j = cycle
            if gz.maps[j] != gz.maps[i].inverse():
                return False
        else:
            if not gz.maps[cycle[0]].is_involution():
                return False
    return True


def classify_wreath(g: WreathElem) -> str:
    """'identity' | 'long-cycle' | 'involution' | 'neither'."""
    gz = g.to_z()
    if gz.is_identity():
        return "identity"
    if is_long_cycle(gz):
        return "long-cycle"
    if is_involution_elem(gz):
        return "involution"
    return "neither"


class RepSystem(NamedTuple):
    group: str  # 'W' | 'W1' | 'Weq'
    kind: str   # 'long-cycle' | 'involution'
    d: int
    m: int
    reps: tuple


def _involution_transposition_perm(d: int, k: int) -> CosetPerm:
    return CosetPerm.from_cycles(d, [(2 * j, 2 * j + 1) for j in range(k)])


def rep_system(group: str, kind: str, d: int, m: int) -> RepSystem:
    """Complete system of conjugacy class representatives of the given
    kind in W(d,m), W1(d,m) or W=(d,m)."""
    if group not in ("W", "W1", "Weq"):
        raise ValueError(f"unknown group {group!r}")
    if kind not in ("long-cycle", "involution"):
        raise ValueError(f"unknown kind {kind!r}")
    ident = AffineMapZ.identity(m)
    reps: list[WreathElem] = []
    if kind == "long-cycle":
        cycle = CosetPerm.from_cycles(d, [tuple(range(d))])
        rp = rad_prime(m)
        if group == "W":
            multipliers = [1 + j * rp for j in range(m // rp)]
            for a in multipliers:
                reps.append(WreathElem(cycle, [AffineMapZ(m, a, 1)]
                                       + [ident] * (d - 1)))
        elif group == "W1":
            reps.append(WreathElem(cycle, [AffineMapZ(m, 1, 1)]
                                   + [ident] * (d - 1)))
        else:
            for a in units(m):
                if pow(a, d, rp) == 1 % rp:
                    reps.append(WreathElem(
                        cycle, [AffineMapZ(m, a, 1)]
                        + [AffineMapZ(m, a, 0)] * (d - 1)))
        return RepSystem(group, kind, d, m, tuple(reps))
    # involutions
    if group == "W":
        classes = sorted(hol_involution_reps(m), key=lambda g: (g.a, g.b))
        for k in range(d // 2 + 1):
            psi = _involution_transposition_perm(d, k)
            for combo in itertools.combinations_with_replacement(
                    classes, d - 2 * k):
                reps.append(WreathElem(psi, [ident] * (2 * k) + list(combo)))
    elif group == "W1":
        has_half = m % 2 == 0 and m > 1
        for k in range(d // 2 + 1):
            psi = _involution_transposition_perm(d, k)
            max_nonzero = d - 2 * k if has_half else 0
            for nonzero in range(max_nonzero + 1):
                zeros = d - 2 * k - nonzero
                maps = ([ident] * (2 * k) + [AffineMapZ(m, 1, 0)] * zeros
                        + [AffineMapZ(m, 1, m // 2)] * nonzero)
                reps.append(WreathElem(psi, maps))
    else:
        all_classes = hol_involution_reps(m)
        invol_units = [a for a in units(m) if a * a % m == 1 % m]
        for k in range(d // 2 + 1):
            psi = _involution_transposition_perm(d, k)
            for a in invol_units:
                same_a = sorted((g for g in all_classes if g.a == a),
                                key=lambda g: (g.a, g.b))
                paired = [AffineMapZ(m, a, 0)] * (2 * k)
                if d == 2 * k:
                    reps.append(WreathElem(psi, paired))
                    continue
                for combo in itertools.combinations_with_replacement(
                        same_a, d - 2 * k):
                    reps.append(WreathElem(psi, paired + list(combo)))
    return RepSystem(group, kind, d, m, tuple(reps))


_FIELD_GROUP_TO_WREATH = {"GCP": "W", "FOCP": "W1", "CP": "Weq"}


def reps_as_cyclotomic(group: str, kind: str, ctx: CyclotomicContext) -> list:
    """Representative systems at field level, in cyclotomic form.

    Takes the wreath representatives for the matching group over
    m = (q-1)/d, rewrites them over C (b -> omega^(d*b)) and maps them
    through the form isomorphism.  Every output is verified to be a
    permutation form of the claimed kind (full cycle on F_q^* resp.
    involution), by materializing it.
    """
    from .forms import eval_cyclotomic, is_permutation_form
    from .wreath import wreath_to_cyclotomic
    if group not in _FIELD_GROUP_TO_WREATH:
        raise ValueError(f"unknown field-level group {group!r}")
    system = rep_system(_FIELD_GROUP_TO_WREATH[group], kind, ctx.d, ctx.m)
    out = []
    for g in system.reps:
        form = wreath_to_cyclotomic(g.to_c(ctx))
        if not is_permutation_form(form):
            raise AssertionError(f"representative {g} did not map to a "
                                 f"permutation form")
        _verify_kind(form, kind, eval_cyclotomic)
        out.append(form)
    return out


def _verify_kind(form, kind, eval_cyclotomic):
    ctx = form.ctx
    cfg = ctx.field
    n = cfg.q - 1
    if kind == "long-cycle":
        x = cfg.omega
        seen = 1
        y = eval_cyclotomic(form, x)
        while y != x:
            y = eval_cyclotomic(form, y)
            seen += 1
            if seen > n:
                break
        if seen != n:
            raise AssertionError(f"{form} is not a (q-1)-cycle")
    else:
        acc = cfg.one
        for _ in range(n):
            y = eval_cyclotomic(form, eval_cyclotomic(form, acc))
            if y != acc:
                raise AssertionError(f"{form} is not an involution")
            acc = acc * cfg.omega
