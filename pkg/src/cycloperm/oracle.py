"""Brute-force ground truth: materialize anything as an explicit
permutation, enumerate whole groups, and compute cycle types, cycle
indices and conjugacy straight from the definitions.

Cyclotomic/polynomial forms act on F_q^*, labeled by the discrete-log
index of omega (index e <-> omega^e); wreath elements act on
(Z/mZ) x {0..d-1}, labeled x + m*i.  Enumeration sizes are guarded by
an explicit cap (default 10^7): exceeding it raises instead of
silently truncating.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction

from .arith import phi, units
from .cycle_index import CycleIndex, CycleType
from .wreath import AffineMapZ, CosetPerm, WreathElem

DEFAULT_CAP = 10**7


class ExplicitPerm:
    """A bijection on {0, ..., n-1} as a dense image array."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def cycle_type(self) -> CycleType:
        counts: dict[int, int] = {}
        seen = [False] * self.n
        for start in range(self.n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            counts[length] = counts.get(length, 0) + 1
        return CycleType(counts)

    def compose(self, other: "ExplicitPerm") -> "ExplicitPerm":
        """self then other."""
        return ExplicitPerm(other.images[i] for i in self.images)

    def is_identity(self) -> bool:
        return all(i == img for i, img in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, ExplicitPerm) and other.images == self.images

    def __hash__(self):
        return hash(self.images)


class NotBijective(ValueError):
    """Materialization found a collision; carries a witness pair."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not a bijection: {witness[0]} and {witness[1]} "
                         f"share the image {witness[2]}")


def _check_bijection(images, labels):
    hit: dict[int, int] = {}
    for src, img in enumerate(images):
        if img in hit:
            raise NotBijective((labels(hit[img]), labels(src), img))
        hit[img] = src
    return images


def materialize(obj) -> ExplicitPerm:
    """Explicit permutation of a cyclotomic form, a polynomial form
    (both on F_q^*, discrete-log labeling) or a wreath element (on
    (Z/mZ) x {0..d-1}, pair labeling x + m*i)."""
    from .forms import CyclotomicForm, PolyForm, eval_cyclotomic
    if isinstance(obj, AffineMapZ):
        return ExplicitPerm(_check_bijection(
            [obj.apply(x) for x in range(obj.m)], lambda x: x))
    if isinstance(obj, WreathElem):
        gz = obj.to_z()
        d, m = gz.d, gz.m
        images = []
        for idx in range(d * m):
            x, i = idx % m, idx // m
            y, j = gz.apply((x, i))
            images.append(y + m * j)
        return ExplicitPerm(_check_bijection(
            images, lambda idx: (idx % m, idx // m)))
    if isinstance(obj, CyclotomicForm):
        ctx = obj.ctx
        cfg = ctx.field
        table = cfg.dlog_table()
        images = []
        for e in range(cfg.q - 1):
            y = eval_cyclotomic(obj, cfg.omega**e)
            if y.is_zero():
                raise NotBijective((f"w^{e}", "0", "0"))
            images.append(table[y.coeffs])
        return ExplicitPerm(_check_bijection(images, lambda e: f"w^{e}"))
    if isinstance(obj, PolyForm):
        cfg = obj.cfg
        table = cfg.dlog_table()
        if not obj.eval(cfg.zero).is_zero():
            raise NotBijective(("0", "0", "P(0) != 0"))
        images = []
        for e in range(cfg.q - 1):
            y = obj.eval(cfg.omega**e)
            if y.is_zero():
                raise NotBijective((f"w^{e}", "0", "0"))
            images.append(table[y.coeffs])
        return ExplicitPerm(_check_bijection(images, lambda e: f"w^{e}"))
    raise TypeError(f"cannot materialize {type(obj).__name__}")


def cycle_type_of(perm: ExplicitPerm) -> CycleType:
    return perm.cycle_type()


def group_order(group: str, d: int, m: int) -> int:
    hol = phi(m) * m
    return {
        "Hol": hol,
        "W": math.factorial(d) * hol**d,
        "W1": math.factorial(d) * m**d,
        "Weq": math.factorial(d) * phi(m) * m**d,
    }[group]


def enumerate_hol(m: int, cap: int = DEFAULT_CAP):
    """All of Hol(Z/mZ), each element exactly once."""
    if group_order("Hol", 1, m) > cap:
        raise ValueError(f"|Hol(Z/{m}Z)| exceeds the cap {cap}")
    for a in units(m):
        for b in range(m):
            yield AffineMapZ(m, a, b)


def _perms(d: int):
    for images in itertools.permutations(range(d)):
        yield CosetPerm(images)


def enumerate_group(group: str, d: int, m: int, cap: int = DEFAULT_CAP):
    """Stream W(d,m), W1(d,m) or Weq(d,m), each element exactly once."""
    if group == "Hol":
        yield from enumerate_hol(m, cap)
        return
    if group_order(group, d, m) > cap:
        raise ValueError(f"|{group}({d},{m})| exceeds the cap {cap}")
    psis = list(_perms(d))
    if group == "W":
        maps_pool = [AffineMapZ(m, a, b) for a in units(m) for b in range(m)]
        for psi in psis:
            for maps in itertools.product(maps_pool, repeat=d):
                yield WreathElem(psi, maps)
    elif group == "W1":
        maps_pool = [AffineMapZ(m, 1, b) for b in range(m)]
        for psi in psis:
            for maps in itertools.product(maps_pool, repeat=d):
                yield WreathElem(psi, maps)
    elif group == "Weq":
        for psi in psis:
            for a in units(m):
                pool = [AffineMapZ(m, a, b) for b in range(m)]
                for maps in itertools.product(pool, repeat=d):
                    yield WreathElem(psi, maps)
    else:
        raise ValueError(f"unknown group {group!r}")


def ci_brute(elements, size: int | None = None) -> CycleIndex:
    """Cycle index of a set of group elements, by materializing each one.

    Cycle types are tallied with integer counts and divided once at the
    end, so the result is independent of enumeration order.
    """
    tally: Counter[CycleType] = Counter()
    total = 0
    for g in elements:
        tally[materialize(g).cycle_type()] += 1
        total += 1
    if size is not None and size != total:
        raise ValueError(f"expected {size} elements, saw {total}")
    return CycleIndex({ct: Fraction(n, total) for ct, n in tally.items()})


def conjugate_brute(g, h, group_elements) -> bool:
    """True iff some k in the group satisfies k^-1 * g * k = h."""
    for k in group_elements:
        if k.inverse().compose(g).compose(k) == h:
            return True
    return False
