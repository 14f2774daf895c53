"""Mod-2 cohomology of closed surfaces, unit groups, total Stiefel-Whitney
classes, and presentations of the real K-theory ring of a surface.

The reduced real K-theory of a closed connected surface is isomorphic, via
the total Stiefel-Whitney class W(E - F) = W(E) W(F)^{-1}, to the group of
multiplicative units 1 + x1 + x2 of the ungraded cohomology ring.  That
turns every additive and multiplicative question about virtual bundles
into finite computations in the unit group: additive orders are unit
orders, and products of the line-bundle generators are evaluated through
W and the line tensor rule W(L (x) L') = 1 + w1(L) + w1(L').  The ring
presentation emitted here is the generators-and-relations description
read off those computations, in a fixed canonical normalization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bcom_o2 import (
    TCBundleData,
    a2_of_tc_bundle,
    direct_sum,
    line_data,
    tensor_line,
    tensor_rank2,
)
from .cocycles import standard_cocycle, tc_invariant
from .f2poly import F2Algebra, F2Class, RingMap
from .integral import AbelianGroup
from .report import Check, check


class DiscreteLogFailureError(ValueError):
    """Raised when a product unit escapes the generated subgroup (it must not)."""


class MismatchError(ValueError):
    """Raised when two bundle data that must agree do not."""


@dataclass(frozen=True)
class Surface:
    """A closed connected surface: the sphere, the orientable surface of a
    given genus, or the connected sum of a given number of projective
    planes."""

    kind: str
    count: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("sphere", "orientable", "nonorientable"):
            raise ValueError(f"unknown surface kind {self.kind!r}")
        if self.kind == "sphere" and self.count != 0:
            raise ValueError("the sphere carries no count")
        if self.kind != "sphere" and self.count < 1:
            raise ValueError("genus / crosscap count must be >= 1")

    @property
    def b1(self) -> int:
        """First mod-2 Betti number."""
        if self.kind == "orientable":
            return 2 * self.count
        if self.kind == "nonorientable":
            return self.count
        return 0

    @property
    def label(self) -> str:
        if self.kind == "orientable":
            return f"genus:{self.count}"
        if self.kind == "nonorientable":
            return f"rp:{self.count}"
        return "sphere"

    @classmethod
    def parse(cls, selector: str) -> "Surface":
        """Parse 'sphere' | 'genus:<g>' | 'rp:<n>'."""
        if selector == "sphere":
            return SPHERE
        for prefix, kind in (("genus:", "orientable"), ("rp:", "nonorientable")):
            if selector.startswith(prefix):
                return cls(kind, int(selector[len(prefix):]))
        raise ValueError(f"bad surface selector {selector!r}")

    def __str__(self) -> str:
        return self.label


SPHERE = Surface("sphere")


def orientable(genus: int) -> Surface:
    return Surface("orientable", genus)


def nonorientable(crosscaps: int) -> Surface:
    return Surface("nonorientable", crosscaps)


def surface_algebra(surface: Surface) -> F2Algebra:
    """The mod-2 cohomology ring, with basis {1}, the degree-1 generators,
    and the top class y2; graded dimensions (1, b1, 1)."""
    if surface.kind == "sphere":
        return F2Algebra([("y2", 2)], [({"y2": 2}, [])], cap=2, name="H(sphere)")
    if surface.kind == "orientable":
        g = surface.count
        gens = [(f"a{i}", 1) for i in range(1, g + 1)]
        gens += [(f"b{i}", 1) for i in range(1, g + 1)]
        gens.append(("y2", 2))
        relations = []
        for i in range(1, g + 1):
            for j in range(i, g + 1):
                relations.append(({f"a{i}": 1, f"a{j}": 1} if i != j else {f"a{i}": 2}, []))
                relations.append(({f"b{i}": 1, f"b{j}": 1} if i != j else {f"b{i}": 2}, []))
        for i in range(1, g + 1):
            for j in range(1, g + 1):
                if i == j:
                    relations.append(({f"a{i}": 1, f"b{i}": 1}, [{"y2": 1}]))
                else:
                    relations.append(({f"a{i}": 1, f"b{j}": 1}, []))
        for i in range(1, g + 1):
            relations.append(({f"a{i}": 1, "y2": 1}, []))
            relations.append(({f"b{i}": 1, "y2": 1}, []))
        relations.append(({"y2": 2}, []))
        return F2Algebra(gens, relations, cap=2, name=f"H(genus{g})")
    n = surface.count
    gens = [(f"a{i}", 1) for i in range(1, n + 1)]
    gens.append(("y2", 2))
    relations = []
    for i in range(1, n + 1):
        relations.append(({f"a{i}": 2}, [{"y2": 1}]))
        for j in range(i + 1, n + 1):
            relations.append(({f"a{i}": 1, f"a{j}": 1}, []))
        relations.append(({f"a{i}": 1, "y2": 1}, []))
    relations.append(({"y2": 2}, []))
    return F2Algebra(gens, relations, cap=2, name=f"H(rp{n})")


# -- the unit group ---------------------------------------------------------


def degree_one_names(alg: F2Algebra) -> list:
    return [name for name, d in alg.generators if d == 1]


def units(alg: F2Algebra) -> list:
    """All 2^(b1 + 1) units 1 + x1 + x2, in a fixed enumeration order."""
    names = degree_one_names(alg)
    one, y2 = alg.one(), alg.gen("y2")
    out = []
    for bits in itertools.product((0, 1), repeat=len(names)):
        x1 = alg.zero()
        for bit, name in zip(bits, names):
            if bit:
                x1 = x1 + alg.gen(name)
        for top in (0, 1):
            out.append(one + x1 + (y2 if top else alg.zero()))
    return out


def unit_order(u: F2Class) -> int:
    one = u.algebra.one()
    if u == one:
        return 1
    if u * u == one:
        return 2
    if (u * u) * (u * u) == one:
        return 4
    raise ValueError(f"unit {u} has order > 4; not a surface unit group")


def unit_inverse(u: F2Class) -> F2Class:
    order = unit_order(u)
    out = u.algebra.one()
    for _ in range(order - 1):
        out = out * u
    return out


class FiniteAbelianGroup:
    """A finite abelian 2-group of exponent <= 4, given by its element list
    and the ambient multiplication; the invariant factors are determined by
    the order statistics (the count of elements of order <= 2 pins down the
    number of Z/4 and Z/2 factors)."""

    def __init__(self, elements: Sequence[F2Class]):
        self.elements = list(elements)
        if not self.elements:
            raise ValueError("a group needs elements")
        self.identity = self.elements[0].algebra.one()

    def __len__(self) -> int:
        return len(self.elements)

    def order_of(self, u: F2Class) -> int:
        return unit_order(u)

    def invariant_factors(self) -> AbelianGroup:
        n_total = len(self.elements)
        n_small = sum(1 for u in self.elements if self.order_of(u) <= 2)
        log_total = n_total.bit_length() - 1
        log_small = n_small.bit_length() - 1
        if 2**log_total != n_total or 2**log_small != n_small:
            raise ValueError("element counts are not powers of two")
        quads = log_total - log_small
        doubles = 2 * log_small - log_total
        if quads < 0 or doubles < 0:
            raise ValueError("inconsistent order statistics")
        return AbelianGroup.from_orders([2] * doubles + [4] * quads)

    def subgroup(self, gens: Iterable[F2Class]) -> set:
        """Closure of the generators under multiplication (all elements are
        torsion, so no inverses are needed)."""
        closure = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            current = frontier.pop()
            for g in gens:
                nxt = current * g
                if nxt not in closure:
                    closure.add(nxt)
                    frontier.append(nxt)
        return closure

    def discrete_log(self, target: F2Class, gens: Sequence[F2Class]):
        """Exponent vector with product(gens[i]^e[i]) == target, or None.
        Exhaustive search; the groups here have at most 2^9 elements."""
        ranges = [range(self.order_of(g)) for g in gens]
        for exps in itertools.product(*ranges):
            acc = self.identity
            for g, e in zip(gens, exps):
                for _ in range(e):
                    acc = acc * g
            if acc == target:
                return list(exps)
        return None


def units_group(alg: F2Algebra) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(units(alg))


def total_sw(terms: Iterable[tuple]) -> F2Class:
    """Total Stiefel-Whitney class of a formal sum: terms are (W, sign)
    pairs with sign +1 or -1, multiplied as W resp. W^{-1}."""
    terms = list(terms)
    if not terms:
        raise ValueError("need at least one term")
    out = terms[0][0].algebra.one()
    for w, sign in terms:
        out = out * (w if sign > 0 else unit_inverse(w))
    return out


# -- KO presentations -------------------------------------------------------


@dataclass(frozen=True)
class KOGenerator:
    """A virtual generator of the reduced K-theory: a line class L - 1 with
    unit 1 + w1(L), or the sphere's rank-two class with unit 1 + y2."""

    name: str
    unit: F2Class
    kind: str  # "line" | "euler"
    w1: F2Class  # w1 of the underlying line bundle (zero for the euler kind)


@dataclass(frozen=True)
class RingPresentation:
    """Generators with additive orders plus quadratic relations.  A relation
    is a tuple of (coefficient, names) terms, names a sorted tuple of one
    or two generator names; coefficients are already reduced into
    [0, additive order) of the class the term represents."""

    generators: tuple
    additive_orders: tuple
    relations: tuple

    @staticmethod
    def term_str(coeff: int, names: tuple) -> str:
        if len(names) == 2 and names[0] == names[1]:
            body = f"{names[0]}^2"
        else:
            body = "*".join(names)
        return body if coeff == 1 else f"{coeff}*{body}"

    def relation_strings(self) -> list:
        out = []
        for order, name in zip(self.additive_orders, self.generators):
            out.append(self.term_str(order, (name,)))
        for rel in self.relations:
            out.append(" + ".join(self.term_str(c, names) for c, names in rel))
        return out

    def to_text(self) -> str:
        lines = ["generators: " + " ".join(self.generators)]
        lines.extend(self.relation_strings())
        return "\n".join(lines) + "\n"


def ko_generators(surface: Surface, alg: F2Algebra) -> list:
    if surface.kind == "sphere":
        return [KOGenerator("e1", alg.one() + alg.gen("y2"), "euler", alg.zero())]
    gens = []
    for name, degree in alg.generators:
        if degree == 1:
            gens.append(
                KOGenerator(f"l_{name}", alg.one() + alg.gen(name), "line", alg.gen(name))
            )
    return gens


def _product_unit(a: KOGenerator, b: KOGenerator) -> F2Class:
    """Unit of the product of two virtual generators via W.

    Two line classes: W((L-1)(L'-1)) = W(L (x) L') W(L)^{-1} W(L')^{-1}
    with W(L (x) L') = 1 + w1(L) + w1(L').  Two rank-two classes: the
    tensor's w2 is determined by the two w1's (both zero here), and the
    rank bookkeeping contributes W(E)^{-2} W(F)^{-2}.
    """
    alg = a.unit.algebra
    if a.kind == "line" and b.kind == "line":
        tensor = alg.one() + a.w1 + b.w1
        return tensor * unit_inverse(a.unit) * unit_inverse(b.unit)
    if a.kind == "euler" and b.kind == "euler":
        w2 = a.w1 * a.w1 + a.w1 * b.w1 + b.w1 * b.w1
        tensor = alg.one() + w2
        inv_a, inv_b = unit_inverse(a.unit), unit_inverse(b.unit)
        return tensor * inv_a * inv_a * inv_b * inv_b
    raise ValueError("mixed line/euler products do not arise here")


def _eliminate_redundant(group: FiniteAbelianGroup, gens: list) -> list:
    """Drop any generator whose unit already lies in the subgroup generated
    by the others (does not fire for the standard surface generators)."""
    kept = list(gens)
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(kept):
            others = [h.unit for j, h in enumerate(kept) if j != i]
            if g.unit in group.subgroup(others):
                kept.pop(i)
                changed = True
                break
    return kept


def ko_presentation(surface: Surface) -> RingPresentation:
    """Presentation of the reduced real K-theory ring, derived from the unit
    group: additive orders are unit orders; a vanishing product unit gives
    a monomial relation; a product unit equal to the square of a generator
    unit gives x_i x_j + 2 x_k (one relation per matching k); products
    sharing a unit outside the generator span give pairwise sum relations.
    """
    alg = surface_algebra(surface)
    group = units_group(alg)
    gens = _eliminate_redundant(group, ko_generators(surface, alg))
    names = tuple(g.name for g in gens)
    orders = tuple(unit_order(g.unit) for g in gens)
    one = alg.one()
    euler_unit = one + alg.gen("y2")
    reachable = group.subgroup([g.unit for g in gens] + [euler_unit])

    relations = []
    leftovers: dict = {}
    for i in range(len(gens)):
        for j in range(i, len(gens)):
            u = _product_unit(gens[i], gens[j])
            if u == one:
                relations.append(((1, (names[i], names[j])),))
                continue
            if u not in reachable:
                raise DiscreteLogFailureError(
                    f"product unit {u} outside the generated subgroup"
                )
            doublings = [k for k in range(len(gens)) if gens[k].unit * gens[k].unit == u]
            if doublings:
                for k in doublings:
                    coeff = 2 % orders[k]
                    relations.append(
                        ((1, (names[i], names[j])), (coeff, (names[k],)))
                    )
            else:
                leftovers.setdefault(u, []).append((names[i], names[j]))
    for pairs in leftovers.values():
        for p, q in itertools.combinations(pairs, 2):
            relations.append(((1, p), (1, q)))
    return RingPresentation(names, orders, tuple(relations))


# -- checks for the commutative K-theory ring structure ---------------------


def nonstandard_data(alg: F2Algebra) -> TCBundleData:
    """Data of the trivial plane bundle carrying the k = 1 cocycle structure,
    pulled back over the surface: the clutching degrees of the cocycle and
    its pointwise inverse feed w2 and the twisted w2 mod 2."""
    inv = tc_invariant(standard_cocycle(1))
    y2, zero = alg.gen("y2"), alg.zero()
    return TCBundleData(
        zero,
        y2 if inv.deg_plus % 2 else zero,
        y2 if inv.deg_minus % 2 else zero,
    )


def collapse_pullback(sphere_alg: F2Algebra, target: F2Algebra) -> RingMap:
    """Pullback along the degree-one collapse map onto the sphere: the top
    class goes to the top class."""
    return RingMap(sphere_alg, target, {"y2": target.gen("y2")})


def _data_repr(d: TCBundleData) -> str:
    return f"w1={d.w1}, w2={d.w2}, a2={a2_of_tc_bundle(d)}"


def verify_kocom_products(surface: Surface, raise_on_mismatch: bool = True) -> list:
    """Verify that products with the non-standard stable class vanish.

    (a) The square of the non-standard class: computed over the sphere via
    the rank-two tensor rule and transported along the collapse pullback;
    its w2 and obstruction bit vanish.  (b) For every line generator L,
    the tensor E (x) L and the sum 2L + E (E the non-standard datum) have
    identical (w1, w2, a2) data, so their difference, which represents the
    product (E - 2)(L - 1), is zero.  (c) Together with the additive
    splitting this pins the ring down as K-theory times a square-zero
    order-2 ideal.  On the sphere every product vanishes because the
    sphere is a suspension; that case is recorded, not recomputed.
    """
    tag = surface.label
    checks = []
    if surface.kind == "sphere":
        checks.append(
            check(
                f"surface-ko.products.{tag}.suspension",
                "every product in the reduced theory of a suspension vanishes; "
                "recorded as the standing input for the sphere",
                "0",
                "0",
            )
        )
        return checks

    alg = surface_algebra(surface)
    sphere_alg = surface_algebra(SPHERE)
    pullback = collapse_pullback(sphere_alg, alg)

    over_sphere = nonstandard_data(sphere_alg)
    square_sphere = tensor_rank2(over_sphere, over_sphere)
    pulled_square = square_sphere.map_along(pullback)
    data = nonstandard_data(alg)
    square = tensor_rank2(data, data)
    square_ok = (
        square.w2.is_zero
        and a2_of_tc_bundle(square) == 0
        and pulled_square.w2.is_zero
        and a2_of_tc_bundle(pulled_square) == 0
        and data == over_sphere.map_along(pullback)
    )
    checks.append(
        check(
            f"surface-ko.products.{tag}.square",
            "the square of the non-standard class vanishes: its tensor-square "
            "w2 and obstruction bit are zero over the sphere and stay zero "
            "under the collapse pullback",
            "w2=0, a2=0",
            "w2=0, a2=0" if square_ok else _data_repr(square),
        )
    )

    expected_a2 = a2_of_tc_bundle(data)
    for gen in ko_generators(surface, alg):
        line = line_data(gen.w1)
        tensored = tensor_line(data, line)
        summed = direct_sum(direct_sum(line, line), data)
        same = (
            tensored.w1 == summed.w1
            and tensored.w2 == summed.w2
            and a2_of_tc_bundle(tensored) == a2_of_tc_bundle(summed)
        )
        agree_with_twist = a2_of_tc_bundle(tensored) == expected_a2
        checks.append(
            check(
                f"surface-ko.products.{tag}.tensor-vs-sum.{gen.name}",
                f"tensoring the non-standard bundle with {gen.name}'s line and "
                f"adding two copies of that line to it give identical "
                f"(w1, w2, a2) data, with a2 the twisted top class",
                "identical, a2=twisted",
                "identical, a2=twisted"
                if same and agree_with_twist
                else f"tensor: {_data_repr(tensored)} vs sum: {_data_repr(summed)}",
            )
        )
    checks.append(
        check(
            f"surface-ko.products.{tag}.ring-structure",
            "with all products against the non-standard class zero, the ring "
            "splits as the K-theory ring times a square-zero ideal of order 2 "
            "(the splitting itself is the cited structural statement)",
            "verified products",
            "verified products" if all(c.passed for c in checks) else "mismatch",
        )
    )
    if raise_on_mismatch and not all(c.passed for c in checks):
        failing = [c for c in checks if not c.passed]
        raise MismatchError(f"{failing[0].check_id}: {failing[0].actual}")
    return checks
