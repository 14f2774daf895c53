"""Connected components of commuting tuples in SO(3), modeled in the Klein
four-group, and the homology of the resulting component chain complex.

A commuting n-tuple in SO(3) either generates a subgroup fixing a common
axis (those tuples form the component of the trivial tuple) or generates
a copy of the Klein four-group of diagonal sign matrices; in the latter
case the component is determined by the tuple up to simultaneous
relabeling of the three involutions.  Everything about degree-0 homology
of the commuting-tuple spaces is therefore a finite computation over
tuples in the four-element group.

The face maps are the usual bar-construction ones (drop the first entry,
multiply an adjacent pair, drop the last entry); the alternating sums of
their effects on components give an integer chain complex whose degree-2
homology, together with the standard H_1(SO(3)) = Z/2 summand, computes
the second homology of the commuting classifying space of SO(3).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .integral import AbelianGroup, IntChainComplex
from .o2 import D4Element

D4Tuple = tuple[D4Element, ...]

_NONTRIVIAL = (D4Element.C1, D4Element.C2, D4Element.C3)

#: The six simultaneous relabelings of the involutions c1, c2, c3.
RELABELINGS = tuple(
    {
        D4Element.I: D4Element.I,
        D4Element.C1: perm[0],
        D4Element.C2: perm[1],
        D4Element.C3: perm[2],
    }
    for perm in itertools.permutations(_NONTRIVIAL)
)

#: The constant Z/2 contributed by the fundamental group of SO(3); a
#: standard input, not recomputed here.
H1_SO3 = AbelianGroup((2,))


@dataclass(frozen=True)
class ComponentLabel:
    """A connected component of the commuting n-tuples: either the component
    of the trivial tuple, or an exotic component recorded by the
    lexicographically least relabeling of a defining four-group tuple."""

    exotic: bool
    canonical: D4Tuple

    def sort_key(self):
        return (self.exotic, tuple(e.sort_index for e in self.canonical))

    def __str__(self) -> str:
        body = ",".join(str(e) for e in self.canonical)
        return ("exotic" if self.exotic else "identity") + f"({body})"


def generates_cyclic(t: Sequence[D4Element]) -> bool:
    """True iff the entries generate a cyclic subgroup, i.e. at most one
    distinct non-identity value occurs."""
    return len({e for e in t if e is not D4Element.I}) <= 1


def relabel(perm: dict, t: Sequence[D4Element]) -> D4Tuple:
    return tuple(perm[e] for e in t)


def canonical_tuple(t: Sequence[D4Element]) -> D4Tuple:
    return min(
        (relabel(perm, t) for perm in RELABELINGS),
        key=lambda s: tuple(e.sort_index for e in s),
    )


def classify_component(t: Sequence[D4Element]) -> ComponentLabel:
    t = tuple(t)
    if generates_cyclic(t):
        return ComponentLabel(False, (D4Element.I,) * len(t))
    return ComponentLabel(True, canonical_tuple(t))


def enumerate_components(n: int) -> list[ComponentLabel]:
    """All component labels of commuting n-tuples, the trivial-tuple
    component first and the exotic ones in lexicographic order."""
    if n < 0:
        raise ValueError("tuple length must be non-negative")
    labels = {classify_component(t) for t in itertools.product(D4Element, repeat=n)}
    return sorted(labels, key=ComponentLabel.sort_key)


def face_map(i: int, t: Sequence[D4Element]) -> D4Tuple:
    """d_i on tuples: drop-first for i = 0, multiply entries i and i+1 for
    0 < i < n, drop-last for i = n."""
    t = tuple(t)
    n = len(t)
    if not 0 <= i <= n:
        raise IndexError(f"face index {i} out of range for a tuple of length {n}")
    if i == 0:
        return t[1:]
    if i == n:
        return t[:-1]
    return t[: i - 1] + (t[i - 1] * t[i],) + t[i + 1 :]


def boundary_matrix(n: int) -> list[list[int]]:
    """Matrix of the alternating sum of the induced face maps, from the free
    abelian group on the level-n components to the level-(n-1) ones.
    Columns follow enumerate_components(n), rows enumerate_components(n-1);
    each column is computed on the component's canonical tuple."""
    if n < 1:
        raise ValueError("boundary needs level >= 1")
    sources = enumerate_components(n)
    targets = enumerate_components(n - 1)
    index = {label: row for row, label in enumerate(targets)}
    matrix = [[0] * len(sources) for _ in targets]
    for col, label in enumerate(sources):
        for i in range(n + 1):
            target = classify_component(face_map(i, label.canonical))
            matrix[index[target]][col] += (-1) ** i
    return matrix


def component_complex(top: int = 3) -> IntChainComplex:
    """The chain complex of level-0..top component groups with the
    alternating-sum boundaries."""
    ranks = [len(enumerate_components(n)) for n in range(top + 1)]
    boundaries = {n: boundary_matrix(n) for n in range(1, top + 1)}
    return IntChainComplex(ranks, boundaries)


def component_homology(p: int, top: int = 3) -> AbelianGroup:
    return component_complex(top).homology(p)


def h2_bcom_so3() -> AbelianGroup:
    """Second integral homology of the commuting classifying space of SO(3):
    the degree-2 homology of the component complex plus the constant
    H_1(SO(3)) = Z/2 summand.  Expected value: Z/2 + Z/2."""
    return component_homology(2).direct_sum(H1_SO3)
