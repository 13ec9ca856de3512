"""Maps between finite sets at bounded cardinality.

Objects are the skeletal finite sets {1, ..., n}; only the size matters.
This module enumerates hom-sets in the four flavors (all maps, surjections,
injections, bijections), composes maps, lists the sections of a surjection,
and gives closed-form counts that cross-check the enumerations.

The lexicographic order on value arrays is a frozen contract: it defines the
canonical basis of every linearized hom-space downstream, so changing it
would silently permute every matrix in the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique
from functools import cache
from itertools import product
from math import factorial


@unique
class HomClass(Enum):
    """Which maps between finite sets count as morphisms."""

    ALL = "all"
    SURJECTION = "surjection"
    INJECTION = "injection"
    BIJECTION = "bijection"


@dataclass(frozen=True)
class FinMap:
    """A map {1..source_size} -> {1..target_size}, given by its value array.

    values[i-1] is the image of i (everything is 1-based).  Equality is
    pointwise; maps are immutable and hashable.
    """

    source_size: int
    target_size: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        assert self.source_size >= 0 and self.target_size >= 0
        assert len(self.values) == self.source_size, "value array length mismatch"
        assert all(isinstance(v, int) and 1 <= v <= self.target_size
                   for v in self.values), "value out of range"

    def __call__(self, i: int) -> int:
        assert 1 <= i <= self.source_size
        return self.values[i - 1]

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.target_size

    def is_injective(self) -> bool:
        return len(set(self.values)) == self.source_size

    def is_bijective(self) -> bool:
        return self.source_size == self.target_size and self.is_injective()

    def inverse(self) -> "FinMap":
        assert self.is_bijective(), "only bijections invert"
        inv = [0] * self.source_size
        for i, v in enumerate(self.values, start=1):
            inv[v - 1] = i
        return FinMap(self.target_size, self.source_size, tuple(inv))

    def __repr__(self) -> str:
        return (f"FinMap({self.source_size}->{self.target_size}, "
                f"{list(self.values)})")


def identity_map(n: int) -> FinMap:
    return FinMap(n, n, tuple(range(1, n + 1)))


def compose(g: FinMap, f: FinMap) -> FinMap:
    """g after f: apply f first, then g."""
    assert g.source_size == f.target_size, "composition size mismatch"
    return FinMap(f.source_size, g.target_size,
                  tuple(g.values[v - 1] for v in f.values))


def _admits(flavor: HomClass, values: tuple[int, ...],
            source_size: int, target_size: int) -> bool:
    if flavor is HomClass.ALL:
        return True
    distinct = len(set(values))
    if flavor is HomClass.SURJECTION:
        return distinct == target_size
    if flavor is HomClass.INJECTION:
        return distinct == source_size
    return distinct == source_size == target_size


@cache
def enumerate_hom(flavor: HomClass, source_size: int,
                  target_size: int) -> tuple[FinMap, ...]:
    """All maps source -> target of the given flavor, in lexicographic order.

    Lexicographic order of the value arrays is the canonical basis order of
    the linearized hom-space.  Empty-set conventions: with an empty source
    there is exactly one (empty) map whatever the flavor admits; with an
    empty target and nonempty source there are none.
    """
    assert source_size >= 0 and target_size >= 0
    return tuple(
        FinMap(source_size, target_size, values)
        for values in product(range(1, target_size + 1), repeat=source_size)
        if _admits(flavor, values, source_size, target_size))


def sections(f: FinMap) -> tuple[FinMap, ...]:
    """All s with f∘s = identity on the target, in lexicographic order.

    Requires f surjective (a non-surjective map has no sections; calling
    this on one is a precondition violation, not an empty result).  A
    section picks one source point from each fiber, so the result has
    one entry per element of the product of the fibers and every section
    is injective.
    """
    assert f.is_surjective(), "sections require a surjective map"
    fibers = [[i for i in range(1, f.source_size + 1) if f.values[i - 1] == t]
              for t in range(1, f.target_size + 1)]
    return tuple(FinMap(f.target_size, f.source_size, choice)
                 for choice in product(*fibers))


@cache
def _stirling2(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


def hom_dimension(flavor: HomClass, source_size: int, target_size: int) -> int:
    """Closed-form count of maps source -> target of the given flavor.

    all: target^source (0^0 = 1); surjections: target! * Stirling2(source,
    target); injections: target!/(target-source)! when source <= target,
    else 0; bijections: source! exactly when the sizes agree.
    """
    b, a = source_size, target_size
    assert b >= 0 and a >= 0
    if flavor is HomClass.ALL:
        return a ** b
    if flavor is HomClass.SURJECTION:
        return factorial(a) * _stirling2(b, a)
    if flavor is HomClass.INJECTION:
        return factorial(a) // factorial(a - b) if b <= a else 0
    return factorial(a) if a == b else 0
