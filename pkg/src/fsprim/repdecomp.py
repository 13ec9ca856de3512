"""Symmetric-group character theory and decomposition into irreducibles.

Irreducible characters come from the Murnaghan-Nakayama recursion on
beta-numbers.  Representations are carried by :class:`RepSpace` (one
symmetric group acting) and :class:`BiRepSpace` (commuting left and right
actions); both verify the defining generator relations at construction, so
a value of these types is evidence that the matrices really do define an
action.  Decomposition into irreducibles goes through exact character inner
products, and the multiplicities are validated (integral, nonnegative,
dimensions adding up) before anything is returned -- a violation raises
:class:`InternalConsistencyError` rather than producing a wrong answer.

Formal integer combinations of irreducibles live in :class:`SchurClass`
(one group) and :class:`BiSchurClass` (ordered pairs, left/covariant factor
first).  The product of classes induced by juxtaposition of disjoint sets
is :func:`convolution_class`; single-row and single-column factors take the
Pieri fast paths, everything else goes through the exact induced-character
oracle.  All caches are module-level functools caches; external behavior is
that of pure functions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import product as iproduct
from math import comb, factorial, prod

from .finsetcat import FinMap, HomClass, compose, enumerate_hom, identity_map
from .partitions import (
    CycleType,
    Partition,
    assert_partition,
    class_size,
    conjugate,
    irrep_dimension,
    partition_index,
    partitions_of,
    weight,
)
from .ratlinalg import RatMatrix


class InternalConsistencyError(Exception):
    """A structural invariant failed; the offending object is corrupted."""


# --------------------------------------------------------------- permutations


def cycle_type_of(perm: FinMap) -> CycleType:
    """Cycle lengths of a permutation, as a partition of its degree."""
    assert perm.is_bijective(), "cycle type requires a bijection"
    seen = [False] * perm.source_size
    lengths = []
    for start in range(1, perm.source_size + 1):
        if seen[start - 1]:
            continue
        length = 0
        i = start
        while not seen[i - 1]:
            seen[i - 1] = True
            i = perm.values[i - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def adjacent_transposition(n: int, t: int) -> FinMap:
    """The permutation of degree n exchanging t and t+1."""
    assert 1 <= t < n
    vals = list(range(1, n + 1))
    vals[t - 1], vals[t] = vals[t], vals[t - 1]
    return FinMap(n, n, tuple(vals))


def class_representative(mu: CycleType) -> FinMap:
    """Deterministic permutation of cycle type mu: consecutive blocks cycle."""
    assert_partition(mu)
    n = weight(mu)
    vals = []
    start = 1
    for part in mu:
        vals.extend(range(start + 1, start + part))
        vals.append(start)
        start += part
    return FinMap(n, n, tuple(vals))


def transposition_word(perm: FinMap) -> tuple[int, ...]:
    """Reduced word (t_1, ..., t_m) with perm = s_{t_1} ∘ ... ∘ s_{t_m}.

    Each s_t exchanges t and t+1.  The word is built by repeatedly clearing
    the first descent, so its length is the inversion number and the result
    is deterministic; the identity gets the empty word.
    """
    assert perm.is_bijective()
    v = list(perm.values)
    swaps = []
    while True:
        t = next((i + 1 for i in range(len(v) - 1) if v[i] > v[i + 1]), None)
        if t is None:
            break
        v[t - 1], v[t] = v[t], v[t - 1]
        swaps.append(t)
    return tuple(reversed(swaps))


# ----------------------------------------------------------------- characters


@cache
def mn_character(lam: Partition, mu: CycleType) -> int:
    """Irreducible character value chi_lam(mu) for lam, mu of equal weight.

    Murnaghan-Nakayama recursion on beta-numbers: peel a border strip of
    length mu[0] (move one beta-number down by mu[0]), with sign given by
    the number of beta-numbers jumped over.
    """
    assert_partition(lam)
    assert_partition(mu)
    assert weight(lam) == weight(mu), "character arguments must have equal weight"
    if not mu:
        return 1
    strip, rest = mu[0], mu[1:]
    k = len(lam)
    betas = [lam[i] + (k - 1 - i) for i in range(k)]
    beta_set = set(betas)
    total = 0
    for b in betas:
        nb = b - strip
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in betas if nb < x < b)
        new_betas = sorted((beta_set - {b}) | {nb}, reverse=True)
        newlam = tuple(p for i, p in
                       ((i, new_betas[i] - (k - 1 - i)) for i in range(k))
                       if p > 0)
        total += (-1) ** height * mn_character(newlam, rest)
    return total


@cache
def character_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row per irreducible, column per class, both in canonical partition order."""
    parts = partitions_of(n)
    return tuple(tuple(mn_character(lam, mu) for mu in parts) for lam in parts)


@dataclass(frozen=True)
class ClassFunction:
    """Rational class function on the symmetric group of the given degree.

    values[i] is the value on the class whose cycle type is
    partitions_of(degree)[i].
    """

    degree: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values",
                           tuple(Fraction(v) for v in self.values))
        assert len(self.values) == len(partitions_of(self.degree)), (
            "one value per cycle type required")

    def __call__(self, mu: CycleType) -> Fraction:
        return self.values[partition_index(mu)]


def character_inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """Standard inner product (1/n!) sum over classes of size * f * g."""
    assert f.degree == g.degree
    parts = partitions_of(f.degree)
    acc = sum((class_size(mu) * fv * gv
               for mu, fv, gv in zip(parts, f.values, g.values)),
              Fraction(0))
    return Fraction(acc, factorial(f.degree))


@dataclass(frozen=True)
class BiClassFunction:
    """Rational function of a pair of classes, one from each of two groups.

    values[i][j] is the value at (left class i, right class j) in canonical
    partition order for the respective degrees.
    """

    left_degree: int
    right_degree: int
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(
            tuple(Fraction(v) for v in row) for row in self.values))
        assert len(self.values) == len(partitions_of(self.left_degree))
        assert all(len(row) == len(partitions_of(self.right_degree))
                   for row in self.values)


# ---------------------------------------------------------------- formal sums


def _format_terms(terms) -> str:
    return " + ".join(f"{c}*{key}" for key, c in terms) or "0"


class SchurClass:
    """Integer formal sum of partitions, zero coefficients pruned.

    Terms are kept in canonical order (by weight, then by position within
    partitions_of); the class is immutable and hashable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc: dict[Partition, int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for lam, c in items:
            assert_partition(lam)
            assert c == int(c), "coefficients must be integers"
            acc[lam] = acc.get(lam, 0) + int(c)
        self._terms = tuple(sorted(
            ((lam, c) for lam, c in acc.items() if c),
            key=lambda lc: (weight(lc[0]), partition_index(lc[0]))))

    @property
    def terms(self) -> tuple[tuple[Partition, int], ...]:
        return self._terms

    def coefficient(self, lam: Partition) -> int:
        for key, c in self._terms:
            if key == lam:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def total_dimension(self) -> int:
        """Sum of coefficient * irreducible dimension over all terms."""
        return sum(c * irrep_dimension(lam) for lam, c in self._terms)

    def scale(self, c: int) -> "SchurClass":
        return SchurClass((lam, k * c) for lam, k in self._terms)

    def __add__(self, other: "SchurClass") -> "SchurClass":
        return SchurClass(self._terms + other._terms)

    def __sub__(self, other: "SchurClass") -> "SchurClass":
        return self + other.scale(-1)

    def __neg__(self) -> "SchurClass":
        return self.scale(-1)

    def __eq__(self, other) -> bool:
        return isinstance(other, SchurClass) and self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"SchurClass({_format_terms(self._terms)})"

    def to_json(self) -> list:
        """JSON-ready list of {partition, coefficient} in canonical order."""
        return [{"partition": list(lam), "coefficient": c}
                for lam, c in self._terms]

    @classmethod
    def from_json(cls, obj) -> "SchurClass":
        return cls((tuple(d["partition"]), d["coefficient"]) for d in obj)


class BiSchurClass:
    """Integer formal sum of ordered partition pairs (left, right).

    The left coordinate is the covariant factor, the right coordinate the
    contravariant one; terms are canonically ordered by (left weight, left
    index, right weight, right index).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc: dict[tuple[Partition, Partition], int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for pair, c in items:
            lam, mu = pair
            assert_partition(lam)
            assert_partition(mu)
            assert c == int(c), "coefficients must be integers"
            acc[(lam, mu)] = acc.get((lam, mu), 0) + int(c)
        self._terms = tuple(sorted(
            ((pair, c) for pair, c in acc.items() if c),
            key=lambda pc: (weight(pc[0][0]), partition_index(pc[0][0]),
                            weight(pc[0][1]), partition_index(pc[0][1]))))

    @property
    def terms(self) -> tuple[tuple[tuple[Partition, Partition], int], ...]:
        return self._terms

    def coefficient(self, lam: Partition, mu: Partition) -> int:
        for pair, c in self._terms:
            if pair == (lam, mu):
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def total_dimension(self) -> int:
        return sum(c * irrep_dimension(l) * irrep_dimension(r)
                   for (l, r), c in self._terms)

    def scale(self, c: int) -> "BiSchurClass":
        return BiSchurClass((pair, k * c) for pair, k in self._terms)

    def __add__(self, other: "BiSchurClass") -> "BiSchurClass":
        return BiSchurClass(self._terms + other._terms)

    def __sub__(self, other: "BiSchurClass") -> "BiSchurClass":
        return self + other.scale(-1)

    def __neg__(self) -> "BiSchurClass":
        return self.scale(-1)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiSchurClass) and self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"BiSchurClass({_format_terms(self._terms)})"

    def to_json(self) -> list:
        """JSON-ready list of {left, right, coefficient} in canonical order."""
        return [{"left": list(l), "right": list(r), "coefficient": c}
                for (l, r), c in self._terms]

    @classmethod
    def from_json(cls, obj) -> "BiSchurClass":
        return cls(((tuple(d["left"]), tuple(d["right"])), d["coefficient"])
                   for d in obj)


def boxtimes(x: SchurClass, y: SchurClass) -> BiSchurClass:
    """External product: bilinear pairing of terms into ordered pairs."""
    return BiSchurClass((((lam, mu), cx * cy)
                         for lam, cx in x.terms for mu, cy in y.terms))


def trivial_class(n: int) -> SchurClass:
    """Class of the trivial representation: the single-row partition (n)."""
    assert n >= 0
    return SchurClass({(n,) if n else (): 1})


def sign_class(n: int) -> SchurClass:
    """Class of the sign representation: the single-column partition (1^n)."""
    assert n >= 0
    return SchurClass({(1,) * n: 1})


# ----------------------------------------------------------- representations


class RepSpace:
    """A representation of the symmetric group of the given degree.

    generators[t-1] is the action matrix of the adjacent transposition s_t.
    Construction verifies the defining relations (involution, braid,
    distant commutation) unless check=False is passed, so a RepSpace is
    evidence its matrices define a genuine action.
    """

    def __init__(self, degree: int, dimension: int, generators,
                 check: bool = True):
        assert degree >= 0 and dimension >= 0
        self.degree = degree
        self.dimension = dimension
        self.generators = tuple(generators)
        assert len(self.generators) == max(degree - 1, 0), (
            "one generator per adjacent transposition required")
        for A in self.generators:
            assert isinstance(A, RatMatrix)
            assert A.rows == A.cols == dimension
        if check:
            _verify_coxeter(self.generators, dimension)

    def action_matrix(self, perm: FinMap) -> RatMatrix:
        """Matrix of the permutation, assembled from the generator word."""
        assert perm.source_size == perm.target_size == self.degree
        M = RatMatrix.identity(self.dimension)
        for t in transposition_word(perm):
            M = M @ self.generators[t - 1]
        return M


def _verify_coxeter(gens, dimension: int) -> None:
    """Raise InternalConsistencyError unless the matrices satisfy s_t relations."""
    ident = RatMatrix.identity(dimension)
    for t, A in enumerate(gens, start=1):
        if A @ A != ident:
            raise InternalConsistencyError(f"generator {t} is not an involution")
    for t in range(len(gens) - 1):
        A, B = gens[t], gens[t + 1]
        if A @ B @ A != B @ A @ B:
            raise InternalConsistencyError(
                f"braid relation fails between generators {t + 1}, {t + 2}")
    for t in range(len(gens)):
        for u in range(t + 2, len(gens)):
            A, B = gens[t], gens[u]
            if A @ B != B @ A:
                raise InternalConsistencyError(
                    f"distant generators {t + 1}, {u + 1} do not commute")


class BiRepSpace:
    """Commuting left and right symmetric-group actions on one space.

    left_generators act for the degree-left_degree group, right_generators
    for the degree-right_degree group; every left matrix must commute with
    every right matrix.  Both actions are plain homomorphisms.
    """

    def __init__(self, left_degree: int, right_degree: int, dimension: int,
                 left_generators, right_generators, check: bool = True):
        self.left_degree = left_degree
        self.right_degree = right_degree
        self.dimension = dimension
        self.left_generators = tuple(left_generators)
        self.right_generators = tuple(right_generators)
        assert len(self.left_generators) == max(left_degree - 1, 0)
        assert len(self.right_generators) == max(right_degree - 1, 0)
        for A in self.left_generators + self.right_generators:
            assert isinstance(A, RatMatrix)
            assert A.rows == A.cols == dimension
        if check:
            _verify_coxeter(self.left_generators, dimension)
            _verify_coxeter(self.right_generators, dimension)
            for i, L in enumerate(self.left_generators, start=1):
                for j, R in enumerate(self.right_generators, start=1):
                    if L @ R != R @ L:
                        raise InternalConsistencyError(
                            f"left generator {i} does not commute with "
                            f"right generator {j}")

    def left_matrix(self, perm: FinMap) -> RatMatrix:
        assert perm.source_size == perm.target_size == self.left_degree
        M = RatMatrix.identity(self.dimension)
        for t in transposition_word(perm):
            M = M @ self.left_generators[t - 1]
        return M

    def right_matrix(self, perm: FinMap) -> RatMatrix:
        assert perm.source_size == perm.target_size == self.right_degree
        M = RatMatrix.identity(self.dimension)
        for t in transposition_word(perm):
            M = M @ self.right_generators[t - 1]
        return M

    def bicharacter(self) -> BiClassFunction:
        """Trace of (left rep) * (right rep) per pair of classes."""
        left_parts = partitions_of(self.left_degree)
        right_parts = partitions_of(self.right_degree)
        rights = [self.right_matrix(class_representative(mu))
                  for mu in right_parts]
        rows = []
        for mu_l in left_parts:
            L = self.left_matrix(class_representative(mu_l))
            rows.append(tuple((L @ R).trace() for R in rights))
        return BiClassFunction(self.left_degree, self.right_degree,
                               tuple(rows))


# ------------------------------------------------------- standard rep spaces


def trivial_rep(n: int) -> RepSpace:
    one = RatMatrix([[1]])
    return RepSpace(n, 1, (one,) * max(n - 1, 0))


def sign_rep(n: int) -> RepSpace:
    minus = RatMatrix([[-1]])
    return RepSpace(n, 1, (minus,) * max(n - 1, 0))


def permutation_rep(n: int) -> RepSpace:
    """The group permuting n basis vectors: e_i goes to e_{sigma(i)}."""
    gens = []
    for t in range(1, n):
        s = adjacent_transposition(n, t)
        gens.append(RatMatrix.from_triplets(
            n, n, ((s.values[i] - 1, i, 1) for i in range(n))))
    return RepSpace(n, n, gens)


def regular_rep(n: int) -> RepSpace:
    """Left translation on the group algebra basis of all permutations."""
    elements = enumerate_hom(HomClass.BIJECTION, n, n)
    index = {g.values: i for i, g in enumerate(elements)}
    gens = []
    for t in range(1, n):
        s = adjacent_transposition(n, t)
        gens.append(RatMatrix.from_triplets(
            len(elements), len(elements),
            ((index[compose(s, g).values], i, 1)
             for i, g in enumerate(elements))))
    return RepSpace(n, len(elements), gens)


# -------------------------------------------------------------- decomposition


def rep_character(V: RepSpace) -> ClassFunction:
    """Trace of one deterministic representative per cycle type."""
    values = tuple(
        V.action_matrix(class_representative(mu)).trace()
        for mu in partitions_of(V.degree))
    return ClassFunction(V.degree, values)


def decompose_character(chi: ClassFunction) -> SchurClass:
    """Multiplicities of irreducibles in a genuine character.

    Validates that every multiplicity is a nonnegative integer and that the
    dimensions add up to the character's value at the identity; a failure
    means the input was not the character of an actual representation and
    raises InternalConsistencyError.
    """
    n = chi.degree
    parts = partitions_of(n)
    table = character_table(n)
    sizes = [class_size(mu) for mu in parts]
    order = factorial(n)
    mults: dict[Partition, int] = {}
    for li, lam in enumerate(parts):
        acc = sum((size * t * v for size, t, v
                   in zip(sizes, table[li], chi.values)), Fraction(0))
        mult = Fraction(acc, order)
        if mult.denominator != 1 or mult < 0:
            raise InternalConsistencyError(
                f"multiplicity of {lam} is {mult}, not a nonnegative integer")
        if mult:
            mults[lam] = int(mult)
    dim_at_identity = chi.values[partition_index((1,) * n)]
    if sum(c * irrep_dimension(lam) for lam, c in mults.items()) != dim_at_identity:
        raise InternalConsistencyError("dimension bookkeeping failed")
    return SchurClass(mults)


def decompose(V: RepSpace) -> SchurClass:
    """Isotypic multiplicities of a representation space."""
    return decompose_character(rep_character(V))


def bidecompose_character(chi: BiClassFunction) -> BiSchurClass:
    """Multiplicities of external products of irreducibles in a bicharacter."""
    a, b = chi.left_degree, chi.right_degree
    parts_a, parts_b = partitions_of(a), partitions_of(b)
    table_a, table_b = character_table(a), character_table(b)
    sizes_a = [class_size(mu) for mu in parts_a]
    sizes_b = [class_size(mu) for mu in parts_b]
    order = factorial(a) * factorial(b)
    mults: dict[tuple[Partition, Partition], int] = {}
    for li, lam in enumerate(parts_a):
        for ri, nu in enumerate(parts_b):
            acc = Fraction(0)
            for i in range(len(parts_a)):
                ci = sizes_a[i] * table_a[li][i]
                if not ci:
                    continue
                row = chi.values[i]
                acc += ci * sum(
                    (sizes_b[j] * table_b[ri][j] * row[j]
                     for j in range(len(parts_b))), Fraction(0))
            mult = Fraction(acc, order)
            if mult.denominator != 1 or mult < 0:
                raise InternalConsistencyError(
                    f"multiplicity of {(lam, nu)} is {mult}, "
                    "not a nonnegative integer")
            if mult:
                mults[(lam, nu)] = int(mult)
    dim_at_identity = chi.values[partition_index((1,) * a)][
        partition_index((1,) * b)]
    total = sum(c * irrep_dimension(l) * irrep_dimension(r)
                for (l, r), c in mults.items())
    if total != dim_at_identity:
        raise InternalConsistencyError("dimension bookkeeping failed")
    return BiSchurClass(mults)


def bidecompose(V: BiRepSpace) -> BiSchurClass:
    """Isotypic multiplicities of a two-sided representation space."""
    return bidecompose_character(V.bicharacter())


# ------------------------------------------------------- products of classes


def pieri_h(lam: Partition, n: int) -> SchurClass:
    """All partitions adding n boxes to lam, no two in the same column."""
    assert_partition(lam)
    assert n >= 0
    rows = list(lam) + [0]
    found = []

    def place(i: int, budget: int, built: list[int]) -> None:
        if i == len(rows):
            if budget == 0:
                found.append(tuple(p for p in built if p))
            return
        low = rows[i]
        high = low + budget
        if i >= 1:
            high = min(high, rows[i - 1])
        if built:
            high = min(high, built[-1])
        for m in range(low, high + 1):
            place(i + 1, budget - (m - low), built + [m])

    place(0, n, [])
    return SchurClass((mu, 1) for mu in found)


def pieri_e(lam: Partition, t: int) -> SchurClass:
    """All partitions adding t boxes to lam, no two in the same row.

    Computed by conjugating the no-two-in-a-column rule: transpose, add a
    horizontal strip, transpose back.
    """
    assert_partition(lam)
    assert t >= 0
    return SchurClass((conjugate(mu), c)
                      for mu, c in pieri_h(conjugate(lam), t).terms)


@cache
def _induced_product(lam: Partition, mu: Partition) -> SchurClass:
    """Product of two irreducibles via the exact induced character.

    The induced character value at a class nu of the full group is a sum
    over the ways of splitting the cycle multiset of nu between the two
    factors; the multinomial factor counts which copies of each cycle
    length go left.  Decomposing that character gives the multiplicities
    (the Littlewood-Richardson numbers), fully validated.
    """
    p, q = weight(lam), weight(mu)
    n = p + q
    values = []
    for nu in partitions_of(n):
        sizes = sorted(set(nu), reverse=True)
        counts = [nu.count(s) for s in sizes]
        total = 0
        for ks in iproduct(*[range(c + 1) for c in counts]):
            if sum(k * s for k, s in zip(ks, sizes)) != p:
                continue
            ways = prod(comb(c, k) for c, k in zip(counts, ks))
            nu1 = tuple(s for s, k in zip(sizes, ks) for _ in range(k))
            nu2 = tuple(s for s, k, c in zip(sizes, ks, counts)
                        for _ in range(c - k))
            total += ways * mn_character(lam, nu1) * mn_character(mu, nu2)
        values.append(Fraction(total))
    out = decompose_character(ClassFunction(n, tuple(values)))
    if out.total_dimension() != comb(n, p) * irrep_dimension(lam) * \
            irrep_dimension(mu):
        raise InternalConsistencyError("induced dimension bookkeeping failed")
    return out


def _irreducible_product(lam: Partition, mu: Partition) -> SchurClass:
    key_l = (weight(lam), partition_index(lam))
    key_m = (weight(mu), partition_index(mu))
    if key_m < key_l:
        lam, mu = mu, lam
    if len(lam) <= 1:
        return pieri_h(mu, weight(lam))
    if len(mu) <= 1:
        return pieri_h(lam, weight(mu))
    if all(part == 1 for part in lam):
        return pieri_e(mu, len(lam))
    if all(part == 1 for part in mu):
        return pieri_e(lam, len(mu))
    return _induced_product(lam, mu)


def convolution_class(x: SchurClass, y: SchurClass) -> SchurClass:
    """Bilinear product of classes; on irreducibles, the induction product.

    Single-row and single-column factors use the Pieri fast paths; the
    general case uses the induced-character oracle.  The empty partition is
    the unit.
    """
    acc: dict[Partition, int] = {}
    for lam, cx in x.terms:
        for mu, cy in y.terms:
            for nu, c in _irreducible_product(lam, mu).terms:
                acc[nu] = acc.get(nu, 0) + cx * cy * c
    return SchurClass(acc)


def biconvolution_right(x: BiSchurClass, y: SchurClass) -> BiSchurClass:
    """Convolution applied in the right (contravariant) coordinate only."""
    acc: dict[tuple[Partition, Partition], int] = {}
    for (left, right), cx in x.terms:
        for nu, cy in y.terms:
            for out, c in _irreducible_product(right, nu).terms:
                key = (left, out)
                acc[key] = acc.get(key, 0) + cx * cy * c
    return BiSchurClass(acc)


def derham_check(n: int) -> bool:
    """Alternating sum of row-times-column products telescopes to zero.

    Checks sum over t of (-1)^t * (n-t) * (1^t) products vanishing, the
    exactness pattern of the algebraic de Rham complex in degree n.
    """
    assert n >= 1
    total = SchurClass()
    for t in range(n + 1):
        term = convolution_class(trivial_class(n - t), sign_class(t))
        total = total + term.scale((-1) ** t)
    return total.is_zero()


def invert_identity_check(lam, window: int | None = None) -> bool:
    """Alternating trivial-then-sign convolutions recover a single class.

    For x the class of one irreducible, sums (-1)^t (x . triv_l) . sgn_t over
    all l, t with l + t <= window.  Every added degree d >= 1 receives its
    complete set of contributions within the window, and those cancel exactly
    (the same telescoping as derham_check), so the truncated double sum must
    equal x on the nose.  The default window keeps products within total
    weight 7 while always exercising at least two added degrees.
    """
    w = weight(lam)
    if window is None:
        window = max(2, 5 - w)
    x = SchurClass({lam: 1})
    total = SchurClass()
    for level in range(window + 1):
        lifted = convolution_class(x, trivial_class(level))
        for t in range(window - level + 1):
            term = convolution_class(lifted, sign_class(t))
            total = total + term.scale((-1) ** t)
    return total == x
