"""Exact root-system and Weyl-group combinatorics.

Everything is integer arithmetic in the simple-root basis: roots are
tuples of ints, the Cartan matrix is a tuple of int rows, and every
operation is a pure function over immutable values.

Conventions:

* Node indices run 0..n-1 with Bourbaki numbering inside each simple
  component; a doubled system numbers its second component after the
  first.
* ``cartan[i][j] = <alpha_j, alpha_i^vee>``, so the simple reflection
  acts by ``s_i(v) = v - <v, alpha_i^vee> alpha_i`` where
  ``<v, alpha_i^vee> = sum_j cartan[i][j] v[j]``; only coordinate ``i``
  of ``v`` changes.
* Words multiply with the leftmost letter applied last: the word
  ``(a, b)`` acts as ``s_a(s_b(v))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

Coords = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

_FAMILIES = "ABCDEFG"


def _rank_ok(family: str, rank: int) -> bool:
    if family == "A":
        return rank >= 1
    if family in ("B", "C"):
        return rank >= 2
    if family == "D":
        return rank >= 3
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    return rank == 2


@dataclass(frozen=True)
class SimpleType:
    """A simple Dynkin type, e.g. ``SimpleType("D", 4)``.

    Rank bounds: A >= 1, B >= 2, C >= 2, D >= 3, E in {6, 7, 8}, F = 4,
    G = 2.  Low-rank coincidences are rejected rather than aliased, so
    D2 is not a type (use a doubled A1) and D3 carries its own Bourbaki
    numbering with the triple node first.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not _rank_ok(self.family, self.rank):
            hint = " (use a doubled A1)" if (self.family == "D" and self.rank == 2) else ""
            raise ValueError(f"invalid simple type {self.family}{self.rank}{hint}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"([A-G])([0-9]+)", text)
        if not m:
            raise ValueError(f"not a simple type: {text!r}")
        return cls(m.group(1), int(m.group(2)))


def _cartan_block(t: SimpleType) -> list[list[int]]:
    """Bourbaki Cartan matrix of one simple component."""
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if t.family in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if t.family == "B":
            a[n - 1][n - 2] = -2  # last root short
        elif t.family == "C":
            a[n - 2][n - 1] = -2  # last root long
    elif t.family == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif t.family == "E":
        spine = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for u, v in zip(spine, spine[1:]):
            bond(u, v)
        bond(1, 3)
    elif t.family == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)  # nodes 3, 4 short
        bond(2, 3)
    else:  # G
        bond(0, 1, -3, -1)  # node 1 short
    return a


def _symmetrizer_block(t: SimpleType) -> list[int]:
    # d_i * a_ij symmetric; d_i proportional to the squared root length.
    n = t.rank
    if t.family == "B":
        return [2] * (n - 1) + [1]
    if t.family == "C":
        return [1] * (n - 1) + [2]
    if t.family == "F":
        return [2, 2, 1, 1]
    if t.family == "G":
        return [1, 3]
    return [1] * n


def _positive_roots_from_cartan(cartan: Matrix) -> tuple[Coords, ...]:
    """Generate all positive roots by closing root strings upward.

    Standard height-by-height closure: for a root beta and simple root
    alpha_i the string through beta has q = p - <beta, alpha_i^vee>
    steps up, where p counts the steps down that stay roots.  Ordering
    is by height, then lexicographic, so the output is deterministic.
    """
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found: set[Coords] = set(simple)
    ordered: list[Coords] = []
    level = sorted(simple)
    while level:
        ordered.extend(level)
        nxt: set[Coords] = set()
        for beta in level:
            for i in range(n):
                pairing = sum(cartan[i][j] * beta[j] for j in range(n))
                p = 0
                down = tuple(x - y for x, y in zip(beta, simple[i]))
                while down in found:
                    p += 1
                    down = tuple(x - y for x, y in zip(down, simple[i]))
                if p - pairing >= 1:
                    up = tuple(x + y for x, y in zip(beta, simple[i]))
                    if up not in found:
                        nxt.add(up)
        found |= nxt
        level = sorted(nxt)
    return tuple(ordered)


@dataclass(frozen=True)
class RootSystem:
    """Immutable Cartan data together with the generated positive roots."""

    components: tuple[SimpleType, ...]
    cartan: Matrix
    symmetrizer: Coords
    positive_roots: tuple[Coords, ...]

    @property
    def n(self) -> int:
        return len(self.cartan)

    @cached_property
    def _basis(self) -> tuple[Coords, ...]:
        return tuple(tuple(1 if j == i else 0 for j in range(self.n)) for i in range(self.n))

    def simple_root(self, i: int) -> Coords:
        return self._basis[i]

    def pairing(self, v: Sequence[int], i: int) -> int:
        """``<v, alpha_i^vee>`` for ``v`` in simple-root coordinates."""
        row = self.cartan[i]
        return sum(row[j] * v[j] for j in range(self.n))

    @cached_property
    def positive_root_set(self) -> frozenset[Coords]:
        return frozenset(self.positive_roots)

    def is_root(self, v: Sequence[int]) -> bool:
        t = tuple(v)
        return t in self.positive_root_set or tuple(-x for x in t) in self.positive_root_set

    @cached_property
    def component_nodes(self) -> tuple[tuple[int, ...], ...]:
        out = []
        start = 0
        for t in self.components:
            out.append(tuple(range(start, start + t.rank)))
            start += t.rank
        return tuple(out)

    def bilinear(self, v: Sequence[int], w: Sequence[int]) -> int:
        """Invariant symmetric form with ``B(alpha_i, alpha_j) = d_i a_ij``."""
        total = 0
        for i in range(self.n):
            if v[i]:
                row = self.cartan[i]
                total += v[i] * self.symmetrizer[i] * sum(row[j] * w[j] for j in range(self.n))
        return total


def build_root_system(types: Sequence[SimpleType | str]) -> RootSystem:
    """Assemble a root system from one simple type or a doubled pair.

    Accepts ``SimpleType`` values or strings like ``"A3"``.  A list of
    length two must repeat the same type (the complex-algebra-as-real
    case); anything longer is rejected.
    """
    comps = tuple(SimpleType.parse(t) if isinstance(t, str) else t for t in types)
    if not comps:
        raise ValueError("at least one simple type is required")
    if len(comps) > 2:
        raise ValueError("at most two components are supported")
    if len(comps) == 2 and comps[0] != comps[1]:
        raise ValueError(f"a doubled system needs two equal types, got {comps[0]} and {comps[1]}")
    return _build_cached(comps)


@lru_cache(maxsize=None)
def _build_cached(comps: tuple[SimpleType, ...]) -> RootSystem:
    blocks = [_cartan_block(t) for t in comps]
    n = sum(t.rank for t in comps)
    cartan = [[0] * n for _ in range(n)]
    start = 0
    symmetrizer: list[int] = []
    for t, block in zip(comps, blocks):
        for i in range(t.rank):
            for j in range(t.rank):
                cartan[start + i][start + j] = block[i][j]
        symmetrizer.extend(_symmetrizer_block(t))
        start += t.rank
    frozen = tuple(tuple(row) for row in cartan)
    return RootSystem(comps, frozen, tuple(symmetrizer), _positive_roots_from_cartan(frozen))


def _check_node(rs: RootSystem, i: int) -> None:
    if not 0 <= i < rs.n:
        raise IndexError(f"node index {i} out of range for a rank-{rs.n} system")


def _check_vector(rs: RootSystem, v: Sequence[int]) -> None:
    if len(v) != rs.n:
        raise ValueError(f"vector of length {len(v)} does not fit a rank-{rs.n} system")


def reflect_simple(rs: RootSystem, i: int, v: Sequence[int]) -> Coords:
    """Apply the simple reflection ``s_i``; only coordinate ``i`` changes."""
    _check_node(rs, i)
    _check_vector(rs, v)
    c = rs.pairing(v, i)
    out = list(v)
    out[i] -= c
    return tuple(out)


def apply_word(rs: RootSystem, word: Sequence[int], v: Sequence[int]) -> Coords:
    """Apply a word of simple reflections, leftmost letter last."""
    _check_vector(rs, v)
    for i in word:
        _check_node(rs, i)
    out = tuple(v)
    for i in reversed(word):
        c = rs.pairing(out, i)
        if c:
            tmp = list(out)
            tmp[i] -= c
            out = tuple(tmp)
    return out


def word_matrix(rs: RootSystem, word: Sequence[int]) -> Matrix:
    """Matrix of a word on the root lattice; column j is the image of alpha_j."""
    cols = [apply_word(rs, word, rs.simple_root(j)) for j in range(rs.n)]
    return tuple(tuple(cols[j][i] for j in range(rs.n)) for i in range(rs.n))


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def longest_element(rs: RootSystem, nodes: Iterable[int]) -> tuple[int, ...]:
    """Reduced word for the longest element of the parabolic on ``nodes``.

    Starting from the sum of the positive roots supported on the subset,
    repeatedly apply the smallest simple reflection with positive pairing
    until the vector is antidominant.  Each step kills exactly one
    positive root of the parabolic, so the collected letters form a
    reduced word (the empty subset yields the empty word).  Because the
    longest element is an involution the letters can be read in either
    convention.
    """
    subset = sorted(set(nodes))
    for i in subset:
        _check_node(rs, i)
    allowed = set(subset)
    supported = [
        r for r in rs.positive_roots if all(k in allowed or r[k] == 0 for k in range(rs.n))
    ]
    v = [0] * rs.n
    for r in supported:
        for k in range(rs.n):
            v[k] += r[k]
    letters: list[int] = []
    while True:
        for i in subset:
            c = rs.pairing(v, i)
            if c > 0:
                v[i] -= c
                letters.append(i)
                break
        else:
            break
    if len(letters) != len(supported):
        raise RuntimeError("longest-element iteration out of step with the parabolic root count")
    return tuple(letters)


def induced_node_permutation(rs: RootSystem, nodes: Iterable[int]) -> dict[int, int]:
    """The permutation ``alpha_i -> -w(alpha_i)`` of a parabolic subset.

    ``w`` is the longest element on the subset; it maps every simple root
    of the subset to the negative of another one, so the result is a
    total involution on the subset.
    """
    subset = sorted(set(nodes))
    word = longest_element(rs, subset)
    out: dict[int, int] = {}
    for i in subset:
        neg = tuple(-x for x in apply_word(rs, word, rs.simple_root(i)))
        for j in subset:
            if neg == rs.simple_root(j):
                out[i] = j
                break
        else:
            raise RuntimeError(
                f"-w(alpha_{i + 1}) is not a simple root of the subset; "
                "longest-element computation is broken"
            )
    return out


def is_diagram_automorphism(rs: RootSystem, perm: Sequence[int]) -> bool:
    """True when the node permutation preserves every Cartan entry."""
    if sorted(perm) != list(range(rs.n)):
        raise ValueError("not a permutation of the node indices")
    a = rs.cartan
    return all(
        a[perm[i]][perm[j]] == a[i][j] for i in range(rs.n) for j in range(rs.n)
    )


def connected_node_sets(rs: RootSystem, nodes: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Connected components of the subdiagram spanned by ``nodes``."""
    remaining = set(nodes)
    for i in remaining:
        _check_node(rs, i)
    out = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            u = frontier.pop()
            for v in remaining - comp:
                if rs.cartan[u][v] != 0:
                    comp.add(v)
                    frontier.append(v)
        out.append(tuple(sorted(comp)))
        remaining -= comp
    return tuple(sorted(out))


def subdiagram_cartan(rs: RootSystem, nodes: Sequence[int]) -> Matrix:
    """Cartan matrix restricted to ``nodes`` (in the given order)."""
    for i in nodes:
        _check_node(rs, i)
    return tuple(tuple(rs.cartan[i][j] for j in nodes) for i in nodes)


def _row_signature(m: Matrix, i: int) -> tuple:
    return tuple(sorted((m[i][j], m[j][i]) for j in range(len(m)) if j != i and m[i][j] != 0))


def _permutation_equivalent(a: Matrix, b: Matrix) -> bool:
    n = len(a)
    if len(b) != n:
        return False
    sig_a = [_row_signature(a, i) for i in range(n)]
    sig_b = [_row_signature(b, i) for i in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return False
    assignment = [-1] * n
    used = [False] * n

    def consistent(i: int, cand: int) -> bool:
        if sig_a[i] != sig_b[cand]:
            return False
        for j in range(n):
            if assignment[j] >= 0:
                if a[i][j] != b[cand][assignment[j]] or a[j][i] != b[assignment[j]][cand]:
                    return False
        return True

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        for cand in range(n):
            if not used[cand] and consistent(i, cand):
                assignment[i] = cand
                used[cand] = True
                if backtrack(i + 1):
                    return True
                assignment[i] = -1
                used[cand] = False
        return False

    return backtrack(0)


def identify_cartan(cartan: Matrix) -> SimpleType:
    """Identify the simple type of a connected Cartan matrix up to relabeling.

    Aliases resolve to the earliest family in A..G order: the rank-2
    double-bond matrix reports as B2 (never C2) and the rank-3 fork as
    A3 (never D3).  Raises ValueError when nothing matches.
    """
    n = len(cartan)
    if n == 0:
        raise ValueError("empty Cartan matrix")
    candidates = [SimpleType("A", n)]
    if n >= 2:
        candidates += [SimpleType("B", n), SimpleType("C", n)]
    if n >= 4:
        candidates.append(SimpleType("D", n))
    if n in (6, 7, 8):
        candidates.append(SimpleType("E", n))
    if n == 4:
        candidates.append(SimpleType("F", 4))
    if n == 2:
        candidates.append(SimpleType("G", 2))
    for t in candidates:
        target = tuple(tuple(row) for row in _cartan_block(t))
        if _permutation_equivalent(cartan, target):
            return t
    raise ValueError("Cartan matrix does not match a simple type")


def longest_negation_nontrivial(t: SimpleType) -> bool:
    """Whether ``-w0`` of the type is the nontrivial diagram flip.

    True exactly for A_n (n >= 2), D_n (n odd) and E6; every other simple
    type has ``-w0 = id`` on the diagram.
    """
    if t.family == "A":
        return t.rank >= 2
    if t.family == "D":
        return t.rank % 2 == 1
    return t.family == "E" and t.rank == 6
