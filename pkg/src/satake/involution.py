"""From a painted, arrow-paired Dynkin diagram to its lattice involution.

Given a diagram with a black (painted) node set and an involutive arrow
pairing of white nodes, this module computes:

* the induced node involution on the whole diagram, which acts as the
  arrow pairing on white nodes and as the flip forced by the longest
  element of the black subsystem on black nodes;
* the root-lattice involution that fixes every black simple root and
  sends every positive root with white support to a negative root;
* the correction coefficients over black nodes that appear when that
  involution is written against the simple-root basis;
* the restricted root system (images under the anti-fixed projection)
  with multiplicities and an exact type identification, including the
  non-reduced BC types.

Diagram arguments are duck-typed: anything exposing ``rs``, ``n``,
``black``, ``whites``, ``arrows`` and ``omega_map`` works.  All checks
report granular (check, detail) pairs through ``DiagramDataError``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from .errors import DiagramDataError
from .rootsys import (
    Coords,
    Matrix,
    RootSystem,
    SimpleType,
    apply_word,
    identify_cartan,
    identity_matrix,
    induced_node_permutation,
    is_diagram_automorphism,
    longest_element,
    mat_mul,
)

if TYPE_CHECKING:
    from .diagram import SatakeDiagram

Failures = tuple[tuple[str, str], ...]


def structural_failures(d: "SatakeDiagram") -> Failures:
    """Checks that only involve the node sets, not the lattice action."""
    fails: list[tuple[str, str]] = []
    n = d.n
    seen: dict[int, int] = {}
    for i, j in d.arrows:
        tag = f"{i + 1}<->{j + 1}"
        if not (0 <= i < n and 0 <= j < n):
            fails.append(("arrow endpoint out of range", tag))
            continue
        if i == j:
            fails.append(("arrow connects a node to itself", tag))
            continue
        if i in d.black or j in d.black:
            fails.append(("arrow touches black node", tag))
        seen[i] = seen.get(i, 0) + 1
        seen[j] = seen.get(j, 0) + 1
    for k in sorted(seen):
        if seen[k] > 1:
            fails.append(("node in more than one arrow", f"node {k + 1}"))
    for i in sorted(d.black):
        if not 0 <= i < n:
            fails.append(("black node out of range", f"node {i + 1}"))
    if fails:
        return tuple(dict.fromkeys(fails))
    omega = d.omega_map
    a = d.rs.cartan
    for i in d.whites:
        for j in d.whites:
            if a[omega[i]][omega[j]] != a[i][j]:
                fails.append(
                    (
                        "arrows break bond pattern",
                        f"nodes {i + 1},{j + 1} map to {omega[i] + 1},{omega[j] + 1}",
                    )
                )
    return tuple(dict.fromkeys(fails))


def satake_automorphism(d: "SatakeDiagram") -> tuple[int, ...]:
    """The node involution the diagram induces, as a total permutation.

    White nodes follow the arrow pairing (unpaired whites are fixed);
    black nodes follow the negation flip of the black subsystem.  The
    combined map must be an involutive automorphism of the Dynkin
    diagram, otherwise ``DiagramDataError`` lists what broke.
    """
    fails = list(structural_failures(d))
    if fails:
        raise DiagramDataError(fails)
    perm = list(range(d.n))
    for i in d.whites:
        perm[i] = d.omega_map[i]
    for i, j in induced_node_permutation(d.rs, d.black).items():
        perm[i] = j
    if any(perm[perm[i]] != i for i in range(d.n)):
        raise DiagramDataError([("node map is not an involution", _perm_text(perm))])
    if not is_diagram_automorphism(d.rs, perm):
        raise DiagramDataError(
            [("node map breaks the Cartan matrix", _perm_text(perm))]
        )
    return tuple(perm)


def _perm_text(perm: Sequence[int]) -> str:
    return ", ".join(f"{i + 1}->{perm[i] + 1}" for i in range(len(perm)) if perm[i] != i) or "identity"


def permutation_cycles(perm: Sequence[int]) -> str:
    """1-based cycle notation of the moved points, or ``"identity"``."""
    seen: set[int] = set()
    parts: list[str] = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        parts.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) if parts else "identity"


def _apply(m: Matrix, v: Sequence[int]) -> Coords:
    n = len(m)
    return tuple(sum(m[i][j] * v[j] for j in range(n)) for i in range(n))


def dual_cartan_involution(d: "SatakeDiagram") -> Matrix:
    """Lattice involution: negated longest black element after the node map.

    Column ``j`` is the image of the j-th simple root.  Black simple
    roots are fixed; the matrix squares to the identity, permutes the
    roots, and sends every positive root with white support to a
    negative root.  Violations raise ``DiagramDataError`` with the full
    failure list.
    """
    perm = satake_automorphism(d)
    rs = d.rs
    word = longest_element(rs, d.black)
    cols = [
        tuple(-x for x in apply_word(rs, word, rs.simple_root(perm[j])))
        for j in range(rs.n)
    ]
    theta = tuple(tuple(cols[j][i] for j in range(rs.n)) for i in range(rs.n))
    fails = involution_failures(d, theta)
    if fails:
        raise DiagramDataError(fails)
    return theta


def involution_failures(d: "SatakeDiagram", theta: Matrix) -> Failures:
    """All lattice-level consistency checks for a candidate involution."""
    rs = d.rs
    n = d.n
    fails: list[tuple[str, str]] = []
    if mat_mul(theta, theta) != identity_matrix(n):
        fails.append(("involution-squared", "the lattice map does not square to the identity"))
    for j in sorted(d.black):
        col = tuple(theta[i][j] for i in range(n))
        if col != rs.simple_root(j):
            fails.append(("involution-fixes-black", f"black simple root {j + 1} moves"))
    pos = rs.positive_root_set
    for r in rs.positive_roots:
        img = _apply(theta, r)
        neg = tuple(-x for x in img)
        if img not in pos and neg not in pos:
            fails.append(("involution-roots", f"image of root {r} is not a root"))
        elif any(r[i] for i in d.whites) and neg not in pos:
            fails.append(
                ("involution-swaps-noncompact", f"white-supported root {r} has a positive image")
            )
    if not fails:
        fails.extend(_correction_failures(d, theta))
    return tuple(fails)


def _correction_vector(d: "SatakeDiagram", theta: Matrix, i: int) -> list[int]:
    # theta(alpha_i) = -alpha_{omega(i)} - sum_b c[i][b] alpha_b, so the
    # corrections are the coordinates of -(theta e_i + e_{omega(i)}).
    vec = [-theta[k][i] for k in range(d.n)]
    vec[d.omega_map[i]] -= 1
    return vec


def _correction_failures(d: "SatakeDiagram", theta: Matrix) -> list[tuple[str, str]]:
    fails: list[tuple[str, str]] = []
    for i in sorted(d.whites):
        vec = _correction_vector(d, theta, i)
        for k in d.whites:
            if vec[k] != 0:
                fails.append(
                    (
                        "corrections",
                        f"white node {i + 1} has a stray coefficient at white node {k + 1}",
                    )
                )
        for k in sorted(d.black):
            if vec[k] < 0:
                fails.append(
                    ("corrections", f"white node {i + 1} has a negative coefficient at black node {k + 1}")
                )
    return fails


def black_corrections(d: "SatakeDiagram", theta: Matrix | None = None) -> dict[int, dict[int, int]]:
    """Per white node, the nonnegative coefficients over the black nodes.

    The involution sends a white simple root to minus its arrow partner
    minus a nonnegative combination of black simple roots; this returns
    those combinations, one inner map per white node, listing every
    black node (zeros included).
    """
    if theta is None:
        theta = dual_cartan_involution(d)
    fails = _correction_failures(d, theta)
    if fails:
        raise DiagramDataError(fails)
    out: dict[int, dict[int, int]] = {}
    for i in sorted(d.whites):
        vec = _correction_vector(d, theta, i)
        out[i] = {b: vec[b] for b in sorted(d.black)}
    return out


@dataclass(frozen=True)
class RestrictedRoots:
    """Restricted root data in doubled coordinates.

    Vectors store ``root - theta(root)``, i.e. twice the anti-fixed
    projection, so everything stays integral.  ``base`` lists the
    distinct images of the white simple roots in node order;
    ``positive`` is sorted by height then lexicographically;
    ``multiplicity`` counts how many positive roots restrict to each
    vector.  ``label`` names the type of the restricted system (e.g.
    ``"F4"`` or ``"BC2"``) or is None when there are no restricted
    roots.
    """

    base: tuple[Coords, ...]
    positive: tuple[Coords, ...]
    multiplicity: dict[Coords, int]
    label: str | None


def restricted_roots(d: "SatakeDiagram") -> RestrictedRoots:
    theta = dual_cartan_involution(d)
    rs = d.rs
    mult: dict[Coords, int] = {}
    for r in rs.positive_roots:
        img = _apply(theta, r)
        s = tuple(a - b for a, b in zip(r, img))
        if any(s):
            mult[s] = mult.get(s, 0) + 1
    positive = tuple(sorted(mult, key=lambda v: (sum(v), v)))
    base: list[Coords] = []
    for i in range(d.n):
        if i in d.black:
            continue
        col = tuple(rs.simple_root(i)[k] - theta[k][i] for k in range(d.n))
        if col not in base:
            base.append(col)
    label = _restricted_label(rs, tuple(base), frozenset(positive))
    return RestrictedRoots(tuple(base), positive, mult, label)


def _connected_index_sets(cartan: Matrix) -> list[tuple[int, ...]]:
    remaining = set(range(len(cartan)))
    comps = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            u = frontier.pop()
            for v in remaining - comp:
                if cartan[u][v] != 0:
                    comp.add(v)
                    frontier.append(v)
        comps.append(tuple(sorted(comp)))
        remaining -= comp
    return sorted(comps)


def _restricted_label(
    rs: RootSystem, base: tuple[Coords, ...], positive: frozenset[Coords]
) -> str | None:
    if not base:
        return None
    r = len(base)
    gram = [[rs.bilinear(base[i], base[j]) for j in range(r)] for i in range(r)]
    if any(gram[i][i] <= 0 for i in range(r)):
        return None
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            q = Fraction(2 * gram[i][j], gram[i][i])
            if q.denominator != 1 or (i != j and q > 0):
                return None
            row.append(int(q))
        rows.append(tuple(row))
    cartan = tuple(rows)
    non_reduced = any(tuple(2 * x for x in s) in positive for s in positive)
    labels: list[SimpleType] = []
    for comp in _connected_index_sets(cartan):
        sub = tuple(tuple(cartan[i][j] for j in comp) for i in comp)
        try:
            labels.append(identify_cartan(sub))
        except ValueError:
            return None
    if non_reduced:
        # indivisible restricted roots of a BC system form the B pattern
        # (A1 when the rank is one)
        if len(labels) != 1:
            return None
        t = labels[0]
        if t.family == "A" and t.rank == 1:
            return "BC1"
        if t.family == "B":
            return f"BC{t.rank}"
        return None
    return "+".join(str(t) for t in labels)


def base_coordinates(base: Sequence[Coords], vec: Coords) -> tuple[Fraction, ...]:
    """Exact coordinates of ``vec`` in the span of ``base``.

    Gaussian elimination over Fractions followed by a substitution
    check; raises ValueError when the vector is not in the span.
    """
    r = len(base)
    n = len(vec)
    rows = [[Fraction(base[j][k]) for j in range(r)] + [Fraction(vec[k])] for k in range(n)]
    pivots: list[tuple[int, int]] = []
    row_i = 0
    for col in range(r):
        piv = next((k for k in range(row_i, n) if rows[k][col] != 0), None)
        if piv is None:
            continue
        rows[row_i], rows[piv] = rows[piv], rows[row_i]
        inv = rows[row_i][col]
        rows[row_i] = [x / inv for x in rows[row_i]]
        for k in range(n):
            if k != row_i and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[row_i])]
        pivots.append((row_i, col))
        row_i += 1
    coords = [Fraction(0)] * r
    for ri, col in pivots:
        coords[col] = rows[ri][-1]
    for k in range(n):
        if sum(coords[j] * base[j][k] for j in range(r)) != vec[k]:
            raise ValueError("vector is not in the span of the base")
    return tuple(coords)


def act_on_weight(perm: Sequence[int], weight: Sequence[int]) -> Coords:
    """Permute fundamental-weight coordinates by a node involution."""
    if len(weight) != len(perm):
        raise ValueError(
            f"weight of length {len(weight)} does not match a rank-{len(perm)} diagram"
        )
    return tuple(weight[perm[i]] for i in range(len(perm)))


def _half(c: int) -> dict[str, int]:
    return {"num": c // 2, "den": 1} if c % 2 == 0 else {"num": c, "den": 2}


def restricted_to_json(rr: RestrictedRoots) -> str:
    """JSON of the restricted data, with exact rational coordinates."""
    payload = {
        "type": rr.label,
        "base": [[_half(c) for c in v] for v in rr.base],
        "positive": [
            {"root": [_half(c) for c in v], "multiplicity": rr.multiplicity[v]}
            for v in rr.positive
        ],
    }
    return json.dumps(payload, indent=2)
