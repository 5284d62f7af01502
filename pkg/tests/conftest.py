"""Shared oracles and fixtures.

The helpers here deliberately avoid the package's own shortcuts:
``enumerate_weyl`` multiplies reflection matrices breadth-first instead
of reusing ``longest_element``, and ``roots_by_orbit`` closes the simple
roots under reflections instead of walking root strings.  Tests compare
the two sides.
"""

from __future__ import annotations

import random

import pytest

from satake.rootsys import Matrix, RootSystem, identity_matrix, mat_mul, word_matrix


def enumerate_weyl(rs: RootSystem) -> dict[Matrix, tuple[int, ...]]:
    """All Weyl group elements as lattice matrices, with one reduced word each.

    Breadth-first closure under left multiplication by simple
    reflections, so the stored word for an element found at depth k has
    length k and is reduced.  Words follow the leftmost-applied-last
    convention.
    """
    gens = [word_matrix(rs, (i,)) for i in range(rs.n)]
    seen: dict[Matrix, tuple[int, ...]] = {identity_matrix(rs.n): ()}
    frontier = [identity_matrix(rs.n)]
    while frontier:
        nxt = []
        for m in frontier:
            wd = seen[m]
            for i, g in enumerate(gens):
                prod = mat_mul(g, m)
                if prod not in seen:
                    seen[prod] = (i,) + wd
                    nxt.append(prod)
        frontier = nxt
    return seen


def roots_by_orbit(rs: RootSystem) -> frozenset[tuple[int, ...]]:
    """All roots, computed as the reflection orbit of the simple roots."""
    current = {rs.simple_root(i) for i in range(rs.n)}
    current |= {tuple(-x for x in r) for r in current}
    while True:
        grown = set(current)
        for r in current:
            for i in range(rs.n):
                c = rs.pairing(r, i)
                img = list(r)
                img[i] -= c
                grown.add(tuple(img))
        if grown == current:
            return frozenset(current)
        current = grown


def positive_roots_by_orbit(rs: RootSystem) -> frozenset[tuple[int, ...]]:
    return frozenset(r for r in roots_by_orbit(rs) if all(x >= 0 for x in r))


def sample_valid_diagrams(count: int, seed: int, rank_bound: int = 8) -> list:
    """Random diagrams that pass full validation, reproducibly seeded.

    Generation mixes four shapes: plain diagrams with random black sets,
    flip-stable black sets paired with the diagram flip, doubled systems
    with the component swap, and doubled systems with mirrored black
    sets.  Everything is filtered through ``validate`` so the output only
    contains diagrams with a consistent involution.
    """
    from satake.diagram import SatakeDiagram, validate
    from satake.rootsys import SimpleType, build_root_system, is_diagram_automorphism

    rng = random.Random(seed)
    simple_types: list[SimpleType] = []
    for fam, ranks in (
        ("A", range(1, rank_bound + 1)),
        ("B", range(2, rank_bound + 1)),
        ("C", range(2, rank_bound + 1)),
        ("D", range(3, rank_bound + 1)),
        ("E", [r for r in (6, 7, 8) if r <= rank_bound]),
        ("F", [4] if rank_bound >= 4 else []),
        ("G", [2] if rank_bound >= 2 else []),
    ):
        simple_types.extend(SimpleType(fam, r) for r in ranks)

    def flip_of(t: SimpleType) -> list[int] | None:
        rs = build_root_system([t])
        n = t.rank
        if t.family == "A":
            perm = [n - 1 - i for i in range(n)]
        elif t.family == "D":
            perm = list(range(n))
            perm[n - 2], perm[n - 1] = perm[n - 1], perm[n - 2]
        elif t.family == "E" and n == 6:
            perm = [5, 1, 4, 3, 2, 0]
        else:
            return None
        return perm if is_diagram_automorphism(rs, perm) and perm != list(range(n)) else None

    out: list = []
    attempts = 0
    while len(out) < count and attempts < count * 300:
        attempts += 1
        t = rng.choice(simple_types)
        n = t.rank
        mode = rng.random()
        try:
            if mode < 0.4:
                black = frozenset(i for i in range(n) if rng.random() < 0.4)
                cand = SatakeDiagram.create([t], black, ())
            elif mode < 0.7:
                perm = flip_of(t)
                if perm is None:
                    continue
                black = set()
                for i in range(n):
                    if rng.random() < 0.35:
                        black.add(i)
                        black.add(perm[i])
                arrows = tuple(
                    (i, perm[i]) for i in range(n) if i < perm[i] and i not in black
                )
                cand = SatakeDiagram.create([t], frozenset(black), arrows)
            elif mode < 0.9:
                use_flip = rng.random() < 0.5
                perm = flip_of(t) if use_flip else None
                inner = perm if perm is not None else list(range(n))
                arrows = tuple((i, n + inner[i]) for i in range(n))
                cand = SatakeDiagram.create([t, t], frozenset(), arrows)
            else:
                black_one = frozenset(i for i in range(n) if rng.random() < 0.4)
                black = frozenset(black_one) | frozenset(n + i for i in black_one)
                cand = SatakeDiagram.create([t, t], black, ())
        except Exception:
            continue
        if validate(cand).ok:
            out.append(cand)
    if len(out) < count:
        raise RuntimeError(f"diagram sampler stalled at {len(out)}/{count}")
    return out


@pytest.fixture(scope="session")
def full_catalog():
    from satake.catalog import catalog

    return catalog()


@pytest.fixture(scope="session")
def random_diagrams_500():
    return sample_valid_diagrams(500, seed=20240811)


@pytest.fixture(scope="session")
def random_diagrams_1000():
    return sample_valid_diagrams(1000, seed=7052991)
