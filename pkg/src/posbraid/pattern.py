"""Brick diagrams and linking patterns.

A brick sits between two consecutive occurrences of the same generator.
Bricks link (their Hopf band cores meet once) when they are consecutive
in one column, or sit in adjacent columns with interleaved vertical
extents.  Nested or disjoint extents do not link.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import networkx as nx

from . import kernels
from .braid import BraidWord


class ReducibleWordError(ValueError):
    """A generator is missing: the closure is a split link."""


class DecomposableWordError(ValueError):
    """A generator occurs once: the closure splits as a connected sum there."""

    def __init__(self, generator: int, position: int):
        super().__init__(f"s{generator} occurs once (letter {position}); "
                         "connected-sum decomposable at that letter")
        self.generator = generator
        self.position = position


@dataclass(frozen=True, order=True)
class Brick:
    column: int
    top: int
    bottom: int

    def __post_init__(self):
        if not self.top < self.bottom:
            raise ValueError("brick needs top < bottom")


def brick_diagram(w: BraidWord) -> list[Brick]:
    """Bricks of the word as written, ordered by column then top position."""
    occ: dict[int, list[int]] = {}
    for pos, g in enumerate(w.letters):
        occ.setdefault(g, []).append(pos)
    bricks = []
    for col in sorted(occ):
        p = occ[col]
        bricks.extend(Brick(col, p[k], p[k + 1]) for k in range(len(p) - 1))
    return bricks


@dataclass(frozen=True)
class LinkingPattern:
    vertices: tuple[Brick, ...]
    edges: frozenset[tuple[int, int]]

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    @cached_property
    def plane_data(self) -> list[tuple[int, int]]:
        """(column, vertical rank within the column) for each vertex."""
        ranks: dict[int, int] = {}
        out = []
        for b in self.vertices:
            r = ranks.get(b.column, 0)
            out.append((b.column, r))
            ranks[b.column] = r + 1
        return out

    def __len__(self) -> int:
        return len(self.vertices)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.vertices)))
        g.add_edges_from(self.edges)
        return g

    def edge_list_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in sorted(self.edges))

    def graph_description(self) -> str:
        lines = [f"{k} {col} {rank}" for k, (col, rank) in enumerate(self.plane_data)]
        lines += [f"edge {u} {v}" for u, v in sorted(self.edges)]
        return "\n".join(lines) + "\n"


def linking_pattern(bricks: Sequence[Brick]) -> LinkingPattern:
    bricks = tuple(bricks)
    edges = kernels.linking_edges([b.column for b in bricks], [b.top for b in bricks],
                                  [b.bottom for b in bricks])
    return LinkingPattern(bricks, frozenset((min(u, v), max(u, v)) for u, v in edges))


def word_pattern(w: BraidWord) -> LinkingPattern:
    return linking_pattern(brick_diagram(w))


def parse_graph_description(text: str) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Inverse of ``LinkingPattern.graph_description``: (plane data, edges)."""
    verts, edges = [], []
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "edge":
            edges.append((int(parts[1]), int(parts[2])))
        else:
            verts.append((int(parts[1]), int(parts[2])))
    return verts, edges


# -- graph predicates (plain adjacency lists, shared with the minor search) -------

def components(adj: Sequence[Sequence[int]]) -> list[list[int]]:
    seen = [False] * len(adj)
    out = []
    for s in range(len(adj)):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        out.append(sorted(comp))
    return out


def is_connected(lp: LinkingPattern) -> bool:
    return len(lp.vertices) > 0 and len(components(lp.adjacency)) == 1


def is_tree(lp: LinkingPattern) -> bool:
    return is_connected(lp) and len(lp.edges) == len(lp.vertices) - 1


def is_path(lp: LinkingPattern) -> bool:
    return is_tree(lp) and all(len(a) <= 2 for a in lp.adjacency)


def _check_generators(w: BraidWord) -> None:
    counts = w.generator_counts()
    for g, k in counts.items():
        if k == 0:
            raise ReducibleWordError(f"s{g} does not occur: split closure")
    for g, k in counts.items():
        if k == 1:
            raise DecomposableWordError(g, w.letters.index(g))


def is_prime(w: BraidWord) -> bool:
    """Visual primality: the linking pattern is connected.

    Needs every generator at least twice; see ``split_connected_sum``
    otherwise.
    """
    _check_generators(w)
    return is_connected(word_pattern(w))


def induced_subword(w: BraidWord, gens: Sequence[int]) -> BraidWord:
    keep = set(gens)
    return BraidWord.from_letters([g for g in w.letters if g in keep], w.strands)


def induced_two_column_pattern(w: BraidWord, i: int) -> LinkingPattern:
    """Linking pattern of the subword in the generators s_i and s_{i+1}."""
    counts = w.generator_counts()
    if counts.get(i, 0) == 0 or counts.get(i + 1, 0) == 0:
        raise ValueError(f"s{i} and s{i + 1} must both occur")
    return word_pattern(induced_subword(w, (i, i + 1)))


# -- connected sums -------------------------------------------------------------

def _split_at_column(L: list[int], i: int) -> tuple[list[int], list[int]]:
    """Split a word whose letters <= i and >= i+1 only interact through an
    s_i / s_{i+1} pair that is cyclically ``s_i^k s_{i+1}^l``."""
    low = [g for g in L if g <= i]
    high = [g - i for g in L if g > i]
    return low, high


def split_connected_sum(w: BraidWord) -> list[BraidWord]:
    """Factor words of the closure's connected summands.

    A generator occurring once is a connected-sum point (the letter is
    deleted and the two sides separate).  A disconnected linking pattern
    means some neighbouring columns i, i+1 are, cyclically, a block of
    s_i followed by a block of s_{i+1}; far commutations then separate
    the letters <= i from those > i.  A missing generator is a split
    union, handled the same way.  Unknotted factors are dropped; an
    unknot overall comes back as ``[s1]``.
    """
    out: list[BraidWord] = []
    _split_rec(list(w.letters), w.strands, out)
    return out or [BraidWord(2, [(1, 1)])]


def _split_rec(L: list[int], strands: int, out: list[BraidWord]) -> None:
    if strands < 2 or not L:
        return
    counts = [0] * (strands + 1)
    for g in L:
        counts[g] += 1
    for i in range(1, strands):
        if counts[i] <= 1:
            rest = [g for g in L if g != i]
            _split_rec([g for g in rest if g < i], i, out)
            _split_rec([g - i for g in rest if g > i], strands - i, out)
            return
    w = BraidWord.from_letters(L, strands)
    lp = word_pattern(w)
    if is_connected(lp):
        out.append(w)
        return
    # find a column boundary with no links across it
    linked = set()
    for u, v in lp.edges:
        cu, cv = lp.vertices[u].column, lp.vertices[v].column
        if cu != cv:
            linked.add(min(cu, cv))
    for i in range(1, strands - 1):
        if i not in linked:
            low, high = _split_at_column(L, i)
            _split_rec(low, i + 1, out)
            _split_rec(high, strands - i, out)
            return
    raise AssertionError("disconnected pattern without a free column boundary")
