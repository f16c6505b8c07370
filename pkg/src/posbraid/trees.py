"""Plumbings of positive Hopf bands along plane trees."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classify import ClassificationResult, g4_interval, method_for
from .minors import (TILDE_NAMES, DefectCertificate, MinorEmbedding, get_pattern,
                     is_alexander_trivial, is_graph_minor, subspace_from_minor,
                     verify_minor_embedding)
from .seifert import InvariantRecord, form_invariants, tree_rule_matrix


class TreeParseError(ValueError):
    pass


@dataclass(frozen=True)
class PlaneTree:
    """Rooted ordered tree; ``children[v]`` lists v's children left to right.

    Vertices are numbered in depth-first preorder, root 0.
    """

    children: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.children)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, cs in enumerate(self.children) for v in cs]

    @property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.children]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def __str__(self) -> str:
        def rec(v: int) -> str:
            return "(" + "".join(rec(c) for c in self.children[v]) + ")"
        return rec(0)


def parse_tree(text: str) -> PlaneTree:
    """``"(()(()))"``: each pair of parentheses is a vertex, nesting is parenthood."""
    s = "".join(text.split())
    if not s or any(ch not in "()" for ch in s):
        raise TreeParseError(f"not a parenthesis expression: {text!r}")
    children: list[list[int]] = []
    stack: list[int] = []
    closed_root = False
    for ch in s:
        if ch == "(":
            if closed_root:
                raise TreeParseError("more than one root")
            v = len(children)
            children.append([])
            if stack:
                children[stack[-1]].append(v)
            stack.append(v)
        else:
            if not stack:
                raise TreeParseError("unbalanced ')'")
            stack.pop()
            if not stack:
                closed_root = True
    if stack:
        raise TreeParseError("unbalanced '('")
    return PlaneTree(tuple(tuple(c) for c in children))


def tree_seifert_matrix(tree: PlaneTree) -> list[list[int]]:
    # preorder numbering is already depth-first
    return tree_rule_matrix(tree.size, tree.edges)


def tree_invariants(tree: PlaneTree) -> InvariantRecord:
    A = tree_seifert_matrix(tree)
    V = tree.size
    b, sig, alex = form_invariants(A)
    if (V - b + 1) % 2:
        raise AssertionError("parity failure in tree invariants")
    return InvariantRecord(word=str(tree), strands=0, crossings=0, first_betti=V,
                           components=b, prime=True, genus=(V - b + 1) // 2,
                           signature=sig, alexander=alex)


def _candidate_order(tree: PlaneTree) -> tuple[str, ...]:
    high = sum(1 for a in tree.adjacency if len(a) >= 3)
    if high >= 2:
        return ("Xtilde", "Ttilde", "Etilde", "Ytilde")
    return TILDE_NAMES


def tree_minor_certificate(tree: PlaneTree) -> Optional[DefectCertificate]:
    host = tree.adjacency
    A = tree_seifert_matrix(tree)
    for name in _candidate_order(tree):
        pat = get_pattern(name)
        if pat.size > len(host):
            continue
        emb = is_graph_minor(host, pat.adjacency)
        if emb is None:
            continue
        # in a tree host the branch-set classes always pair like the pattern
        H = subspace_from_minor(A, host, name, emb)
        if H is None or not verify_minor_embedding(host, pat.adjacency, emb):
            raise AssertionError("unverifiable tree certificate")
        emb = MinorEmbedding(emb.branch_sets, tuple(map(tuple, H)))
        return DefectCertificate("graph_minor", name, emb, str(tree))
    return None


def verify_tree_certificate(tree: PlaneTree, cert: DefectCertificate) -> bool:
    emb = cert.witness
    if cert.kind != "graph_minor" or emb.subspace is None:
        return False
    return (verify_minor_embedding(tree.adjacency, get_pattern(cert.pattern).adjacency, emb)
            and is_alexander_trivial(tree_seifert_matrix(tree), emb.subspace))


class UnsupportedLinkError(ValueError):
    """The plumbing has more than one boundary component."""


def classify_tree_knot(tree: PlaneTree) -> ClassificationResult:
    """g4 of the plumbing's boundary knot, with a tilde-tree minor as the
    reason for any defect."""
    rec = tree_invariants(tree)
    if rec.components != 1:
        raise UnsupportedLinkError(f"boundary has {rec.components} components")
    g, s = rec.genus, rec.abs_signature
    lo, hi = g4_interval(g, s)
    cert = tree_minor_certificate(tree) if s < 2 * g else None
    return ClassificationResult(g=g, abs_sigma=s, g4_lo=lo, g4_hi=hi,
                                method=method_for(g, s), certificate=cert)
