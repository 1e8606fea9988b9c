"""Rooted plane trees with inorder labels, binary and Schroeder trees.

A tree is a nested tuple: a leaf is the empty tuple ``()`` and an internal
node is the tuple of its children.  Internal nodes are identified by their
preorder index (root = 0); leaves are not numbered.  An *n-tree* is a tree
with n+1 leaves.  Binary trees have all internal degrees exactly 2,
Schroeder trees at least 2; unary nodes are permitted in plain trees only
(they appear on the cuts of painted trees).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from .core import Permutation, Preposet

Tree = tuple  # recursive: () is a leaf, (c1, ..., cd) an internal node

LEAF: Tree = ()


def is_leaf(t: Tree) -> bool:
    return t == ()


def node_count(t: Tree) -> int:
    if is_leaf(t):
        return 0
    return 1 + sum(node_count(c) for c in t)


def leaf_count(t: Tree) -> int:
    if is_leaf(t):
        return 1
    return sum(leaf_count(c) for c in t)


def preorder_nodes(t: Tree) -> list[Tree]:
    """Internal nodes in preorder; index in this list is the node id."""
    out: list[Tree] = []

    def walk(s: Tree) -> None:
        if is_leaf(s):
            return
        out.append(s)
        for c in s:
            walk(c)

    walk(t)
    return out


def parent_map(t: Tree) -> dict[int, int | None]:
    """Preorder id -> parent preorder id (None for the root)."""
    parents: dict[int, int | None] = {}
    counter = itertools.count()

    def walk(s: Tree, par: int | None) -> None:
        if is_leaf(s):
            return
        me = next(counter)
        parents[me] = par
        for c in s:
            walk(c, me)

    walk(t, None)
    return parents


def children_map(t: Tree) -> dict[int, list[int]]:
    """Preorder id -> list of internal-node children ids (leaves skipped)."""
    kids: dict[int, list[int]] = {}
    counter = itertools.count()

    def walk(s: Tree) -> int | None:
        if is_leaf(s):
            return None
        me = next(counter)
        kids[me] = []
        for c in s:
            cid = walk(c)
            if cid is not None:
                kids[me].append(cid)
        return me

    walk(t)
    return kids


def degrees(t: Tree) -> list[int]:
    """Degree (number of children, leaves included) of each node by id."""
    return [len(node) for node in preorder_nodes(t)]


def is_binary(t: Tree) -> bool:
    return not is_leaf(t) and all(d == 2 for d in degrees(t))


def is_schroder(t: Tree) -> bool:
    """Every internal node has degree >= 2.  A bare leaf is the 0-tree."""
    return all(d >= 2 for d in degrees(t))


def inorder_labels(t: Tree) -> dict[int, tuple[int, ...]]:
    """Inorder labels: each degree-d node receives the d-1 leaf gaps below it.

    Labels partition [n] for an n-tree: the gap between consecutive leaves
    number x and x+1 is the label x, handed to the node separating them.
    Unary nodes receive the empty label.
    """
    labels: dict[int, list[int]] = {}
    counter = itertools.count()
    leaf_seen = 0

    def walk(s: Tree) -> None:
        nonlocal leaf_seen
        if is_leaf(s):
            leaf_seen += 1
            return
        me = next(counter)
        labels[me] = []
        for k, c in enumerate(s):
            if k > 0:
                labels[me].append(leaf_seen)
            walk(c)

    walk(t)
    return {v: tuple(lab) for v, lab in labels.items()}


def node_with_label(t: Tree, x: int) -> int:
    for v, lab in inorder_labels(t).items():
        if x in lab:
            return v
    raise KeyError(x)


def subtree_leaf_counts(t: Tree) -> dict[int, tuple[int, ...]]:
    """Preorder id -> leaf counts of its child subtrees, in order."""
    out: dict[int, tuple[int, ...]] = {}
    counter = itertools.count()

    def walk(s: Tree) -> int:
        if is_leaf(s):
            return 1
        me = next(counter)
        counts = tuple(walk(c) for c in s)
        out[me] = counts
        return sum(counts)

    walk(t)
    return out


def tree_preposet(t: Tree) -> Preposet:
    """i rel j iff the node of i has a root-directed path to the node of j."""
    labels = inorder_labels(t)
    parents = parent_map(t)
    n = leaf_count(t) - 1
    pairs = []
    for v, lab in labels.items():
        ancestors = [v]
        p = parents[v]
        while p is not None:
            ancestors.append(p)
            p = parents[p]
        anc_labels = [x for a in ancestors for x in labels[a]]
        for i in lab:
            for j in anc_labels:
                pairs.append((i, j))
    return Preposet(n, pairs)


def delete_node(t: Tree, v: int) -> Tree:
    """Contract the edge from node v to its parent (v must not be the root)."""
    if v == 0:
        raise ValueError("cannot delete the root")
    return delete_nodes(t, {v})


def delete_nodes(t: Tree, targets: set[int]) -> Tree:
    """Simultaneously splice out several non-root internal nodes."""
    if 0 in targets:
        raise ValueError("cannot delete the root")
    counter = itertools.count()

    def walk(s: Tree) -> list[Tree]:
        if is_leaf(s):
            return [s]
        me = next(counter)
        new_children: list[Tree] = []
        for c in s:
            new_children.extend(walk(c))
        if me in targets:
            return new_children
        return [tuple(new_children)]

    (out,) = walk(t)
    return out


def deletion_remap(t: Tree, targets: set[int]) -> dict[int, int]:
    """Old preorder id -> new preorder id after delete_nodes(t, targets).

    Deleted ids are absent from the map.  Splicing preserves the preorder of
    the surviving nodes, so the remap is order-preserving.
    """
    survivors = [v for v in range(node_count(t)) if v not in targets]
    return {v: i for i, v in enumerate(survivors)}


@lru_cache(maxsize=None)
def enumerate_binary(n: int) -> tuple[Tree, ...]:
    """All binary n-trees (n internal nodes, n+1 leaves), deterministic order."""
    if n == 0:
        return (LEAF,)
    out = []
    for k in range(n):
        for left in enumerate_binary(k):
            for right in enumerate_binary(n - 1 - k):
                out.append((left, right))
    return tuple(out)


@lru_cache(maxsize=None)
def _schroder_forests(leaves: int) -> tuple[tuple[Tree, ...], ...]:
    """Ordered forests of Schroeder trees with the given total leaf count."""
    if leaves == 0:
        return ((),)
    out: list[tuple[Tree, ...]] = []
    for first_leaves in range(1, leaves + 1):
        for first in enumerate_schroder(first_leaves - 1):
            for rest in _schroder_forests(leaves - first_leaves):
                out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_schroder(n: int) -> tuple[Tree, ...]:
    """All Schroeder n-trees (n+1 leaves, internal degrees >= 2)."""
    if n == 0:
        return (LEAF,)
    return tuple(forest for forest in _schroder_forests(n + 1) if len(forest) >= 2)


def node_paths(t: Tree) -> dict[int, tuple[int, ...]]:
    """Preorder id -> path of child positions leading to the node."""
    out: dict[int, tuple[int, ...]] = {}
    counter = itertools.count()

    def walk(s: Tree, path: tuple[int, ...]) -> None:
        if is_leaf(s):
            return
        out[next(counter)] = path
        for k, c in enumerate(s):
            walk(c, path + (k,))

    walk(t, ())
    return out


def subtree_at(t: Tree, path: Sequence[int]) -> Tree:
    for k in path:
        t = t[k]
    return t


def replace_at(t: Tree, path: Sequence[int], new: Tree) -> Tree:
    if not path:
        return new
    k = path[0]
    return t[:k] + (replace_at(t[k], path[1:], new),) + t[k + 1 :]


def rotatable_edges(t: Tree) -> list[int]:
    """Ids v whose node is the first child of its (binary) parent."""
    paths = node_paths(t)
    out = []
    for v, path in paths.items():
        if not path or path[-1] != 0:
            continue
        parent = subtree_at(t, path[:-1])
        if len(parent) == 2:
            out.append(v)
    return out


def tamari_right_rotation(t: Tree, v: int) -> Tree:
    """Right rotation of the edge from node v up to its parent.

    The parent p with children (v, C) where v = (A, B) becomes (A, (B, C)).
    Only valid when v is the left child of a degree-2 parent and v is binary.
    """
    paths = node_paths(t)
    if v not in paths or not paths[v] or paths[v][-1] != 0:
        raise ValueError("not a rotatable edge")
    ppath = paths[v][:-1]
    parent = subtree_at(t, ppath)
    if len(parent) != 2 or len(parent[0]) != 2:
        raise ValueError("not a rotatable edge")
    (a, b), c = parent
    return replace_at(t, ppath, (a, (b, c)))


def tamari_successors(t: Tree) -> list[Tree]:
    return [tamari_right_rotation(t, v) for v in rotatable_edges(t)]


def bst_insert(p: Permutation) -> Tree:
    """Right-to-left binary search tree insertion; fibers are sylvester classes.

    The resulting binary tree, read through its inorder labels, is the unique
    binary tree whose vertex order admits p as a linear extension.
    """
    # build with explicit values, then forget them (shape + inorder = values)
    node = None  # (value, left, right) as nested lists

    def insert(nd, val):
        if nd is None:
            return [val, None, None]
        if val < nd[0]:
            nd[1] = insert(nd[1], val)
        else:
            nd[2] = insert(nd[2], val)
        return nd

    for val in reversed(p.images):
        node = insert(node, val)

    def strip(nd) -> Tree:
        if nd is None:
            return LEAF
        return (strip(nd[1]), strip(nd[2]))

    return strip(node)


def loday_coordinates(t: Tree) -> tuple[int, ...]:
    """x_i = (leaves left of node i) * (leaves right of node i), inorder."""
    if not is_binary(t):
        raise ValueError("Loday coordinates need a binary tree")
    labels = inorder_labels(t)
    counts = subtree_leaf_counts(t)
    n = leaf_count(t) - 1
    x = [0] * n
    for v, lab in labels.items():
        (i,) = lab
        l, r = counts[v]
        x[i - 1] = l * r
    return tuple(x)


def tree_to_brackets(t: Tree) -> str:
    """Canonical serialization: nested brackets, leaves as empty pairs."""
    if is_leaf(t):
        return "[]"
    return "[" + "".join(tree_to_brackets(c) for c in t) + "]"


def tree_from_brackets(s: str) -> Tree:
    pos = 0

    def parse() -> Tree:
        nonlocal pos
        if s[pos] != "[":
            raise ValueError(f"expected '[' at {pos}")
        pos += 1
        children = []
        while s[pos] != "]":
            children.append(parse())
        pos += 1
        return tuple(children)

    out = parse()
    if pos != len(s.strip()):
        raise ValueError("trailing input")
    return out
