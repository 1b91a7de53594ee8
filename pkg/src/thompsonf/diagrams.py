"""Canonical diagrams for Thompson's group F, encoded as forest pairs.

An element of F is represented by a pair of binary rooted forests with
the same total number of leaves.  A tree is either a leaf, encoded as
``None``, or a caret ``(left, right)``; a forest is a nonempty tuple of
trees.  The pair (top, bottom) is kept *reduced* (no dipole: no position
k at which both forests expose a caret over leaves k, k+1) and
*canonical* (the two forests do not both end in a bare leaf tree, the
identity diagram EPSILON being the one exception).  Under these
constraints the representation of a group element is unique, so
structural equality decides the word problem.

Multiplication glues the bottom forest of the left factor to the top
forest of the right factor along their least common refinement, then
cancels dipoles and strips trailing leaf pairs.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Optional, Tuple

from .words import GenWord

Tree = Optional[tuple]  # None is a leaf, (left, right) is a caret
Forest = Tuple[Tree, ...]

LEAF: Tree = None
CARET: Tree = (None, None)


class Diagram(NamedTuple):
    top: Forest
    bottom: Forest


EPSILON = Diagram((LEAF,), (LEAF,))


class NormalForm(NamedTuple):
    pos: Tuple[int, ...]
    neg: Tuple[int, ...]


class NormalFormError(ValueError):
    """A sequence pair that is not a valid normal form."""


def tree_leaves(t: Tree) -> int:
    if t is None:
        return 1
    return tree_leaves(t[0]) + tree_leaves(t[1])


def forest_leaves(f: Forest) -> int:
    return sum(tree_leaves(t) for t in f)


def leaf_count(d: Diagram) -> int:
    """The shared leaf count L of the two forests."""
    return forest_leaves(d.top)


def _tree_carets(t: Tree) -> int:
    if t is None:
        return 0
    return 1 + _tree_carets(t[0]) + _tree_carets(t[1])


def cell_count(d: Diagram) -> int:
    """Total number of carets over both forests."""
    return sum(_tree_carets(t) for t in d.top) + sum(
        _tree_carets(t) for t in d.bottom
    )


def atomic(i: int) -> Diagram:
    """The canonical diagram of the generator x_i: one caret over i leaves."""
    if i < 0:
        raise ValueError(f"generator subscript must be nonnegative, got {i}")
    return Diagram((LEAF,) * i + (CARET,), (LEAF,) * (i + 2))


def invert(d: Diagram) -> Diagram:
    """Mirror image: swaps the forests, inverts the element."""
    return Diagram(d.bottom, d.top)


def _lcr(a: Tree, b: Tree) -> Tree:
    # least common refinement of two trees
    if a is None:
        return b
    if b is None:
        return a
    return (_lcr(a[0], b[0]), _lcr(a[1], b[1]))


def _expansions(t: Tree, refined: Tree, out: list) -> None:
    # per leaf of t, the subtree of the refinement it expanded to
    if t is None:
        out.append(refined)
    else:
        _expansions(t[0], refined[0], out)
        _expansions(t[1], refined[1], out)


def _graft(t: Tree, it: Iterator[Tree]) -> Tree:
    if t is None:
        return next(it)
    left = _graft(t[0], it)
    right = _graft(t[1], it)
    if left is t[0] and right is t[1]:
        return t
    return (left, right)


def _exposed(f: Forest) -> set:
    # leaf positions k such that a caret (None, None) spans leaves k, k+1
    found: set = set()

    def walk(t: Tree, base: int) -> int:
        if t is None:
            return 1
        l, r = t
        if l is None and r is None:
            found.add(base)
            return 2
        n = walk(l, base)
        return n + walk(r, base + n)

    base = 0
    for t in f:
        base += walk(t, base)
    return found


def _cancel(f: Forest, positions: set) -> Forest:
    # replace each exposed caret starting at a marked position by a leaf;
    # positions refer to the leaf numbering of the input forest
    def walk(t: Tree, base: int) -> tuple:
        if t is None:
            return t, 1
        l, r = t
        if l is None and r is None:
            return (None, 2) if base in positions else (t, 2)
        nl, cl = walk(l, base)
        nr, cr = walk(r, base + cl)
        if nl is l and nr is r:
            return t, cl + cr
        return (nl, nr), cl + cr

    out = []
    base = 0
    for t in f:
        nt, c = walk(t, base)
        out.append(nt)
        base += c
    return tuple(out)


def _canonicalize(top: Forest, bottom: Forest) -> Diagram:
    while True:
        positions = _exposed(top) & _exposed(bottom)
        if not positions:
            break
        top = _cancel(top, positions)
        bottom = _cancel(bottom, positions)
    while (
        len(top) > 1
        and len(bottom) > 1
        and top[-1] is None
        and bottom[-1] is None
    ):
        top = top[:-1]
        bottom = bottom[:-1]
    return Diagram(top, bottom)


def compose(d1: Diagram, d2: Diagram) -> Diagram:
    """Product d1 * d2 (d1 applied first) as a canonical diagram."""
    top1, bot1 = d1
    top2, bot2 = d2
    if len(bot1) < len(top2):
        pad = (LEAF,) * (len(top2) - len(bot1))
        top1 += pad
        bot1 += pad
    elif len(top2) < len(bot1):
        pad = (LEAF,) * (len(bot1) - len(top2))
        top2 += pad
        bot2 += pad
    refinement = tuple(_lcr(b, t) for b, t in zip(bot1, top2))
    exp1: list = []
    exp2: list = []
    for b, w in zip(bot1, refinement):
        _expansions(b, w, exp1)
    for t, w in zip(top2, refinement):
        _expansions(t, w, exp2)
    it1 = iter(exp1)
    it2 = iter(exp2)
    top = tuple(_graft(t, it1) for t in top1)
    bottom = tuple(_graft(t, it2) for t in bot2)
    return _canonicalize(top, bottom)


_ATOMIC_CACHE: dict = {}


def letter_diagram(k: int, s: int) -> Diagram:
    """Cached diagram of the single letter x_k^s."""
    d = _ATOMIC_CACHE.get((k, s))
    if d is None:
        d = atomic(k) if s == 1 else invert(atomic(k))
        _ATOMIC_CACHE[(k, s)] = d
    return d


def from_word(w: GenWord) -> Diagram:
    """Fold the letters of w into a canonical diagram; () gives EPSILON."""
    d = EPSILON
    for k, s in w:
        d = compose(d, letter_diagram(k, s))
    return d


def _caret_starts(f: Forest) -> list:
    # preorder per tree, left to right; a caret's index is the number of
    # leaves of the whole forest strictly left of its leftmost leaf
    out: list = []

    def walk(t: Tree, base: int) -> int:
        if t is None:
            return 1
        out.append(base)
        n = walk(t[0], base)
        return n + walk(t[1], base + n)

    base = 0
    for t in f:
        base += walk(t, base)
    return out


def to_normal_form(d: Diagram) -> NormalForm:
    """Read the normal form off a canonical diagram.

    pos lists the caret indices of the top forest, neg those of the
    bottom forest, both nondecreasing; the element is
    x_{pos[0]} ... x_{pos[-1]} x_{neg[-1]}^-1 ... x_{neg[0]}^-1.
    """
    return NormalForm(tuple(_caret_starts(d.top)), tuple(_caret_starts(d.bottom)))


def normal_form_word(nf: NormalForm) -> GenWord:
    """The word spelled by a normal form."""
    return tuple((i, 1) for i in nf.pos) + tuple((j, -1) for j in reversed(nf.neg))


def validate_normal_form(nf: NormalForm) -> None:
    """Raise NormalFormError unless nf satisfies the uniqueness conditions."""
    pos, neg = nf
    for name, seq in (("pos", pos), ("neg", neg)):
        if any(i < 0 for i in seq):
            raise NormalFormError(f"{name} contains a negative index: {seq}")
        if any(b < a for a, b in zip(seq, seq[1:])):
            raise NormalFormError(f"{name} is not nondecreasing: {seq}")
    union = set(pos) | set(neg)
    for i in set(pos) & set(neg):
        if i + 1 not in union:
            raise NormalFormError(
                f"index {i} occurs on both sides but {i + 1} occurs on neither"
            )
    # implied by the condition above, kept as an explicit guard
    if pos and neg and pos[-1] == neg[-1]:
        raise NormalFormError(f"equal final indices {pos[-1]} on both sides")


def from_normal_form(nf: NormalForm) -> Diagram:
    """Build the canonical diagram of a valid normal form."""
    nf = NormalForm(tuple(nf.pos), tuple(nf.neg))
    validate_normal_form(nf)
    return from_word(normal_form_word(nf))


def _encode_tree(t: Tree) -> str:
    if t is None:
        return "L"
    return "(" + _encode_tree(t[0]) + _encode_tree(t[1]) + ")"


def canonical_key(d: Diagram) -> str:
    """Injective serialization: trees as L / (..), forests concatenated,
    the two forests separated by '|'.  Equal keys iff equal elements."""
    return (
        "".join(_encode_tree(t) for t in d.top)
        + "|"
        + "".join(_encode_tree(t) for t in d.bottom)
    )
