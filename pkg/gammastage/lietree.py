# -*- coding: utf-8 -*-
"""Tree spaces and the Lie representation.

A :class:`TreeShape` is an abstract tree with leaves labelled 0..n and no
internal vertex of valence below 3. It is stored as its set of *splits*:
every internal edge cuts the leaves in two parts, and we keep the part that
does not contain leaf 0, as a bitmask over the labels. Two labelled trees are
isomorphic exactly when their split sets agree, so the split set is the
canonical form.

The space T_n of trees with internal edge lengths in (0, 1] is a union of
cubes, one per shape; ``tree_chain_complex`` builds the cellular chains of T_n
relative to the fully grown trees (some length equal to 1). Its homology is
free of rank (n-1)! in degree n-2, the rank of the Lie representation Lie(n)
which is also modelled here with its left-normed basis.
"""

from __future__ import print_function
from functools import lru_cache
from itertools import permutations
import logging

from sympy import Matrix
from sympy.combinatorics import Permutation

from gammastage.errors import BadLeaf, InvalidTree, SizeLimit
from gammastage.homology import ChainComplex, SparseIntegerMatrix

log = logging.getLogger(__name__)

MAX_SHAPE_ARITY = 7
MAX_HOMOLOGY_ARITY = 6
MAX_LIE_ARITY = 8


def _bits(labels):
    mask = 0
    for label in labels:
        mask |= 1 << label
    return mask


def _labels(mask):
    labels = []
    i = 0
    while mask:
        if mask & 1:
            labels.append(i)
        mask >>= 1
        i += 1
    return labels


def _edge_key(split):
    return tuple(_labels(split))


def _compatible(a, b):
    both = a & b
    return both == 0 or both == a or both == b


class TreeShape(object):
    """A labelled tree shape on the leaves 0..n.

    :param int n: arity (the tree has n + 1 leaves)
    :param splits: bitmasks of the leaf sets cut off by the internal edges,
                   each on the side away from leaf 0
    :param grown: the splits whose edge is fully grown (length 1)

    **Members:**
    """

    def __init__(self, n, splits=(), grown=()):
        if n < 1:
            raise InvalidTree("a tree needs at least the leaves 0 and 1")
        full = _bits(range(1, n + 1))
        splits = frozenset(splits)
        for s in splits:
            if s & 1 or s & ~full:
                raise InvalidTree("split %s is not a set of leaves 1..%d" % (_labels(s), n))
            size = bin(s).count("1")
            if size < 2 or size > n - 1:
                raise InvalidTree("split %s does not come from an internal edge" % _labels(s))
        ordered = sorted(splits)
        for i, a in enumerate(ordered):
            for b in ordered[i + 1:]:
                if not _compatible(a, b):
                    raise InvalidTree("splits %s and %s cross" % (_labels(a), _labels(b)))
        grown = frozenset(grown)
        if not grown <= splits:
            raise InvalidTree("grown edges must be internal edges of the tree")

        self.n = n
        """Arity: the leaves are 0..n"""

        self.splits = splits
        """Internal edges as leaf bitmasks"""

        self.grown = grown
        """Fully grown internal edges"""

    def __eq__(self, other):
        if not isinstance(other, TreeShape):
            return NotImplemented
        return (self.n, self.splits, self.grown) == (other.n, other.splits, other.grown)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.splits, self.grown))

    def __repr__(self):
        return "<gammastage.lietree.TreeShape \"%s\">" % self.encode()

    def __str__(self):
        return self.encode()

    @classmethod
    def corolla(cls, n):
        """The tree with no internal edges."""
        return cls(n)

    @classmethod
    def from_partitions(cls, n, sides, grown=()):
        """Build a tree from the leaf sets its internal edges cut off.

        Either side of each partition may be given.
        """
        everything = _bits(range(n + 1))

        def normal(side):
            mask = _bits(side)
            return everything & ~mask if mask & 1 else mask

        return cls(n, [normal(s) for s in sides], [normal(s) for s in grown])

    @classmethod
    def from_edges(cls, n, edges):
        """Build a tree from an abstract edge list.

        Leaves are the integers 0..n, internal vertices any other hashable
        (strings are convenient). Different names for the internal vertices
        give the same shape.

        :raises InvalidTree: if the graph is not a tree with n + 1 labelled
                             leaves and internal valence >= 3
        """
        adjacency = {}
        for a, b in edges:
            adjacency.setdefault(a, set()).add(b)
            adjacency.setdefault(b, set()).add(a)
        leaves = set(range(n + 1))
        missing = leaves - set(adjacency)
        if missing:
            raise InvalidTree("leaves %s are not used" % sorted(missing))
        if len(edges) != len(adjacency) - 1:
            raise InvalidTree("an abstract tree has one edge fewer than vertices")
        for v, neighbours in adjacency.items():
            if isinstance(v, int) and v not in leaves:
                raise InvalidTree("leaf label %d outside 0..%d" % (v, n))
            if v in leaves and len(neighbours) != 1:
                raise InvalidTree("leaf %s has valence %d" % (v, len(neighbours)))
            if v not in leaves and len(neighbours) < 3:
                raise InvalidTree("internal vertex %r has valence %d" % (v, len(neighbours)))

        # walk away from leaf 0; the leaves below each internal edge form its split
        below = {}
        seen = {0}
        order = []
        stack = [(0, None)]
        while stack:
            v, parent = stack.pop()
            order.append((v, parent))
            for w in adjacency[v]:
                if w != parent:
                    if w in seen:
                        raise InvalidTree("the edge list contains a cycle")
                    seen.add(w)
                    stack.append((w, v))
        if len(seen) != len(adjacency):
            raise InvalidTree("the edge list is not connected")
        splits = []
        for v, parent in reversed(order):
            mask = 1 << v if v in leaves else 0
            for w in adjacency[v]:
                if w != parent:
                    mask |= below[w]
            below[v] = mask
            if v not in leaves and parent is not None and parent not in leaves:
                splits.append(mask)
        return cls(n, splits)

    @property
    def internal_edges(self):
        """Internal edges in the canonical order (by their sorted leaf list)."""
        return sorted(self.splits, key=_edge_key)

    def edge_count(self):
        return len(self.splits)

    def is_trivalent(self):
        return len(self.splits) == self.n - 2

    def _children(self, cluster):
        inside = [s for s in self.splits if s != cluster and s & cluster == s]
        maximal = [s for s in inside if not any(t != s and t & s == s for t in inside)]
        covered = 0
        for s in maximal:
            covered |= s
        leaves = [1 << i for i in _labels(cluster & ~covered)]
        return sorted(maximal + leaves, key=lambda m: _labels(m)[0])

    def encode(self):
        """Nested bracket form rooted at leaf 0, e.g. ``0((1,2),3)``.

        Children are listed by their smallest leaf. Grown edges are marked
        with a trailing ``'``.
        """
        if self.n == 1:
            return "0(1)"

        def walk(cluster):
            if cluster & (cluster - 1) == 0:
                return str(_labels(cluster)[0])
            text = "(" + ",".join(walk(c) for c in self._children(cluster)) + ")"
            return text + "'" if cluster in self.grown else text

        return "0" + walk(_bits(range(1, self.n + 1)))

    def adjacency(self):
        """The abstract tree: vertex -> set of neighbours.

        Leaves are their labels, internal vertices are ``('v', cluster)``
        where cluster is the bitmask of leaves below the vertex.
        """
        graph = {}

        def link(a, b):
            graph.setdefault(a, set()).add(b)
            graph.setdefault(b, set()).add(a)

        full = _bits(range(1, self.n + 1))
        if self.n == 1:
            link(0, 1)
            return graph
        link(0, ('v', full))
        for cluster in [full] + list(self.splits):
            for child in self._children(cluster):
                if child in self.splits:
                    link(('v', cluster), ('v', child))
                else:
                    link(('v', cluster), _labels(child)[0])
        return graph

    def relabel(self, mapping):
        """Apply a permutation of the labels 0..n (a dict or a sequence)."""
        image = [mapping[i] for i in range(self.n + 1)]
        if sorted(image) != list(range(self.n + 1)):
            raise InvalidTree("relabelling must permute 0..%d" % self.n)
        return TreeShape.from_partitions(
            self.n,
            [[image[i] for i in _labels(s)] for s in self.splits],
            [[image[i] for i in _labels(s)] for s in self.grown])

    def contract(self, split):
        """Shrink one internal edge to length 0."""
        if split not in self.splits:
            raise InvalidTree("%s is not an internal edge" % _labels(split))
        return TreeShape(self.n, self.splits - {split}, self.grown - {split})

    def fully_grown(self):
        """True if some edge has length 1, i.e. the tree lies in the boundary."""
        return bool(self.grown)


def _candidate_splits(n):
    candidates = []
    for mask in range(2, 1 << (n + 1), 2):
        size = bin(mask).count("1")
        if 2 <= size <= n - 1:
            candidates.append(mask)
    return candidates


def enumerate_tree_shapes(n):
    """All tree shapes on the leaves 0..n, by number of internal edges.

    :param int n: arity, 1 <= n <= 7
    :returns: dict edge count -> list of :class:`TreeShape` sorted by encoding
    :raises SizeLimit: for n outside 1..7
    """
    if not 1 <= n <= MAX_SHAPE_ARITY:
        raise SizeLimit("tree shapes are enumerated for 1 <= n <= %d, not n=%d" % (MAX_SHAPE_ARITY, n))

    candidates = _candidate_splits(n)
    families = []

    def extend(start, chosen):
        families.append(chosen)
        for j in range(start, len(candidates)):
            c = candidates[j]
            if all(_compatible(c, s) for s in chosen):
                extend(j + 1, chosen + (c,))

    extend(0, ())
    shapes = {}
    for family in families:
        shapes.setdefault(len(family), []).append(TreeShape(n, family))
    for k in shapes:
        shapes[k].sort(key=lambda t: t.encode())
    log.debug("tree shapes for n=%d: %s", n, dict((k, len(v)) for k, v in shapes.items()))
    return shapes


def graft(outer, inner, at_leaf):
    """Operad composition: plug the root of ``inner`` into leaf ``at_leaf`` of ``outer``.

    Outer leaves below ``at_leaf`` keep their labels, the inner leaves 1..b
    become at_leaf..at_leaf+b-1 and the remaining outer leaves move up by
    b-1. The new internal edge is fully grown. Grafting onto or with the
    arity-1 tree returns the other tree.

    :raises BadLeaf: if ``at_leaf`` is not one of the leaves 1..n of ``outer``
    """
    if not 1 <= at_leaf <= outer.n:
        raise BadLeaf("leaf %r is not among the leaves 1..%d" % (at_leaf, outer.n))
    if inner.n == 1:
        return outer
    if outer.n == 1:
        return inner

    b = inner.n
    block = list(range(at_leaf, at_leaf + b))

    def outer_image(split):
        labels = []
        for j in _labels(split):
            if j < at_leaf:
                labels.append(j)
            elif j == at_leaf:
                labels.extend(block)
            else:
                labels.append(j + b - 1)
        return _bits(labels)

    def inner_image(split):
        return _bits(at_leaf + j - 1 for j in _labels(split))

    new_edge = _bits(block)
    splits = [outer_image(s) for s in outer.splits] + [inner_image(s) for s in inner.splits] + [new_edge]
    grown = [outer_image(s) for s in outer.grown] + [inner_image(s) for s in inner.grown] + [new_edge]
    return TreeShape(outer.n + b - 1, splits, grown)


def tree_chain_complex(n):
    """Cellular chains of T_n relative to the fully grown trees.

    C_k has one generator per shape with k internal edges. With the edges in
    canonical order, the boundary of a cube is
    d(S) = sum_j (-1)^j (S with edge j contracted); faces where an edge
    reaches length 1 lie in the boundary and vanish.

    :returns: (:class:`ChainComplex`, dict edge count -> list of shapes)
    """
    shapes = enumerate_tree_shapes(n)
    index = {}
    for k, members in shapes.items():
        for i, shape in enumerate(members):
            index[shape.splits] = i

    boundaries = {}
    for k, members in shapes.items():
        if k == 0:
            continue
        d = SparseIntegerMatrix(len(shapes[k - 1]), len(members))
        for col, shape in enumerate(members):
            for j, edge in enumerate(shape.internal_edges):
                d.add(index[shape.contract(edge).splits], col, -1 if j % 2 else 1)
        boundaries[k] = d
    ranks = dict((k, len(v)) for k, v in shapes.items())
    return ChainComplex(ranks, boundaries), shapes


def relative_homology_tree_pair(n):
    """H_*(T_n, boundary) as dict degree -> :class:`HomologyGroup`.

    :param int n: 2 <= n <= 6
    :raises SizeLimit: outside that range
    """
    if not 2 <= n <= MAX_HOMOLOGY_ARITY:
        raise SizeLimit("tree homology is computed for 2 <= n <= %d, not n=%d" % (MAX_HOMOLOGY_ARITY, n))
    complex_, _ = tree_chain_complex(n)
    groups = complex_.homology()
    log.debug("H_*(T_%d, dT_%d) = %s", n, n, dict((k, str(g)) for k, g in groups.items()))
    return groups


def trivalent_count(n):
    """(2n-3)!!, the number of binary trees on n + 1 labelled leaves."""
    count = 1
    for odd in range(1, 2 * n - 2, 2):
        count *= odd
    return count


class LieMonomial(object):
    """A bracket of the variables x_1..x_n, each used once.

    The bracketing is a nested pair structure: an int is a variable, a
    2-tuple a bracket.

    :param tree: int or nested 2-tuples of ints

    **Members:**
    """

    def __init__(self, tree):
        seen = []
        self._collect(tree, seen)
        if len(set(seen)) != len(seen):
            raise InvalidTree("a Lie monomial uses every variable exactly once")
        self.tree = tree
        """Nested bracket structure"""

    @staticmethod
    def _collect(tree, seen):
        if isinstance(tree, tuple):
            if len(tree) != 2:
                raise InvalidTree("brackets take exactly two arguments")
            LieMonomial._collect(tree[0], seen)
            LieMonomial._collect(tree[1], seen)
        elif isinstance(tree, int) and tree > 0:
            seen.append(tree)
        else:
            raise InvalidTree("%r is not a variable index" % (tree,))

    def __eq__(self, other):
        if not isinstance(other, LieMonomial):
            return NotImplemented
        return self.tree == other.tree

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.tree)

    def __lt__(self, other):
        return _sort_key(self.tree) < _sort_key(other.tree)

    def __repr__(self):
        return "<gammastage.lietree.LieMonomial \"%s\">" % self

    def __str__(self):
        return _render(self.tree)

    def variables(self):
        found = []
        self._collect(self.tree, found)
        return found

    def relabel(self, perm):
        """Substitute x_i -> x_perm[i-1]."""
        return LieMonomial(_substitute(self.tree, perm))

    @classmethod
    def left_normed(cls, word):
        """[[...[x_w1, x_w2], ...], x_wk]."""
        word = list(word)
        if not word:
            raise InvalidTree("empty word")
        tree = word[0]
        for letter in word[1:]:
            tree = (tree, letter)
        return cls(tree)

    @classmethod
    def parse(cls, text):
        """Read ``[x1,[x2,x3]]`` (spaces allowed)."""
        text = text.replace(" ", "")
        tree, rest = _parse(text)
        if rest:
            raise InvalidTree("trailing text %r in %r" % (rest, text))
        return cls(tree)


def _render(tree):
    if isinstance(tree, tuple):
        return "[%s,%s]" % (_render(tree[0]), _render(tree[1]))
    return "x%d" % tree


def _sort_key(tree):
    if isinstance(tree, tuple):
        return (1, _sort_key(tree[0]), _sort_key(tree[1]))
    return (0, tree)


def _substitute(tree, perm):
    if isinstance(tree, tuple):
        return (_substitute(tree[0], perm), _substitute(tree[1], perm))
    return perm[tree - 1]


def _parse(text):
    if text.startswith("["):
        left, rest = _parse(text[1:])
        if not rest.startswith(","):
            raise InvalidTree("expected ',' in bracket")
        right, rest = _parse(rest[1:])
        if not rest.startswith("]"):
            raise InvalidTree("expected ']' to close bracket")
        return (left, right), rest[1:]
    if text.startswith("x"):
        digits = ""
        for ch in text[1:]:
            if not ch.isdigit():
                break
            digits += ch
        if not digits:
            raise InvalidTree("variable without index")
        return int(digits), text[1 + len(digits):]
    raise InvalidTree("cannot read %r" % text)


def _min_var(tree):
    if isinstance(tree, tuple):
        return min(_min_var(tree[0]), _min_var(tree[1]))
    return tree


def _add(target, word, coefficient):
    value = target.get(word, 0) + coefficient
    if value:
        target[word] = value
    else:
        target.pop(word, None)


@lru_cache(maxsize=None)
def _right_bracket(word, tree):
    """[left-normed word, tree] as left-normed words with the same first letter."""
    if not isinstance(tree, tuple):
        return ((word + (tree,), 1),)
    c, d = tree
    result = {}
    for w, a in _right_bracket(word, c):
        for v, b in _right_bracket(w, d):
            _add(result, v, a * b)
    for w, a in _right_bracket(word, d):
        for v, b in _right_bracket(w, c):
            _add(result, v, -a * b)
    return tuple(result.items())


@lru_cache(maxsize=None)
def _straighten_tree(tree):
    if not isinstance(tree, tuple):
        return (((tree,), 1),)
    a, b = tree
    if _min_var(b) < _min_var(a):
        return tuple((w, -c) for w, c in _straighten_tree((b, a)))
    result = {}
    for word, c in _straighten_tree(a):
        for w, e in _right_bracket(word, b):
            _add(result, w, c * e)
    return tuple(result.items())


def straighten(m):
    """Expand a monomial (or a combination) in the left-normed basis.

    :param m: :class:`LieMonomial` or dict LieMonomial -> int
    :returns: dict basis LieMonomial -> non-zero int
    """
    combination = m if isinstance(m, dict) else {m: 1}
    words = {}
    for monomial, coefficient in combination.items():
        for word, c in _straighten_tree(monomial.tree):
            _add(words, word, coefficient * c)
    return dict((LieMonomial.left_normed(w), c) for w, c in words.items())


def lie_basis(n):
    """Left-normed basis of Lie(n) with x_1 in front, (n-1)! elements.

    :raises SizeLimit: outside 1 <= n <= 8
    """
    if not 1 <= n <= MAX_LIE_ARITY:
        raise SizeLimit("Lie(n) bases are listed for 1 <= n <= %d, not n=%d" % (MAX_LIE_ARITY, n))
    return [LieMonomial.left_normed((1,) + rest) for rest in permutations(range(2, n + 1))]


def _sign(perm):
    return Permutation([i - 1 for i in perm]).signature()


def sigma_action(perm, v, signed=True):
    """Act on a combination by a permutation in one-line form (1-based).

    Variables are relabelled x_i -> x_perm(i), the result is straightened
    and, if ``signed``, multiplied by the sign of the permutation.
    """
    sign = _sign(perm) if signed else 1
    moved = {}
    for monomial, coefficient in v.items():
        image = monomial.relabel(perm)
        moved[image] = moved.get(image, 0) + sign * coefficient
    return straighten(moved)


def sigma_action_signed(perm, v):
    """The sign-twisted action sigma . v = sign(sigma) * (relabelled v)."""
    return sigma_action(perm, v, signed=True)


def lie_action_matrix(perm, n, signed=True, dual=False):
    """Matrix of the action on the left-normed basis of Lie(n).

    Column j is the image of the j-th basis element. ``dual=True`` gives
    the contragredient action on Lie(n)*, the transpose of the matrix of
    the inverse permutation.
    """
    if dual:
        inverse = [0] * n
        for i, image in enumerate(perm):
            inverse[image - 1] = i + 1
        return lie_action_matrix(inverse, n, signed=signed).T

    basis = lie_basis(n)
    position = dict((b, i) for i, b in enumerate(basis))
    matrix = Matrix.zeros(len(basis), len(basis))
    for j, b in enumerate(basis):
        for image, c in sigma_action(perm, {b: 1}, signed=signed).items():
            matrix[position[image], j] = c
    return matrix
