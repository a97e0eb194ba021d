"""Isomorph-free streaming generation of free trees, unicyclic graphs,
and forests of a given order.

Rooted trees are represented by nested canonical codes: a code is the
tuple of its child codes sorted descending under (size, code). Free
trees are rooted at their centroid, so each isomorphism class appears
exactly once: either a root whose child subtrees all have at most
floor((n-1)/2) vertices, or (even n) an unordered pair of rooted trees
of order n/2 joined at the roots. Unicyclic graphs choose a cycle
length c and a sequence of rooted trees hanging off the cycle that is
canonical (maximal) under the dihedral symmetry of the cycle. Forests
are non-increasing multisets of free trees whose orders partition n.

Streams are deterministic and restartable: the same order always yields
the same graphs in the same sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator, Optional

from .counting import independence_number
from .graphs import Graph, make_graph

TREE_LIMIT = 18
UNICYCLIC_LIMIT = 14
FOREST_LIMIT = 16

Code = tuple  # nested tuples; the leaf is ()


def _code_size(code: Code) -> int:
    return 1 + sum(_code_size(child) for child in code)


@lru_cache(maxsize=None)
def _code_key(code: Code) -> tuple:
    """Total order on rooted-tree codes: by size, then recursively."""
    return (_code_size(code), tuple(_code_key(child) for child in code))


@lru_cache(maxsize=None)
def rooted_tree_codes(order: int) -> tuple[Code, ...]:
    """All canonical rooted trees on `order` vertices, descending by key."""
    if order < 1:
        return ()
    if order == 1:
        return ((),)
    out = [tuple(children) for children in _child_multisets(order - 1, order - 1, None)]
    out.sort(key=_code_key, reverse=True)
    return tuple(out)


def _child_multisets(
    total: int, max_size: int, bound: Optional[Code]
) -> Iterator[tuple[Code, ...]]:
    """Key-descending multisets of rooted codes with sizes summing to total.

    max_size caps every part; bound (when given) caps the first part's
    key so the multiset stays non-increasing along the recursion.
    """
    if total == 0:
        yield ()
        return
    top = min(total, max_size)
    for size in range(top, 0, -1):
        for code in rooted_tree_codes(size):
            if bound is not None and _code_key(code) > _code_key(bound):
                continue
            for rest in _child_multisets(total - size, max_size, code):
                yield (code,) + rest


def _add_rooted(
    edges: list[tuple[int, int]], code: Code, root: int, next_free: int
) -> int:
    """Wire `code`'s tree rooted at `root`; returns the next free index."""
    for child in code:
        edges.append((root, next_free))
        next_free = _add_rooted(edges, child, next_free, next_free + 1)
    return next_free


def _rooted_graph(code: Code) -> Graph:
    edges: list[tuple[int, int]] = []
    n = _add_rooted(edges, code, 0, 1)
    return make_graph(n, edges)


def free_trees(n: int, unsafe: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on n vertices."""
    if n < 1:
        raise ValueError(f"trees need n >= 1, got {n}")
    if n > TREE_LIMIT and not unsafe:
        raise ValueError(f"order {n} above tree limit {TREE_LIMIT}")
    if n == 1:
        yield make_graph(1, [])
        return
    for children in _child_multisets(n - 1, (n - 1) // 2, None):
        yield _rooted_graph(tuple(children))
    if n % 2 == 0:
        halves = rooted_tree_codes(n // 2)
        for i, t1 in enumerate(halves):
            for t2 in halves[i:]:
                edges = [(0, n // 2)]
                _add_rooted(edges, t1, 0, 1)
                _add_rooted(edges, t2, n // 2, n // 2 + 1)
                yield make_graph(n, edges)


def unicyclic_graphs(n: int, unsafe: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class of unicyclic graphs."""
    if n < 3:
        raise ValueError(f"unicyclic graphs need n >= 3, got {n}")
    if n > UNICYCLIC_LIMIT and not unsafe:
        raise ValueError(f"order {n} above unicyclic limit {UNICYCLIC_LIMIT}")
    for c in range(3, n + 1):
        for seq in _necklace_sequences(n, c):
            edges = [(i, (i + 1) % c) for i in range(c)]
            nxt = c
            for pos, code in enumerate(seq):
                nxt = _add_rooted(edges, code, pos, nxt)
            yield make_graph(n, edges)


def _necklace_sequences(n: int, c: int) -> Iterator[tuple[Code, ...]]:
    """Length-c sequences of rooted codes, sizes >= 1 summing to n,
    canonical (maximal key tuple) under rotation and reflection."""
    first_choices = [
        code for size in range(n - c + 1, 0, -1) for code in rooted_tree_codes(size)
    ]

    def extend(seq: list[Code], used: int) -> Iterator[tuple[Code, ...]]:
        pos = len(seq)
        if pos == c:
            if used == n:
                cand = tuple(seq)
                if _is_necklace_canonical(cand):
                    yield cand
            return
        remaining = n - used
        slots_left = c - pos
        max_here = remaining - (slots_left - 1)
        bound_key = _code_key(seq[0])
        for size in range(min(max_here, _code_size(seq[0])), 0, -1):
            for code in rooted_tree_codes(size):
                if _code_key(code) > bound_key:
                    continue
                seq.append(code)
                yield from extend(seq, used + size)
                seq.pop()

    for first in first_choices:
        yield from extend([first], _code_size(first))


def _is_necklace_canonical(seq: tuple[Code, ...]) -> bool:
    keys = tuple(_code_key(code) for code in seq)
    c = len(keys)
    doubled = keys + keys
    rev = keys[::-1] + keys[::-1]
    for s in range(c):
        if doubled[s : s + c] > keys or rev[s : s + c] > keys:
            return False
    return True


def forests(n: int, unsafe: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class of forests on n vertices,
    as non-increasing multisets of free trees over partitions of n."""
    if n < 1:
        raise ValueError(f"forests need n >= 1, got {n}")
    if n > FOREST_LIMIT and not unsafe:
        raise ValueError(f"order {n} above forest limit {FOREST_LIMIT}")
    for partition in _partitions_desc(n):
        sizes = sorted(set(partition), reverse=True)
        multiplicity = {s: partition.count(s) for s in sizes}
        pools = [_tree_list(s) for s in sizes]

        def assemble(i: int, chosen: list[Graph]) -> Iterator[Graph]:
            if i == len(sizes):
                yield _disjoint_union(chosen)
                return
            for combo in combinations_with_replacement(
                range(len(pools[i])), multiplicity[sizes[i]]
            ):
                yield from assemble(i + 1, chosen + [pools[i][j] for j in combo])

        yield from assemble(0, [])


@lru_cache(maxsize=None)
def _tree_list(order: int) -> tuple[Graph, ...]:
    return tuple(free_trees(order, unsafe=True))


def _partitions_desc(n: int, max_part: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for part in range(top, 0, -1):
        for rest in _partitions_desc(n - part, part):
            yield (part,) + rest


def _disjoint_union(parts: list[Graph]) -> Graph:
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in parts:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.order
    return make_graph(offset, edges)


@dataclass(frozen=True)
class GenerationTask:
    """A stream request: class, order, optional cycle-length / alpha filters."""

    graph_class: str  # tree | forest | unicyclic
    order: int
    cycle_length: Optional[int] = None
    alpha: Optional[int] = None


def task_stream(task: GenerationTask, unsafe: bool = False) -> Iterator[Graph]:
    if task.graph_class == "tree":
        stream: Iterator[Graph] = free_trees(task.order, unsafe)
    elif task.graph_class == "forest":
        stream = forests(task.order, unsafe)
    elif task.graph_class == "unicyclic":
        stream = unicyclic_graphs(task.order, unsafe)
    else:
        raise ValueError(f"unknown graph class {task.graph_class!r}")
    if task.cycle_length is not None:
        if task.graph_class != "unicyclic":
            raise ValueError("cycle-length filter only applies to unicyclic graphs")
        from .graphs import classify

        stream = (g for g in stream if len(classify(g).cycle) == task.cycle_length)
    if task.alpha is not None:
        want = task.alpha
        stream = (g for g in stream if independence_number(g) == want)
    return stream


def count_stream(task: GenerationTask, unsafe: bool = False) -> int:
    """Consume the task's stream and return how many graphs it yields."""
    return sum(1 for _ in task_stream(task, unsafe))
