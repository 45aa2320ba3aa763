"""Alternation words and word-representation of graphs.

A word is a tuple of letter tokens (strings).  Two letters alternate in
a word when deleting every other letter leaves a strictly alternating
sequence; a word represents a graph when its alternation relation on
the alphabet equals the edge relation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, edge, make_graph, vertex_key

DEFAULT_BUDGET = 10_000_000

Word = tuple


class AlphabetMismatch(ValueError):
    """The word's alphabet differs from the graph's vertex set."""


def as_word(letters: Sequence) -> Word:
    w = tuple(letters)
    if not all(isinstance(c, str) and c for c in w):
        raise ValueError("word letters must be non-empty strings")
    return w


def parse_word(text: str) -> Word:
    """Parse a word: comma-separated tokens, or one letter per character."""
    text = text.strip()
    if not text:
        raise ValueError("empty word")
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
        if any(not p for p in parts):
            raise ValueError(f"empty letter token in word: {text!r}")
        return tuple(parts)
    return tuple(text)


def format_word(w: Sequence) -> str:
    w = as_word(w)
    if any(len(c) > 1 for c in w):
        return ",".join(w)
    return "".join(w)


def alternates(w: Sequence, x: str, y: str) -> bool:
    """True when the letters x and y strictly alternate in w.

    Single occurrences count: a remaining subsequence "xy" alternates.
    """
    if x == y:
        raise ValueError(f"need two distinct letters, got {x!r} twice")
    if x not in w or y not in w:
        missing = x if x not in w else y
        raise ValueError(f"letter {missing!r} does not occur in the word")
    sub = [c for c in w if c == x or c == y]
    return all(a != b for a, b in zip(sub, sub[1:]))


def alphabet(w: Sequence) -> frozenset:
    return frozenset(w)


def graph_from_word(w: Sequence) -> Graph:
    """The graph whose edges are exactly the alternating letter pairs."""
    w = as_word(w)
    if not w:
        raise ValueError("empty word")
    letters = sorted(alphabet(w))
    edges = []
    for i, x in enumerate(letters):
        for y in letters[i + 1 :]:
            if alternates(w, x, y):
                edges.append((x, y))
    return make_graph(letters, edges)


def represents(w: Sequence, g: Graph) -> bool:
    """True when graph_from_word(w) equals g.

    Raises AlphabetMismatch instead of returning a vacuous False when
    the alphabet differs from the vertex set.
    """
    w = as_word(w)
    if alphabet(w) != g.vertices:
        raise AlphabetMismatch(
            f"alphabet {sorted(alphabet(w))!r} != vertices {sorted(g.vertices, key=vertex_key)!r}"
        )
    return graph_from_word(w).edges == g.edges


def uniformity(w: Sequence) -> int | None:
    """k when every letter occurs exactly k times, else None."""
    counts = Counter(w)
    if not counts:
        return None
    ks = set(counts.values())
    return ks.pop() if len(ks) == 1 else None


def cyclic_shift(w: Sequence) -> Word:
    w = as_word(w)
    if not w:
        raise ValueError("empty word")
    return w[1:] + w[:1]


def reverse(w: Sequence) -> Word:
    w = as_word(w)
    if not w:
        raise ValueError("empty word")
    return w[::-1]


@dataclass(frozen=True)
class WordSearchOutcome:
    status: str  # "found" | "exhausted" | "budget"
    word: Word | None
    nodes_expanded: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def find_k_uniform_representant(
    g: Graph, k: int, budget: int = DEFAULT_BUDGET
) -> WordSearchOutcome:
    """Search for a k-uniform word representing g.

    Backtracks over the positions of a k*n-letter word with incremental
    alternation pruning; because a cyclic shift of a uniform word
    represents the same graph, the first position is pinned to the
    smallest vertex without losing completeness.  "exhausted" therefore
    means no k-uniform representant exists at all.
    """
    if not g.vertices:
        raise ValueError("empty graph")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    letters = [str(v) for v in g.sorted_vertices]
    if len(set(letters)) != len(letters) or set(letters) != {
        str(v) for v in g.vertices
    }:
        raise ValueError("vertex labels must stringify distinctly")
    index = {c: i for i, c in enumerate(letters)}
    n = len(letters)
    adj = [
        [index[str(u)] for u in sorted(g.neighbors(v), key=str)]
        for v in g.sorted_vertices
    ]
    adjacent = [[False] * n for _ in range(n)]
    for i, ns in enumerate(adj):
        for j in ns:
            adjacent[i][j] = True

    total = k * n
    word: list[int] = []
    counts = [0] * n
    # Pair state, indexed by (min, max): last letter seen and whether the
    # pair subsequence is still perfectly alternating.
    last = [[-1] * n for _ in range(n)]
    alt_ok = [[True] * n for _ in range(n)]
    nodes = 0
    out_of_budget = False

    def place(c: int) -> list | None:
        """Try to append letter c; return an undo record or None."""
        undo = []
        for d in range(n):
            if d == c:
                continue
            i, j = (c, d) if c < d else (d, c)
            if last[i][j] == c:
                if adjacent[c][d]:
                    for (pi, pj, pl, pa) in undo:
                        last[pi][pj], alt_ok[pi][pj] = pl, pa
                    return None
                if alt_ok[i][j]:
                    undo.append((i, j, last[i][j], alt_ok[i][j]))
                    alt_ok[i][j] = False
                    continue
            undo.append((i, j, last[i][j], alt_ok[i][j]))
            last[i][j] = c
        counts[c] += 1
        word.append(c)
        # A non-adjacent pair whose letters are both used up can no longer
        # break its alternation.
        if counts[c] == k:
            for d in range(n):
                if d == c or adjacent[c][d] or counts[d] < k:
                    continue
                i, j = (c, d) if c < d else (d, c)
                if alt_ok[i][j]:
                    unplace(undo)
                    return None
        return undo

    def unplace(undo: list) -> None:
        c = word.pop()
        counts[c] -= 1
        for (pi, pj, pl, pa) in undo:
            last[pi][pj], alt_ok[pi][pj] = pl, pa

    def extend() -> bool:
        nonlocal nodes, out_of_budget
        if len(word) == total:
            for i in range(n):
                for j in range(i + 1, n):
                    if not adjacent[i][j] and alt_ok[i][j]:
                        return False
            return True
        choices = range(n) if word else [0]
        for c in choices:
            if counts[c] >= k:
                continue
            nodes += 1
            if nodes > budget:
                out_of_budget = True
                return False
            undo = place(c)
            if undo is None:
                continue
            if extend():
                return True
            if out_of_budget:
                return False
            unplace(undo)
        return False

    if extend():
        found = tuple(letters[c] for c in word)
        assert represents(found, g) and uniformity(found) == k
        return WordSearchOutcome("found", found, nodes)
    if out_of_budget:
        return WordSearchOutcome("budget", None, nodes)
    return WordSearchOutcome("exhausted", None, nodes)
