"""Finite symmetric generating sets and word-metric bookkeeping.

A GeneratingSet is an ordered, deduplicated, identity-free, inverse-closed
list of group elements.  Every element carries a spelling over the *labels*
of the original generators (inverse letters included), so sets produced by
product_ball_set remember a valid expression over the user's input set; that
expression bounds the word length d_S from above when exact search is out of
reach.
"""

from collections import deque

from .errors import BudgetExceeded, ConfigError, EmptyAfterReduction, NotSymmetric
from .spaces.base import GroupElement, word_str

DEFAULT_MEMORY_CAP = 2_000_000


class GeneratingSet:
    def __init__(self, backend, elements, source_words=None):
        self.backend = backend
        self.elements = list(elements)
        self.source_words = list(source_words or [])

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def canonical_set(self):
        return {g.canonical for g in self.elements}

    def labels(self):
        return [word_str(g.word) for g in self.elements]

    def __repr__(self):
        return f"GeneratingSet({self.labels()})"


def make_generating_set(backend, inputs, symmetrize=True, labels=None):
    """Normalize user generators into a symmetric GeneratingSet.

    ``inputs`` may be word strings (tree backends), matrices (half_plane), or
    ready GroupElements.  Each input becomes a single named symbol; inverses
    reuse the symbol with a flipped sign, so symbol-word length counts
    occurrences of the original generators.
    """
    if labels is None:
        labels = []
        for spec in inputs:
            if isinstance(spec, str):
                labels.append(spec)
            elif isinstance(spec, GroupElement):
                labels.append(word_str(spec.word))
            else:
                labels.append(f"g{len(labels)}")
    if len(labels) != len(inputs):
        raise ConfigError("labels must match inputs one-to-one")

    elems = []
    seen = set()
    sources = []
    for spec, label in zip(inputs, labels):
        g = backend.element(spec)
        g = GroupElement(backend, g.canonical, ((label, 1),))
        if backend.is_identity(g) or g.canonical in seen:
            continue
        seen.add(g.canonical)
        elems.append(g)
        sources.append(label)
    if symmetrize:
        for g in list(elems):
            inv = backend.invert(g)
            if inv.canonical not in seen:
                seen.add(inv.canonical)
                elems.append(inv)
    else:
        for g in elems:
            if backend.invert(g).canonical not in seen:
                raise NotSymmetric(f"input not closed under inverses at {word_str(g.word)}")
    if not elems:
        raise EmptyAfterReduction("no nontrivial generators left")
    elems.sort(key=backend.sort_key)
    return GeneratingSet(backend, elems, sources)


def product_ball_set(S, n, memory_cap=DEFAULT_MEMORY_CAP):
    """All nontrivial products of at most n generators, as a GeneratingSet."""
    if n < 1:
        raise ConfigError("n must be >= 1")
    backend = S.backend
    ident = backend.identity()
    seen = {ident.canonical: ident}
    frontier = [ident]
    for _ in range(n):
        nxt = []
        for g in frontier:
            for s in S:
                gs = backend.compose(g, s)
                if gs.canonical not in seen:
                    seen[gs.canonical] = gs
                    nxt.append(gs)
                    if len(seen) > memory_cap:
                        raise BudgetExceeded(
                            f"product ball exceeded {memory_cap} elements", completed=None
                        )
        frontier = nxt
    out = [g for g in seen.values() if not backend.is_identity(g)]
    out.sort(key=backend.sort_key)
    return GeneratingSet(backend, out, S.source_words)


def word_length_in_S(S, g, cap, memory_cap=DEFAULT_MEMORY_CAP):
    """Exact d_S(1, g) by breadth-first search, or None when it exceeds ``cap``.

    Raises BudgetExceeded when the visited set outgrows ``memory_cap`` before
    the radius cap is reached.
    """
    backend = S.backend
    target = g.canonical
    if target == backend._identity_canonical():
        return 0
    exact = getattr(backend, "subgroup_length_exact", lambda *_: None)(S, g)
    if exact is not None:
        return exact if exact <= cap else None
    seen = {backend._identity_canonical()}
    frontier = [backend.identity()]
    for radius in range(1, cap + 1):
        nxt = []
        for h in frontier:
            for s in S:
                hs = backend.compose(h, s)
                if hs.canonical == target:
                    return radius
                if hs.canonical not in seen:
                    seen.add(hs.canonical)
                    nxt.append(hs)
                    if len(seen) > memory_cap:
                        raise BudgetExceeded(
                            f"word-length search exceeded {memory_cap} elements",
                            completed=radius - 1,
                        )
        frontier = nxt
        if not frontier:
            return None
    return None
