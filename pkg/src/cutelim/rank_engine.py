"""Persistence ranks for formula occurrences.

Every occurrence in every sequent of a proof gets a positive rank:
fresh occurrences (axiom formulas, rule principals, thinned-in
formulas) start at 1, and each inference bumps the occurrences it
carries over, merging with max where two premises feed one slot.  The
rank of a cut is n + m, where n is the rank of the left premise's
succedent and m the rank of the cut formula occurrence in the right
premise, both measured on the premise subtrees alone.

annotate_ranks walks the per-rule clauses bottom-up.
rank_by_ancestry derives the same table from the occurrence ancestry
relation (rank = 1 + max over ancestors, 1 at sources); the two are
checked equal in the test suite and that agreement is an acceptance
criterion, so keep them independent.
"""

from __future__ import annotations

from .logic_core import formula_degree
from .proof_kernel import (
    AndL,
    AndR,
    Ax,
    BotAx,
    C,
    Cut,
    ImpL,
    ImpR,
    K,
    OrL,
    OrR,
    ProofError,
    W,
    ancestry,
    iter_nodes,
)

__all__ = [
    "annotate_ranks",
    "rank_by_ancestry",
    "cut_rank",
    "cut_ranks",
    "max_cut_rank",
]


def _node_ranks(node, kid):
    """Rank row (ant_ranks, succ_rank) from the premise rows."""
    if isinstance(node, (Ax, BotAx)):
        return (1,), 1
    if isinstance(node, C):
        (a, s), c = kid[0], node.pos
        swapped = a[:c] + (a[c + 1], a[c]) + a[c + 2:]
        return tuple(x + 1 for x in swapped), s + 1
    if isinstance(node, W):
        (a, s), w = kid[0], node.pos
        merged = a[:w] + (max(a[w], a[w + 1]),) + a[w + 2:]
        return tuple(x + 1 for x in merged), s + 1
    if isinstance(node, K):
        (a, s), k = kid[0], node.pos
        return tuple(x + 1 for x in a[:k]) + (1,) + tuple(x + 1 for x in a[k:]), s + 1
    if isinstance(node, Cut):
        (la, ls), (ra, rs) = kid
        p = node.pos
        ant = ra[:p] + la + ra[p + 1:]
        return tuple(x + 1 for x in ant), rs + 1
    if isinstance(node, AndL):
        (a, s), q = kid[0], node.pos
        ant = tuple(1 if t == q else a[t] + 1 for t in range(len(a)))
        return ant, s + 1
    if isinstance(node, AndR):
        (la, _ls), (ra, _rs) = kid
        return tuple(max(x, y) + 1 for x, y in zip(la, ra)), 1
    if isinstance(node, OrL):
        (la, ls), (ra, rs) = kid
        q = node.pos
        ant = tuple(1 if t == q else max(la[t], ra[t]) + 1
                    for t in range(len(la)))
        return ant, max(ls, rs) + 1
    if isinstance(node, OrR):
        a, _s = kid[0]
        return tuple(x + 1 for x in a), 1
    if isinstance(node, ImpL):
        (la, _ls), (ra, rs) = kid
        p = node.pos
        ant = (tuple(x + 1 for x in ra[:p])
               + tuple(x + 1 for x in la)
               + (1,)
               + tuple(x + 1 for x in ra[p + 1:]))
        return ant, rs + 1
    if isinstance(node, ImpR):
        a, _s = kid[0]
        return tuple(x + 1 for x in a[1:]), 1
    raise ProofError("no rank clause for %r" % (node.rule,))


def annotate_ranks(p):
    """Map each path in p to (antecedent rank tuple, succedent rank)."""
    out = {}

    def rec(node, path):
        rows = []
        for i, sub in enumerate(node.children):
            rec(sub, path + (i,))
            rows.append(out[path + (i,)])
        out[path] = _node_ranks(node, rows)

    rec(p, ())
    return out


def rank_by_ancestry(p):
    """The same table, derived from the ancestry relation instead."""
    anc = ancestry(p)
    memo = {}

    def rank(occ):
        if occ not in memo:
            up = anc[occ]
            memo[occ] = 1 + max((rank(o) for o in up), default=0)
        return memo[occ]

    out = {}
    for path, node in iter_nodes(p):
        out[path] = (tuple(rank((path, t)) for t in range(node.concl.arity)),
                     rank((path, None)))
    return out


def cut_rank(cut, table=None, path=()):
    """(n, m, n + m) for one cut node.

    n and m are read off the premise subtrees; passing a whole-proof
    rank table with the cut's path gives the same numbers without
    recomputation, since rank rows only depend on the subtree below.
    """
    if not isinstance(cut, Cut):
        raise ProofError("cut_rank: not a cut node")
    if table is None:
        n = annotate_ranks(cut.left)[()][1]
        m = annotate_ranks(cut.right)[()][0][cut.pos]
    else:
        n = table[path + (0,)][1]
        m = table[path + (1,)][0][cut.pos]
    return n, m, n + m


def cut_ranks(p):
    """Map each cut path in p to its (n, m, total) rank triple."""
    table = annotate_ranks(p)
    return {path: cut_rank(node, table, path)
            for path, node in iter_nodes(p) if isinstance(node, Cut)}


def max_cut_rank(p):
    """Largest cut rank total in p; 0 when p is cut-free."""
    if p.cut_count == 0:
        return 0
    return max(t for _, _, t in cut_ranks(p).values())
