"""Contraction-counting proofs and the index-aware cut eliminator.

In the implication-free fragment every antecedent occurrence can carry
a positive contraction count: axiom and thinned-in occurrences start
at 1, W adds the two counts it merges, cut multiplies the spliced-in
left antecedent by the count of the cut formula, and the branching
rules take pointwise maxima.  Succedents carry no count.  The table
is a function of the plain tree, so ZProof just wraps a tree and
computes its table; surgery happens on plain trees and the wrapper
recomputes.

z_step rewrites a proof whose root is a cut with cut-free premises.
One step never lets any conclusion index grow and strictly shrinks the
measure <cut formula degree, index under the cut, rank> of the cut it
touches; eliminate_cut_z drives leftmost topmost cuts to exhaustion,
asserting both invariants every time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .logic_core import formula_degree, has_imp
from .proof_kernel import (
    AndL,
    AndR,
    Ax,
    BotAx,
    BudgetError,
    C,
    Cut,
    ImpL,
    ImpR,
    K,
    OrL,
    OrR,
    Proof,
    ProofError,
    W,
    iter_nodes,
    leftmost_topmost_cut,
    replace_at,
    splice_context_around,
    subproof_at,
)
from .rank_engine import cut_rank

__all__ = [
    "ZProof",
    "to_zucker",
    "erase_indices",
    "z_measure",
    "z_step",
    "eliminate_cut_z",
]


def _node_indices(node, kid):
    if isinstance(node, (Ax, BotAx)):
        return (1,)
    if isinstance(node, C):
        a, c = kid[0], node.pos
        return a[:c] + (a[c + 1], a[c]) + a[c + 2:]
    if isinstance(node, W):
        a, w = kid[0], node.pos
        return a[:w] + (a[w] + a[w + 1],) + a[w + 2:]
    if isinstance(node, K):
        a, k = kid[0], node.pos
        return a[:k] + (1,) + a[k:]
    if isinstance(node, Cut):
        la, ra = kid
        alpha = ra[node.pos]
        return (ra[:node.pos]
                + tuple(x * alpha for x in la)
                + ra[node.pos + 1:])
    if isinstance(node, AndL):
        return kid[0]
    if isinstance(node, (AndR, OrL)):
        la, ra = kid
        return tuple(max(x, y) for x, y in zip(la, ra))
    if isinstance(node, OrR):
        return kid[0]
    raise ProofError("contraction indices undefined for %r" % (node.rule,))


def _index_table(p):
    out = {}

    def rec(node, path):
        kid = []
        for i, sub in enumerate(node.children):
            rec(sub, path + (i,))
            kid.append(out[path + (i,)])
        out[path] = _node_indices(node, kid)

    rec(p, ())
    return out


@dataclass(frozen=True)
class ZProof:
    """An implication-free proof plus its contraction index table.

    indices maps each node path to the tuple of antecedent counts of
    that node's conclusion.
    """

    proof: Proof

    def __post_init__(self):
        if not isinstance(self.proof, Proof):
            raise ProofError("ZProof wraps a Proof, got %r" % (self.proof,))
        object.__setattr__(self, "indices", _index_table(self.proof))

    @property
    def root_indices(self):
        return self.indices[()]


def to_zucker(p):
    """Wrap p, refusing any implication rule or formula anywhere."""
    for path, node in iter_nodes(p):
        if isinstance(node, (ImpL, ImpR)):
            raise ProofError("to_zucker: %s node at %r" % (node.rule, path))
        for f in node.concl.ant + (node.concl.succ,):
            if has_imp(f):
                raise ProofError("to_zucker: implication in %s" % (f,))
    return ZProof(p)


def erase_indices(z):
    return z.proof


def z_measure(z):
    """<degree, index, rank> of the root cut of z."""
    root = z.proof
    if not isinstance(root, Cut):
        raise ProofError("z_measure: root is not a cut")
    d = formula_degree(root.cut_formula)
    zc = z.indices[(1,)][root.pos]
    _n, _m, r = cut_rank(root)
    return d, zc, r


def _leq(xs, ys):
    return len(xs) == len(ys) and all(x <= y for x, y in zip(xs, ys))


def _merge_adjacent_blocks(p, start, width):
    # Contract two adjacent copies of a width-wide block at `start`,
    # pulling each second-copy formula leftward and contracting, front
    # copy first.
    for t in range(width):
        for j in range(start + width - 1, start + t, -1):
            p = C(j, p)
        p = W(start + t, p)
    return p


def z_step(z, emit=None):
    """One reduction of the root cut; returns (ZProof, label).

    The root must be a cut with cut-free premises.  The contracted-cut
    case eliminates its inner residual cut completely before returning
    (reporting those steps through `emit`), so the step count seen by a
    driver is the number of labels reported, not of calls made here.
    """
    root = z.proof
    if not isinstance(root, Cut):
        raise ProofError("z_step: root is not a cut")
    if root.left.cut_count or root.right.cut_count:
        raise ProofError("z_step: premises are not cut-free")
    pos, left, right = root.pos, root.left, root.right
    arity_l = left.concl.arity

    # axiom premises and matched principal pairs
    if isinstance(left, Ax):
        return ZProof(right), "Z-1.1"
    if isinstance(left, BotAx):
        new = splice_context_around(
            BotAx(right.succ), right.ant[:pos], right.ant[pos + 1:])
        return ZProof(new), "Z-1.2"
    if isinstance(right, Ax):
        return ZProof(left), "Z-1.3"
    if isinstance(right, K) and right.pos == pos:
        new = right.sub
        for i, f in enumerate(left.ant):
            new = K(pos + i, f, new)
        return ZProof(new), "Z-1.4"
    if isinstance(left, AndR) and isinstance(right, AndL) and right.pos == pos:
        lam = left.left if right.side == 1 else left.right
        return ZProof(Cut(pos, lam, right.sub)), "Z-1.5"
    if isinstance(left, OrR) and isinstance(right, OrL) and right.pos == pos:
        rho = right.left if left.side == 1 else right.right
        return ZProof(Cut(pos, left.sub, rho)), "Z-1.6"

    # left root is neither an axiom nor succedent-principal: push the
    # cut into the left premise
    if isinstance(left, (C, W, K, AndL)):
        inner = Cut(pos, left.sub, right)
        at = pos + left.pos
        if isinstance(left, C):
            new = C(at, inner)
        elif isinstance(left, W):
            new = W(at, inner)
        elif isinstance(left, K):
            new = K(at, left.formula, inner)
        else:
            new = AndL(at, left.side, left.other, inner)
        return ZProof(new), "Z-2.1"
    if isinstance(left, OrL):
        new = OrL(pos + left.pos,
                  Cut(pos, left.left, right),
                  Cut(pos, left.right, right))
        return ZProof(new), "Z-2.2"

    # here the left root is an antecedent-preserving right rule, so the
    # action is on the right premise's root
    if isinstance(right, C):
        c = right.pos
        if pos in (c, c + 1):
            upos = c + 1 if pos == c else c
            new = Cut(upos, left, right.sub)
            if pos == c:
                for j in range(arity_l):
                    new = C(c + j, new)
            else:
                for j in range(arity_l - 1, -1, -1):
                    new = C(c + j, new)
            return ZProof(new), "Z-3.1"
        upos = pos
        at = c if c + 1 < pos else c + arity_l - 1
        return ZProof(C(at, Cut(upos, left, right.sub))), "Z-3.1"
    if isinstance(right, W) and right.pos != pos:
        w = right.pos
        upos = pos if pos < w else pos + 1
        at = w if w < pos else w + arity_l - 1
        return ZProof(W(at, Cut(upos, left, right.sub))), "Z-3.1"
    if isinstance(right, K):
        k = right.pos           # k != pos, handled above
        upos = pos if pos < k else pos - 1
        at = k if k < pos else k + arity_l - 1
        return ZProof(K(at, right.formula, Cut(upos, left, right.sub))), "Z-3.1"
    if isinstance(right, AndL):
        q = right.pos
        assert q != pos, "conjunction principal under a non-andr left root"
        at = q if q < pos else q + arity_l - 1
        new = AndL(at, right.side, right.other, Cut(pos, left, right.sub))
        return ZProof(new), "Z-3.1"
    if isinstance(right, OrR):
        new = OrR(right.side, right.other, Cut(pos, left, right.sub))
        return ZProof(new), "Z-3.1"
    if isinstance(right, AndR):
        new = AndR(Cut(pos, left, right.left), Cut(pos, left, right.right))
        return ZProof(new), "Z-3.2"
    if isinstance(right, OrL):
        q = right.pos
        assert q != pos, "disjunction principal under a non-orr left root"
        at = q if q < pos else q + arity_l - 1
        new = OrL(at, Cut(pos, left, right.left), Cut(pos, left, right.right))
        return ZProof(new), "Z-3.3"
    if isinstance(right, W) and right.pos == pos:
        # cut a contracted occurrence: cut one copy, eliminate that cut
        # outright, cut the surviving copy, re-contract the doubled
        # left context
        upper = ZProof(Cut(pos, left, right.sub))
        before = upper.root_indices
        done = eliminate_cut_z(upper, on_step=emit)
        assert _leq(done.root_indices, before)
        outer = Cut(pos + arity_l, left, done.proof)
        new = _merge_adjacent_blocks(outer, pos, arity_l)
        return ZProof(new), "Z-3.4"

    # the only unmatched right root is botax, which would need a
    # succedent-principal proof of bot on the left
    raise ProofError("z_step: no case for left %s / right %s"
                     % (root.left.rule, root.right.rule))


def eliminate_cut_z(z, max_steps=200000, on_step=None):
    """Eliminate every cut in z, leftmost topmost first.

    Asserts per step: the rewritten subtree keeps its endsequent, its
    conclusion indices never grow, and every cut it still contains
    measures strictly below the one just rewritten.  on_step(label,
    proof) is called once per reduction with the proof state after it.
    Raises BudgetError after max_steps reductions.
    """
    p = z.proof
    steps = 0
    while True:
        path = leftmost_topmost_cut(p)
        if path is None:
            break
        if steps >= max_steps:
            raise BudgetError("cut elimination passed %d steps" % (max_steps,))
        zsub = ZProof(subproof_at(p, path))
        m0 = z_measure(zsub)
        new_zsub, label = z_step(zsub, emit=on_step)
        new_sub = new_zsub.proof
        assert new_sub.concl == zsub.proof.concl, \
            "endsequent drifted: %s -> %s" % (zsub.proof.concl, new_sub.concl)
        assert _leq(new_zsub.root_indices, zsub.root_indices), \
            "indices grew under %s" % (label,)
        for _q, node in iter_nodes(new_sub):
            if isinstance(node, Cut):
                assert z_measure(ZProof(node)) < m0, \
                    "measure did not drop under %s" % (label,)
        p = replace_at(p, path, new_sub)
        steps += 1
        if on_step is not None:
            on_step(label, p)
    out = ZProof(p)
    assert _leq(out.root_indices, z.root_indices)
    return out
