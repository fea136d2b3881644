"""Driving cuts upward, then reducing their degree.

A cut is maximal when its rank is the floor (1, 1) and neither premise
is an axiom: both occurrences of the cut formula are freshly introduced
by the premise roots.  maximalize rewrites a W-normal proof so every
remaining cut is maximal; reduce_degree then replaces each maximal cut
with cuts on proper subformulas.  eliminate_cuts alternates the two
behind contraction normalization until no cut is left.

Step labels: M-1.x remove a cut against an axiom premise, M-2.x push
the cut above the left premise rule, M-3.x above the right premise
rule, and D-* are the degree reductions.
"""

from __future__ import annotations

import dataclasses

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
    ProofError,
    W,
    cut_paths,
    is_w_normal,
    splice_context_around,
    subproof_at,
)
from .rank_engine import cut_rank

__all__ = [
    "is_maximal_cut",
    "maximalize",
    "reduce_degree",
    "eliminate_cuts",
]


def is_maximal_cut(cut):
    if not isinstance(cut, Cut):
        raise ProofError("is_maximal_cut wants a cut, got %r" % (cut.rule,))
    if isinstance(cut.left, (Ax, BotAx)) or isinstance(cut.right, (Ax, BotAx)):
        return False
    return cut_rank(cut)[2] == 2


def _done(emit, label, out):
    if emit is not None:
        emit(label, out)
    return out


def _rebuild(node, kids):
    if not kids:
        return node
    return dataclasses.replace(node, **dict(zip(node._child_fields, kids)))


def maximalize(p, on_step=None, max_steps=100000):
    """Rewrite a W-normal proof so every cut in it is maximal."""
    assert is_w_normal(p), "maximalize needs a W-normal input"
    fuel = [max_steps]
    out = _maximalize(p, on_step, fuel)
    assert out.concl == p.concl
    assert out.degree <= p.degree
    assert is_w_normal(out)
    for path in cut_paths(out):
        assert is_maximal_cut(subproof_at(out, path))
    return out


def _maximalize(node, emit, fuel):
    kids = [_maximalize(ch, emit, fuel) for ch in node.children]
    node = _rebuild(node, kids)
    while isinstance(node, Cut) and not is_maximal_cut(node):
        fuel[0] -= 1
        if fuel[0] < 0:
            raise BudgetError("maximalizer step budget exhausted")
        node = _m_step(node, emit, fuel)
    return node


def _drive(pos, left, right, emit, fuel):
    """A freshly created cut, pushed to maximality (or away)."""
    return _maximalize(Cut(pos, left, right), emit, fuel)


def _m_step(cut, emit, fuel):
    pos, left, right = cut.pos, cut.left, cut.right

    if isinstance(left, Ax):
        return _done(emit, "M-1.1", right)
    if isinstance(left, BotAx):
        out = splice_context_around(
            BotAx(cut.concl.succ), right.ant[:pos], right.ant[pos + 1:])
        return _done(emit, "M-1.2", out)
    if isinstance(right, Ax):
        return _done(emit, "M-1.3", left)

    n, m, _total = cut_rank(cut)
    width = left.concl.arity

    if n > 1:
        if isinstance(left, W):
            raise ProofError("left premise of a cut is a contraction; "
                             "the proof was not W-normal")
        if isinstance(left, C):
            inner = _drive(pos, left.sub, right, emit, fuel)
            return _done(emit, "M-2.1", C(pos + left.pos, inner))
        if isinstance(left, K):
            inner = _drive(pos, left.sub, right, emit, fuel)
            return _done(emit, "M-2.1", K(pos + left.pos, left.formula, inner))
        if isinstance(left, AndL):
            inner = _drive(pos, left.sub, right, emit, fuel)
            return _done(
                emit, "M-2.1",
                AndL(pos + left.pos, left.side, left.other, inner))
        if isinstance(left, OrL):
            lcut = _drive(pos, left.left, right, emit, fuel)
            rcut = _drive(pos, left.right, right, emit, fuel)
            return _done(emit, "M-2.2", OrL(pos + left.pos, lcut, rcut))
        if isinstance(left, ImpL):
            inner = _drive(pos, left.right, right, emit, fuel)
            return _done(emit, "M-2.3", ImpL(pos + left.pos, left.left, inner))
        if isinstance(left, Cut):
            inner = _drive(pos, left.right, right, emit, fuel)
            out = Cut(pos + left.pos, left.left, inner)
            assert is_maximal_cut(out)
            return _done(emit, "M-2.4", out)
        raise ProofError("no left step for %r with rank %d" % (left.rule, n))

    if m > 1:
        if isinstance(right, W):
            raise ProofError("right premise of a cut is a contraction; "
                             "the proof was not W-normal")
        if isinstance(right, C):
            c = right.pos
            if pos in (c, c + 1):
                upos = c + 1 if pos == c else c
                out = _drive(upos, left, right.sub, emit, fuel)
                if pos == c:
                    for j in range(c, c + width):
                        out = C(j, out)
                else:
                    for j in range(c + width - 1, c - 1, -1):
                        out = C(j, out)
            else:
                inner = _drive(pos, left, right.sub, emit, fuel)
                out = C(c if c + 1 < pos else c + width - 1, inner)
            return _done(emit, "M-3.1", out)
        if isinstance(right, K):
            assert right.pos != pos
            upos = pos if pos < right.pos else pos - 1
            inner = _drive(upos, left, right.sub, emit, fuel)
            at = right.pos if right.pos < pos else right.pos + width - 1
            return _done(emit, "M-3.1", K(at, right.formula, inner))
        if isinstance(right, AndL):
            assert right.pos != pos
            inner = _drive(pos, left, right.sub, emit, fuel)
            at = right.pos if right.pos < pos else right.pos + width - 1
            return _done(
                emit, "M-3.1", AndL(at, right.side, right.other, inner))
        if isinstance(right, OrR):
            inner = _drive(pos, left, right.sub, emit, fuel)
            return _done(
                emit, "M-3.1", OrR(right.side, right.other, inner))
        if isinstance(right, AndR):
            lcut = _drive(pos, left, right.left, emit, fuel)
            rcut = _drive(pos, left, right.right, emit, fuel)
            return _done(emit, "M-3.2", AndR(lcut, rcut))
        if isinstance(right, OrL):
            assert right.pos != pos
            lcut = _drive(pos, left, right.left, emit, fuel)
            rcut = _drive(pos, left, right.right, emit, fuel)
            at = right.pos if right.pos < pos else right.pos + width - 1
            return _done(emit, "M-3.3", OrL(at, lcut, rcut))
        if isinstance(right, ImpL):
            q = right.pos
            phi = right.left.concl.arity
            if pos < q:
                inner = _drive(pos, left, right.right, emit, fuel)
                out = ImpL(q + width - 1, right.left, inner)
            elif pos < q + phi:
                inner = _drive(pos - q, left, right.left, emit, fuel)
                out = ImpL(q, inner, right.right)
            else:
                assert pos > q + phi
                inner = _drive(pos - phi, left, right.right, emit, fuel)
                out = ImpL(q, right.left, inner)
            return _done(emit, "M-3.5", out)
        if isinstance(right, ImpR):
            # trace the cut position through the head contraction chain
            chain = []
            body = right.sub
            p = pos + 1
            while isinstance(body, W):
                assert p != body.pos, "cut formula inside a contracted pair"
                chain.append((body.pos, p))
                p = p if p < body.pos else p + 1
                body = body.sub
            out = _drive(p, left, body, emit, fuel)
            for w, ptrace in reversed(chain):
                out = W(w + width - 1 if ptrace < w else w, out)
            return _done(emit, "M-3.6", ImpR(out))
        if isinstance(right, Cut):
            qr = right.pos
            phi = right.left.concl.arity
            if qr <= pos < qr + phi:
                inner = _drive(pos - qr, left, right.left, emit, fuel)
                # re-associated; the surrounding loop finishes the drive
                return _done(emit, "M-3.7", Cut(qr, inner, right.right))
            a2 = pos if pos < qr else pos - phi + 1
            inner = _drive(a2, left, right.right, emit, fuel)
            at = qr + width - 1 if a2 < qr else qr
            return _done(emit, "M-3.8", Cut(at, right.left, inner))
        raise ProofError("no right step for %r with rank %d" % (right.rule, m))

    raise ProofError(
        "stuck cut: rank (%d, %d), premises %r / %r"
        % (n, m, left.rule, right.rule))


# ---- degree reduction ------------------------------------------------------


def reduce_degree(p, on_step=None):
    """Replace every maximal cut by cuts on proper subformulas.

    Works top-down: each cut is rewritten using its original premises
    and the rewrite recurses only into the carried subproofs, so the
    freshly built cuts are not themselves re-examined.
    """
    out = _reduce(p, on_step)
    assert out.concl == p.concl
    return out


def _reduce(node, emit):
    if not isinstance(node, Cut):
        return _rebuild(node, [_reduce(ch, emit) for ch in node.children])
    assert is_maximal_cut(node), "degree reduction wants maximal cuts only"
    pos, left, right = node.pos, node.left, node.right
    if isinstance(right, K):
        # the cut formula was thinned in; drop the cut, thin the context
        assert right.pos == pos
        acc = _reduce(right.sub, emit)
        for i, f in enumerate(left.concl.ant):
            acc = K(pos + i, f, acc)
        return _done(emit, "D-K", acc)
    if isinstance(left, AndR):
        assert isinstance(right, AndL) and right.pos == pos
        lam = left.left if right.side == 1 else left.right
        out = Cut(pos, _reduce(lam, emit), _reduce(right.sub, emit))
        return _done(emit, "D-∧", out)
    if isinstance(left, OrR):
        assert isinstance(right, OrL) and right.pos == pos
        rho = right.left if left.side == 1 else right.right
        out = Cut(pos, _reduce(left.sub, emit), _reduce(rho, emit))
        return _done(emit, "D-∨", out)
    if isinstance(left, ImpR):
        assert isinstance(right, ImpL)
        q = right.pos
        assert q + right.left.concl.arity == pos
        inner = Cut(0, _reduce(right.left, emit), _reduce(left.sub, emit))
        out = Cut(q, inner, _reduce(right.right, emit))
        return _done(emit, "D-→", out)
    raise ProofError(
        "no degree reduction for premises %r / %r" % (left.rule, right.rule))


# ---- the full procedure ----------------------------------------------------


def _phase(on_step, phase):
    if on_step is None:
        return None
    return lambda label, state: on_step(phase, label, state)


def eliminate_cuts(p, on_step=None):
    """Remove every cut: normalize, maximalize, reduce degree, repeat.

    on_step(phase, label, state) sees phase P1 for contraction
    normalization, P2 for maximalization and P3 for degree reduction.
    The loop runs at most degree + 2 rounds.
    """
    from .w_normalizer import w_normalize

    goal = p.concl
    bound = p.degree + 2
    rounds = 0
    while True:
        rounds += 1
        if rounds > bound:
            raise BudgetError(
                "cut elimination exceeded %d rounds" % (bound,))
        p = w_normalize(p, _phase(on_step, "P1"))
        p = maximalize(p, _phase(on_step, "P2"))
        if p.cut_count == 0:
            break
        p = reduce_degree(p, _phase(on_step, "P3"))
    assert p.concl == goal
    return p
