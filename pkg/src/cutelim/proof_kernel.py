"""Proof trees for the single-succedent sequent calculus.

One frozen dataclass per rule: axioms (Ax, BotAx), the structural rules
C (exchange), W (contraction), K (thinning), Cut, and the left/right
rules for each connective.  Positions are 0-based antecedent indices.

Every node computes and caches its conclusion when constructed and
raises ProofError if a side condition is violated, so a tree that
exists is schema-correct.  validate() re-runs all the checks; it exists
to catch transformation bugs that would have to bypass __init__.

Also here: occurrence ancestry and clusters, contraction
classification (neutral / engaged / directly engaged), W-normality
predicates, the pseudo-random proof generator and the bounded
cut-free backward search.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass, replace as _dc_replace

from .logic_core import (
    And,
    Atom,
    Bottom,
    Formula,
    Imp,
    Or,
    Sequent,
    formula_degree,
)

__all__ = [
    "ProofError",
    "BudgetError",
    "Proof",
    "Ax",
    "BotAx",
    "C",
    "W",
    "K",
    "Cut",
    "AndL",
    "AndR",
    "OrL",
    "OrR",
    "ImpL",
    "ImpR",
    "validate",
    "iter_nodes",
    "subproof_at",
    "replace_at",
    "cut_paths",
    "leftmost_topmost_cut",
    "ancestry",
    "cluster_of",
    "ContractionStatus",
    "classify_contraction",
    "tied_root_slots",
    "is_w_normal",
    "is_tailless",
    "strip_w_tail",
    "wrap_w",
    "splice_context_around",
    "generate_proof",
    "search_cutfree",
]

# Rewrites can nest deeply on duplicated subtrees; the default limit is
# too tight for structural recursion over such trees.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 30000))


class ProofError(Exception):
    pass


class BudgetError(Exception):
    """A rewrite driver exceeded its step allowance."""


# ---- proof nodes -----------------------------------------------------------


class Proof:
    """Base class; subclasses are frozen dataclasses, one per rule."""

    rule = "?"
    _child_fields = ()

    def __post_init__(self):
        for name in self._child_fields:
            sub = getattr(self, name)
            if not isinstance(sub, Proof):
                raise ProofError("%s premise %s is not a Proof: %r"
                                 % (self.rule, name, sub))
        object.__setattr__(self, "concl", self._conclusion())
        nodes, cuts = 1, 0
        deg = 0
        if isinstance(self, Cut):
            cuts = 1
            deg = formula_degree(self.left.concl.succ)
        for name in self._child_fields:
            sub = getattr(self, name)
            nodes += sub.node_count
            cuts += sub.cut_count
            deg = max(deg, sub.degree)
        object.__setattr__(self, "node_count", nodes)
        object.__setattr__(self, "cut_count", cuts)
        object.__setattr__(self, "degree", deg)

    @property
    def children(self):
        return tuple(getattr(self, name) for name in self._child_fields)

    @property
    def ant(self):
        return self.concl.ant

    @property
    def succ(self):
        return self.concl.succ

    def _conclusion(self):
        raise NotImplementedError

    def _need(self, cond, msg, *args):
        if not cond:
            raise ProofError(self.rule + ": " + (msg % args if args else msg))


def _pos_range(node, pos, hi, what="position"):
    node._need(0 <= pos <= hi, "%s %d out of range 0..%d above %s",
               what, pos, hi, node.children[0].concl if node.children else "?")


@dataclass(frozen=True)
class Ax(Proof):
    formula: Formula
    rule = "ax"

    def _conclusion(self):
        self._need(isinstance(self.formula, Formula), "not a formula")
        return Sequent((self.formula,), self.formula)


@dataclass(frozen=True)
class BotAx(Proof):
    formula: Formula
    rule = "botax"

    def _conclusion(self):
        self._need(isinstance(self.formula, Formula), "not a formula")
        return Sequent((Bottom(),), self.formula)


@dataclass(frozen=True)
class C(Proof):
    pos: int
    sub: Proof
    rule = "c"
    _child_fields = ("sub",)

    def _conclusion(self):
        s = self.sub.concl
        _pos_range(self, self.pos, s.arity - 2)
        a = s.ant
        p = self.pos
        return Sequent(a[:p] + (a[p + 1], a[p]) + a[p + 2:], s.succ)


@dataclass(frozen=True)
class W(Proof):
    pos: int
    sub: Proof
    rule = "w"
    _child_fields = ("sub",)

    def _conclusion(self):
        s = self.sub.concl
        _pos_range(self, self.pos, s.arity - 2)
        a = s.ant
        p = self.pos
        self._need(a[p] == a[p + 1],
                   "formulas at %d and %d differ: %s / %s", p, p + 1,
                   a[p], a[p + 1])
        return Sequent(a[:p] + a[p + 1:], s.succ)


@dataclass(frozen=True)
class K(Proof):
    pos: int
    formula: Formula
    sub: Proof
    rule = "k"
    _child_fields = ("sub",)

    def _conclusion(self):
        s = self.sub.concl
        _pos_range(self, self.pos, s.arity)
        a = s.ant
        p = self.pos
        return Sequent(a[:p] + (self.formula,) + a[p:], s.succ)


@dataclass(frozen=True)
class Cut(Proof):
    pos: int
    left: Proof
    right: Proof
    rule = "cut"
    _child_fields = ("left", "right")

    def _conclusion(self):
        l, r = self.left.concl, self.right.concl
        _pos_range(self, self.pos, r.arity - 1)
        self._need(r.ant[self.pos] == l.succ,
                   "formula at %d is %s, left premise proves %s",
                   self.pos, r.ant[self.pos], l.succ)
        p = self.pos
        return Sequent(r.ant[:p] + l.ant + r.ant[p + 1:], r.succ)

    @property
    def cut_formula(self):
        return self.left.concl.succ


@dataclass(frozen=True)
class AndL(Proof):
    pos: int
    side: int
    other: Formula
    sub: Proof
    rule = "andl"
    _child_fields = ("sub",)

    def _conclusion(self):
        self._need(self.side in (1, 2), "side must be 1 or 2")
        s = self.sub.concl
        _pos_range(self, self.pos, s.arity - 1)
        a = s.ant
        p = self.pos
        x = a[p]
        f = And(x, self.other) if self.side == 1 else And(self.other, x)
        return Sequent(a[:p] + (f,) + a[p + 1:], s.succ)


@dataclass(frozen=True)
class AndR(Proof):
    left: Proof
    right: Proof
    rule = "andr"
    _child_fields = ("left", "right")

    def _conclusion(self):
        l, r = self.left.concl, self.right.concl
        self._need(l.ant == r.ant,
                   "premise antecedents differ: %s / %s", l, r)
        return Sequent(l.ant, And(l.succ, r.succ))


@dataclass(frozen=True)
class OrL(Proof):
    pos: int
    left: Proof
    right: Proof
    rule = "orl"
    _child_fields = ("left", "right")

    def _conclusion(self):
        l, r = self.left.concl, self.right.concl
        _pos_range(self, self.pos, l.arity - 1)
        self._need(l.arity == r.arity and l.succ == r.succ,
                   "premise shapes differ: %s / %s", l, r)
        p = self.pos
        self._need(l.ant[:p] == r.ant[:p] and l.ant[p + 1:] == r.ant[p + 1:],
                   "premise contexts differ away from %d: %s / %s", p, l, r)
        f = Or(l.ant[p], r.ant[p])
        return Sequent(l.ant[:p] + (f,) + l.ant[p + 1:], l.succ)


@dataclass(frozen=True)
class OrR(Proof):
    side: int
    other: Formula
    sub: Proof
    rule = "orr"
    _child_fields = ("sub",)

    def _conclusion(self):
        self._need(self.side in (1, 2), "side must be 1 or 2")
        s = self.sub.concl
        f = Or(s.succ, self.other) if self.side == 1 else Or(self.other, s.succ)
        return Sequent(s.ant, f)


@dataclass(frozen=True)
class ImpL(Proof):
    pos: int
    left: Proof
    right: Proof
    rule = "impl"
    _child_fields = ("left", "right")

    def _conclusion(self):
        l, r = self.left.concl, self.right.concl
        _pos_range(self, self.pos, r.arity - 1)
        p = self.pos
        f = Imp(l.succ, r.ant[p])
        return Sequent(r.ant[:p] + l.ant + (f,) + r.ant[p + 1:], r.succ)


@dataclass(frozen=True)
class ImpR(Proof):
    sub: Proof
    rule = "impr"
    _child_fields = ("sub",)

    def _conclusion(self):
        s = self.sub.concl
        self._need(s.arity >= 1, "premise has an empty antecedent")
        return Sequent(s.ant[1:], Imp(s.ant[0], s.succ))


# ---- navigation ------------------------------------------------------------


def iter_nodes(p):
    """Yield (path, node) in preorder, left premise first."""
    stack = [((), p)]
    while stack:
        path, node = stack.pop()
        yield path, node
        kids = node.children
        for i in range(len(kids) - 1, -1, -1):
            stack.append((path + (i,), kids[i]))


def subproof_at(p, path):
    for i in path:
        p = p.children[i]
    return p


def replace_at(p, path, new):
    """Rebuild p with the subtree at path swapped for new (revalidating)."""
    if not path:
        return new
    name = p._child_fields[path[0]]
    sub = replace_at(getattr(p, name), path[1:], new)
    return _dc_replace(p, **{name: sub})


def cut_paths(p):
    return [path for path, node in iter_nodes(p) if isinstance(node, Cut)]


def leftmost_topmost_cut(p):
    """Path of the first cut (preorder) whose premises are cut-free."""
    for path, node in iter_nodes(p):
        if isinstance(node, Cut) and node.cut_count == 1:
            return path
    return None


def validate(p):
    """Recompute every conclusion and statistic in p against its cache."""
    for path, node in iter_nodes(p):
        again = node._conclusion()
        if again != node.concl:
            raise ProofError("cache mismatch at %r: %s vs %s"
                             % (path, again, node.concl))
        nodes, cuts = 1, 0
        deg = formula_degree(node.left.concl.succ) if isinstance(node, Cut) else 0
        if isinstance(node, Cut):
            cuts = 1
        for sub in node.children:
            nodes += sub.node_count
            cuts += sub.cut_count
            deg = max(deg, sub.degree)
        if (nodes, cuts, deg) != (node.node_count, node.cut_count, node.degree):
            raise ProofError("stat cache mismatch at %r" % (path,))
    return p


# ---- occurrence ancestry ---------------------------------------------------
#
# An occurrence is (path, slot): slot is an antecedent index or None for
# the succedent.  _local_ancestors maps a conclusion slot of one node to
# the premise occurrences it descends from, as (child_index, slot) pairs.
# Axioms relate nothing; principals of connective rules and both cut
# formula occurrences have no links.


def _local_ancestors(node, slot):
    if isinstance(node, (Ax, BotAx)):
        return ()
    if slot is None:
        if isinstance(node, (AndR, OrR, ImpR)):
            return ()
        if isinstance(node, OrL):
            return ((0, None), (1, None))
        if isinstance(node, (Cut, ImpL)):
            return ((1, None),)
        return ((0, None),)
    t = slot
    if isinstance(node, C):
        c = node.pos
        if t == c:
            return ((0, c + 1),)
        if t == c + 1:
            return ((0, c),)
        return ((0, t),)
    if isinstance(node, W):
        w = node.pos
        if t == w:
            return ((0, w), (0, w + 1))
        return ((0, t + 1),) if t > w else ((0, t),)
    if isinstance(node, K):
        k = node.pos
        if t == k:
            return ()
        return ((0, t - 1),) if t > k else ((0, t),)
    if isinstance(node, Cut):
        p, ln = node.pos, node.left.concl.arity
        if t < p:
            return ((1, t),)
        if t < p + ln:
            return ((0, t - p),)
        return ((1, t - ln + 1),)
    if isinstance(node, AndL):
        return () if t == node.pos else ((0, t),)
    if isinstance(node, (AndR, OrL)):
        if isinstance(node, OrL) and t == node.pos:
            return ()
        return ((0, t), (1, t))
    if isinstance(node, OrR):
        return ((0, t),)
    if isinstance(node, ImpL):
        p, ln = node.pos, node.left.concl.arity
        if t < p:
            return ((1, t),)
        if t < p + ln:
            return ((0, t - p),)
        if t == p + ln:
            return ()
        return ((1, t - ln),)
    if isinstance(node, ImpR):
        return ((0, t + 1),)
    raise ProofError("no ancestry case for %r" % (node.rule,))


def ancestry(p):
    """Map every occurrence in p to its premise-occurrence ancestors."""
    out = {}
    for path, node in iter_nodes(p):
        for slot in list(range(node.concl.arity)) + [None]:
            out[(path, slot)] = tuple(
                (path + (ci,), ps)
                for ci, ps in _local_ancestors(node, slot))
    return out


def cluster_of(p, occ, anc=None):
    """Upward closure of the ancestry relation from occ, inclusive."""
    if anc is None:
        anc = ancestry(p)
    seen = {occ}
    todo = [occ]
    while todo:
        for o2 in anc[todo.pop()]:
            if o2 not in seen:
                seen.add(o2)
                todo.append(o2)
    return frozenset(seen)


@dataclass(frozen=True)
class ContractionStatus:
    kind: str            # "directly-engaged" | "engaged" | "neutral"
    cut: tuple = None    # path of the engaging cut, when engaged


def classify_contraction(p, w_path, anc=None):
    """Classify the contraction at w_path against the cuts below it.

    A contraction is engaged when its principal occurrence belongs to
    the cluster of the cut formula occurrence (right premise side) of
    some cut below it, and directly engaged when that cut is its
    immediate parent.  Directly-engaged beats engaged; among merely
    engaging cuts the nearest one is reported.
    """
    node = subproof_at(p, w_path)
    if not isinstance(node, W):
        raise ProofError("classify_contraction: no W at %r" % (w_path,))
    if anc is None:
        anc = ancestry(p)
    principal = (w_path, node.pos)
    nearest = None
    for k in range(len(w_path) - 1, -1, -1):
        q = w_path[:k]
        parent = subproof_at(p, q)
        if isinstance(parent, Cut) and w_path[k] == 1:
            cut_occ = (q + (1,), parent.pos)
            if principal in cluster_of(p, cut_occ, anc):
                if k == len(w_path) - 1:
                    return ContractionStatus("directly-engaged", q)
                if nearest is None:
                    nearest = ContractionStatus("engaged", q)
    return nearest or ContractionStatus("neutral")


def tied_root_slots(p, w_path, anc=None):
    """Endsequent slots whose cluster contains the principal of the W."""
    node = subproof_at(p, w_path)
    if not isinstance(node, W):
        raise ProofError("tied_root_slots: no W at %r" % (w_path,))
    if anc is None:
        anc = ancestry(p)
    principal = (w_path, node.pos)
    return tuple(slot for slot in list(range(p.concl.arity)) + [None]
                 if principal in cluster_of(p, ((), slot), anc))


# ---- W-normality -----------------------------------------------------------


def is_w_normal(p):
    """Every W is in the endsequent tail, under another W, or under impr.

    ("Under" seen from the root: the node a W's conclusion feeds into is
    another W or an impr, or the W belongs to the chain of W's ending at
    the root.)
    """
    stack = [(p, None)]
    while stack:
        node, below = stack.pop()
        if isinstance(node, W):
            if below is not None and not isinstance(below, (W, ImpR)):
                return False
        for sub in node.children:
            stack.append((sub, node))
    return True


def is_tailless(p):
    if not is_w_normal(p):
        raise ProofError("is_tailless: proof is not W-normal")
    return not isinstance(p, W)


def strip_w_tail(p):
    """Split into (core, ws); ws in application order, innermost first."""
    ws = []
    while isinstance(p, W):
        ws.append(p.pos)
        p = p.sub
    ws.reverse()
    return p, ws


def wrap_w(core, ws):
    for w in ws:
        core = W(w, core)
    return core


def splice_context_around(core, theta, gamma):
    """Thin core's conclusion out to theta ++ core.ant ++ gamma.

    gamma is appended left to right at the end, then theta is pushed on
    the front right to left; every inserted occurrence is fresh.
    """
    for f in gamma:
        core = K(core.concl.arity, f, core)
    for f in reversed(theta):
        core = K(0, f, core)
    return core


# ---- pseudo-random generator -----------------------------------------------


def generate_proof(seed, budget, atoms=("a", "b", "c"), allow_imp=True):
    """Deterministic pseudo-random valid proof with <= budget nodes.

    With allow_imp=False neither -> formulas nor impl/impr nodes occur.
    Cuts are biased toward configurations where the cut formula sits
    under a contraction on the right, which is where the interesting
    index arithmetic happens.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    rng = random.Random(seed)
    pool = [Atom(a) for a in atoms] + [Bottom()]

    def rand_formula(depth):
        if depth <= 0 or rng.random() < 0.6:
            return rng.choice(pool)
        kinds = (And, Or, Imp) if allow_imp else (And, Or)
        ctor = kinds[rng.randrange(len(kinds))]
        return ctor(rand_formula(depth - 1), rand_formula(depth - 1))

    def leaf():
        f = rand_formula(1)
        if rng.random() < 0.12:
            return BotAx(f)
        return Ax(f)

    def pad_concat(p1, p2):
        # Extend both premises to the shared antecedent ant1 ++ ant2.
        a1, a2 = p1.ant, p2.ant
        for i, f in enumerate(a2):
            p1 = K(len(a1) + i, f, p1)
        for f in reversed(a1):
            p2 = K(0, f, p2)
        return p1, p2

    def noise(p, room):
        while room >= 1 and rng.random() < 0.45:
            n = p.concl.arity
            kind = rng.randrange(3)
            if kind == 0 and n >= 2:
                p = C(rng.randrange(n - 1), p)
                room -= 1
            elif kind == 1:
                p = K(rng.randrange(n + 1), rand_formula(1), p)
                room -= 1
            elif kind == 2 and n >= 1 and room >= 2:
                q = rng.randrange(n)
                p = W(q, K(q, p.ant[q], p))
                room -= 2
            else:
                break
        return p

    def gen_succ(goal, b):
        # A proof whose succedent is exactly `goal`.
        if b >= 5 and rng.random() < 0.15:
            sub = gen_succ(goal, (b - 3) // 2)
            at = rng.randrange(sub.concl.arity + 1)
            cand = OrL(at, K(at, rand_formula(1), sub),
                       K(at, rand_formula(1), sub))
            if cand.node_count <= b:
                return cand
        if b >= 3 and rng.random() < 0.55:
            if isinstance(goal, And):
                half = max(1, (b - 1) // 2 - 2)
                p1 = gen_succ(goal.left, half)
                p2 = gen_succ(goal.right, half)
                p1, p2 = pad_concat(p1, p2)
                cand = AndR(p1, p2)
                if cand.node_count <= b:
                    return cand
            elif isinstance(goal, Or):
                side = rng.randrange(1, 3)
                sub = gen_succ(goal.left if side == 1 else goal.right, b - 1)
                return OrR(side, goal.right if side == 1 else goal.left, sub)
            elif isinstance(goal, Imp):
                sub = gen_succ(goal.right, b - 2)
                return ImpR(K(0, goal.left, sub))
        if b >= 2 and rng.random() < 0.3:
            base = BotAx(goal) if rng.random() < 0.25 else Ax(goal)
            return noise(base, b - 1)
        return BotAx(goal) if rng.random() < 0.1 else Ax(goal)

    def gen_cut(b):
        right = gen((b - 1) // 2)
        n = right.concl.arity
        if n == 0:
            return right
        pos = rng.randrange(n)
        a = right.ant[pos]
        room = b - 1 - right.node_count
        if room >= 4 and rng.random() < 0.5:
            # contract the future cut formula so its index exceeds 1
            right = W(pos, K(pos, a, right))
            room -= 2
        left = gen_succ(a, max(1, room))
        cand = Cut(pos, left, right)
        return cand if cand.node_count <= b else right

    def gen_impl(b):
        right = gen((b - 1) // 2)
        n = right.concl.arity
        if n == 0:
            return right
        pos = rng.randrange(n)
        a = rand_formula(1)
        left = gen_succ(a, max(1, b - 1 - right.node_count))
        cand = ImpL(pos, left, right)
        return cand if cand.node_count <= b else right

    def gen_andr(b):
        third = max(1, (b - 1) // 3)
        p1, p2 = gen(third), gen(third)
        p1, p2 = pad_concat(p1, p2)
        cand = AndR(p1, p2)
        return cand if cand.node_count <= b else p1

    def gen_orl(b):
        sub = gen(max(1, (b - 3) // 2))
        n = sub.concl.arity
        pos = rng.randrange(n + 1)
        x, y = rand_formula(1), rand_formula(1)
        cand = OrL(pos, K(pos, x, sub), K(pos, y, sub))
        return cand if cand.node_count <= b else sub

    def gen(b):
        if b <= 1:
            return leaf()
        r = rng.random()
        if b >= 5 and r < 0.26:
            return gen_cut(b)
        if b >= 5 and r < 0.34 and allow_imp:
            return gen_impl(b)
        if b >= 5 and r < 0.40:
            return gen_andr(b)
        if b >= 4 and r < 0.50:
            return gen_orl(b)
        sub = gen(max(1, b - 2))
        room = b - sub.node_count
        n = sub.concl.arity
        kind = rng.randrange(6)
        if kind == 0 and n >= 2 and room >= 1:
            return C(rng.randrange(n - 1), sub)
        if kind == 1 and n >= 1 and room >= 2:
            q = rng.randrange(n)
            return W(q, K(q, sub.ant[q], sub))
        if kind == 2 and room >= 1:
            return K(rng.randrange(n + 1), rand_formula(1), sub)
        if kind == 3 and n >= 1 and room >= 1:
            q = rng.randrange(n)
            return AndL(q, rng.randrange(1, 3), rand_formula(1), sub)
        if kind == 4 and room >= 1:
            return OrR(rng.randrange(1, 3), rand_formula(1), sub)
        if kind == 5 and allow_imp and n >= 1 and room >= 1:
            return ImpR(sub)
        return noise(sub, room)

    out = gen(budget)
    assert out.node_count <= budget, (out.node_count, budget)
    return validate(out)


# ---- bounded backward search -----------------------------------------------


def search_cutfree(s, depth):
    """Backward search for a cut-free proof of s, height <= depth-ish.

    Iterative deepening with a found/failed cache and repetition pruning
    along the current branch; antecedents are capped at the root arity
    plus three to keep the structural rules from spinning.  Returns a
    cut-free proof or None.  Cut is never tried, so the result being
    cut-free is by construction.
    """
    cap = s.arity + 3
    found = {}
    failed = {}

    def attempt(seq, d, branch):
        if seq in found:
            return found[seq]
        if d <= 0 or seq.arity > cap:
            return None
        if failed.get(seq, -1) >= d:
            return None
        if seq in branch:
            return None
        branch = branch | {seq}
        out = expand(seq, d, branch)
        if out is not None:
            found[seq] = out
        else:
            failed[seq] = max(failed.get(seq, -1), d)
        return out

    def expand(seq, d, branch):
        ant, c = seq.ant, seq.succ
        if len(ant) == 1 and ant[0] == c:
            return Ax(c)
        if len(ant) == 1 and ant[0] == Bottom():
            return BotAx(c)
        # right rules
        if isinstance(c, And):
            l = attempt(Sequent(ant, c.left), d - 1, branch)
            if l is not None:
                r = attempt(Sequent(ant, c.right), d - 1, branch)
                if r is not None:
                    return AndR(l, r)
        if isinstance(c, Or):
            sub = attempt(Sequent(ant, c.left), d - 1, branch)
            if sub is not None:
                return OrR(1, c.right, sub)
            sub = attempt(Sequent(ant, c.right), d - 1, branch)
            if sub is not None:
                return OrR(2, c.left, sub)
        if isinstance(c, Imp):
            sub = attempt(Sequent((c.left,) + ant, c.right), d - 1, branch)
            if sub is not None:
                return ImpR(sub)
        # left rules
        for p, f in enumerate(ant):
            if isinstance(f, And):
                sub = attempt(
                    Sequent(ant[:p] + (f.left,) + ant[p + 1:], c), d - 1, branch)
                if sub is not None:
                    return AndL(p, 1, f.right, sub)
                sub = attempt(
                    Sequent(ant[:p] + (f.right,) + ant[p + 1:], c), d - 1, branch)
                if sub is not None:
                    return AndL(p, 2, f.left, sub)
            elif isinstance(f, Or):
                l = attempt(
                    Sequent(ant[:p] + (f.left,) + ant[p + 1:], c), d - 1, branch)
                if l is not None:
                    r = attempt(
                        Sequent(ant[:p] + (f.right,) + ant[p + 1:], c), d - 1, branch)
                    if r is not None:
                        return OrL(p, l, r)
            elif isinstance(f, Imp):
                for t in range(p + 1):
                    l = attempt(Sequent(ant[t:p], f.left), d - 1, branch)
                    if l is None:
                        continue
                    r = attempt(
                        Sequent(ant[:t] + (f.right,) + ant[p + 1:], c), d - 1, branch)
                    if r is not None:
                        return ImpL(t, l, r)
        # structural rules
        for p in range(len(ant)):
            sub = attempt(Sequent(ant[:p] + ant[p + 1:], c), d - 1, branch)
            if sub is not None:
                return K(p, ant[p], sub)
        for p in range(len(ant) - 1):
            sub = attempt(
                Sequent(ant[:p] + (ant[p + 1], ant[p]) + ant[p + 2:], c),
                d - 1, branch)
            if sub is not None:
                return C(p, sub)
        for p in range(len(ant)):
            sub = attempt(
                Sequent(ant[:p] + (ant[p],) + ant[p:], c), d - 1, branch)
            if sub is not None:
                return W(p, sub)
        return None

    for d in range(1, depth + 1):
        out = attempt(s, d, frozenset())
        if out is not None:
            return validate(out)
    return None
