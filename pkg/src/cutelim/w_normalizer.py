"""Driving contractions into normal position.

A proof is W-normal when every contraction sits in the endsequent
tail, directly above another contraction, or directly above an impr.
w_normalize rewrites any proof into that shape, keeping the endsequent
and the degree exactly; the workers are

  * permute_W_below_C / normalize_segment: sort a mixed run of
    exchanges and contractions at the root into exchanges-then-
    contractions, by local swaps;
  * normalize_cclass: move loose contractions sitting above a column
    of cuts below them, layer by layer;
  * merge_orL / merge_impL: combine two W-normal premises into a
    W-normal orl / impl conclusion, recursing on the number of
    contractions tied to the principal position.

Proofs here are handled stripped: (core, ws) with ws the endsequent
contraction tail in application order and core tailless.
"""

from __future__ import annotations

from dataclasses import dataclass

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
    Proof,
    ProofError,
    W,
    is_w_normal,
    strip_w_tail,
    wrap_w,
)

__all__ = [
    "permute_W_below_C",
    "normalize_segment",
    "merge_block_ops",
    "block_intervals",
    "Base",
    "CutLayer",
    "MobileW",
    "materialize",
    "layer_measure",
    "normalize_cclass",
    "merge_orL",
    "merge_impL",
    "w_normalize",
]


# ---- tail arithmetic -------------------------------------------------------


def _swap_wc(w, c):
    """Rewrite [W(w), C(c)] (application order) into C's-then-W form.

    Returns (c_list, new_w, label): the overlap cases split the
    exchange in two, the disjoint cases shift indices past the
    contraction.
    """
    if c + 1 < w:
        return [c], w, "L5.1b"
    if c > w:
        return [c + 1], w, "L5.1b"
    if c == w:
        return [w + 1, w], w + 1, "L5.1a"
    assert c == w - 1
    return [c, c + 1], c, "L5.1a"


def permute_W_below_C(ws, cs, on_swap=None, on_measure=None):
    """Turn the tail [ws then cs] into an equivalent [cs' then ws'].

    Both lists are in application order.  The recursion measure is
    (len(ws), len(cs)) lexicographically; on_measure(parent, child) is
    called for each sub-invocation and the contraction count is
    preserved.
    """
    if not ws or not cs:
        return list(cs), list(ws)
    m0 = (len(ws), len(cs))
    pair, neww, label = _swap_wc(ws[-1], cs[0])
    if on_swap is not None:
        on_swap(label)
    if on_measure is not None:
        on_measure(m0, (len(ws) - 1, len(pair)))
    cs1, ws1 = permute_W_below_C(ws[:-1], pair, on_swap, on_measure)
    if on_measure is not None:
        on_measure(m0, (len(ws1) + 1, len(cs) - 1))
    cs2, ws2 = permute_W_below_C(ws1 + [neww], cs[1:], on_swap, on_measure)
    assert len(ws2) == len(ws)
    return cs1 + cs2, ws2


def normalize_segment(ops, on_swap=None, on_measure=None):
    """Sort a mixed op run [("c"|"w", pos), ...] into (c_list, w_list)."""
    cs, ws = [], []
    for kind, pos in ops:
        if kind == "c":
            cs2, ws = permute_W_below_C(ws, [pos], on_swap, on_measure)
            cs += cs2
        elif kind == "w":
            ws.append(pos)
        else:
            raise ProofError("bad op kind %r" % (kind,))
    return cs, ws


def merge_block_ops(start, width):
    """Ops contracting two adjacent width-blocks at start into one.

    Front copy first: pull each second-copy formula left with
    exchanges, then contract; width*(width-1)/2 exchanges and width
    contractions in total.
    """
    ops = []
    for t in range(width):
        for j in range(start + width - 1, start + t, -1):
            ops.append(("c", j))
        ops.append(("w", start + t))
    return ops


def block_intervals(core_arity, ws):
    """Which core positions each conclusion position collects.

    Returns a list over conclusion positions of ascending contiguous
    core-position runs; ws is an application-order contraction tail
    over a core with core_arity antecedent formulas.
    """
    state = [[t] for t in range(core_arity)]
    for w in ws:
        state = state[:w] + [state[w] + state[w + 1]] + state[w + 2:]
    for run in state:
        assert run == list(range(run[0], run[0] + len(run)))
    return state


def _apply_cs(core, cs):
    for cpos in cs:
        core = C(cpos, core)
    return core


def _drain_swaps(emit, swaps, state):
    """Report collected L5.1 swap labels against the rebuilt proof."""
    if emit is not None:
        for lab in swaps:
            emit(lab, state)
    swaps.clear()


# ---- the cut class ---------------------------------------------------------


@dataclass(frozen=True)
class Base:
    proof: Proof                 # tailless W-normal


@dataclass(frozen=True)
class CutLayer:
    left: Proof                  # tailless W-normal left premise
    pos: int
    cblock: tuple = ()           # exchanges applied below the cut


@dataclass(frozen=True)
class MobileW:
    pos: int


def materialize(layers):
    """Rebuild the proof a layer list denotes (top layer first)."""
    if not layers or not isinstance(layers[0], Base):
        raise ProofError("layer list must start with its base")
    acc = layers[0].proof
    for lay in layers[1:]:
        if isinstance(lay, MobileW):
            acc = W(lay.pos, acc)
        elif isinstance(lay, CutLayer):
            acc = Cut(lay.pos, lay.left, acc)
            for cpos in lay.cblock:
                acc = C(cpos, acc)
        else:
            raise ProofError("bad layer %r" % (lay,))
    return acc


def layer_measure(layers):
    """(engaged W count, sum of W heights) for a layer list."""
    kappa = 0
    lam = 0
    for i, lay in enumerate(layers):
        if not isinstance(lay, MobileW):
            continue
        below = layers[i + 1:]
        lam += sum(1 for l2 in below if not isinstance(l2, Base))
        img = lay.pos
        for l2 in below:
            if isinstance(l2, MobileW):
                v = l2.pos
                if img in (v, v + 1):
                    img = v
                elif img > v + 1:
                    img -= 1
            elif isinstance(l2, CutLayer):
                if img == l2.pos:
                    kappa += 1
                    break
                if img > l2.pos:
                    img += l2.left.concl.arity - 1
                for cpos in l2.cblock:
                    if img == cpos:
                        img = cpos + 1
                    elif img == cpos + 1:
                        img = cpos
    return kappa, lam


def normalize_cclass(layers, emit=None, on_measure=None):
    """Push every mobile contraction below the cut column.

    Rewrites bottom-most W-above-cut pairs until the contractions form
    a suffix.  Each rewrite strictly decreases (engaged count, height
    sum); the directly-engaged case duplicates the cut."""
    layers = list(layers)
    while True:
        idx = None
        for i in range(len(layers) - 1):
            if isinstance(layers[i], MobileW) and isinstance(layers[i + 1], CutLayer):
                idx = i
        if idx is None:
            return layers
        before = layer_measure(layers)
        wlay, clay = layers[idx], layers[idx + 1]
        w, p, width = wlay.pos, clay.pos, clay.left.concl.arity
        swaps = []
        if w == p:
            ops = merge_block_ops(p, width) + [("c", x) for x in clay.cblock]
            cs, ws = normalize_segment(ops, on_swap=swaps.append)
            repl = [CutLayer(clay.left, p, ()),
                    CutLayer(clay.left, p + width, tuple(cs))]
            repl += [MobileW(x) for x in ws]
            label = "L5.2a"
        else:
            if p < w:
                p2, w2 = p, w + width - 1
            else:
                p2, w2 = p + 1, w
            cs, ws = normalize_segment(
                [("w", w2)] + [("c", x) for x in clay.cblock],
                on_swap=swaps.append)
            repl = [CutLayer(clay.left, p2, tuple(cs))]
            repl += [MobileW(x) for x in ws]
            label = "L5.2b"
        layers[idx:idx + 2] = repl
        after = layer_measure(layers)
        assert after < before, "cut class measure rose: %r -> %r" % (before, after)
        if on_measure is not None:
            on_measure(before, after)
        if emit is not None:
            state = materialize(layers)
            _drain_swaps(emit, swaps, state)
            emit(label, state)


# ---- merging W-normal premises ---------------------------------------------


def _pad_block(core, at, formula, extra):
    for _ in range(extra):
        core = K(at, formula, core)
    return core


def _counts(core, ws):
    state = block_intervals(core.concl.arity, ws)
    return [len(run) for run in state]


def merge_orL(p1, p2, pos, emit=None, on_measure=None, _bound=None):
    """orl for W-normal premises, staying W-normal.

    p1 proves T,X,G |- C and p2 proves T,Y,G |- C with X and Y at pos;
    the result proves T,X|Y,G |- C and carries, per context position,
    the larger of the two premise contraction counts.  Recurses on the
    number of contractions tied to the principal position on each
    side.
    """
    s1 = p1.concl
    s2 = p2.concl
    if s1.succ != s2.succ or s1.arity != s2.arity:
        raise ProofError("merge_orL: premise shapes differ")
    if s1.ant[:pos] != s2.ant[:pos] or s1.ant[pos + 1:] != s2.ant[pos + 1:]:
        raise ProofError("merge_orL: contexts differ away from %d" % (pos,))
    core1, ws1 = strip_w_tail(p1)
    core2, ws2 = strip_w_tail(p2)
    a = _counts(core1, ws1)
    b = _counts(core2, ws2)
    n, m = a[pos] - 1, b[pos] - 1
    assert _bound is None or n + m < _bound
    if on_measure is not None:
        on_measure(n + m)
    targets = [max(x, y) for x, y in zip(a, b)]
    targets[pos] = None          # principal blocks stay as they are

    def padded(core, counts):
        at = 0
        for j, cnt in enumerate(counts):
            if targets[j] is None:
                at += cnt
                continue
            core = _pad_block(core, at + cnt, s1.ant[j], targets[j] - cnt)
            at += targets[j]
        return core

    core2p = padded(core2, b)
    core1p = padded(core1, a)
    start = sum(targets[j] for j in range(pos))

    def context_tail(full):
        out = full
        for j in range(s1.arity):
            if j == pos:
                continue
            for _ in range(targets[j] - 1):
                out = W(j, out)
        return out

    if n == 0 and m == 0:
        out = context_tail(OrL(start, core1p, core2p))
    elif n > 0:
        lsub = wrap_w(core1p, [start] * (n - 1))
        rsub = wrap_w(K(start, s1.ant[pos], core2p), [start + 1] * m)
        sub1 = merge_orL(lsub, rsub, start + 1, emit, on_measure, n + m)
        principal = sub1.concl.ant[start + 1]
        sub2 = wrap_w(K(start + m + 1, principal, core2p), [start] * m)
        sub3 = merge_orL(sub1, sub2, start, emit, on_measure, n + m)
        out = context_tail(W(start, sub3))
    else:
        rsub = wrap_w(core2p, [start] * (m - 1))
        lsub = K(start + 1, s2.ant[pos], core1p)
        sub1 = merge_orL(lsub, rsub, start, emit, on_measure, n + m)
        principal = sub1.concl.ant[start]
        sub2 = K(start, principal, core1p)
        sub3 = merge_orL(sub2, sub1, start + 1, emit, on_measure, n + m)
        out = context_tail(W(start, sub3))
    assert is_w_normal(out)
    if emit is not None:
        emit("L5.3", out)
    return out


def merge_impL(p1, p2, pos, emit=None, on_measure=None, _bound=None):
    """impl for W-normal premises, staying W-normal.

    p1 proves D |- A, p2 proves T,B,G |- C with B at pos; the result
    proves T,D,A->B,G |- C, reusing p2's context contraction counts
    unchanged.  Recurses on the contractions tied to position pos.
    """
    if pos >= p2.concl.arity:
        raise ProofError("merge_impL: position %d out of range" % (pos,))
    core2, ws2 = strip_w_tail(p2)
    k = _counts(core2, ws2)
    s = sum(k[:pos])
    n = k[pos] - 1
    assert _bound is None or n < _bound
    if on_measure is not None:
        on_measure(n)
    width = p1.concl.arity + 1   # the spliced block: D then A->B

    def context_tail(full):
        out = full
        for j in range(pos):
            for _ in range(k[j] - 1):
                out = W(j, out)
        for j in range(pos + 1, len(k)):
            for _ in range(k[j] - 1):
                out = W(width - 1 + j, out)
        return out

    if n == 0:
        core1, ws1 = strip_w_tail(p1)
        core = ImpL(s, core1, core2)
        out = core
        for j in range(pos):
            for _ in range(k[j] - 1):
                out = W(j, out)
        out = wrap_w(out, [x + pos for x in ws1])
        for j in range(pos + 1, len(k)):
            for _ in range(k[j] - 1):
                out = W(width - 1 + j, out)
    else:
        shrunk = wrap_w(core2, [s] * (n - 1))
        inner = merge_impL(p1, shrunk, s, emit, on_measure, n)
        outer = merge_impL(p1, inner, s + width, emit, on_measure, n)
        core_o, ws_o = strip_w_tail(outer)
        swaps = []
        ops = [("w", x) for x in ws_o] + merge_block_ops(s, width)
        cs, ws = normalize_segment(ops, on_swap=swaps.append)
        out = context_tail(wrap_w(_apply_cs(core_o, cs), ws))
        _drain_swaps(emit, swaps, out)
    assert is_w_normal(out)
    if emit is not None:
        emit("L5.4", out)
    return out


# ---- the normalizer --------------------------------------------------------


def w_normalize(p, on_step=None):
    """Rewrite p W-normal with the same endsequent and the same degree."""
    core, ws = _norm(p, on_step)
    out = wrap_w(core, ws)
    assert out.concl == p.concl, (out.concl, p.concl)
    assert out.degree == p.degree
    assert is_w_normal(out)
    return out


def _emit(on_step, node, core, ws):
    if on_step is not None:
        on_step("T5.5-" + node.rule, wrap_w(core, list(ws)))
    return core, list(ws)


def _norm(node, on_step):
    if isinstance(node, (Ax, BotAx)):
        return _emit(on_step, node, node, [])

    if isinstance(node, C):
        core, ws = _norm(node.sub, on_step)
        swaps = []
        cs, ws2 = normalize_segment(
            [("w", x) for x in ws] + [("c", node.pos)], on_swap=swaps.append)
        core2 = _apply_cs(core, cs)
        _drain_swaps(on_step, swaps, wrap_w(core2, ws2))
        return _emit(on_step, node, core2, ws2)

    if isinstance(node, W):
        core, ws = _norm(node.sub, on_step)
        return _emit(on_step, node, core, ws + [node.pos])

    if isinstance(node, K):
        core, ws = _norm(node.sub, on_step)
        at = node.pos
        new_ws = []
        for w in reversed(ws):
            if at <= w:
                new_ws.append(w + 1)
            else:
                new_ws.append(w)
                at += 1
        new_ws.reverse()
        return _emit(on_step, node, K(at, node.formula, core), new_ws)

    if isinstance(node, AndL):
        core, ws = _norm(node.sub, on_step)
        run = block_intervals(core.concl.arity, ws)[node.pos]
        for t in run:
            core = AndL(t, node.side, node.other, core)
        return _emit(on_step, node, core, ws)

    if isinstance(node, AndR):
        core1, ws1 = _norm(node.left, on_step)
        core2, ws2 = _norm(node.right, on_step)
        a = _counts(core1, ws1)
        b = _counts(core2, ws2)
        targets = [max(x, y) for x, y in zip(a, b)]
        ctx = node.left.concl.ant

        def pad(core, counts):
            at = 0
            for j, cnt in enumerate(counts):
                core = _pad_block(core, at + cnt, ctx[j], targets[j] - cnt)
                at += targets[j]
            return core

        core2p = pad(core2, b)
        core1p = pad(core1, a)
        ws_out = []
        for j, tgt in enumerate(targets):
            ws_out += [j] * (tgt - 1)
        return _emit(on_step, node, AndR(core1p, core2p), ws_out)

    if isinstance(node, OrL):
        l = wrap_w(*_norm(node.left, on_step))
        r = wrap_w(*_norm(node.right, on_step))
        merged = merge_orL(l, r, node.pos, emit=on_step)
        core, ws = strip_w_tail(merged)
        return _emit(on_step, node, core, ws)

    if isinstance(node, OrR):
        core, ws = _norm(node.sub, on_step)
        return _emit(on_step, node, OrR(node.side, node.other, core), ws)

    if isinstance(node, ImpL):
        l = wrap_w(*_norm(node.left, on_step))
        r = wrap_w(*_norm(node.right, on_step))
        merged = merge_impL(l, r, node.pos, emit=on_step)
        core, ws = strip_w_tail(merged)
        return _emit(on_step, node, core, ws)

    if isinstance(node, ImpR):
        core, ws = _norm(node.sub, on_step)
        k = _counts(core, ws)
        head = ImpR(wrap_w(core, [0] * (k[0] - 1)))
        ws_out = []
        for j in range(1, len(k)):
            ws_out += [j - 1] * (k[j] - 1)
        return _emit(on_step, node, head, ws_out)

    if isinstance(node, Cut):
        lcore, lws = _norm(node.left, on_step)
        rcore, rws = _norm(node.right, on_step)
        layers = [Base(rcore)]
        layers += [MobileW(v) for v in rws]
        layers += [CutLayer(lcore, node.pos)]
        layers += [MobileW(node.pos + v) for v in lws]
        assert materialize(layers).concl == node.concl
        layers = normalize_cclass(layers, emit=on_step)
        i = len(layers)
        while i > 1 and isinstance(layers[i - 1], MobileW):
            i -= 1
        core = materialize(layers[:i])
        ws = [lay.pos for lay in layers[i:]]
        return _emit(on_step, node, core, ws)

    raise ProofError("w_normalize: no case for %r" % (node.rule,))
