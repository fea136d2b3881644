"""Proof node schemas, ancestry, classification, generator, search."""

from __future__ import annotations

import pytest

from cutelim.logic_core import (
    And,
    Atom,
    Bottom,
    Imp,
    Or,
    Sequent,
    antecedent_splice,
    formula_degree,
    has_imp,
)
from cutelim.proof_kernel import (
    AndL,
    AndR,
    Ax,
    BotAx,
    C,
    ContractionStatus,
    Cut,
    ImpL,
    ImpR,
    K,
    OrL,
    OrR,
    ProofError,
    W,
    ancestry,
    classify_contraction,
    cluster_of,
    cut_paths,
    generate_proof,
    is_tailless,
    is_w_normal,
    iter_nodes,
    leftmost_topmost_cut,
    replace_at,
    search_cutfree,
    strip_w_tail,
    subproof_at,
    tied_root_slots,
    validate,
    wrap_w,
)

a, b, c, d = Atom("a"), Atom("b"), Atom("c"), Atom("d")


def test_formula_basics():
    f = Imp(And(a, b), Or(a, Bottom()))
    assert str(f) == "((a & b) -> (a | bot))"
    assert formula_degree(f) == 3
    assert formula_degree(a) == 0 and formula_degree(Bottom()) == 0
    assert has_imp(f) and not has_imp(And(a, b))
    with pytest.raises(ValueError):
        Atom("Bad")
    with pytest.raises(ValueError):
        Atom("bot")


def test_sequent_str_and_splice():
    s = Sequent((a, b), c)
    assert str(s) == "a, b |- c"
    assert str(Sequent((), c)) == "|- c"
    assert antecedent_splice(s, 1, (c, d), drop=1) == Sequent((a, c, d), c)
    with pytest.raises(IndexError):
        antecedent_splice(s, 2, (), drop=1)


def test_axioms():
    assert Ax(a).concl == Sequent((a,), a)
    assert BotAx(c).concl == Sequent((Bottom(),), c)


def test_exchange_contraction_thinning():
    base = K(1, b, Ax(a))            # a, b |- a
    assert base.concl == Sequent((a, b), a)
    sw = C(0, base)                  # b, a |- a
    assert sw.concl == Sequent((b, a), a)
    dup = K(0, b, sw)                # b, b, a |- a
    assert W(0, dup).concl == Sequent((b, a), a)
    with pytest.raises(ProofError):
        W(0, sw)                     # b, a not equal
    with pytest.raises(ProofError):
        C(1, sw)                     # out of range
    with pytest.raises(ProofError):
        K(3, b, sw)


def test_cut_shape():
    left = K(0, b, Ax(a))            # b, a |- a
    right = K(0, c, K(1, d, Ax(a)))  # c, a, d |- a
    cut = Cut(1, left, right)
    assert cut.concl == Sequent((c, b, a, d), a)
    assert cut.cut_formula == a
    assert cut.degree == 0
    with pytest.raises(ProofError):
        Cut(0, left, right)          # c is not a


def test_and_rules():
    al = AndL(0, 1, b, Ax(a))
    assert al.concl == Sequent((And(a, b),), a)
    al2 = AndL(0, 2, b, Ax(a))
    assert al2.concl == Sequent((And(b, a),), a)
    ar = AndR(K(1, c, Ax(a)), K(1, c, Ax(a)))
    assert ar.concl == Sequent((a, c), And(a, a))
    # contexts must agree verbatim
    with pytest.raises(ProofError):
        AndR(Ax(a), Ax(b))


def test_or_rules():
    good = OrL(0, K(1, c, Ax(a)), K(1, c, BotAx(a)))
    assert good.concl == Sequent((Or(a, Bottom()), c), a)
    with pytest.raises(ProofError):
        OrL(0, Ax(a), K(1, b, Ax(a)))    # arities differ
    assert OrR(1, b, Ax(a)).concl == Sequent((a,), Or(a, b))
    assert OrR(2, b, Ax(a)).concl == Sequent((a,), Or(b, a))


def test_imp_rules():
    il = ImpL(0, Ax(a), Ax(b))
    assert il.concl == Sequent((a, Imp(a, b)), b)
    # the principal lands after the spliced-in left context
    il2 = ImpL(1, K(0, c, Ax(a)), K(0, d, Ax(b)))
    assert il2.concl == Sequent((d, c, a, Imp(a, b)), b)
    ir = ImpR(K(0, a, Ax(b)))
    assert ir.concl == Sequent((b,), Imp(a, b))
    with pytest.raises(ProofError):
        ImpR(ImpR(Ax(a)))            # empty antecedent


def test_stats_and_validate():
    p = Cut(0, ImpL(0, Ax(a), Ax(a)), ImpL(0, Ax(a), Ax(a)))
    assert p.concl == Sequent((a, Imp(a, a), Imp(a, a)), a)
    assert (p.node_count, p.cut_count, p.degree) == (7, 1, 0)
    assert validate(p) is p
    deep = Cut(0, OrR(1, Bottom(), Ax(a)), OrL(0, Ax(a), BotAx(a)))
    assert deep.concl == Sequent((a,), a)
    assert deep.degree == 1


def test_navigation():
    p = Cut(0, Ax(a), K(1, b, Ax(a)))
    nodes = list(iter_nodes(p))
    assert [path for path, _ in nodes] == [(), (0,), (1,), (1, 0)]
    assert subproof_at(p, (1, 0)).concl == Sequent((a,), a)
    q = replace_at(p, (0,), K(0, a, W(0, K(0, a, Ax(a)))))
    assert validate(q).concl.ant == (a, a, b)
    with pytest.raises(ProofError):
        replace_at(p, (0,), Ax(b))   # cut formula no longer matches


def test_cut_paths_and_topmost():
    inner = Cut(0, Ax(a), Ax(a))
    outer = Cut(0, inner, K(1, b, Ax(a)))
    assert cut_paths(outer) == [(), (0,)]
    assert leftmost_topmost_cut(outer) == (0,)
    both = Cut(0, Cut(0, Ax(a), Ax(a)), Cut(0, Ax(a), Ax(a)))
    assert leftmost_topmost_cut(both) == (0,)
    assert leftmost_topmost_cut(Ax(a)) is None


# ---- ancestry --------------------------------------------------------------


def test_ancestry_axioms_do_not_link():
    anc = ancestry(Ax(a))
    assert anc[((), 0)] == ()
    assert anc[((), None)] == ()


def test_ancestry_structural():
    p = C(0, K(0, a, Ax(b)))         # b, a |- b from a, b |- b
    anc = ancestry(p)
    assert anc[((), 0)] == (((0,), 1),)
    assert anc[((), 1)] == (((0,), 0),)
    assert anc[((), None)] == (((0,), None),)
    assert anc[((0,), 0)] == ()      # K-inserted occurrence
    assert anc[((0,), 1)] == (((0, 0), 0),)
    w = W(0, K(0, a, Ax(a)))
    anc = ancestry(w)
    assert anc[((), 0)] == (((0,), 0), ((0,), 1))


def test_ancestry_cut_and_imp():
    left = K(0, b, Ax(a))            # b, a |- a
    right = K(0, c, K(1, d, Ax(a)))  # c, a, d |- a
    cut = Cut(1, left, right)        # c, b, a, d |- a
    anc = ancestry(cut)
    assert anc[((), 0)] == (((1,), 0),)
    assert anc[((), 1)] == (((0,), 0),)
    assert anc[((), 2)] == (((0,), 1),)
    assert anc[((), 3)] == (((1,), 2),)
    assert anc[((), None)] == (((1,), None),)
    il = ImpL(1, K(0, c, Ax(a)), K(0, d, Ax(b)))  # d, c, a, a->b |- b
    anc = ancestry(il)
    assert anc[((), 0)] == (((1,), 0),)
    assert anc[((), 1)] == (((0,), 0),)
    assert anc[((), 2)] == (((0,), 1),)
    assert anc[((), 3)] == ()        # principal
    ir = ImpR(K(0, a, K(0, b, Ax(c))))   # b, c |- a -> c
    anc = ancestry(ir)
    assert anc[((), 0)] == (((0,), 1),)
    assert anc[((), None)] == ()


def test_ancestry_branching_rules():
    orl = OrL(0, K(1, c, Ax(a)), K(1, c, BotAx(a)))
    anc = ancestry(orl)
    assert anc[((), 0)] == ()        # principal
    assert set(anc[((), 1)]) == {((0,), 1), ((1,), 1)}
    assert set(anc[((), None)]) == {((0,), None), ((1,), None)}
    ar = AndR(K(1, c, Ax(a)), K(1, c, Ax(a)))
    anc = ancestry(ar)
    assert anc[((), None)] == ()
    assert set(anc[((), 0)]) == {((0,), 0), ((1,), 0)}


def test_cluster_upward_closure():
    p = C(0, K(0, a, Ax(b)))         # b, a |- b
    cl = cluster_of(p, ((), 0))
    assert cl == frozenset({((), 0), ((0,), 1), ((0, 0), 0)})


# ---- contraction classification -------------------------------------------


def _w_paths(p):
    return [path for path, n in iter_nodes(p) if isinstance(n, W)]


def test_directly_engaged():
    right = W(0, K(0, a, K(1, b, Ax(a))))    # a, b |- a, contracted head
    p = Cut(0, Ax(a), right)
    (wp,) = _w_paths(p)
    st = classify_contraction(p, wp)
    assert st == ContractionStatus("directly-engaged", ())


def test_engaged_but_not_directly():
    right = K(1, c, W(0, K(0, a, K(1, b, Ax(a)))))
    p = Cut(0, Ax(a), right)
    (wp,) = _w_paths(p)
    st = classify_contraction(p, wp)
    assert st.kind == "engaged" and st.cut == ()


def test_left_premise_contraction_is_neutral():
    left = W(0, K(0, a, Ax(a)))      # a |- a via duplicated head
    p = Cut(0, left, K(1, b, Ax(a)))
    (wp,) = _w_paths(p)
    assert classify_contraction(p, wp) == ContractionStatus("neutral")


def test_contraction_in_cutfree_proof_is_neutral():
    p = K(0, c, W(0, K(0, a, Ax(a))))
    (wp,) = _w_paths(p)
    assert classify_contraction(p, wp).kind == "neutral"


def test_contraction_above_unrelated_cut_position():
    # the contraction acts on b, the cut consumes a
    right = W(1, K(1, b, K(1, b, Ax(a))))    # a, b |- a
    p = Cut(0, Ax(a), right)
    (wp,) = _w_paths(p)
    assert classify_contraction(p, wp).kind == "neutral"


def test_tied_root_slots():
    p = K(0, c, W(0, K(0, a, Ax(a))))        # c, a |- a
    (wp,) = _w_paths(p)
    assert tied_root_slots(p, wp) == (1,)


# ---- W-normality -----------------------------------------------------------


def test_w_normal_shapes():
    core = K(0, a, K(0, a, Ax(b)))   # a, a, b |- b
    assert is_w_normal(W(0, core))           # tail
    assert is_w_normal(core)                 # no W at all
    assert not is_w_normal(K(0, c, W(0, core)))      # W under K
    chain = ImpR(W(0, core))                 # W immediately above impr
    assert is_w_normal(chain)
    assert is_w_normal(K(0, c, chain))


def test_tailless():
    core = K(0, a, K(0, a, Ax(b)))
    assert is_tailless(core)
    assert not is_tailless(W(0, core))
    with pytest.raises(ProofError):
        is_tailless(K(0, c, W(0, core)))


def test_strip_wrap_roundtrip():
    core = K(0, a, K(0, a, K(0, b, K(0, b, Ax(c)))))
    # a, a, b, b, c |- c
    assert core.concl == Sequent((a, a, b, b, c), c)
    p = W(0, W(2, core))             # applied W(2) then W(0)
    assert p.concl == Sequent((a, b, c), c)
    core2, ws = strip_w_tail(p)
    assert core2 is core and ws == [2, 0]
    assert wrap_w(core2, ws) == p


# ---- generator -------------------------------------------------------------


def test_generator_deterministic_and_valid():
    for seed in range(60):
        p = generate_proof(seed, 40)
        assert p.node_count <= 40
        assert validate(p) is p
        assert generate_proof(seed, 40) == p


def test_generator_imp_free_mode():
    for seed in range(60):
        p = generate_proof(seed, 40, allow_imp=False)
        for _, n in iter_nodes(p):
            assert n.rule not in ("impl", "impr")
            for f in n.concl.ant + (n.concl.succ,):
                assert not has_imp(f)


def test_generator_budget_one():
    p = generate_proof(3, 1)
    assert p.node_count == 1


# ---- backward search -------------------------------------------------------


def test_search_identity():
    p = search_cutfree(Sequent((a,), a), 3)
    assert p is not None and p.cut_count == 0


def test_search_unprovable():
    assert search_cutfree(Sequent((), a), 6) is None
    assert search_cutfree(Sequent((a,), b), 5) is None


def test_search_commutes_conjunction():
    s = Sequent((And(a, b),), And(b, a))
    p = search_cutfree(s, 6)
    assert p is not None and p.concl == s and p.cut_count == 0


def test_search_golden_modus_ponens_chain():
    s = Sequent((a, Imp(a, a), Imp(a, a)), a)
    p = search_cutfree(s, 8)
    assert p is not None and p.concl == s and p.cut_count == 0


def test_search_distributes_over_or():
    s = Sequent((Or(a, b),), Or(b, a))
    p = search_cutfree(s, 6)
    assert p is not None and p.concl == s


def test_search_ex_falso():
    p = search_cutfree(Sequent((Bottom(),), And(a, b)), 4)
    assert p is not None
