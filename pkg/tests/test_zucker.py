"""Index tables and the indexed eliminator, case by case."""

from __future__ import annotations

import pytest

from cutelim.logic_core import And, Atom, Bottom, Imp, Or, Sequent
from cutelim.proof_kernel import (
    AndL,
    AndR,
    Ax,
    BotAx,
    C,
    Cut,
    ImpR,
    K,
    OrL,
    OrR,
    ProofError,
    W,
    generate_proof,
)
from cutelim.zucker_engine import (
    ZProof,
    eliminate_cut_z,
    erase_indices,
    to_zucker,
    z_measure,
    z_step,
)

a, b, c = Atom("a"), Atom("b"), Atom("c")
aa = And(a, a)


def _andl_id():
    # a & a |- a with the conjunction principal at the root
    return AndL(0, 1, a, Ax(a))


def _andr_id():
    # a |- a & a
    return AndR(Ax(a), Ax(a))


# ---- index tables ----------------------------------------------------------


def test_axiom_and_thinning_indices():
    assert ZProof(Ax(a)).root_indices == (1,)
    assert ZProof(K(0, b, Ax(a))).root_indices == (1, 1)


def test_contraction_adds():
    p = W(0, K(0, a, Ax(a)))
    assert ZProof(p).root_indices == (2,)
    q = W(0, K(0, a, p))
    assert ZProof(q).root_indices == (3,)


def test_cut_multiplies_left_block():
    dup = W(0, K(0, a, Ax(a)))           # a |- a, index 2
    cut = Cut(0, K(0, b, Ax(a)), dup)    # b, a |- a through the doubled slot
    assert ZProof(cut).root_indices == (2, 2)


def test_branching_rules_take_max():
    dup = W(0, K(0, a, Ax(a)))           # index 2
    ar = AndR(dup, Ax(a))
    assert ZProof(ar).root_indices == (2,)
    ol = OrL(0, Ax(a), BotAx(a))
    assert ZProof(ol).root_indices == (1,)
    assert ZProof(AndL(0, 1, a, dup)).root_indices == (2,)
    assert ZProof(OrR(1, b, dup)).root_indices == (2,)


def test_exchange_preserves():
    p = C(0, K(0, b, W(0, K(0, a, Ax(a)))))
    assert ZProof(p).root_indices == (2, 1)


def test_to_zucker_rejects_implication():
    with pytest.raises(ProofError):
        to_zucker(ImpR(Ax(a)))
    with pytest.raises(ProofError):
        to_zucker(K(0, Imp(a, b), Ax(a)))
    z = to_zucker(Ax(a))
    assert erase_indices(z) is z.proof


def test_z_measure_atomic():
    z = ZProof(Cut(0, Ax(a), Ax(a)))
    assert z_measure(z) == (0, 1, 2)
    with pytest.raises(ProofError):
        z_measure(ZProof(Ax(a)))


# ---- single steps ----------------------------------------------------------


def _step_of(proof):
    out, label = z_step(ZProof(proof))
    assert out.proof.concl == proof.concl
    assert all(x <= y for x, y in
               zip(out.root_indices, ZProof(proof).root_indices))
    return out.proof, label


def test_step_left_axiom():
    right = K(1, b, Ax(a))
    new, label = _step_of(Cut(0, Ax(a), right))
    assert label == "Z-1.1" and new == right


def test_step_left_bot_axiom():
    new, label = _step_of(Cut(1, BotAx(a), K(0, b, K(0, a, Ax(c)))))
    assert label == "Z-1.2"
    assert new.concl == Sequent((b, Bottom(), c), c)
    assert new.cut_count == 0


def test_step_right_axiom():
    left = K(0, b, Ax(a))
    new, label = _step_of(Cut(0, left, Ax(a)))
    assert label == "Z-1.3" and new == left


def test_step_right_thinned_cut_formula():
    cut = Cut(0, _andr_id(), K(0, aa, Ax(b)))
    new, label = _step_of(cut)
    assert label == "Z-1.4"
    assert new == K(0, a, Ax(b))


def test_step_conjunction_pair():
    cut = Cut(0, _andr_id(), _andl_id())
    new, label = _step_of(cut)
    assert label == "Z-1.5"
    assert new == Cut(0, Ax(a), Ax(a))
    assert z_measure(ZProof(new)) < z_measure(ZProof(cut))


def test_step_disjunction_pair():
    left = OrR(1, Bottom(), Ax(a))
    right = OrL(0, Ax(a), BotAx(a))
    new, label = _step_of(Cut(0, left, right))
    assert label == "Z-1.6"
    assert new == Cut(0, Ax(a), Ax(a))


def test_step_left_structural():
    left = C(0, K(0, b, Ax(a)))          # a, b |- a
    right = K(1, c, Ax(a))               # a, c |- a
    new, label = _step_of(Cut(0, left, right))
    assert label == "Z-2.1"
    assert isinstance(new, C) and new.pos == 0


def test_step_left_disjunction():
    left = OrL(0, Ax(a), BotAx(a))
    right = K(1, c, Ax(a))
    new, label = _step_of(Cut(0, left, right))
    assert label == "Z-2.2"
    assert isinstance(new, OrL) and new.pos == 0
    assert new.cut_count == 2


def test_step_right_thinning_elsewhere():
    right = K(1, c, _andl_id())          # a & a, c |- a
    new, label = _step_of(Cut(0, _andr_id(), right))
    assert label == "Z-3.1"
    assert isinstance(new, K) and new.pos == 1


def test_step_right_exchange_touching():
    sigma = K(0, c, _andl_id())          # c, a & a |- a
    right = C(0, sigma)                  # a & a, c |- a
    cut = Cut(0, _andr_id(), right)
    new, label = _step_of(cut)
    assert label == "Z-3.1"
    assert isinstance(new, C)


def test_step_right_conjunction():
    right = AndR(_andl_id(), _andl_id())     # a & a |- a & a
    new, label = _step_of(Cut(0, _andr_id(), right))
    assert label == "Z-3.2"
    assert isinstance(new, AndR) and new.cut_count == 2


def test_step_right_disjunction_context():
    r1 = K(1, b, _andl_id())
    r2 = K(1, c, _andl_id())
    right = OrL(1, r1, r2)               # a & a, b | c |- a
    new, label = _step_of(Cut(0, _andr_id(), right))
    assert label == "Z-3.3"
    assert isinstance(new, OrL) and new.pos == 1


def test_step_right_contracted_cut_formula():
    right = W(0, K(0, aa, _andl_id()))   # a & a |- a with index 2
    cut = Cut(0, _andr_id(), right)
    assert z_measure(ZProof(cut))[1] == 2
    seen = []
    out, label = z_step(ZProof(cut), emit=lambda lab, p: seen.append(lab))
    assert label == "Z-3.4"
    assert out.proof.concl == cut.concl
    assert seen       # the inner residual was eliminated step by step
    # surviving index must undercut the contracted count
    assert out.root_indices[0] <= 2


# ---- full elimination ------------------------------------------------------


def test_eliminate_small():
    z = to_zucker(Cut(0, Ax(a), Ax(a)))
    out = eliminate_cut_z(z)
    assert out.proof.cut_count == 0
    assert out.proof.concl == Sequent((a,), a)


def test_eliminate_corpus():
    labels = set()
    for seed in range(140):
        p = generate_proof(seed, 40, allow_imp=False)
        z = to_zucker(p)
        out = eliminate_cut_z(z, on_step=lambda lab, _p: labels.add(lab))
        assert out.proof.cut_count == 0
        assert out.proof.concl == p.concl
        assert all(x <= y for x, y in zip(out.root_indices, z.root_indices))
    assert {"Z-1.1", "Z-1.3", "Z-1.4", "Z-2.1", "Z-3.1"} <= labels


def test_step_rejects_bad_roots():
    with pytest.raises(ProofError):
        z_step(ZProof(Ax(a)))
    nested = Cut(0, Ax(a), Cut(0, Ax(a), Ax(a)))
    with pytest.raises(ProofError):
        z_step(ZProof(nested))
