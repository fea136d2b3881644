"""Cut elimination for intuitionistic propositional sequent calculus.

The kernel lives in proof_kernel (proof trees, validation, ancestry),
with the index machinery in rank_engine and zucker_engine, the
contraction normalizer in w_normalizer, the rank/degree eliminator in
maximalizer, mix reconstructions in mix_lab, and the text format plus
command line in proof_io and cli.
"""

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
    generate_proof,
    is_w_normal,
    search_cutfree,
    validate,
)

__version__ = "0.1.0"
