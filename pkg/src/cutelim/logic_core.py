"""Formulas and sequents of intuitionistic propositional logic.

The language has atoms, the constant bot, and the binary connectives
& (conjunction), | (disjunction) and -> (implication).  Sequents are
single-succedent: a finite sequence of antecedent formulas and exactly
one succedent formula.  Everything here is immutable and compared
structurally; there is no normalization of any kind (negation is not a
primitive -- write `A -> bot`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "Formula",
    "Atom",
    "Bottom",
    "And",
    "Or",
    "Imp",
    "Sequent",
    "formula_degree",
    "antecedent_splice",
    "has_imp",
    "atoms_of",
]

_ATOM_NAME = re.compile(r"[a-z][a-z0-9_]*\Z")


class Formula:
    """Base class of the formula variants below."""

    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not _ATOM_NAME.match(self.name) or self.name == "bot":
            raise ValueError("bad atom name: %r" % (self.name,))

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Bottom(Formula):
    def __str__(self):
        return "bot"


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return "(%s & %s)" % (self.left, self.right)


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return "(%s | %s)" % (self.left, self.right)


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return "(%s -> %s)" % (self.left, self.right)


def formula_degree(f):
    """Number of binary connectives in f; atoms and bot count 0."""
    if isinstance(f, (And, Or, Imp)):
        return 1 + formula_degree(f.left) + formula_degree(f.right)
    return 0


def has_imp(f):
    """True iff -> occurs anywhere in f."""
    if isinstance(f, Imp):
        return True
    if isinstance(f, (And, Or)):
        return has_imp(f.left) or has_imp(f.right)
    return False


def atoms_of(f):
    """The set of atom names occurring in f."""
    if isinstance(f, Atom):
        return {f.name}
    if isinstance(f, (And, Or, Imp)):
        return atoms_of(f.left) | atoms_of(f.right)
    return set()


@dataclass(frozen=True)
class Sequent:
    ant: tuple
    succ: Formula

    def __post_init__(self):
        object.__setattr__(self, "ant", tuple(self.ant))
        assert all(isinstance(f, Formula) for f in self.ant), self.ant
        assert isinstance(self.succ, Formula), self.succ

    def __str__(self):
        if not self.ant:
            return "|- %s" % (self.succ,)
        return "%s |- %s" % (", ".join(str(f) for f in self.ant), self.succ)

    @property
    def arity(self):
        return len(self.ant)


def antecedent_splice(s, at, insert, drop=0):
    """Remove `drop` formulas at position `at` and put `insert` there.

    The succedent is untouched.  Raises IndexError when the range
    [at, at+drop) is not inside the antecedent.
    """
    ant = s.ant
    if not (0 <= at and at + drop <= len(ant)):
        raise IndexError("splice [%d, %d) outside antecedent of length %d"
                         % (at, at + drop, len(ant)))
    return Sequent(ant[:at] + tuple(insert) + ant[at + drop:], s.succ)
