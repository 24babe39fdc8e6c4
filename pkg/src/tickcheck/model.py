"""AST for the model-description DSL.

The parser produces a resolved, type-checked Model: identifier expressions
have already been classified as variables, enum variants, constructor
applications, or object-identifier literals, and numeric literals carry their
concrete runtime value (TimeValue or int).  Source positions are attached for
diagnostics but never participate in equality, so pretty-print/re-parse is a
fixed point on the AST.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .state import AttrValue, Configuration
from .timeval import TimeValue

Pos = tuple[int, int]  # (line, column), 1-based
NO_POS: Pos = (0, 0)


# -- expressions -------------------------------------------------------------

@dataclass(frozen=True)
class Lit:
    value: AttrValue
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class VarRef:
    name: str
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class Binary:
    """op in {'+','-','*','==','=/=','<','<=','>','>=','/\\','\\/'}"""

    op: str
    left: "Expr"
    right: "Expr"
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class Unary:
    """op in {'~'}"""

    op: str
    operand: "Expr"
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class Call:
    """Builtin call: 'min' or 'max' over two time/int arguments."""

    func: str
    args: tuple["Expr", ...]
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class CtorApp:
    """Record construction, e.g. stopBreathing(X - T)."""

    ctor: str
    args: tuple["Expr", ...]
    pos: Pos = field(default=NO_POS, compare=False)


Expr = Union[Lit, VarRef, Binary, Unary, Call, CtorApp]


# -- patterns ------------------------------------------------------------------

@dataclass(frozen=True)
class PWild:
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class PVar:
    name: str
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class PLit:
    value: AttrValue
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class PCtor:
    ctor: str
    args: tuple["Pattern", ...]
    pos: Pos = field(default=NO_POS, compare=False)


Pattern = Union[PWild, PVar, PLit, PCtor]


@dataclass(frozen=True)
class ObjPattern:
    """`< oid : Class | attr : pat, ... >`; unmentioned attributes match anything."""

    oid: Pattern
    cls: str
    attrs: tuple[tuple[str, Pattern], ...]
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class MsgPattern:
    """A deliverable (zero-delay) message pattern."""

    name: str
    args: tuple[Pattern, ...]
    pos: Pos = field(default=NO_POS, compare=False)


ElemPattern = Union[ObjPattern, MsgPattern]


# -- rule effects ------------------------------------------------------------------

@dataclass(frozen=True)
class ObjEffect:
    """Object update; `oid` must be bound by the rule pattern, class preserved."""

    oid: Pattern  # PVar or PLit(oid)
    cls: str
    updates: tuple[tuple[str, Expr], ...]
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class MsgEffect:
    """Message emission; `delays` has one entry (deterministic) or a finite choice set."""

    name: str
    args: tuple[Expr, ...]
    delays: tuple[Expr, ...]
    pos: Pos = field(default=NO_POS, compare=False)


EffectItem = Union[ObjEffect, MsgEffect]


# -- declarations --------------------------------------------------------------------

@dataclass(frozen=True)
class EnumDecl:
    name: str
    variants: tuple[tuple[str, tuple[str, ...]], ...]  # (ctor, argument type names)
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class ClassDecl:
    name: str
    attrs: tuple[tuple[str, str], ...]  # (attribute, type name)
    pos: Pos = field(default=NO_POS, compare=False)

    def attr_index(self, name: str) -> int:
        for i, (a, _) in enumerate(self.attrs):
            if a == name:
                return i
        raise KeyError(name)


@dataclass(frozen=True)
class MsgDecl:
    name: str
    argtypes: tuple[str, ...]
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class RuleDecl:
    label: str
    pattern: tuple[ElemPattern, ...]
    effect: tuple[EffectItem, ...]
    guard: Optional[Expr]
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class MsgDeltaPattern:
    """`dly(name(args), delayvar)` subject of a per-message delta/mte equation."""

    name: str
    args: tuple[Pattern, ...]
    delay: Pattern
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class DeltaDecl:
    """One delta equation; equations for a class/message are tried in order."""

    subject: Union[ObjPattern, MsgDeltaPattern]
    tvar: str
    update: Union[ObjEffect, MsgEffect]
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class MteDecl:
    subject: Union[ObjPattern, MsgDeltaPattern]
    expr: Expr
    pos: Pos = field(default=NO_POS, compare=False)


# -- proposition predicates ----------------------------------------------------------

@dataclass(frozen=True)
class PSome:
    """Existential object query with an optional attribute condition."""

    pattern: ObjPattern
    where: Optional[Expr]
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class PBool:
    value: bool
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class PNot:
    operand: "Pred"
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class PAnd:
    left: "Pred"
    right: "Pred"
    pos: Pos = field(default=NO_POS, compare=False)


@dataclass(frozen=True)
class POr:
    left: "Pred"
    right: "Pred"
    pos: Pos = field(default=NO_POS, compare=False)


Pred = Union[PSome, PBool, PNot, PAnd, POr]


@dataclass(frozen=True)
class PropDecl:
    name: str
    params: tuple[tuple[str, str], ...]  # (parameter variable, type name)
    pred: Pred
    pos: Pos = field(default=NO_POS, compare=False)


# -- the model -------------------------------------------------------------------------

@dataclass(frozen=True)
class Model:
    enums: tuple[EnumDecl, ...]
    classes: tuple[ClassDecl, ...]
    msgs: tuple[MsgDecl, ...]
    rules: tuple[RuleDecl, ...]
    deltas: tuple[DeltaDecl, ...]
    mtes: tuple[MteDecl, ...]
    props: tuple[PropDecl, ...]
    inits: tuple[tuple[str, Configuration], ...]
    source: str = field(default="", compare=False)

    def class_decl(self, name: str) -> ClassDecl:
        for c in self.classes:
            if c.name == name:
                return c
        raise KeyError(f"undeclared class {name!r}")

    def msg_decl(self, name: str) -> MsgDecl:
        for m in self.msgs:
            if m.name == name:
                return m
        raise KeyError(f"undeclared message {name!r}")

    def prop_decl(self, name: str) -> PropDecl:
        for p in self.props:
            if p.name == name:
                return p
        raise KeyError(f"undeclared proposition {name!r}")

    def init(self, name: str = "default") -> Configuration:
        for n, cfg in self.inits:
            if n == name:
                return cfg
        raise KeyError(f"no initial state named {name!r}")

    def init_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.inits)

    def variant_owner(self, ctor: str) -> Optional[tuple[str, tuple[str, ...]]]:
        """(enum name, argument types) of a variant/constructor, if declared."""
        for e in self.enums:
            for v, argtypes in e.variants:
                if v == ctor:
                    return e.name, argtypes
        return None
