"""State model: attribute values, objects, delayed messages, configurations.

A configuration is a multiset of objects and messages; two configurations are
equal iff they contain the same elements regardless of order.  Elements and
configurations are immutable, precompute their hash and a canonical sort key
at construction, and are safe to share between workers.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Union

from .timeval import INF, TimeValue


class StateError(ValueError):
    """Ill-formed state components (duplicate oids, bad delays, ...)."""


class Term:
    """A constructor term: an enum variant (nullary) or a record value."""

    __slots__ = ("ctor", "args", "_hash")

    def __init__(self, ctor: str, args: tuple = ()):
        self.ctor = ctor
        self.args = args
        self._hash = hash((ctor, args))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Term) and self.ctor == other.ctor and self.args == other.args

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Term({self.ctor}, {self.args})" if self.args else f"Term({self.ctor})"


AttrValue = Union[TimeValue, int, bool, str, Term]


def value_key(value: AttrValue) -> tuple:
    """Canonical, totally ordered key for any attribute value."""
    if isinstance(value, TimeValue):
        return (0,) + value.sort_key()
    if isinstance(value, bool):  # bool before int: bool is an int subclass
        return (1, value)
    if isinstance(value, int):
        return (2, value)
    if isinstance(value, str):
        return (3, value)
    if isinstance(value, Term):
        return (4, value.ctor, tuple(value_key(a) for a in value.args))
    raise TypeError(f"not an attribute value: {value!r}")


def render_value(value: AttrValue) -> str:
    """DSL-syntax rendering of an attribute value."""
    if isinstance(value, TimeValue):
        return str(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    if isinstance(value, Term):
        if not value.args:
            return value.ctor
        return f"{value.ctor}({', '.join(render_value(a) for a in value.args)})"
    raise TypeError(f"not an attribute value: {value!r}")


class ObjectInstance:
    """An object `< oid : Class | ... >`; attrs are aligned with the class declaration."""

    __slots__ = ("oid", "cls", "attrs", "_hash", "_key")

    def __init__(self, oid: str, cls: str, attrs: tuple):
        self.oid = oid
        self.cls = cls
        self.attrs = attrs
        self._key = (0, oid, cls, tuple(value_key(v) for v in attrs))
        self._hash = hash(self._key)

    def replace_attrs(self, updates: dict[int, AttrValue]) -> "ObjectInstance":
        attrs = tuple(updates.get(i, v) for i, v in enumerate(self.attrs))
        return ObjectInstance(self.oid, self.cls, attrs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ObjectInstance) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"ObjectInstance({self.oid}:{self.cls})"


class MessageInstance:
    """A (possibly delayed) message; deliverable iff delay is zero."""

    __slots__ = ("name", "args", "delay", "_hash", "_key")

    def __init__(self, name: str, args: tuple, delay: TimeValue):
        if not delay.is_finite:
            raise StateError(f"message {name} has infinite delay")
        self.name = name
        self.args = args
        self.delay = delay
        self._key = (1, name, tuple(value_key(a) for a in args), delay.sort_key())
        self._hash = hash(self._key)

    def with_delay(self, delay: TimeValue) -> "MessageInstance":
        return MessageInstance(self.name, self.args, delay)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MessageInstance) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"MessageInstance({self.name}, delay={self.delay})"


Element = Union[ObjectInstance, MessageInstance]


class Configuration:
    """Multiset of objects and messages, stored in canonical sorted order.

    Object identifiers must be unique within a configuration.
    """

    __slots__ = ("elements", "_hash")

    def __init__(self, elements: Iterable[Element], _sorted: bool = False):
        elems = tuple(elements) if _sorted else tuple(sorted(elements, key=lambda e: e._key))
        seen: set[str] = set()
        for e in elems:
            if isinstance(e, ObjectInstance):
                if e.oid in seen:
                    raise StateError(f"duplicate object identifier {e.oid!r}")
                seen.add(e.oid)
        self.elements = elems
        self._hash = hash(elems)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Configuration) and self.elements == other.elements

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def objects(self) -> Iterator[ObjectInstance]:
        return (e for e in self.elements if isinstance(e, ObjectInstance))

    def messages(self) -> Iterator[MessageInstance]:
        return (e for e in self.elements if isinstance(e, MessageInstance))

    def find_object(self, oid: str) -> ObjectInstance | None:
        for e in self.elements:
            if isinstance(e, ObjectInstance) and e.oid == oid:
                return e
        return None

    def without(self, element: Element) -> "Configuration":
        elems = list(self.elements)
        elems.remove(element)
        return Configuration(elems, _sorted=True)

    def union(self, other: "Configuration") -> "Configuration":
        return Configuration(self.elements + other.elements)

    def __repr__(self) -> str:
        return f"Configuration({len(self.elements)} elements)"


EMPTY_CONFIG = Configuration(())


def canonicalize(config: Configuration) -> bytes:
    """Deterministic byte encoding, invariant under multiset reordering.

    Equal configurations (canonical rationals, any element order) produce
    identical encodings; used for trace-file model hashes and as the
    specification form of the visited-set key.
    """
    return repr(tuple(e._key for e in config.elements)).encode("utf-8")


class GlobalState:
    """A configuration plus the total time elapsed along the path that produced it.

    Search identity is the configuration alone; `elapsed` is bookkeeping.
    """

    __slots__ = ("config", "elapsed")

    def __init__(self, config: Configuration, elapsed: TimeValue = TimeValue(0)):
        if not elapsed.is_finite:
            raise StateError("elapsed time must be finite")
        self.config = config
        self.elapsed = elapsed

    def advanced(self, config: Configuration, duration: TimeValue) -> "GlobalState":
        return GlobalState(config, self.elapsed + duration)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GlobalState)
            and self.config == other.config
            and self.elapsed == other.elapsed
        )

    def __hash__(self) -> int:
        return hash((self.config, self.elapsed))

    def __repr__(self) -> str:
        return f"GlobalState(elapsed={self.elapsed}, {self.config!r})"


class Proposition:
    """A state proposition instance: declared name plus actual parameters."""

    __slots__ = ("name", "params", "_hash")

    def __init__(self, name: str, params: tuple = ()):
        self.name = name
        self.params = params
        self._hash = hash((name, params))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Proposition)
            and self.name == other.name
            and self.params == other.params
        )

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({', '.join(render_value(p) for p in self.params)})"

    def __repr__(self) -> str:
        return f"Proposition({self})"
