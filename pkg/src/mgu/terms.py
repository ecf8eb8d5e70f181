"""Terms over a first-order signature, positions, and subterm surgery.

A term is either a variable leaf or the application of a declared function
symbol to exactly arity-many argument terms.  Terms are immutable and compare
structurally; every node caches its hash, variable set and node count at
construction so that equality tests, occurs checks and termination measures
do not rewalk the tree.  Nodes stay plain trees, never shared or interned.

A position is a tuple of 1-based child indices; ``()`` is the root.  The
textual form is dot-separated indices with ``e`` for the root, e.g. ``2.1``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

Position = tuple[int, ...]

ROOT: Position = ()

_NO_VARS: frozenset[str] = frozenset()


def is_variable_name(name: str) -> bool:
    """Variable names start with an uppercase letter or '?'."""
    return bool(name) and (name[0].isupper() or name[0] == "?")


def is_symbol_name(name: str) -> bool:
    """Function symbol names start with a lowercase letter."""
    return bool(name) and name[0].islower()


class InvalidPositionError(ValueError):
    """A position that does not exist in the term it was used on.

    ``prefix`` is the shortest leading part of the position that already
    falls outside the term.
    """

    def __init__(self, term: Term, position: Position, prefix: Position):
        super().__init__(
            f"invalid position {format_position(position)} in {term}: "
            f"no subterm at {format_position(prefix)}"
        )
        self.term = term
        self.position = position
        self.prefix = prefix


class UnknownSymbolError(ValueError):
    def __init__(self, symbol: str):
        super().__init__(f"unknown symbol {symbol!r}")
        self.symbol = symbol


class ArityError(ValueError):
    def __init__(self, symbol: str, expected: int, found: int):
        super().__init__(
            f"arity mismatch for {symbol!r}: expected {expected} argument(s), found {found}"
        )
        self.symbol = symbol
        self.expected = expected
        self.found = found


class Term:
    """Base class for Var and App; terms compare structurally."""

    __slots__ = ()


class Var(Term):
    __slots__ = ("name", "vars", "size", "_hash")

    def __init__(self, name: str):
        if not is_variable_name(name):
            raise ValueError(
                f"not a variable name (must start with an uppercase letter or '?'): {name!r}"
            )
        self.name = name
        self.vars = frozenset((name,))
        self.size = 1
        self._hash = hash(("var", name))

    def __eq__(self, other: object):
        if self is other:
            return True
        if type(other) is not Var:
            return NotImplemented
        return self.name == other.name

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return self.name


class App(Term):
    """Application of a function symbol to a fixed tuple of argument terms.

    Arity against a signature is checked by ``Signature.app``, the checked
    constructor; building ``App`` directly is reserved for code that already
    holds well-formed arguments (e.g. substitution application rebuilding a
    node with the same argument count).
    """

    __slots__ = ("symbol", "args", "vars", "size", "_hash")

    def __init__(self, symbol: str, args: Iterable[Term] = ()):
        args = tuple(args)
        self.symbol = symbol
        self.args = args
        if not args:
            self.vars = _NO_VARS
            self.size = 1
        else:
            vs = args[0].vars
            size = 1 + args[0].size
            for a in args[1:]:
                vs |= a.vars
                size += a.size
            self.vars = vs
            self.size = size
        self._hash = hash(("app", symbol, args))

    def __eq__(self, other: object):
        if self is other:
            return True
        if type(other) is not App:
            return NotImplemented
        if self._hash != other._hash:
            return False
        return self.symbol == other.symbol and self.args == other.args

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return format_term(self)


class Signature:
    """Finite map from function symbol names to arities."""

    def __init__(self, entries: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        table: dict[str, int] = {}
        for name, arity in pairs:
            if not is_symbol_name(name):
                raise ValueError(
                    f"not a symbol name (must start with a lowercase letter): {name!r}"
                )
            if not isinstance(arity, int) or arity < 0:
                raise ValueError(f"arity of {name!r} must be a natural number, got {arity!r}")
            if name in table:
                raise ValueError(f"duplicate symbol {name!r}")
            table[name] = arity
        self._table = table

    @property
    def entries(self) -> dict[str, int]:
        return dict(self._table)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._table

    def __eq__(self, other: object):
        if not isinstance(other, Signature):
            return NotImplemented
        return self._table == other._table

    def __hash__(self) -> int:
        return hash(frozenset(self._table.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{name}/{arity}" for name, arity in sorted(self._table.items()))
        return f"Signature({inner})"

    def arity(self, symbol: str) -> int:
        try:
            return self._table[symbol]
        except KeyError:
            raise UnknownSymbolError(symbol) from None

    def symbols(self) -> list[str]:
        return sorted(self._table)

    def app(self, symbol: str, *args: Term) -> App:
        """Checked construction: the argument count must match the declared arity."""
        expected = self.arity(symbol)
        if len(args) != expected:
            raise ArityError(symbol, expected, len(args))
        return App(symbol, args)


def positions_of(t: Term) -> list[Position]:
    """All positions of ``t``, in lexicographic (depth-first) order.

    The result is prefix-closed: the parent of every listed position is
    listed too.
    """
    out: list[Position] = [ROOT]
    if isinstance(t, App):
        for i, arg in enumerate(t.args, start=1):
            out.extend((i,) + q for q in positions_of(arg))
    return out


def is_valid_position(t: Term, p: Position) -> bool:
    for i in p:
        if not isinstance(t, App) or not 1 <= i <= len(t.args):
            return False
        t = t.args[i - 1]
    return True


def subterm_at(t: Term, p: Position) -> Term:
    """The subterm of ``t`` at ``p``; raises InvalidPositionError otherwise."""
    cur = t
    for depth, i in enumerate(p):
        if not isinstance(cur, App) or not 1 <= i <= len(cur.args):
            raise InvalidPositionError(t, p, p[: depth + 1])
        cur = cur.args[i - 1]
    return cur


def replace_at(t: Term, p: Position, s: Term) -> Term:
    """``t`` with the subterm at ``p`` replaced by ``s``.

    Every position of ``t`` disjoint from ``p`` is left untouched.
    """
    subterm_at(t, p)  # validates, reporting the exact offending prefix
    return _replace(t, p, s)


def _replace(t: Term, p: Position, s: Term) -> Term:
    if not p:
        return s
    assert isinstance(t, App)
    i = p[0]
    args = t.args
    new_args = args[: i - 1] + (_replace(args[i - 1], p[1:], s),) + args[i:]
    return App(t.symbol, new_args)


def vars_of(t: Term) -> frozenset[str]:
    """The set of variable names occurring in ``t``."""
    return t.vars


def occurrences(t: Term, s: Term) -> list[Position]:
    """All positions of ``t`` where ``s`` occurs, in lexicographic order."""
    out: list[Position] = []

    def walk(u: Term, prefix: Position) -> None:
        if u == s:
            out.append(prefix)
        if isinstance(u, App):
            for i, arg in enumerate(u.args, start=1):
                walk(arg, prefix + (i,))

    walk(t, ROOT)
    return out


def concat(p: Position, q: Position) -> Position:
    """Position concatenation; the root position is a two-sided identity."""
    return tuple(p) + tuple(q)


def term_size(t: Term) -> int:
    """Node count of ``t``; equals the number of its positions."""
    return t.size


def format_term(t: Term) -> str:
    """Canonical form: ``f(t1,t2)``, constants bare, variables verbatim."""
    if isinstance(t, Var):
        return t.name
    if not t.args:
        return t.symbol
    return f"{t.symbol}({','.join(format_term(a) for a in t.args)})"


def format_position(p: Position) -> str:
    return ".".join(str(i) for i in p) if p else "e"


def parse_position(text: str) -> Position:
    """Inverse of format_position; rejects indices below 1."""
    text = text.strip()
    if text == "e":
        return ROOT
    parts = text.split(".")
    out = []
    for part in parts:
        if not part.isdigit() or int(part) < 1:
            raise ValueError(f"not a position: {text!r} (indices are 1-based, root is 'e')")
        out.append(int(part))
    return tuple(out)
