"""Independent ground truth for the unification algorithms.

``solve_equations`` unifies by transforming a set of equations with the
delete / decompose / orient / eliminate rules, a different algorithm family
from difference resolving, so agreement between the two is real evidence.
``enum_terms`` and ``enum_substitutions`` enumerate every term and every
substitution under a bound, and ``enumerated_unifiers`` filters the latter
down to the actual unifiers of a pair; together they give finite, exact
approximations of the (infinite) set of unifiers to certify mgus against.

Enumeration order is fixed (variables lexically, then symbols lexically,
argument tuples in product order, earlier domain variables cycling fastest)
so failures are reproducible by index.
"""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from .substitution import Subst, singleton
from .terms import App, Position, ROOT, Signature, Term, Var
from .unify import Clash, Failed, OccursCheck, Unified, UnifyOutcome, is_unifier


@dataclass(frozen=True)
class EquationSet:
    """A finite multiset of term equations, kept in the given order."""

    equations: tuple[tuple[Term, Term], ...]

    def __init__(self, equations: Iterable[tuple[Term, Term]] = ()):
        object.__setattr__(self, "equations", tuple(equations))


@dataclass(frozen=True)
class EnumBound:
    """Term enumeration bound: tree height limit, variable pool, signature."""

    max_depth: int
    variables: tuple[str, ...]
    signature: Signature

    def __init__(self, max_depth: int, variables: Iterable[str], signature: Signature):
        if max_depth < 0:
            raise ValueError("max_depth must be a natural number")
        object.__setattr__(self, "max_depth", max_depth)
        object.__setattr__(self, "variables", tuple(sorted(set(variables))))
        object.__setattr__(self, "signature", signature)


def solve_equations(eqs: EquationSet) -> UnifyOutcome:
    """Unify a whole equation system; returns an idempotent mgu or a failure.

    Worklist transformation: drop solved equations, decompose matching
    applications, orient term = variable, and eliminate variable = term by
    substituting everywhere (after the occurs check).  Reported failure
    positions are relative to the originating equation's terms as
    instantiated at failure time.
    """
    work: deque[tuple[Term, Term, Position]] = deque(
        (s, t, ROOT) for s, t in eqs.equations
    )
    solution: dict[str, Term] = {}
    steps = 0
    while work:
        s, t, pos = work.popleft()
        if s == t:
            continue
        if isinstance(s, App) and isinstance(t, App):
            if s.symbol != t.symbol:
                return Failed(Clash(pos, s.symbol, t.symbol))
            work.extendleft(
                (a, b, pos + (i,))
                for i, (a, b) in reversed(list(enumerate(zip(s.args, t.args), start=1)))
            )
            continue
        if isinstance(t, Var) and not isinstance(s, Var):
            s, t = t, s
        assert isinstance(s, Var)
        if s.name in t.vars:
            return Failed(OccursCheck(s.name, t, pos))
        elim = singleton(s.name, t)
        work = deque((elim.apply(a), elim.apply(b), q) for a, b, q in work)
        for solved in solution:
            solution[solved] = elim.apply(solution[solved])
        solution[s.name] = t
        steps += 1
    return Unified(Subst(solution), steps)


@lru_cache(maxsize=None)
def _enum_terms(bound: EnumBound) -> tuple[Term, ...]:
    sig = bound.signature
    symbols = sig.symbols()

    def layer(prev: tuple[Term, ...]) -> tuple[Term, ...]:
        out: list[Term] = [Var(name) for name in bound.variables]
        for symbol in symbols:
            n = sig.arity(symbol)
            if n == 0:
                out.append(sig.app(symbol))
            elif prev:
                for args in itertools.product(prev, repeat=n):
                    out.append(sig.app(symbol, *args))
        return tuple(out)

    terms = layer(())
    for _ in range(bound.max_depth):
        terms = layer(terms)
    return terms


def enum_terms(bound: EnumBound) -> list[Term]:
    """Every well-formed term of height at most ``bound.max_depth``, once each.

    A lone leaf has height 0.  Variables come first, then applications by
    symbol order with argument tuples in product order.
    """
    return list(_enum_terms(bound))


@lru_cache(maxsize=None)
def _enum_substitutions(domain: tuple[str, ...], bound: EnumBound) -> tuple[Subst, ...]:
    terms = _enum_terms(bound)
    choices = []
    for name in domain:
        me = Var(name)
        choices.append([None] + [t for t in terms if t != me])
    out: list[Subst] = []
    # Reversed so the first domain variable cycles fastest.
    for combo in itertools.product(*reversed(choices)):
        bindings = {
            name: image
            for name, image in zip(reversed(domain), combo)
            if image is not None
        }
        out.append(Subst(bindings))
    return tuple(out)


def enum_substitutions(domain: Iterable[str], bound: EnumBound) -> list[Subst]:
    """Every substitution with domain inside ``domain`` and images drawn from
    ``enum_terms(bound)``, once each; identity bindings are never produced.

    The count is the product over the domain of (number of enumerated terms
    other than the variable itself, plus one for leaving it unbound).
    """
    return list(_enum_substitutions(tuple(sorted(set(domain))), bound))


def enumerated_unifiers(s: Term, t: Term, bound: EnumBound) -> list[Subst]:
    """The enumerated substitutions over the pair's variables that unify it.

    Sound (every result is a unifier) and complete within the bound; an
    empty result is evidence of nothing beyond the bound.
    """
    domain = tuple(sorted(s.vars | t.vars))
    return [
        sigma
        for sigma in _enum_substitutions(domain, bound)
        if is_unifier(sigma, s, t)
    ]
