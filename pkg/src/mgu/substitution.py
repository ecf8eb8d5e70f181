"""Finite substitutions: variable-to-term maps and their algebra.

A substitution is stored as a finite map with identity bindings dropped at
construction, so the key set is exactly the domain and two substitutions are
equal as maps if and only if they are equal as functions on terms.  Applying
a substitution extends it homomorphically over term structure; composition,
restriction and the generality pre-order are built on top of that.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .terms import App, Position, ROOT, Term, Var, is_variable_name


class Subst:
    """Immutable finite-domain substitution.

    ``==`` decides equality as functions on terms: identity bindings are
    dropped eagerly, so comparing the stored maps is exact.
    """

    __slots__ = ("_map", "_dom")

    def __init__(self, bindings: Mapping[str, Term] | None = None):
        table: dict[str, Term] = {}
        if bindings:
            for name, image in bindings.items():
                if not is_variable_name(name):
                    raise ValueError(f"not a variable name: {name!r}")
                if not isinstance(image, Term):
                    raise TypeError(f"binding image for {name!r} is not a Term: {image!r}")
                if isinstance(image, Var) and image.name == name:
                    continue
                table[name] = image
        self._map = table
        self._dom = frozenset(table)

    def __eq__(self, other: object):
        if not isinstance(other, Subst):
            return NotImplemented
        return self._map == other._map

    def __len__(self) -> int:
        return len(self._map)

    def __str__(self) -> str:
        inner = ", ".join(f"{x} -> {img}" for x, img in self.items())
        return "{" + inner + "}"

    __repr__ = __str__

    def items(self) -> list[tuple[str, Term]]:
        """Bindings sorted lexically by variable name."""
        return sorted(self._map.items())

    def get(self, name: str) -> Term:
        """Image of a variable; unbound variables map to themselves."""
        img = self._map.get(name)
        return Var(name) if img is None else img

    def dom(self) -> frozenset[str]:
        return self._dom

    def ran(self) -> frozenset[Term]:
        return frozenset(self._map.values())

    def vran(self) -> frozenset[str]:
        """Variables occurring in the range."""
        out: frozenset[str] = frozenset()
        for img in self._map.values():
            out |= img.vars
        return out

    def apply(self, t: Term) -> Term:
        """Homomorphic extension: substitute throughout ``t``."""
        if t.vars.isdisjoint(self._dom):
            return t
        if isinstance(t, Var):
            return self._map.get(t.name, t)
        return App(t.symbol, tuple(self.apply(a) for a in t.args))

    def applied_equal(self, s: Term, t: Term) -> bool:
        """Whether applying the substitution makes the two terms equal.

        Same answer as ``self.apply(s) == self.apply(t)``, but compares the
        instantiated terms without building them.
        """
        if s is t:
            return True
        if isinstance(s, Var):
            return self._image_vs_applied(self._map.get(s.name, s), t)
        if isinstance(t, Var):
            return self._image_vs_applied(self._map.get(t.name, t), s)
        if s.symbol != t.symbol:
            return False
        return all(self.applied_equal(a, b) for a, b in zip(s.args, t.args))

    def _image_vs_applied(self, u: Term, t: Term) -> bool:
        """u == self.apply(t), where u is already fully instantiated."""
        if t.vars.isdisjoint(self._dom):
            return u == t
        if isinstance(t, Var):
            return u == self._map.get(t.name, t)
        if not isinstance(u, App) or u.symbol != t.symbol:
            return False
        return all(self._image_vs_applied(a, b) for a, b in zip(u.args, t.args))

    def restrict(self, names: Iterable[str]) -> Subst:
        keep = set(names)
        return Subst({x: img for x, img in self._map.items() if x in keep})

    def is_idempotent(self) -> bool:
        """True iff composing the substitution with itself changes nothing.

        Computed both ways (self-composition and domain/range disjointness);
        the two characterizations always agree.
        """
        by_sets = self._dom.isdisjoint(self.vran())
        by_composition = compose(self, self) == self
        assert by_sets == by_composition
        return by_sets


def identity() -> Subst:
    return Subst()


def singleton(name: str, image: Term) -> Subst:
    """The substitution binding exactly one variable.

    Rejects ``name -> name`` since identity bindings are not stored.
    """
    if isinstance(image, Var) and image.name == name:
        raise ValueError(f"identity binding {name} -> {name} is not a binding")
    return Subst({name: image})


def compose(sigma: Subst, tau: Subst) -> Subst:
    """The substitution acting as "apply tau, then apply sigma".

    Bindings that cancel to the identity are dropped, so the result's domain
    can be smaller than the union of the two domains; as a function on terms
    the result always equals sigma after tau.
    """
    table: dict[str, Term] = {}
    for x, img in tau._map.items():
        table[x] = sigma.apply(img)
    for x, img in sigma._map.items():
        if x not in tau._map:
            table[x] = img
    return Subst(table)


def subst_equal(sigma: Subst, tau: Subst) -> bool:
    """Equality as functions on terms (same as ``==``)."""
    return sigma == tau


@dataclass(frozen=True)
class Matched:
    witness: Subst


@dataclass(frozen=True)
class NoMatch:
    reason: str  # "clash" or "inconsistent-binding"
    at: Position


MatchResult = Matched | NoMatch


def _match_into(pattern: Term, target: Term, pos: Position, env: dict[str, Term]) -> NoMatch | None:
    """Leftmost-outermost one-sided matching into a shared binding map.

    ``env`` keeps raw bindings (including identities) so that consistency
    checks see every earlier decision.
    """
    if isinstance(pattern, Var):
        seen = env.get(pattern.name)
        if seen is None:
            env[pattern.name] = target
            return None
        if seen == target:
            return None
        return NoMatch("inconsistent-binding", pos)
    if not isinstance(target, App) or target.symbol != pattern.symbol:
        return NoMatch("clash", pos)
    for i, (a, b) in enumerate(zip(pattern.args, target.args), start=1):
        bad = _match_into(a, b, pos + (i,), env)
        if bad is not None:
            return bad
    return None


def match_terms(pattern: Term, target: Term) -> MatchResult:
    """Find the substitution turning ``pattern`` into ``target``, if any.

    On success the witness binds only variables of the pattern and is the
    unique such substitution on them; on failure the first conflicting
    position (leftmost-outermost) is reported.
    """
    env: dict[str, Term] = {}
    bad = _match_into(pattern, target, ROOT, env)
    return Matched(Subst(env)) if bad is None else bad


def more_general(theta: Subst, sigma: Subst) -> bool:
    """True iff some gamma satisfies compose(gamma, theta) == sigma.

    Decided constructively: match the theta-image of every variable in
    either domain against its sigma-image (matching witnesses are unique on
    the constrained variables), then verify the collected gamma really
    reproduces sigma.  The verification matters: the matching constraints
    alone cannot see that gamma must leave untouched variables that sigma
    leaves untouched (e.g. {X -> Y} is not more general than {X -> a}).
    """
    env: dict[str, Term] = {}
    for x in theta.dom() | sigma.dom():
        if _match_into(theta.get(x), sigma.get(x), ROOT, env) is not None:
            return False
    return compose(Subst(env), theta) == sigma
