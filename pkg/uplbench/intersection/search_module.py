"""
Bounded search for typing derivations.

Types are synthesised bottom-up. A variable, a constructor or defined constant
applied to all its arguments, and an application whose function part has a
least type all have a least type, computed from the least types of their
parts; continuity picks the arrows an argument can feed. Abstractions and
partial applications are typed against guessed domains drawn from a bounded
neighbourhood universe, and checking against an arrow target inverts the
abstraction (or eta-expands) instead of guessing.

A result is *exact* when the derivations found generate every type the term
has. Untypability is only reported from exact results.
"""
import itertools
import logging
from dataclasses import dataclass

from uplbench.syntax import Var, Lam, App, Const, Inst, all_names, constants, erase, fresh_name, spine, print_term
from uplbench.neighbourhoods import (NABLA, NfCon, NfArrows, arrow, arrows_to, complexity, leq, meet_all,
                                     nbhd_universe, print_nbhd)

from .derivation_module import (Context, Derivation, Rule, app_elim, check_derivation, invert_app, lam_intro,
                                meet_intro_all, pattern_assignment, subsume, var_node, weaken)

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 3
DEFAULT_MAX_STEPS = 200000

MAX_DOMAINS = 48
PARTIAL_DOMAINS = 6
MAX_TUPLES = 64
UNFOLD_FACTOR = 8


class CheckOutcome(object):
    pass


@dataclass(frozen=True)
class Valid(CheckOutcome):
    derivation: Derivation

    def to_dict(self):
        return {'outcome': 'valid', 'derivation': self.derivation.to_dict()}


@dataclass(frozen=True)
class Refuted(CheckOutcome):
    reason: str

    def to_dict(self):
        return {'outcome': 'refuted', 'reason': self.reason}


@dataclass(frozen=True)
class Unknown(CheckOutcome):
    reason: str

    def to_dict(self):
        return {'outcome': 'unknown', 'reason': self.reason}


class _Exhausted(Exception):
    pass


@dataclass(frozen=True)
class _Found(object):
    derivations: tuple
    exact: bool


_NONE = _Found((), True)
_LOST = _Found((), False)


def _best(found):
    return meet_intro_all(found.derivations)


def _nbhd_constructors(u, out):
    if isinstance(u, NfCon):
        out.add(u.name)
        for a in u.args:
            _nbhd_constructors(a, out)
    elif isinstance(u, NfArrows):
        for d, c in u.arrows:
            _nbhd_constructors(d, out)
            _nbhd_constructors(c, out)


def _pattern_constructors(p, out):
    if hasattr(p, 'args'):
        out.add(p.name)
        for a in p.args:
            _pattern_constructors(a, out)


def query_constructors(sig, terms, types=()):
    """
    Constructors a search over terms and types can meet: those occurring in
    them and in the rules of every defined constant reachable from them.

    :rtype: dict
    :returns: constructor name -> arity
    """
    names = set()
    seen = set()
    todo = set()
    for m in terms:
        todo |= constants(m)
    while todo:
        c = todo.pop()
        if c in seen:
            continue
        seen.add(c)
        if sig.is_constructor(c):
            names.add(c)
        elif sig.is_defined(c):
            for rule in sig.rules_for(c):
                for p in rule.lhs:
                    _pattern_constructors(p, names)
                todo |= constants(rule.rhs)
    for u in types:
        _nbhd_constructors(u, names)
    return dict((n, sig.arity(n)) for n in names if sig.is_constructor(n))


class _TypeSearch(object):

    def __init__(self, sig, depth, max_steps, constructors):
        if depth < 1:
            raise ValueError('depth must be positive')
        self.sig = sig
        self.depth = depth
        self.max_steps = max_steps
        self.steps = 0
        self.domains = nbhd_universe(constructors, depth - 1, pairs=False, limit=MAX_DOMAINS)
        self.partial_domains = [u for u in self.domains if complexity(u) <= 1][:PARTIAL_DOMAINS]
        self.memo = {}
        self.constant_memo = {}
        self.in_progress = set()
        self.unfolding = 0
        self.cuts = 0

    def tick(self):
        self.steps += 1
        if self.steps > self.max_steps:
            raise _Exhausted()

    def infer(self, ctx, m):
        key = (frozenset(ctx.restrict(m.free).items), m.named_key)
        found = self.memo.get(key)
        if found is None:
            cuts = self.cuts
            found = self._infer(ctx, m)
            if cuts == self.cuts:
                self.memo[key] = found
        return found

    def _infer(self, ctx, m):
        self.tick()
        if isinstance(m, Var):
            return _Found((var_node(ctx, m.name),), True)
        if isinstance(m, Lam):
            return self._infer_lam(ctx, m)
        head, args = spine(m)
        if isinstance(head, Var):
            return self._apply_all(ctx, _Found((var_node(ctx, head.name),), True), args)
        if isinstance(head, Lam):
            return self._infer_redex(ctx, head, args)
        if self.sig.is_constructor(head.name):
            return self._infer_constructor(ctx, head.name, args)
        return self._infer_defined(ctx, head.name, args)

    def _infer_lam(self, ctx, m):
        found = []
        for u in self.domains:
            body = self.infer(ctx.extend(m.binder, u), m.body)
            if body.derivations:
                found.append(lam_intro(ctx, m.binder, u, _best(body)))
        return _Found(tuple(found), False)

    def _infer_redex(self, ctx, lam, args):
        arg = self.infer(ctx, args[0])
        if arg.exact:
            if not arg.derivations:
                return _NONE
            d_arg = _best(arg)
            body = self.infer(ctx.extend(lam.binder, d_arg.type), lam.body)
            if not body.derivations:
                return _Found((), body.exact)
            d = app_elim(lam_intro(ctx, lam.binder, d_arg.type, _best(body)), d_arg)
            found = _Found((d,), body.exact)
        else:
            found = self._apply(ctx, self._infer_lam(ctx, lam), args[0])
        return self._apply_all(ctx, found, args[1:])

    def _arguments(self, ctx, args):
        found = [self.infer(ctx, a) for a in args]
        for f in found:
            if not f.derivations:
                return None, f.exact
        return [_best(f) for f in found], all(f.exact for f in found)

    def _chain(self, d, d_args):
        for a in d_args:
            d = app_elim(d, a)
        return d

    def _tuples(self, size):
        return itertools.islice(itertools.product(self.partial_domains, repeat=size), MAX_TUPLES)

    def _infer_constructor(self, ctx, name, args):
        k = self.sig.arity(name)
        if len(args) > k:
            return _NONE
        d_args, exact = self._arguments(ctx, args)
        if d_args is None:
            return _Found((), exact)
        us = [d.type for d in d_args]
        if len(args) == k:
            intro = Derivation(Rule.CONSTRUCTOR_INTRO, Context(), Const(name), arrows_to(us, NfCon(name, tuple(us))))
            return _Found((self._chain(intro, d_args),), exact)
        found = []
        for rest in self._tuples(k - len(args)):
            full = us + list(rest)
            intro = Derivation(Rule.CONSTRUCTOR_INTRO, Context(), Const(name),
                               arrows_to(full, NfCon(name, tuple(full))))
            found.append(self._chain(intro, d_args))
        return _Found(tuple(found), False)

    def _infer_defined(self, ctx, name, args):
        k = self.sig.arity(name)
        d_args, exact = self._arguments(ctx, args[:k])
        if d_args is None:
            return _Found((), exact)
        us = [d.type for d in d_args]
        if len(args) >= k:
            const = self.constant(name, us)
            if not const.derivations:
                return _Found((), const.exact)
            head = _Found((self._chain(const.derivations[0], d_args),), exact and const.exact)
            return self._apply_all(ctx, head, args[k:])
        found = []
        for rest in self._tuples(k - len(args)):
            const = self.constant(name, us + list(rest))
            if const.derivations:
                found.append(self._chain(const.derivations[0], d_args))
        return _Found(tuple(found), False)

    def _apply_all(self, ctx, head, args):
        for a in args:
            head = self._apply(ctx, head, a)
        return head

    def _apply(self, ctx, head, a):
        if not head.derivations:
            return head
        d_head = _best(head)
        t = d_head.type
        arg = self.infer(ctx, a)
        if t == NABLA:
            if not arg.derivations:
                return _Found((), arg.exact)
            d_arg = _best(arg)
            return _Found((app_elim(subsume(d_head, arrow(d_arg.type, NABLA)), d_arg),), True)
        if isinstance(t, NfCon):
            return _Found((), head.exact)
        parts = []
        if arg.exact:
            if not arg.derivations:
                return _NONE
            d_arg = _best(arg)
            for dom, cod in sorted(t.arrows, key=str):
                if leq(d_arg.type, dom):
                    parts.append((cod, subsume(d_arg, dom)))
            exact = head.exact
        else:
            for dom, cod in sorted(t.arrows, key=str):
                outcome = self.check(ctx, a, dom)
                if isinstance(outcome, Valid):
                    parts.append((cod, outcome.derivation))
            exact = False
        if not parts:
            return _Found((), exact)
        d_arg = meet_intro_all(d for _, d in parts)
        v = meet_all(c for c, _ in parts)
        return _Found((app_elim(subsume(d_head, arrow(d_arg.type, v)), d_arg),), exact)

    def constant(self, name, us):
        """
        The least type ``U1 -> ... -> Uk -> V`` of a defined constant at the
        given argument types.
        """
        key = (name, tuple(us))
        found = self.constant_memo.get(key)
        if found is not None:
            return found
        if key in self.in_progress or self.unfolding >= UNFOLD_FACTOR * self.depth:
            self.cuts += 1
            return _LOST
        self.tick()
        for rule in self.sig.rules_for(name):
            assignment = pattern_assignment(rule, us)
            if assignment is None:
                continue
            pctx = Context((x, assignment[x]) for x in rule.variables())
            cuts = self.cuts
            self.in_progress.add(key)
            self.unfolding += 1
            try:
                body = self.infer(pctx, rule.rhs)
            finally:
                self.unfolding -= 1
                self.in_progress.discard(key)
            if body.derivations:
                d_body = _best(body)
                d = Derivation(Rule.DEFINED_MATCH, Context(), Const(name), arrows_to(us, d_body.type), (d_body,),
                               (rule, assignment))
                found = _Found((d,), body.exact)
            else:
                found = _Found((), body.exact)
            if cuts == self.cuts:
                self.constant_memo[key] = found
            return found
        found = _Found((Derivation(Rule.DEFINED_NO_MATCH, Context(), Const(name), arrows_to(us, NABLA)),), True)
        self.constant_memo[key] = found
        return found

    def check(self, ctx, m, u):
        self.tick()
        if isinstance(m, Lam):
            if not isinstance(u, NfArrows):
                return Refuted('an abstraction only has arrow types, not %s' % print_nbhd(u))
            parts = []
            for w, w1 in sorted(u.arrows, key=str):
                outcome = self.check(ctx.extend(m.binder, w), m.body, w1)
                if not isinstance(outcome, Valid):
                    return outcome
                parts.append(lam_intro(ctx, m.binder, w, outcome.derivation))
            return Valid(meet_intro_all(parts))
        head, args = spine(m)
        partial = isinstance(head, (Const, Inst)) and len(args) < self.sig.arity(head.name)
        if partial and isinstance(u, NfArrows):
            return self._check_eta(ctx, m, u)
        found = self.infer(ctx, m)
        if found.derivations:
            d = _best(found)
            if leq(d.type, u):
                return Valid(subsume(d, u))
            if found.exact:
                return Refuted('the least type of %s is %s, which is not included in %s' % (
                    print_term(m), print_nbhd(d.type), print_nbhd(u)))
        elif found.exact:
            return Refuted('%s has no type' % print_term(m))
        if isinstance(u, NfArrows):
            return self._check_eta(ctx, m, u)
        return Unknown('no derivation found within depth %d' % self.depth)

    def _check_eta(self, ctx, m, u):
        z = fresh_name('z', all_names(m) | set(ctx.names()))
        parts = []
        for w, w1 in sorted(u.arrows, key=str):
            outcome = self.check(ctx.extend(z, w), App(m, Var(z)), w1)
            if not isinstance(outcome, Valid):
                return outcome
            _, d_fun, _ = invert_app(outcome.derivation)
            parts.append(subsume(_drop_var(d_fun, z), arrow(w, w1)))
        return Valid(meet_intro_all(parts))


def _drop_var(d, z):
    ps = d.premises
    if d.rule != Rule.DEFINED_MATCH:
        ps = tuple(_drop_var(p, z) for p in ps)
    return Derivation(d.rule, d.context.without(z), d.subject, d.type, ps, d.data)


def _as_context(g):
    if isinstance(g, Context):
        return g
    return Context.from_dict(dict(g or {}))


def _search(sig, g, m, types, depth, max_steps):
    missing = m.free - set(g.names())
    if missing:
        raise ValueError('free variables %s are not bound by the context' % ', '.join(sorted(missing)))
    types = list(types) + [u for _, u in g]
    return _TypeSearch(sig, depth, max_steps, query_constructors(sig, [m], types))


def check_type(g, m, u, depth, sig, max_steps=DEFAULT_MAX_STEPS):
    """
    Searches a derivation of ``g ⊢ m : u``.

    :param g: typing context (Context or dict name -> NbhdNF)
    :param Term m: the subject; its free variables must be bound by g
    :param NbhdNF u: the target type
    :param int depth: complexity bound of guessed neighbourhoods; also bounds
        nested unfoldings of defined constants
    :param Signature sig: the signature
    :param int max_steps: bound on the total search work
    :rtype: Valid, Refuted or Unknown
    :returns: Valid with a derivation accepted by check_derivation, Refuted
        when no derivation can exist, Unknown otherwise

    :Example:

    >>> check_type({}, parse_term('\\\\x. x', sig), parse_nbhd('! -> !', sig), 2, sig)
    Valid(derivation=...)
    """
    g = _as_context(g)
    m = erase(m)
    search = _search(sig, g, m, [u], depth, max_steps)
    try:
        outcome = search.check(g, m, u)
    except _Exhausted:
        logger.debug('check_type: step budget %d exhausted on %s', max_steps, print_term(m))
        return Unknown('search step budget exhausted')
    if isinstance(outcome, Valid):
        d = weaken(outcome.derivation, g)
        if not check_derivation(d, sig):
            logger.warning('check_type: rejected derivation for %s : %s', print_term(m), print_nbhd(u))
            return Unknown('no checkable derivation found')
        return Valid(d)
    return outcome


def generators(g, m, depth, sig, max_steps=DEFAULT_MAX_STEPS):
    """
    The most informative types the bounded search finds for m, each with its
    derivation. Every type of m found within the bound contains the meet of
    some of them.

    :rtype: tuple
    :returns: derivations concluding ``g ⊢ m : U``
    """
    g = _as_context(g)
    m = erase(m)
    search = _search(sig, g, m, [], depth, max_steps)
    try:
        found = search.infer(g, m)
    except _Exhausted:
        logger.debug('generators: step budget %d exhausted on %s', max_steps, print_term(m))
        return ()
    out = []
    for d in found.derivations:
        d = weaken(d, g)
        if check_derivation(d, sig):
            out.append(d)
        else:
            logger.warning('generators: rejected derivation for %s', print_term(m))
    return tuple(out)


def _meet_closure(us, bound):
    out = set(us)
    frontier = list(out)
    while frontier and len(out) < bound:
        new = []
        for a in frontier:
            for b in list(out):
                c = meet_all([a, b])
                if c not in out and len(out) + len(new) < bound:
                    new.append(c)
                    out.add(c)
        frontier = new
    return out


def infer(g, m, depth, sig, max_steps=DEFAULT_MAX_STEPS, max_types=512):
    """
    Types of m found within depth: the generators, every neighbourhood of
    complexity at most depth above their meet, and meets of those.

    :rtype: frozenset
    :returns: neighbourhoods U for which check_type(g, m, U) is Valid

    :Example:

    >>> print_nbhd(min(infer({}, parse_term('0', sig), 1, sig), key=complexity))
    '0'
    """
    found = generators(g, m, depth, sig, max_steps)
    if not found:
        return frozenset()
    best = meet_all(d.type for d in found)
    universe = nbhd_universe(query_constructors(sig, [erase(m)], [d.type for d in found]), depth, pairs=False,
                             limit=max_types)
    members = set(d.type for d in found) | {best}
    members |= set(u for u in universe if leq(best, u))
    return frozenset(u for u in _meet_closure(members, max_types) if complexity(u) <= max(depth, complexity(best)))


def constant_type(f, args, g, depth, sig, max_steps=DEFAULT_MAX_STEPS):
    """
    Codomains V such that ``f : U1 -> ... -> Uk -> V`` for the given
    argument types.

    :param str f: defined constant
    :param args: argument types U1 ... Uk
    :rtype: frozenset
    :returns: {∇} when no rule matches, otherwise the types found for the
        instantiated right hand side
    """
    args = list(args)
    if not sig.is_defined(f):
        raise ValueError('"%s" is not a defined constant' % f)
    if len(args) != sig.arity(f):
        raise ValueError('"%s" has arity %d, got %d arguments' % (f, sig.arity(f), len(args)))
    for rule in sig.rules_for(f):
        assignment = pattern_assignment(rule, args)
        if assignment is not None:
            pctx = _as_context(g).extend_all((x, assignment[x]) for x in rule.variables())
            return infer(pctx.restrict(rule.rhs.free), rule.rhs, depth, sig, max_steps)
    return frozenset([NABLA])
