"""
Beta and iota reduction.

Redexes are contracted syntactically: an iota redex is a defined constant
applied to exactly as many arguments as its arity whose arguments match the
patterns of one of its rules. Surplus arguments stay applied around the redex.
"""
import logging
from dataclasses import dataclass

from uplbench.syntax import Lam, App, Const, Inst, PVar, spine, substitute, substitute_all

logger = logging.getLogger(__name__)

DEFAULT_FUEL = 100000

LEFTMOST_OUTERMOST = 'leftmost-outermost'
RIGHTMOST_INNERMOST = 'rightmost-innermost'
STRATEGIES = (LEFTMOST_OUTERMOST, RIGHTMOST_INNERMOST)


@dataclass(frozen=True)
class NormalForm(object):
    term: object
    steps: int = 0

    def to_dict(self):
        return {'result': 'normal-form', 'term': str(self.term), 'steps': self.steps}


@dataclass(frozen=True)
class FuelExhausted(object):
    term: object
    steps: int = 0

    def to_dict(self):
        return {'result': 'fuel-exhausted', 'term': str(self.term), 'steps': self.steps}


@dataclass(frozen=True)
class SN(object):

    """
    The reduction graph is finite and acyclic
    """

    longest: int
    normal_forms: frozenset

    def to_dict(self):
        return {'verdict': 'SN', 'longest': self.longest,
                'normal_forms': sorted(str(t) for t in self.normal_forms)}


@dataclass(frozen=True)
class NotSN(object):

    """
    A reduction sequence from the root whose last term equals an earlier one
    """

    witness: tuple

    @property
    def cycle_length(self):
        last = self.witness[-1]
        return len(self.witness) - 1 - self.witness.index(last)

    def to_dict(self):
        return {'verdict': 'NotSN', 'cycle': [str(t) for t in self.witness],
                'cycle_length': self.cycle_length}


@dataclass(frozen=True)
class Unknown(object):
    fuel_spent: int

    def to_dict(self):
        return {'verdict': 'Unknown', 'fuel_spent': self.fuel_spent}


def match_pattern(p, m):
    """
    Syntactic matching of a constructor pattern against a term.

    :param p: PVar or PCon
    :param Term m: the term
    :rtype: dict
    :returns: assignment of p's variables, or None when m is not an instance of p

    :Example:

    >>> match_pattern(PCon('S', (PVar('x'),)), App(Const('S'), Const('0')))
    {'x': Const('0')}
    """
    if isinstance(p, PVar):
        return {p.name: m}
    head, args = spine(m)
    if not isinstance(head, (Const, Inst)) or head.name != p.name or len(args) != len(p.args):
        return None
    out = {}
    for q, a in zip(p.args, args):
        sub = match_pattern(q, a)
        if sub is None:
            return None
        out.update(sub)
    return out


def _match_rule(rule, args):
    out = {}
    for p, a in zip(rule.lhs, args):
        sub = match_pattern(p, a)
        if sub is None:
            return None
        out.update(sub)
    return out


def matching_rules(name, args, sig):
    """
    Rules of the defined constant ``name`` whose patterns match args, each with
    its assignment.
    """
    out = []
    for rule in sig.rules_for(name):
        if len(rule.lhs) != len(args):
            continue
        sub = _match_rule(rule, args)
        if sub is not None:
            out.append((rule, sub))
    return out


def _root_contractions(m, sig):
    if isinstance(m, App) and isinstance(m.function, Lam):
        yield substitute(m.function.body, m.function.binder, m.argument)
    head, args = spine(m)
    if isinstance(head, (Const, Inst)) and sig.is_defined(head.name) and sig.arity(head.name) == len(args):
        for rule, sub in matching_rules(head.name, args, sig):
            yield substitute_all(rule.rhs, sub)


def head_iota_step(m, sig):
    """
    Contracts m when m itself is an iota redex.

    :rtype: Term
    :returns: the contractum, or None when the root of m is not an iota redex
    """
    head, args = spine(m)
    if isinstance(head, (Const, Inst)) and sig.is_defined(head.name) and sig.arity(head.name) == len(args):
        for rule, sub in matching_rules(head.name, args, sig):
            return substitute_all(rule.rhs, sub)
    return None


def _all_reducts(m, sig):
    for r in _root_contractions(m, sig):
        yield r
    if isinstance(m, App):
        for r in _all_reducts(m.function, sig):
            yield App(r, m.argument)
        for r in _all_reducts(m.argument, sig):
            yield App(m.function, r)
    elif isinstance(m, Lam):
        for r in _all_reducts(m.body, sig):
            yield Lam(m.binder, r)


def reducts(m, sig):
    """
    Every one-step beta or iota reduct of m, at any position.

    :param Term m: the term
    :param Signature sig: signature supplying the iota rules
    :rtype: tuple
    :returns: the reducts, without alpha-equal duplicates, root redexes first

    :Example:

    >>> reducts(parse_term('(\\\\x. x) 0', sig), sig)
    (Const('0'),)
    """
    seen = set()
    out = []
    for r in _all_reducts(m, sig):
        if r.key not in seen:
            seen.add(r.key)
            out.append(r)
    return tuple(out)


def _step_outermost(m, sig):
    for r in _root_contractions(m, sig):
        return r
    if isinstance(m, App):
        r = _step_outermost(m.function, sig)
        if r is not None:
            return App(r, m.argument)
        r = _step_outermost(m.argument, sig)
        if r is not None:
            return App(m.function, r)
    elif isinstance(m, Lam):
        r = _step_outermost(m.body, sig)
        if r is not None:
            return Lam(m.binder, r)
    return None


def _step_innermost(m, sig):
    if isinstance(m, App):
        r = _step_innermost(m.argument, sig)
        if r is not None:
            return App(m.function, r)
        r = _step_innermost(m.function, sig)
        if r is not None:
            return App(r, m.argument)
    elif isinstance(m, Lam):
        r = _step_innermost(m.body, sig)
        if r is not None:
            return Lam(m.binder, r)
    for r in _root_contractions(m, sig):
        return r
    return None


_STEPPERS = {LEFTMOST_OUTERMOST: _step_outermost, RIGHTMOST_INNERMOST: _step_innermost}


def step(m, sig, strategy=LEFTMOST_OUTERMOST):
    """
    One reduction step under the given strategy.

    :rtype: Term
    :returns: the reduct, or None when m is normal
    """
    stepper = _STEPPERS.get(strategy)
    if stepper is None:
        raise ValueError('Invalid strategy "%s". Valid values are %s' % (
            strategy, ', '.join('"%s"' % s for s in STRATEGIES)))
    return stepper(m, sig)


def is_normal(m, sig):
    return _step_outermost(m, sig) is None


def normalize(m, sig, fuel=DEFAULT_FUEL, strategy=LEFTMOST_OUTERMOST):
    """
    Reduces m until it is normal or fuel steps have been taken.

    :param Term m: the term
    :param Signature sig: signature supplying the iota rules
    :param int fuel: maximal number of steps
    :param str strategy: ``leftmost-outermost`` or ``rightmost-innermost``
    :rtype: NormalForm or FuelExhausted
    """
    if fuel < 1:
        raise ValueError('fuel must be positive')
    steps = 0
    while steps < fuel:
        r = step(m, sig, strategy)
        if r is None:
            return NormalForm(m, steps)
        m = r
        steps += 1
    if is_normal(m, sig):
        return NormalForm(m, steps)
    logger.debug('normalize: fuel %d exhausted at %s', fuel, m)
    return FuelExhausted(m, steps)


_GRAY, _BLACK = 1, 2


def check_sn(m, sig, fuel=DEFAULT_FUEL):
    """
    Explores the whole reduction graph of m.

    :param Term m: the term
    :param Signature sig: signature supplying the iota rules
    :param int fuel: maximal number of distinct terms visited
    :rtype: SN, NotSN or Unknown
    :returns: SN with the longest reduction length and every normal form,
        NotSN with a reduction sequence ending in a repeated term, or Unknown
        when the graph has more than fuel nodes
    """
    if fuel < 1:
        raise ValueError('fuel must be positive')
    terms = {}
    succ = {}
    state = {}
    longest = {}
    stack = []

    def visit(t):
        terms[t.key] = t
        state[t.key] = _GRAY
        succ[t.key] = reducts(t, sig)
        stack.append((t.key, iter(succ[t.key])))

    visit(m)
    while stack:
        k, it = stack[-1]
        child = next(it, None)
        if child is None:
            stack.pop()
            state[k] = _BLACK
            longest[k] = 1 + max(longest[c.key] for c in succ[k]) if succ[k] else 0
            continue
        s = state.get(child.key)
        if s == _GRAY:
            witness = tuple(terms[key] for key, _ in stack) + (child,)
            return NotSN(witness)
        if s == _BLACK:
            continue
        if len(terms) >= fuel:
            logger.debug('check_sn: fuel %d exhausted', fuel)
            return Unknown(len(terms))
        visit(child)
    return SN(longest[m.key], frozenset(t for key, t in terms.items() if not succ[key]))


def is_simple(m, sig):
    """
    Simple terms: neither an abstraction, nor constructor headed, nor a
    partially applied defined constant.

    :rtype: bool
    """
    if isinstance(m, Lam):
        return False
    head, args = spine(m)
    if isinstance(head, (Const, Inst)):
        if sig.is_constructor(head.name):
            return False
        if sig.is_defined(head.name):
            return len(args) >= sig.arity(head.name)
    return True
