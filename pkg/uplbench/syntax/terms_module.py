"""
Abstract syntax of UPL terms.

Terms are immutable. Equality and hashing are up to alpha conversion: both go
through a de Bruijn style key computed once per node, so binder names are never
observable through ``==``.
"""
from dataclasses import dataclass
from functools import cached_property

INFIX_CONSTANTS = ('<=', '+', '*')
FUN = 'Fun'


class Term(object):

    """
    Base class of UPL terms
    """

    @cached_property
    def key(self):
        """
        Alpha-canonical key: bound variables are replaced by binder depth.
        """
        return _key(self, ())

    @cached_property
    def named_key(self):
        """
        Exact structural key, binder names included.
        """
        return _named_key(self)

    @cached_property
    def free(self):
        return frozenset(_free(self))

    def __eq__(self, other):
        if not isinstance(other, Term):
            return NotImplemented
        return self is other or self.key == other.key

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return print_term(self)

    def to_dict(self):
        return {'term': print_term(self)}


@dataclass(frozen=True, eq=False)
class Var(Term):
    name: str

    def __repr__(self):
        return 'Var(%r)' % self.name


@dataclass(frozen=True, eq=False)
class Lam(Term):
    binder: str
    body: Term

    def __repr__(self):
        return 'Lam(%r, %r)' % (self.binder, self.body)


@dataclass(frozen=True, eq=False)
class App(Term):
    function: Term
    argument: Term

    def __repr__(self):
        return 'App(%r, %r)' % (self.function, self.argument)


@dataclass(frozen=True, eq=False)
class Const(Term):
    name: str

    def __repr__(self):
        return 'Const(%r)' % self.name


@dataclass(frozen=True, eq=False)
class Inst(Term):

    """
    A constant annotated with explicit instantiations of its schematic
    parameters (``exit{A := Nat}``). Only type-theory scripts produce it;
    ``erase`` turns it back into a plain constant.
    """

    name: str
    assignments: tuple

    def __repr__(self):
        return 'Inst(%r, %r)' % (self.name, self.assignments)


def _key(m, env):
    if isinstance(m, Var):
        for i, name in enumerate(reversed(env)):
            if name == m.name:
                return ('b', i)
        return ('v', m.name)
    if isinstance(m, Const):
        return ('c', m.name)
    if isinstance(m, Lam):
        return ('l', _key(m.body, env + (m.binder,)))
    if isinstance(m, App):
        return ('a', _key(m.function, env), _key(m.argument, env))
    return ('i', m.name, tuple((x, _key(t, env)) for x, t in m.assignments))


def _named_key(m):
    if isinstance(m, Var):
        return ('v', m.name)
    if isinstance(m, Const):
        return ('c', m.name)
    if isinstance(m, Lam):
        return ('l', m.binder, m.body.named_key)
    if isinstance(m, App):
        return ('a', m.function.named_key, m.argument.named_key)
    return ('i', m.name, tuple((x, t.named_key) for x, t in m.assignments))


def _free(m):
    if isinstance(m, Var):
        return {m.name}
    if isinstance(m, Const):
        return set()
    if isinstance(m, Lam):
        return set(m.body.free) - {m.binder}
    if isinstance(m, App):
        return set(m.function.free) | set(m.argument.free)
    out = set()
    for _, t in m.assignments:
        out |= t.free
    return out


def free_vars(m):
    """
    Free variables of a term.

    :param Term m: the term
    :rtype: frozenset
    :returns: names of the variables occurring free in m

    :Example:

    >>> free_vars(Lam('x', App(Var('x'), Var('y'))))
    frozenset({'y'})
    """
    return m.free


def all_names(m):
    """
    Every variable name occurring in m, bound or free.
    """
    if isinstance(m, Var):
        return {m.name}
    if isinstance(m, Const):
        return set()
    if isinstance(m, Lam):
        return {m.binder} | all_names(m.body)
    if isinstance(m, App):
        return all_names(m.function) | all_names(m.argument)
    out = set()
    for _, t in m.assignments:
        out |= all_names(t)
    return out


def alpha_eq(a, b):
    """
    Alpha equivalence of two terms.

    :rtype: bool
    :returns: True iff a and b only differ in the names of bound variables
    """
    return a.key == b.key


def fresh_name(name, avoid):
    """
    Primes ``name`` until it is not in ``avoid``.
    """
    while name in avoid:
        name += "'"
    return name


def substitute(n, x, m):
    """
    Capture-avoiding substitution n(x=m).

    :param Term n: term to substitute in
    :param str x: variable to replace
    :param Term m: replacement
    :rtype: Term
    :returns: n with every free occurrence of x replaced by m

    :Example:

    >>> substitute(Lam('y', Var('x')), 'x', Var('y'))
    Lam("y'", Var('y'))
    """
    return substitute_all(n, {x: m})


def substitute_all(n, mapping):
    """
    Simultaneous capture-avoiding substitution.

    :param Term n: term to substitute in
    :param dict mapping: variable name to replacement term
    :rtype: Term
    """
    mapping = dict((k, v) for k, v in mapping.items() if k in n.free)
    if not mapping:
        return n
    if isinstance(n, Var):
        return mapping.get(n.name, n)
    if isinstance(n, App):
        return App(substitute_all(n.function, mapping), substitute_all(n.argument, mapping))
    if isinstance(n, Inst):
        return Inst(n.name, tuple((k, substitute_all(t, mapping)) for k, t in n.assignments))
    if isinstance(n, Lam):
        inner = dict((k, v) for k, v in mapping.items() if k != n.binder)
        captured = set()
        for v in inner.values():
            captured |= v.free
        binder = n.binder
        if binder in captured:
            binder = fresh_name(binder, captured | n.body.free | set(inner))
            inner[n.binder] = Var(binder)
        return Lam(binder, substitute_all(n.body, inner))
    return n


def erase(m):
    """
    Replaces explicit instantiation annotations by the bare constants.
    """
    if isinstance(m, Inst):
        return Const(m.name)
    if isinstance(m, Lam):
        body = erase(m.body)
        return m if body is m.body else Lam(m.binder, body)
    if isinstance(m, App):
        f, a = erase(m.function), erase(m.argument)
        return m if f is m.function and a is m.argument else App(f, a)
    return m


def spine(m):
    """
    Splits an application spine ``h a1 ... an`` into ``(h, [a1, ..., an])``.
    """
    args = []
    while isinstance(m, App):
        args.append(m.argument)
        m = m.function
    args.reverse()
    return m, args


def apply(head, *args):
    """
    Builds the left nested application ``head a1 ... an``.
    """
    for a in args:
        head = App(head, a)
    return head


def constants(m):
    """
    Names of the constants occurring in m.
    """
    if isinstance(m, (Const, Inst)):
        out = {m.name}
        if isinstance(m, Inst):
            for _, t in m.assignments:
                out |= constants(t)
        return out
    if isinstance(m, Lam):
        return constants(m.body)
    if isinstance(m, App):
        return constants(m.function) | constants(m.argument)
    return set()


def term_size(m):
    if isinstance(m, Lam):
        return 1 + term_size(m.body)
    if isinstance(m, App):
        return 1 + term_size(m.function) + term_size(m.argument)
    return 1


# printer precedence levels
_BINDER, _ARROW, _INFIX, _APP, _ATOM = range(5)


def _is_pi(m):
    head, args = spine(m)
    return isinstance(head, Const) and head.name == FUN and len(args) == 2 and isinstance(args[1], Lam)


def _is_infix(m):
    head, args = spine(m)
    return isinstance(head, Const) and head.name in INFIX_CONSTANTS and len(args) == 2


def _level(m):
    if isinstance(m, Lam):
        return _BINDER
    if _is_pi(m):
        _, (_, body) = spine(m)
        return _ARROW if body.binder not in body.body.free else _BINDER
    if _is_infix(m):
        return _INFIX
    if isinstance(m, App):
        return _APP
    return _ATOM


def _at(m, level):
    text = _print(m)
    if _level(m) < level:
        return '(%s)' % text
    return text


def _print(m):
    if isinstance(m, Var):
        return m.name
    if isinstance(m, Const):
        return '(%s)' % m.name if m.name in INFIX_CONSTANTS else m.name
    if isinstance(m, Inst):
        inner = ', '.join('%s := %s' % (x, _print(t)) for x, t in m.assignments)
        return '%s{%s}' % (m.name if m.name not in INFIX_CONSTANTS else '(%s)' % m.name, inner)
    if isinstance(m, Lam):
        return '\\%s. %s' % (m.binder, _print(m.body))
    if _is_pi(m):
        _, (dom, body) = spine(m)
        if body.binder not in body.body.free:
            return '%s -> %s' % (_at(dom, _INFIX), _at(body.body, _ARROW))
        return 'Pi %s:%s. %s' % (body.binder, _at(dom, _ARROW), _print(body.body))
    if _is_infix(m):
        head, (left, right) = spine(m)
        return '%s %s %s' % (_at(left, _INFIX), head.name, _at(right, _APP))
    return '%s %s' % (_at(m.function, _APP), _at(m.argument, _ATOM))


def print_term(m):
    """
    Concrete syntax of a term, readable back by ``parse_term``.

    :param Term m: the term
    :rtype: str

    :Example:

    >>> print_term(App(Const('S'), Const('0')))
    'S 0'
    """
    return _print(m)
