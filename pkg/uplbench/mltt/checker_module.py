"""
Bidirectional checking of dependent types over untyped terms.

Types are terms: ``Pi x:A. B`` is ``Fun A (\\x. B)`` and conversion is
equality of beta-iota normal forms. Constants carry declared types whose
bracketed schematic names are solved at each use by pattern unification
against argument types and the expected type, or given explicitly with
``name{A := T}``.

Answers are True, False or UNKNOWN; UNKNOWN comes from exhausted conversion
fuel or schematic names that cannot be solved.
"""
import logging
from dataclasses import dataclass

from uplbench.reduction import DEFAULT_FUEL, NormalForm, normalize
from uplbench.syntax import FUN, Var, Lam, App, Const, Inst, alpha_eq, erase, fresh_name, print_term, spine
from uplbench.syntax import substitute, substitute_all

from .api_exception_module import DuplicateNameException, UnknownConstantException, UnsupportedJudgementException

logger = logging.getLogger(__name__)

UNIVERSE = 'U'
META_PREFIX = '?'


class _Unknown(object):

    def __bool__(self):
        return False

    __nonzero__ = __bool__

    def __repr__(self):
        return 'UNKNOWN'


UNKNOWN = _Unknown()


class _Undecided(Exception):
    pass


@dataclass(frozen=True)
class ConstDecl(object):

    """
    ``name : type [x1 : T1, ..., xn : Tn]``
    """

    name: str
    type: object
    schematics: tuple = ()

    def schematic_names(self):
        return [x for x, _ in self.schematics]

    def __str__(self):
        out = '%s : %s' % (self.name, print_term(self.type))
        if self.schematics:
            out += ' [%s]' % ', '.join('%s : %s' % (x, print_term(t)) for x, t in self.schematics)
        return out


class TTContext(object):

    """
    ``x1:A1, ..., xn:An``
    """

    def __init__(self, bindings=()):
        self.bindings = tuple(bindings)

    def names(self):
        return [x for x, _ in self.bindings]

    def lookup(self, name):
        for x, a in reversed(self.bindings):
            if x == name:
                return a
        return None

    def extend(self, name, a):
        return TTContext(self.bindings + ((name, a),))

    def __iter__(self):
        return iter(self.bindings)

    def __len__(self):
        return len(self.bindings)

    def __str__(self):
        return ', '.join('%s : %s' % (x, print_term(a)) for x, a in self.bindings)


def _as_context(g):
    if g is None:
        return TTContext()
    if isinstance(g, TTContext):
        return g
    return TTContext(g)


class TypeTheory(object):

    """
    Declared constants over a signature, with the conversion fuel.
    """

    def __init__(self, sig, declarations=(), fuel=DEFAULT_FUEL):
        self.sig = sig
        self.fuel = fuel
        self._decls = {}
        for d in declarations:
            self.declare(d)

    def declare(self, decl):
        self._decls.setdefault(decl.name, []).append(decl)

    def declarations(self, name=None):
        if name is None:
            return [d for ds in self._decls.values() for d in ds]
        return list(self._decls.get(name, ()))

    def copy(self):
        return TypeTheory(self.sig, self.declarations(), self.fuel)

    def _decls_of(self, name):
        decls = self._decls.get(name)
        if not decls:
            raise UnknownConstantException(name)
        return decls

    # conversion

    def _nf(self, t):
        result = normalize(erase(t), self.sig, self.fuel)
        if not isinstance(result, NormalForm):
            logger.debug('conversion fuel %d exhausted on %s', self.fuel, print_term(t))
            raise _Undecided('conversion fuel exhausted')
        return result.term

    def _conv(self, a, b):
        return alpha_eq(self._nf(a), self._nf(b))

    def _pi(self, t):
        t = self._nf(t)
        head, args = spine(t)
        if not (isinstance(head, Const) and head.name == FUN and len(args) == 2):
            return None
        dom, fam = args
        if isinstance(fam, Lam):
            return dom, fam.binder, fam.body
        x = fresh_name('x', fam.free)
        return dom, x, App(fam, Var(x))

    # schematic names

    def _solve(self, pattern, target, metas, sol, bound=()):
        """
        Solves metas occurring in pattern as Miller patterns against the
        normal form target; other positions are left to the final conversion.
        """
        head, args = spine(pattern)
        if isinstance(head, Var) and head.name in metas:
            if head.name in sol:
                return
            names = [a.name for a in args if isinstance(a, Var)]
            if len(names) != len(args) or len(set(names)) != len(names) or not set(names) <= set(bound):
                return
            if target.free & (set(bound) - set(names)):
                return
            body = target
            for n in reversed(names):
                body = Lam(n, body)
            sol[head.name] = body
            return
        if isinstance(pattern, Lam) and isinstance(target, Lam):
            z = fresh_name('%' + pattern.binder, pattern.free | target.free | set(bound))
            self._solve(substitute(pattern.body, pattern.binder, Var(z)), substitute(target.body, target.binder,
                                                                                    Var(z)),
                        metas, sol, tuple(bound) + (z,))
            return
        if isinstance(pattern, App):
            t_head, t_args = spine(target)
            if len(args) == len(t_args):
                self._solve(head, t_head, metas, sol, bound)
                for p, t in zip(args, t_args):
                    self._solve(p, t, metas, sol, bound)

    def _solve_result(self, t, args, expected, metas, sol):
        for arg in args:
            pi = self._pi(t)
            if pi is None:
                return
            dom, x, cod = pi
            t = substitute(cod, x, arg)
        self._solve(self._nf(t), self._nf(expected), metas, sol)

    def _open(self, t, metas, sol):
        return any(m in t.free for m in metas if m not in sol)

    def _spine(self, ctx, head, decl, args, expected):
        """
        Types ``head args`` with one declaration of the head. Returns the
        type (or None) without an expected type, a bool with one.
        """
        fail = None if expected is None else False
        given = dict(head.assignments) if isinstance(head, Inst) else {}
        if set(given) - set(decl.schematic_names()):
            return fail
        metas = {}
        renaming = {}
        for x in decl.schematic_names():
            if x in given:
                renaming[x] = given[x]
            else:
                metas[META_PREFIX + x] = x
                renaming[x] = Var(META_PREFIX + x)
        sol = {}
        t = substitute_all(decl.type, renaming)
        if expected is not None and metas:
            self._solve_result(t, args, expected, metas, sol)
        postponed = []
        for arg in args:
            pi = self._pi(substitute_all(t, sol))
            if pi is None:
                return fail
            dom, x, cod = pi
            if self._open(dom, metas, sol):
                arg_type = self._infer(ctx, arg)
                if arg_type is not None:
                    self._solve(self._nf(substitute_all(dom, sol)), self._nf(arg_type), metas, sol)
                postponed.append((arg, dom))
            elif not self._check(ctx, arg, dom):
                return fail
            t = substitute(cod, x, arg)
        if expected is not None and self._open(t, metas, sol):
            self._solve(self._nf(substitute_all(t, sol)), self._nf(expected), metas, sol)
        unsolved = [metas[m] for m in metas if m not in sol]
        if unsolved:
            if expected is None:
                return None
            raise _Undecided('cannot solve %s for %s' % (', '.join(unsolved), decl.name))
        values = dict((x, sol[META_PREFIX + x] if META_PREFIX + x in sol else renaming[x])
                      for x in decl.schematic_names())
        for x, kind in decl.schematics:
            if not self._check(ctx, values[x], substitute_all(kind, values)):
                return fail
        for arg, dom in postponed:
            if not self._check(ctx, arg, substitute_all(dom, sol)):
                return fail
        t = substitute_all(t, sol)
        if expected is None:
            return t
        return self._conv(t, expected)

    # bidirectional core

    def _infer(self, ctx, m):
        head, args = spine(m)
        if isinstance(head, (Const, Inst)):
            if head.name == UNIVERSE:
                return None
            for decl in self._decls_of(head.name):
                t = self._spine(ctx, head, decl, args, None)
                if t is not None:
                    return t
            return None
        if isinstance(head, Lam):
            return None
        t = ctx.lookup(head.name)
        if t is None:
            return None
        for arg in args:
            pi = self._pi(t)
            if pi is None:
                return None
            dom, x, cod = pi
            if not self._check(ctx, arg, dom):
                return None
            t = substitute(cod, x, arg)
        return t

    def _check(self, ctx, m, a):
        if isinstance(m, Const) and m.name == UNIVERSE:
            if self._nf(a) == Const(UNIVERSE):
                raise UnsupportedJudgementException('U is a type but not a term of U')
            return False
        if isinstance(m, Lam):
            pi = self._pi(a)
            if pi is None:
                return False
            dom, y, cod = pi
            z = fresh_name(m.binder, set(ctx.names()) | (cod.free - {y}) | m.free)
            return self._check(ctx.extend(z, dom), substitute(m.body, m.binder, Var(z)), substitute(cod, y, Var(z)))
        head, args = spine(m)
        if isinstance(head, (Const, Inst)) and head.name != UNIVERSE:
            decls = self._decls_of(head.name)
            if len(decls) > 1 or decls[0].schematics or isinstance(head, Inst):
                undecided = None
                for decl in decls:
                    try:
                        if self._spine(ctx, head, decl, args, a):
                            return True
                    except _Undecided as e:
                        undecided = e
                if undecided is not None:
                    raise undecided
                return False
        t = self._infer(ctx, m)
        if t is None:
            return False
        return self._conv(t, a)

    def _is_type(self, ctx, a):
        if a == Const(UNIVERSE):
            return True
        head, args = spine(a)
        if isinstance(head, Const) and head.name == FUN and len(args) == 2 and isinstance(args[1], Lam):
            dom, fam = args
            if not self._is_type(ctx, dom):
                return False
            x, cod = fam.binder, fam.body
            z = fresh_name(x, set(ctx.names()) | (cod.free - {x}))
            return self._is_type(ctx.extend(z, dom), substitute(cod, x, Var(z)))
        # only U itself is a type without a type
        try:
            return self._check(ctx, a, Const(UNIVERSE))
        except UnsupportedJudgementException:
            return False

    # public answers

    def convertible(self, a, b):
        """
        :rtype: bool or UNKNOWN
        """
        try:
            return self._conv(a, b)
        except _Undecided:
            return UNKNOWN

    def is_type(self, g, a):
        """
        Whether ``g ⊢ a`` holds.

        :rtype: bool
        """
        try:
            return self._is_type(_as_context(g), a)
        except _Undecided:
            return False

    def check_context(self, g):
        """
        Whether every type of g is a type in the context before it.

        :rtype: bool
        :raises DuplicateNameException: when g binds a name twice
        """
        g = _as_context(g)
        seen = set()
        prefix = TTContext()
        for x, a in g:
            if x in seen:
                raise DuplicateNameException(x)
            seen.add(x)
            if not self.is_type(prefix, a):
                return False
            prefix = prefix.extend(x, a)
        return True

    def check_term(self, g, m, a):
        """
        Whether ``g ⊢ m : a`` holds.

        :rtype: bool or UNKNOWN
        :raises UnsupportedJudgementException: for ``U : U``
        """
        try:
            return self._check(_as_context(g), m, a)
        except _Undecided as e:
            logger.debug('check_term: %s', e)
            return UNKNOWN

    def infer_term(self, g, m):
        """
        A type of m, or None when none can be inferred.

        :rtype: Term
        """
        try:
            return self._infer(_as_context(g), m)
        except _Undecided:
            return None
