"""
Type theory scripts::

    # comment
    constant exit : N0 -> A [A : U]
    assume n : Nat
    check S n : Nat
    reject n : N0

Constants are registered before any other directive runs; ``assume`` extends
the context seen by the directives after it.
"""
import logging
from functools import lru_cache
from dataclasses import dataclass

import lark as L

from uplbench.reduction import DEFAULT_FUEL
from uplbench.stdlib import declarations_text, standard_signature
from uplbench.syntax import ParseException, canonical_name, parse_tree, print_term
from uplbench.syntax.parser_module import TermBuilder, resolve

from .api_exception_module import DuplicateNameException, ScriptException, UnknownConstantException
from .api_exception_module import UnsupportedJudgementException
from .checker_module import UNKNOWN, ConstDecl, TTContext, TypeTheory

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
UNKNOWN_OUTCOME = 'unknown'
UNSUPPORTED = 'unsupported'
ERROR = 'error'


@dataclass(frozen=True)
class Assume(object):
    line: int
    name: str
    type: object


@dataclass(frozen=True)
class Check(object):
    line: int
    term: object
    type: object
    expected: bool = True

    def __str__(self):
        return '%s %s : %s' % ('check' if self.expected else 'reject', print_term(self.term), print_term(self.type))


@dataclass(frozen=True)
class ScriptEntry(object):
    line: int
    directive: str
    outcome: str
    detail: str = ''

    def to_dict(self):
        return {'line': self.line, 'directive': self.directive, 'outcome': self.outcome, 'detail': self.detail}


class ScriptReport(object):

    def __init__(self, entries):
        self.entries = tuple(entries)

    @property
    def outcome(self):
        outcomes = set(e.outcome for e in self.entries)
        if FAIL in outcomes or ERROR in outcomes:
            return FAIL
        if outcomes - {PASS}:
            return UNKNOWN_OUTCOME
        return PASS

    def count(self, outcome):
        return sum(1 for e in self.entries if e.outcome == outcome)

    def to_dict(self):
        return {'outcome': self.outcome, 'entries': [e.to_dict() for e in self.entries]}


def _term(tree, sig, lineno, bound=frozenset()):
    try:
        return resolve(tree, sig, bound, allow_annotations=True)
    except ParseException as e:
        raise ParseException(e.reason, line=lineno, column=e.column)


def _schematics(tree, sig, lineno):
    items = []
    for item in tree.children:
        name = canonical_name(item.children[0])
        kind = item.children[1] if len(item.children) > 1 else None
        items.append((name, kind))
    out = []
    pending = []
    for name, kind in items:
        pending.append(name)
        if kind is not None:
            resolved = _term(kind, sig, lineno, frozenset(n for n, _ in out))
            out.extend((n, resolved) for n in pending)
            pending = []
    if pending:
        raise ScriptException('schematic names %s have no type' % ', '.join(pending), line=lineno)
    return tuple(out)


def _constant(children, sig, lineno):
    cname = canonical_name(children[0].children[0])
    if not sig.declares(cname):
        raise UnknownConstantException(cname, details={'line': lineno})
    schematics = _schematics(children[2], sig, lineno) if len(children) > 2 else ()
    names = frozenset(x for x, _ in schematics)
    declared_type = _term(children[1], sig, lineno, names)
    stray = declared_type.free - names
    if stray:
        raise ScriptException('free names %s in the type of %s are not schematic' % (
            ', '.join(sorted(stray)), cname), line=lineno)
    return ConstDecl(cname, declared_type, schematics)


def parse_script(text, sig):
    """
    :rtype: tuple
    :returns: the constant declarations and the other directives, in order
    """
    decls = []
    directives = []
    builder = TermBuilder()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        try:
            tree = builder.transform(parse_tree(line, 'directive'))
        except ParseException as e:
            raise ParseException(e.reason, line=lineno, column=e.column)
        except L.exceptions.VisitError as e:
            raise ScriptException(str(e.orig_exc), line=lineno)
        if tree.data == 'constant':
            decls.append(_constant(tree.children, sig, lineno))
        elif tree.data == 'assume':
            name, kind = tree.children
            directives.append(Assume(lineno, canonical_name(name), _term(kind, sig, lineno)))
        else:
            term, kind = tree.children
            directives.append(Check(lineno, _term(term, sig, lineno), _term(kind, sig, lineno),
                                    tree.data == 'check'))
    return decls, directives


def load_declarations(text, sig, base=None, fuel=DEFAULT_FUEL):
    """
    Registers the constants of a script on top of base.

    :param str text: script contents
    :param Signature sig: signature the names resolve against
    :param TypeTheory base: declarations already in scope
    :rtype: tuple
    :returns: the TypeTheory and the remaining directives
    """
    theory = base.copy() if base is not None else TypeTheory(sig)
    theory.fuel = fuel
    decls, directives = parse_script(text, sig)
    for decl in decls:
        theory.declare(decl)
    logger.debug('load_declarations: %d constants, %d directives', len(decls), len(directives))
    return theory, directives


def _run_check(theory, ctx, d):
    try:
        answer = theory.check_term(ctx, d.term, d.type)
    except UnsupportedJudgementException as e:
        return UNSUPPORTED, e.message
    except UnknownConstantException as e:
        return ERROR, e.message
    if answer is UNKNOWN:
        return UNKNOWN_OUTCOME, 'undecided within the conversion fuel'
    if answer == d.expected:
        return PASS, ''
    return FAIL, 'derivable' if answer else 'not derivable'


def run_script(text, sig, base=None, fuel=DEFAULT_FUEL):
    """
    Runs the directives of a script in order.

    :param str text: script contents
    :param Signature sig: signature the names resolve against
    :param TypeTheory base: declarations already in scope
    :rtype: ScriptReport

    :Example:

    >>> report = run_script(dns_script_text(), standard_signature(), standard_theory())
    >>> report.outcome
    'pass'
    """
    theory, directives = load_declarations(text, sig, base, fuel)
    ctx = TTContext()
    entries = []
    for d in directives:
        if isinstance(d, Assume):
            text_form = 'assume %s : %s' % (d.name, print_term(d.type))
            if d.name in ctx.names():
                entries.append(ScriptEntry(d.line, text_form, ERROR, DuplicateNameException(d.name).message))
                continue
            try:
                ok = theory.is_type(ctx, d.type)
            except (UnsupportedJudgementException, UnknownConstantException) as e:
                entries.append(ScriptEntry(d.line, text_form, ERROR, e.message))
                continue
            if not ok:
                entries.append(ScriptEntry(d.line, text_form, FAIL, '%s is not a type' % print_term(d.type)))
                continue
            ctx = ctx.extend(d.name, d.type)
            entries.append(ScriptEntry(d.line, text_form, PASS))
            continue
        outcome, detail = _run_check(theory, ctx, d)
        logger.info('line %d: %s: %s', d.line, d, outcome)
        entries.append(ScriptEntry(d.line, str(d), outcome, detail))
    return ScriptReport(entries)


@lru_cache(maxsize=None)
def standard_theory(fuel=DEFAULT_FUEL):
    """
    The declared types of the standard library.

    :rtype: TypeTheory
    """
    theory, directives = load_declarations(declarations_text(), standard_signature(), fuel=fuel)
    if directives:
        raise ScriptException('the standard declarations hold %d non-constant directives' % len(directives))
    return theory
