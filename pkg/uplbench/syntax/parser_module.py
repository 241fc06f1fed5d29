"""
Concrete syntax.

One LALR grammar serves every textual format of the workbench; each format is
a separate start symbol. Identifiers are first read as variables and then
resolved against a signature: a free identifier declared in the signature
becomes a constant.
"""
import re

import lark as L

from .api_exception_module import ParseException
from .terms_module import Var, Lam, App, Const, Inst, FUN, fresh_name

GRAMMAR = r'''
?term: _LAMBDA NAME "." term                    -> lam
     | _PI NAME ":" arrow "." term              -> pi
     | arrow

?arrow: infix "->" term                         -> arrow
      | infix

?infix: infix OP app                            -> infix
      | app

?app: app atom                                  -> app
    | atom

?atom: NAME                                     -> name
     | NAME "{" assignment ("," assignment)* "}" -> inst
     | "(" OP ")"                               -> op
     | "(" term ")"

assignment: NAME ":=" term

?nbhd: nmeet "->" nbhd                          -> n_arrow
     | nmeet

?nmeet: nmeet "&" ncon                          -> n_meet
      | ncon

?ncon: NAME natom+                              -> n_con
     | "(" OP ")" natom*                        -> n_con_op
     | natom

?natom: "!"                                     -> n_nabla
      | NAME                                    -> n_name
      | "(" nbhd ")"

rule: term "=" term

typing: term ":" nbhd

context: binding ("," binding)*
       |

binding: NAME ":" nbhd

directive: "constant" cname ":" term schematics? -> constant
         | "assume" NAME ":" term                -> assume
         | "check" term ":" term                 -> check
         | "reject" term ":" term                -> reject

cname: NAME
     | OP
     | "(" OP ")"

schematics: "[" sitem ("," sitem)* "]"

sitem: NAME (":" term)?

_LAMBDA: "\\" | "λ"
_PI.2: /Pi(?![A-Za-z0-9_'ΦΨ])/ | "Π"
OP: "<=" | "≤" | "+" | "*" | "×"
NAME: /[A-Za-z0-9_'ΦΨ]+/
COMMENT: /#[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
'''

START_SYMBOLS = ['term', 'nbhd', 'rule', 'typing', 'context', 'directive']

# identifiers, as the NAME terminal reads them
NAME_PATTERN = re.compile(r"[A-Za-z0-9_'ΦΨ]+")

# position suffix of lark messages
_LARK_POSITION = re.compile(r',?\s*at line \d+,? col(?:umn)? \d+\.?\s*$')

NAME_ALIASES = {u'Φ': 'Phi', u'Ψ': 'Psi'}
OP_ALIASES = {u'≤': '<=', u'×': '*'}

_parser = None


def get_parser():
    """
    Returns the shared LALR parser, building it on first use.

    :rtype: lark.Lark
    """
    global _parser
    if _parser is None:
        _parser = L.Lark(GRAMMAR, parser='lalr', start=START_SYMBOLS)
    return _parser


def canonical_name(name):
    name = str(name)
    if name.startswith('(') and name.endswith(')'):
        name = name[1:-1]
    return OP_ALIASES.get(name, NAME_ALIASES.get(name, name))


def parse_tree(text, start):
    """
    Parses text from the given start symbol.

    :param str text: input text
    :param str start: one of START_SYMBOLS
    :rtype: lark.Tree
    :returns: the parse tree
    """
    try:
        return get_parser().parse(text, start=start)
    except L.exceptions.UnexpectedInput as e:
        message = str(e).strip().splitlines()[0] if str(e).strip() else 'unexpected input'
        message = _LARK_POSITION.sub('', message) or 'unexpected input'
        raise ParseException(message, line=getattr(e, 'line', None), column=getattr(e, 'column', None))


class TermBuilder(L.Transformer):

    """
    Builds raw terms: every identifier is a variable until resolution.
    """

    def lam(self, c):
        return Lam(canonical_name(c[0]), c[1])

    def pi(self, c):
        return App(App(Const(FUN), c[1]), Lam(canonical_name(c[0]), c[2]))

    def arrow(self, c):
        dom, cod = c
        return App(App(Const(FUN), dom), Lam(fresh_name('_', cod.free), cod))

    def infix(self, c):
        left, op, right = c
        return App(App(Const(canonical_name(op)), left), right)

    def app(self, c):
        return App(c[0], c[1])

    def name(self, c):
        return Var(canonical_name(c[0]))

    def op(self, c):
        return Const(canonical_name(c[0]))

    def inst(self, c):
        return Inst(canonical_name(c[0]), tuple(c[1:]))

    def assignment(self, c):
        return (canonical_name(c[0]), c[1])

    def rule(self, c):
        return tuple(c)


def resolve(m, sig, bound=frozenset(), allow_annotations=False):
    """
    Turns free identifiers declared in sig into constants and checks that
    every explicit constant is declared.

    :param Term m: raw term
    :param Signature sig: signature the identifiers are resolved against
    :param frozenset bound: names bound by enclosing binders
    :param bool allow_annotations: accept ``name{A := T}`` annotations
    :rtype: Term
    """
    if isinstance(m, Var):
        if m.name not in bound and sig.declares(m.name):
            return Const(m.name)
        return m
    if isinstance(m, Const):
        if not sig.declares(m.name):
            if m.name == FUN:
                raise ParseException('Pi and -> need a constructor Fun of arity 2 in the signature')
            raise ParseException('constant "%s" is not declared in the signature' % m.name)
        return m
    if isinstance(m, Lam):
        return Lam(m.binder, resolve(m.body, sig, bound | {m.binder}, allow_annotations))
    if isinstance(m, App):
        return App(resolve(m.function, sig, bound, allow_annotations),
                   resolve(m.argument, sig, bound, allow_annotations))
    if not allow_annotations:
        raise ParseException('instantiation annotations are only allowed in type theory scripts')
    if not sig.declares(m.name):
        raise ParseException('constant "%s" is not declared in the signature' % m.name)
    return Inst(m.name, tuple((x, resolve(t, sig, bound, allow_annotations)) for x, t in m.assignments))


def parse_term(text, sig, allow_annotations=False):
    """
    Parses a UPL term.

    :param str text: concrete syntax, e.g. ``\\x. S x``
    :param Signature sig: signature declaring the constants
    :param bool allow_annotations: accept ``name{A := T}`` annotations
    :rtype: Term
    :returns: the resolved term

    :Example:

    >>> parse_term('S 0', sig)
    App(Const('S'), Const('0'))
    """
    return resolve(TermBuilder().transform(parse_tree(text, 'term')), sig,
                   allow_annotations=allow_annotations)
