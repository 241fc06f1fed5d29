"""
Typing derivations of the intersection type system and their local checking.

A premise may use any sub-context of its conclusion's context, extended by
the bound variable for abstractions and by the pattern variables for rule
instances.
"""
import enum
from dataclasses import dataclass, replace

from lxml import etree as ET
from lxml.builder import E

from uplbench.syntax import Var, Lam, App, Const, canonical_name, erase, parse_tree, print_term
from uplbench.syntax.parser_module import TermBuilder, resolve
from uplbench.neighbourhoods import (NABLA, NfArrows, NfCon, arrow, build_nbhd, continuity_witness, leq, match_nbhd,
                                     meet, print_nbhd, split_arrows)

from .api_exception_module import DerivationException


class Rule(enum.Enum):
    VAR = 'Var'
    CONSTRUCTOR_INTRO = 'ConstructorIntro'
    LAM_INTRO = 'LamIntro'
    APP_ELIM = 'AppElim'
    MEET_INTRO = 'MeetIntro'
    SUBSUME = 'Subsume'
    DEFINED_MATCH = 'DefinedMatch'
    DEFINED_NO_MATCH = 'DefinedNoMatch'


class Context(object):

    """
    Ordered typing context ``x1:U1, ..., xn:Un`` with at most one binding per name
    """

    def __init__(self, bindings=()):
        items = []
        for name, u in bindings:
            items = [(n, t) for n, t in items if n != name]
            items.append((name, u))
        self._items = tuple(items)

    @classmethod
    def from_dict(cls, mapping):
        return cls(sorted(mapping.items()))

    @property
    def items(self):
        return self._items

    def names(self):
        return [n for n, _ in self._items]

    def lookup(self, name):
        for n, u in self._items:
            if n == name:
                return u
        return None

    def extend(self, name, u):
        """
        Appends ``name:u``, shadowing an earlier binding of name.
        """
        return Context(self._items + ((name, u),))

    def extend_all(self, bindings):
        return Context(self._items + tuple(bindings))

    def with_binding(self, name, u):
        """
        Changes the type of an existing binding in place.
        """
        return Context((n, u if n == name else t) for n, t in self._items)

    def restrict(self, names):
        return Context((n, u) for n, u in self._items if n in names)

    def without(self, name):
        return Context((n, u) for n, u in self._items if n != name)

    def union(self, other):
        return Context(self._items + tuple((n, u) for n, u in other.items if n not in self))

    def is_subcontext_of(self, other):
        return all(other.lookup(n) == u for n, u in self._items)

    def __contains__(self, name):
        return any(n == name for n, _ in self._items)

    def __iter__(self):
        return iter(self._items)

    def __len__(self):
        return len(self._items)

    def __eq__(self, other):
        return isinstance(other, Context) and dict(self._items) == dict(other.items)

    def __hash__(self):
        return hash(frozenset(self._items))

    def __str__(self):
        return ', '.join('%s:%s' % (n, print_nbhd(u)) for n, u in self._items)

    def __repr__(self):
        return 'Context(%r)' % (list(self._items),)

    def to_dict(self):
        return [{'name': n, 'type': print_nbhd(u)} for n, u in self._items]


@dataclass(frozen=True, eq=False)
class Derivation(object):

    """
    A derivation tree concluding ``context ⊢ subject : type``.

    ``data`` holds what the rule needs besides its premises: the rewrite rule
    and the pattern assignment for DefinedMatch.
    """

    rule: Rule
    context: Context
    subject: object
    type: object
    premises: tuple = ()
    data: object = None

    def judgement(self):
        ctx = str(self.context)
        return '%s|- %s : %s' % (ctx + ' ' if ctx else '', print_term(self.subject), print_nbhd(self.type))

    def _data_dict(self):
        if self.rule == Rule.DEFINED_MATCH:
            rule, assignment = self.data
            return {'rule': str(rule), 'assignment': [{'name': n, 'type': print_nbhd(u)}
                                                      for n, u in sorted(assignment.items())]}
        if self.rule == Rule.SUBSUME:
            return {'from': print_nbhd(self.premises[0].type)}
        return {}

    def to_dict(self):
        return {
            'rule': self.rule.value,
            'context': self.context.to_dict(),
            'subject': print_term(self.subject),
            'type': print_nbhd(self.type),
            'data': self._data_dict(),
            'premises': [p.to_dict() for p in self.premises]
        }

    def _element(self):
        attributes = {'rule': self.rule.value, 'subject': print_term(self.subject), 'type': print_nbhd(self.type)}
        if self.rule == Rule.DEFINED_MATCH:
            attributes['rewrite'] = str(self.data[0])
        bindings = [E.binding({'name': n, 'type': print_nbhd(u)}) for n, u in self.context]
        return E.derivation(attributes, E.context(*bindings), *[p._element() for p in self.premises])

    def to_xml(self):
        """
        Convert the derivation to XML presentation

        :rtype: bytes
        :returns: XML text
        """
        return ET.tostring(self._element(), pretty_print=True)

    def pretty(self, indent=0):
        lines = ['%s%s  [%s]' % ('  ' * indent, self.judgement(), self.rule.value)]
        for p in self.premises:
            lines.append(p.pretty(indent + 1))
        return '\n'.join(lines)

    def __str__(self):
        return self.pretty()


def derivation_size(d):
    return 1 + sum(derivation_size(p) for p in d.premises)


def derivation_height(d):
    return 1 + max([derivation_height(p) for p in d.premises] or [0])


def var_node(ctx, name):
    return Derivation(Rule.VAR, ctx.restrict({name}), Var(name), ctx.lookup(name))


def subsume(d, v):
    """
    Weakens the conclusion type of d to v; v must contain d's type.
    """
    if d.type == v:
        return d
    return Derivation(Rule.SUBSUME, d.context, d.subject, v, (d,))


def meet_intro(d1, d2):
    if d1.type == d2.type:
        return d1
    return Derivation(Rule.MEET_INTRO, d1.context.union(d2.context), d1.subject, meet(d1.type, d2.type), (d1, d2))


def meet_intro_all(ds):
    ds = list(ds)
    out = ds[0]
    for d in ds[1:]:
        out = meet_intro(out, d)
    return out


def app_elim(d_fun, d_arg):
    """
    AppElim from ``N : U -> V`` (a single arrow) and ``M : U``.
    """
    (_, v), = d_fun.type.arrows
    return Derivation(Rule.APP_ELIM, d_fun.context.union(d_arg.context), App(d_fun.subject, d_arg.subject), v,
                      (d_fun, d_arg))


def lam_intro(ctx, binder, u, d_body):
    """
    LamIntro concluding ``ctx ⊢ λbinder.body : u -> V``.
    """
    subject = Lam(binder, d_body.subject)
    return Derivation(Rule.LAM_INTRO, ctx.restrict(subject.free), subject, arrow(u, d_body.type), (d_body,))


def weaken(d, ctx):
    """
    Replaces the root context of d by a larger context.
    """
    return replace(d, context=ctx)


def _premise_fits(p, ctx):
    return p.context.is_subcontext_of(ctx)


def _same(a, b):
    return a.named_key == b.named_key


def pattern_assignment(rule, us):
    out = {}
    for p, u in zip(rule.lhs, us):
        sub = match_nbhd(p, u)
        if sub is None:
            return None
        out.update(sub)
    return out


def _local_ok(d, sig):
    r, ctx, m, u, ps = d.rule, d.context, d.subject, d.type, d.premises
    if r == Rule.VAR:
        return isinstance(m, Var) and not ps and ctx.lookup(m.name) == u
    if r == Rule.CONSTRUCTOR_INTRO:
        if not isinstance(m, Const) or not sig.is_constructor(m.name) or ps:
            return False
        split = split_arrows(u, sig.arity(m.name))
        return split is not None and split[1] == NfCon(m.name, tuple(split[0]))
    if r == Rule.LAM_INTRO:
        if not isinstance(m, Lam) or len(ps) != 1 or not isinstance(u, NfArrows) or len(u.arrows) != 1:
            return False
        (dom, cod), = u.arrows
        p = ps[0]
        return _same(p.subject, m.body) and p.type == cod and _premise_fits(p, ctx.extend(m.binder, dom))
    if r == Rule.APP_ELIM:
        if not isinstance(m, App) or len(ps) != 2:
            return False
        pf, pa = ps
        return (_same(pf.subject, m.function) and _same(pa.subject, m.argument) and
                pf.type == arrow(pa.type, u) and _premise_fits(pf, ctx) and _premise_fits(pa, ctx))
    if r == Rule.MEET_INTRO:
        return (len(ps) == 2 and all(_same(p.subject, m) and _premise_fits(p, ctx) for p in ps) and
                u == meet(ps[0].type, ps[1].type))
    if r == Rule.SUBSUME:
        return len(ps) == 1 and _same(ps[0].subject, m) and _premise_fits(ps[0], ctx) and leq(ps[0].type, u)
    if not isinstance(m, Const) or not sig.is_defined(m.name):
        return False
    split = split_arrows(u, sig.arity(m.name))
    if split is None:
        return False
    us, v = split
    if r == Rule.DEFINED_NO_MATCH:
        return not ps and v == NABLA and all(pattern_assignment(rule, us) is None
                                             for rule in sig.rules_for(m.name))
    if not isinstance(d.data, tuple) or len(ps) != 1:
        return False
    rule, assignment = d.data
    if str(rule) not in [str(x) for x in sig.rules_for(m.name)]:
        return False
    found = pattern_assignment(rule, us)
    p = ps[0]
    return (found is not None and found == dict(assignment) and _same(p.subject, rule.rhs) and p.type == v and
            _premise_fits(p, ctx.extend_all(sorted(found.items()))))


def check_derivation(d, sig):
    """
    Checks that every node of d instantiates a typing rule.

    :param Derivation d: the derivation
    :param Signature sig: signature the constants are typed against
    :rtype: bool
    """
    stack = [d]
    while stack:
        node = stack.pop()
        if not _local_ok(node, sig):
            return False
        stack.extend(node.premises)
    return True


def _lambda_family(d):
    if d.rule == Rule.LAM_INTRO:
        (u, v), = d.type.arrows
        return [(u, v, d.premises[0])]
    if d.rule == Rule.MEET_INTRO:
        return _lambda_family(d.premises[0]) + _lambda_family(d.premises[1])
    if d.rule == Rule.SUBSUME:
        return _lambda_family(d.premises[0])
    raise DerivationException('an abstraction cannot be typed by rule %s' % d.rule.value)


def _retype_var(d, x, u):
    """
    Gives the free variable x the smaller type u throughout d.
    """
    ctx = d.context.with_binding(x, u)
    if d.rule == Rule.VAR and d.subject.name == x:
        return subsume(Derivation(Rule.VAR, ctx, d.subject, u), d.type)
    if d.rule == Rule.LAM_INTRO and d.subject.binder == x:
        return replace(d, context=ctx)
    if d.rule == Rule.DEFINED_MATCH and x in d.data[0].variables():
        return replace(d, context=ctx)
    return replace(d, context=ctx, premises=tuple(_retype_var(p, x, u) for p in d.premises))


def invert_lambda(d):
    """
    From ``Γ ⊢ λx.N : U -> V`` builds ``Γ, x:U ⊢ N : V``.

    :param Derivation d: valid derivation whose subject is an abstraction and
        whose type is a single arrow
    :rtype: Derivation
    :raises DerivationException: when d does not have that shape
    """
    if not isinstance(d.subject, Lam):
        raise DerivationException('the subject %s is not an abstraction' % print_term(d.subject))
    if not isinstance(d.type, NfArrows) or len(d.type.arrows) != 1:
        raise DerivationException('the type %s is not a single arrow' % print_nbhd(d.type))
    (u, v), = d.type.arrows
    x = d.subject.binder
    family = _lambda_family(d)
    witness = continuity_witness([(a, b) for a, b, _ in family], u, v)
    ctx = d.context.extend(x, u)
    bodies = []
    for i in sorted(witness):
        bodies.append(_retype_var(family[i][2], x, u))
    return weaken(subsume(weaken(meet_intro_all(bodies), ctx), v), ctx)


def invert_app(d):
    """
    From ``Γ ⊢ N M : V`` finds U with ``N : U -> V`` and ``M : U``.

    :param Derivation d: valid derivation whose subject is an application
    :rtype: tuple
    :returns: ``(U, derivation of N : U -> V, derivation of M : U)``
    :raises DerivationException: when d does not have that shape
    """
    if not isinstance(d.subject, App):
        raise DerivationException('the subject %s is not an application' % print_term(d.subject))
    if d.rule == Rule.APP_ELIM:
        d_fun, d_arg = d.premises
        return d_arg.type, d_fun, d_arg
    if d.rule == Rule.SUBSUME:
        u, d_fun, d_arg = invert_app(d.premises[0])
        return u, subsume(d_fun, arrow(u, d.type)), d_arg
    if d.rule == Rule.MEET_INTRO:
        u1, f1, a1 = invert_app(d.premises[0])
        u2, f2, a2 = invert_app(d.premises[1])
        u = meet(u1, u2)
        return u, subsume(meet_intro(f1, f2), arrow(u, d.type)), meet_intro(a1, a2)
    raise DerivationException('an application cannot be typed by rule %s' % d.rule.value)


def parse_context(text, sig):
    """
    Parses ``x : U, y : V``; an empty text is the empty context.

    :rtype: Context
    """
    if not text.strip():
        return Context()
    tree = parse_tree(text, 'context')
    return Context((canonical_name(b.children[0]), build_nbhd(b.children[1], sig)) for b in tree.children)


def parse_typing(text, sig):
    """
    Parses ``TERM : NBHD``.

    :rtype: tuple
    :returns: the erased term and the neighbourhood
    """
    tree = TermBuilder().transform(parse_tree(text, 'typing'))
    term, nbhd = tree.children
    return erase(resolve(term, sig)), build_nbhd(nbhd, sig)
