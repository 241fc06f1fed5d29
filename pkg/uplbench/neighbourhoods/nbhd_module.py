"""
Formal neighbourhoods.

``Nbhd`` is the surface syntax (∇, constructor application, arrow, meet).
Every neighbourhood is formally equal to a normal form: ∇, a constructor
applied to normal forms, or a finite nonempty set of arrows read as their
meet. Inclusion is decided on normal forms by recursion on complexity. ∇ is
the least element and there is no greatest one.
"""
import enum
from dataclasses import dataclass
from functools import lru_cache, reduce

from uplbench.syntax import PVar, canonical_name, parse_tree, ParseException

from .api_exception_module import PreconditionException


@dataclass(frozen=True)
class Nabla(object):
    pass


@dataclass(frozen=True)
class Con(object):
    name: str
    args: tuple = ()


@dataclass(frozen=True)
class Arrow(object):
    domain: object
    codomain: object


@dataclass(frozen=True)
class Meet(object):
    left: object
    right: object


class NbhdNF(object):

    """
    Base class of neighbourhoods in normal form
    """

    def __str__(self):
        return print_nbhd(self)

    def to_dict(self):
        return {'nbhd': print_nbhd(self)}


@dataclass(frozen=True)
class NfNabla(NbhdNF):

    def __repr__(self):
        return 'NABLA'


NABLA = NfNabla()


@dataclass(frozen=True)
class NfCon(NbhdNF):
    name: str
    args: tuple = ()

    def __repr__(self):
        return 'NfCon(%r, %r)' % (self.name, self.args)


@dataclass(frozen=True)
class NfArrows(NbhdNF):

    """
    Meet of a nonempty finite set of ``(domain, codomain)`` pairs
    """

    arrows: frozenset

    def __post_init__(self):
        if not self.arrows:
            raise ValueError('an arrow set must not be empty')

    def __repr__(self):
        return 'NfArrows(%r)' % (sorted(self.arrows, key=str),)


class NbhdClass(enum.Enum):
    NABLA = 'nabla'
    CONSTRUCTOR = 'constructor'
    ARROWS = 'arrows'


def complexity(u):
    """
    0 for ∇, one more than the largest component otherwise.

    :param NbhdNF u: neighbourhood in normal form
    :rtype: int
    """
    if isinstance(u, NfNabla):
        return 0
    if isinstance(u, NfCon):
        return 1 + max([complexity(a) for a in u.args] or [0])
    return 1 + max(max(complexity(d), complexity(c)) for d, c in u.arrows)


def meet(a, b):
    """
    Greatest lower bound of two normal forms.

    :rtype: NbhdNF

    :Example:

    >>> meet(NfCon('S', (NABLA,)), NfCon('S', (NfCon('0'),)))
    NfCon('S', (NABLA,))
    """
    if isinstance(a, NfNabla) or isinstance(b, NfNabla):
        return NABLA
    if isinstance(a, NfCon) and isinstance(b, NfCon):
        if a.name != b.name or len(a.args) != len(b.args):
            return NABLA
        return NfCon(a.name, tuple(meet(x, y) for x, y in zip(a.args, b.args)))
    if isinstance(a, NfArrows) and isinstance(b, NfArrows):
        return NfArrows(a.arrows | b.arrows)
    return NABLA


def meet_all(us):
    """
    Meet of a nonempty sequence of normal forms.
    """
    us = list(us)
    if not us:
        raise ValueError('the meet of no neighbourhood is not a neighbourhood')
    return reduce(meet, us)


@lru_cache(maxsize=1 << 18)
def leq(a, b):
    """
    Formal inclusion ``a ⊆ b``.

    Arrow sets: ``∩X ⊆ ∩Y`` iff for each ``W -> W'`` in Y the arrows of X
    whose domain contains W are not all missing and the meet of their
    codomains is included in W'.

    :param NbhdNF a: left neighbourhood
    :param NbhdNF b: right neighbourhood
    :rtype: bool
    """
    if isinstance(a, NfNabla):
        return True
    if isinstance(b, NfNabla):
        return False
    if isinstance(a, NfCon) and isinstance(b, NfCon):
        return (a.name == b.name and len(a.args) == len(b.args) and
                all(leq(x, y) for x, y in zip(a.args, b.args)))
    if isinstance(a, NfArrows) and isinstance(b, NfArrows):
        for w, w1 in b.arrows:
            covering = [c for d, c in a.arrows if leq(w, d)]
            if not covering or not leq(meet_all(covering), w1):
                return False
        return True
    return False


def eq(a, b):
    return leq(a, b) and leq(b, a)


def classify(u):
    """
    :rtype: NbhdClass
    """
    if isinstance(u, NfNabla):
        return NbhdClass.NABLA
    if isinstance(u, NfCon):
        return NbhdClass.CONSTRUCTOR
    return NbhdClass.ARROWS


def continuity_witness(arrows, u, v):
    """
    Indices of the arrows whose domain contains u.

    :param arrows: sequence of ``(domain, codomain)`` pairs
    :param NbhdNF u: target domain
    :param NbhdNF v: target codomain
    :rtype: frozenset
    :returns: the nonempty index set J; the meet of the codomains in J is
        included in v
    :raises PreconditionException: when the arrows are not included in u -> v
    """
    arrows = list(arrows)
    if not arrows or not leq(NfArrows(frozenset(arrows)), arrow(u, v)):
        raise PreconditionException('the arrows are not included in %s' % print_nbhd(arrow(u, v)))
    return frozenset(i for i, (d, _) in enumerate(arrows) if leq(u, d))


def match_nbhd(p, u):
    """
    Matches a constructor pattern against a normal form. ∇ and arrow sets are
    only matched by variables.

    :rtype: dict
    :returns: assignment of the pattern variables, or None
    """
    if isinstance(p, PVar):
        return {p.name: u}
    if not isinstance(u, NfCon) or u.name != p.name or len(u.args) != len(p.args):
        return None
    out = {}
    for q, a in zip(p.args, u.args):
        sub = match_nbhd(q, a)
        if sub is None:
            return None
        out.update(sub)
    return out


def arrow(dom, cod):
    return NfArrows(frozenset([(dom, cod)]))


def arrows_to(doms, cod):
    """
    The curried neighbourhood ``U1 -> ... -> Uk -> cod``.
    """
    for d in reversed(list(doms)):
        cod = arrow(d, cod)
    return cod


def split_arrows(u, k):
    """
    Reads u as ``U1 -> ... -> Uk -> V``.

    :rtype: tuple
    :returns: ``([U1, ..., Uk], V)`` or None when u is not such a chain
    """
    doms = []
    for _ in range(k):
        if not isinstance(u, NfArrows) or len(u.arrows) != 1:
            return None
        (d, u), = u.arrows
        doms.append(d)
    return doms, u


def normalize_nbhd(u):
    """
    The normal form formally equal to u.

    :param u: Nbhd (surface syntax) or NbhdNF
    :rtype: NbhdNF
    """
    if isinstance(u, NbhdNF):
        return u
    if isinstance(u, Nabla):
        return NABLA
    if isinstance(u, Con):
        return NfCon(u.name, tuple(normalize_nbhd(a) for a in u.args))
    if isinstance(u, Arrow):
        return arrow(normalize_nbhd(u.domain), normalize_nbhd(u.codomain))
    return meet(normalize_nbhd(u.left), normalize_nbhd(u.right))


def embed(u):
    """
    Surface syntax of a normal form.

    :rtype: Nbhd
    """
    if isinstance(u, NfNabla):
        return Nabla()
    if isinstance(u, NfCon):
        return Con(u.name, tuple(embed(a) for a in u.args))
    parts = [Arrow(embed(d), embed(c)) for d, c in sorted(u.arrows, key=str)]
    return reduce(Meet, parts)


_NAME_CHARS = set('ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_\'')


def _con_name(name):
    return name if set(name) <= _NAME_CHARS else '(%s)' % name


def _single_arrow(d, c):
    dom = print_nbhd(d)
    if isinstance(d, NfArrows):
        dom = '(%s)' % dom
    return '%s -> %s' % (dom, print_nbhd(c))


def _atom(u):
    text = print_nbhd(u)
    if isinstance(u, NfArrows) or (isinstance(u, NfCon) and u.args):
        return '(%s)' % text
    return text


def print_nbhd(u):
    """
    Concrete syntax of a normal form, readable back by ``parse_nbhd``.

    :rtype: str

    :Example:

    >>> print_nbhd(arrow(NABLA, NfCon('S', (NABLA,))))
    '! -> S !'
    """
    if isinstance(u, NfNabla):
        return '!'
    if isinstance(u, NfCon):
        return ' '.join([_con_name(u.name)] + [_atom(a) for a in u.args])
    shown = sorted(_single_arrow(d, c) for d, c in u.arrows)
    if len(shown) == 1:
        return shown[0]
    return ' & '.join('(%s)' % s for s in shown)


def _build(tree):
    kind = tree.data
    c = tree.children
    if kind == 'n_nabla':
        return Nabla()
    if kind == 'n_name':
        return Con(canonical_name(c[0]))
    if kind in ('n_con', 'n_con_op'):
        return Con(canonical_name(c[0]), tuple(_build(a) for a in c[1:]))
    if kind == 'n_arrow':
        return Arrow(_build(c[0]), _build(c[1]))
    return Meet(_build(c[0]), _build(c[1]))


def check_arities(u, sig):
    """
    :raises ParseException: when a constructor is unknown or has the wrong number of arguments
    """
    if isinstance(u, Con):
        if not sig.is_constructor(u.name):
            raise ParseException('"%s" is not a constructor of the signature' % u.name)
        if sig.arity(u.name) != len(u.args):
            raise ParseException('constructor "%s" has arity %d but is applied to %d neighbourhoods' % (
                u.name, sig.arity(u.name), len(u.args)))
        for a in u.args:
            check_arities(a, sig)
    elif isinstance(u, Arrow):
        check_arities(u.domain, sig)
        check_arities(u.codomain, sig)
    elif isinstance(u, Meet):
        check_arities(u.left, sig)
        check_arities(u.right, sig)


def build_nbhd(tree, sig):
    """
    Turns a ``nbhd`` parse tree into a normal form.
    """
    u = _build(tree)
    check_arities(u, sig)
    return normalize_nbhd(u)


def parse_nbhd(text, sig):
    """
    Parses ``! | c U1 ... Uk | U -> V | U & V | (U)``.

    :param str text: neighbourhood text
    :param Signature sig: signature declaring the constructors
    :rtype: NbhdNF

    :Example:

    >>> parse_nbhd('S ! & S 0', sig)
    NfCon('S', (NABLA,))
    """
    return build_nbhd(parse_tree(text, 'nbhd'), sig)
