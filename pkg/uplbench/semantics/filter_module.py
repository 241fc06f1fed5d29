"""
Finite approximations of the filter domain.

A filter is represented by a finite set of generating neighbourhoods; it
contains every neighbourhood above the meet of its generators. The empty
generator set is the bottom element and the filter generated by ∇ is the top.
"""
import logging
from dataclasses import dataclass, field

from uplbench.neighbourhoods import NABLA, NfCon, leq, eq, meet_all, print_nbhd
from uplbench.intersection import DEFAULT_DEPTH, DEFAULT_MAX_STEPS, Context, generators
from uplbench.reduction import DEFAULT_FUEL, NotSN, check_sn
from uplbench.syntax import erase, print_term

logger = logging.getLogger(__name__)


class FilterElem(object):
    pass


@dataclass(frozen=True)
class Bot(FilterElem):

    def to_dict(self):
        return {'filter': 'bottom'}


@dataclass(frozen=True)
class Principal(FilterElem):
    nbhd: object

    def to_dict(self):
        return {'filter': 'principal', 'nbhd': print_nbhd(self.nbhd)}


def top():
    return Principal(NABLA)


def bottom():
    return Bot()


def principal(u):
    return Principal(u)


def filter_eq(a, b):
    """
    Equality of finite filter elements: two principal filters are equal
    exactly when their neighbourhoods are.
    """
    if isinstance(a, Bot) or isinstance(b, Bot):
        return isinstance(a, Bot) and isinstance(b, Bot)
    return eq(a.nbhd, b.nbhd)


@dataclass(frozen=True)
class SemApprox(object):

    """
    The filter generated by finitely many neighbourhoods. ``derivations``
    optionally keeps, per generator, the typing derivation it came from.
    """

    generators: frozenset = frozenset()
    derivations: tuple = field(default=(), compare=False)

    @classmethod
    def of(cls, *us):
        return cls(frozenset(us))

    @classmethod
    def from_filter(cls, f):
        if isinstance(f, Bot):
            return cls()
        return cls(frozenset([f.nbhd]))

    @property
    def is_bottom(self):
        return not self.generators

    def least(self):
        """
        The meet of the generators, or None for the bottom element.
        """
        if self.is_bottom:
            return None
        return meet_all(self.generators)

    def to_filter(self):
        if self.is_bottom:
            return Bot()
        return Principal(self.least())

    def to_dict(self):
        return {'generators': sorted(print_nbhd(u) for u in self.generators),
                'least': None if self.is_bottom else print_nbhd(self.least())}


TOP = SemApprox.of(NABLA)
BOTTOM = SemApprox()


def filter_member(a, u):
    """
    Whether u belongs to the filter generated by a.

    :param SemApprox a: the filter
    :param NbhdNF u: a neighbourhood
    :rtype: bool

    :Example:

    >>> filter_member(SemApprox.of(parse_nbhd('! -> !', sig)), parse_nbhd('! -> !', sig))
    True
    """
    if a.is_bottom:
        return False
    return leq(a.least(), u)


def apply_approx(a, b):
    """
    Filter application: every V with ``U -> V`` in a for some U in b.

    :param SemApprox a: the function
    :param SemApprox b: the argument
    :rtype: SemApprox
    """
    if a.is_bottom or b.is_bottom:
        return BOTTOM
    f, x = a.least(), b.least()
    if f == NABLA:
        return TOP
    if isinstance(f, NfCon):
        return BOTTOM
    codomains = [c for d, c in f.arrows if leq(x, d)]
    if not codomains:
        return BOTTOM
    return SemApprox.of(meet_all(codomains))


def _as_approx(value):
    if isinstance(value, SemApprox):
        return value
    if isinstance(value, FilterElem):
        return SemApprox.from_filter(value)
    return SemApprox(frozenset(value))


def sem_approx(m, rho, depth, sig, max_steps=DEFAULT_MAX_STEPS):
    """
    Approximates the meaning of m in the environment rho by the types the
    bounded search derives for it.

    :param Term m: the term
    :param dict rho: variable name -> SemApprox (or FilterElem)
    :param int depth: search depth
    :param Signature sig: the signature
    :rtype: SemApprox
    :returns: the approximation, with the derivation of each generator
    """
    m = erase(m)
    rho = dict((x, _as_approx(v)) for x, v in rho.items())
    missing = m.free - set(rho)
    if missing:
        raise ValueError('free variables %s are not in the environment' % ', '.join(sorted(missing)))
    names = sorted(m.free)
    if any(rho[x].is_bottom for x in names):
        return BOTTOM
    g = Context((x, rho[x].least()) for x in names)
    found = generators(g, m, depth, sig, max_steps)
    return SemApprox(frozenset(d.type for d in found), tuple(found))


@dataclass(frozen=True)
class Certified(object):

    """
    A neighbourhood of the term, found at the given depth. ``sn`` holds the
    reduction verdict when the certificate was cross-checked.
    """

    nbhd: object
    depth: int
    sn: object = None

    @property
    def sound(self):
        return not isinstance(self.sn, NotSN)

    def to_dict(self):
        out = {'verdict': 'certified', 'nbhd': print_nbhd(self.nbhd), 'depth': self.depth}
        if self.sn is not None:
            out['sn'] = self.sn.to_dict()
        return out


@dataclass(frozen=True)
class Unknown(object):
    depth: int

    def to_dict(self):
        return {'verdict': 'unknown', 'depth': self.depth}


def certify_sn(m, depth, sig, cross_check=True, fuel=DEFAULT_FUEL, max_steps=DEFAULT_MAX_STEPS):
    """
    Looks for a non-bottom approximation of m at depths 1 to depth, free
    variables being mapped to the top element. A term with such an
    approximation is strongly normalising.

    :param Term m: the term
    :param int depth: largest depth tried
    :param Signature sig: the signature
    :param bool cross_check: also explore the reduction graph of a certified term
    :param int fuel: fuel of the cross check
    :rtype: Certified or Unknown
    """
    if depth < 1:
        raise ValueError('depth must be positive')
    m = erase(m)
    rho = dict((x, TOP) for x in m.free)
    for d in range(1, depth + 1):
        approx = sem_approx(m, rho, d, sig, max_steps)
        if approx.is_bottom:
            logger.debug('certify_sn: no type for %s at depth %d', print_term(m), d)
            continue
        verdict = check_sn(m, sig, fuel) if cross_check else None
        if isinstance(verdict, NotSN):
            logger.warning('certify_sn: %s is certified at %s but has an infinite reduction',
                           print_term(m), print_nbhd(approx.least()))
        return Certified(approx.least(), d, verdict)
    return Unknown(depth)


def certify_all(terms, sig, depth=DEFAULT_DEPTH, fuel=DEFAULT_FUEL):
    """
    Certifies each term and collects those whose certificate the reduction
    graph contradicts.

    :rtype: tuple
    :returns: (results, violations)
    """
    results = []
    violations = []
    for m in terms:
        r = certify_sn(m, depth, sig, True, fuel)
        results.append(r)
        if isinstance(r, Certified) and not r.sound:
            violations.append(m)
    return results, violations
