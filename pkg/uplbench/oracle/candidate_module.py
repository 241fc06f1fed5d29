"""
Reducibility candidates over finite term universes.

A universe is a finite set of strongly normalising terms closed under
reduction. Candidate sets are computed on it as least fixpoints. Sets built
from the structural clauses also decide membership of terms outside the
universe, by recursion on their reduction tree; arrow sets then quantify
over the universe members of their domain only.
"""
import itertools
import logging

from uplbench.neighbourhoods import NABLA, NfCon, print_nbhd
from uplbench.reduction import DEFAULT_FUEL, SN, NotSN, check_sn, is_simple, reducts
from uplbench.syntax import App, Var, Const, spine, substitute_all, term_size, print_term

from .api_exception_module import (NotTerminatingException, FuelExceededException,
                                   UniverseNotApplicationClosedException, UniverseCoverageException)

logger = logging.getLogger(__name__)

VARIABLE_POOL = ('x', 'y', 'z')


def _order(t):
    return (term_size(t), print_term(t))


class TermUniverse(object):

    """
    A finite reduction-closed set of strongly normalising terms
    """

    def __init__(self, sig, terms, successors, fuel):
        self.sig = sig
        self.fuel = fuel
        self._terms = terms
        self._succ = successors
        self._red_sets = {}

    def __contains__(self, m):
        return m.key in self._terms

    def __iter__(self):
        return iter(sorted(self._terms.values(), key=_order))

    def __len__(self):
        return len(self._terms)

    def reducts(self, m):
        return self._succ[m.key]

    def to_dict(self):
        return {'size': len(self), 'terms': [print_term(t) for t in self]}


def build_universe(seeds, sig, fuel=DEFAULT_FUEL):
    """
    The smallest reduction-closed set containing the seeds.

    :param seeds: terms
    :param Signature sig: the signature
    :param int fuel: bound on the reduction graph of each seed and on the
        size of the universe
    :rtype: TermUniverse
    :raises NotTerminatingException: when a seed has an infinite reduction
    :raises FuelExceededException: when the closure grows past fuel
    """
    terms = {}
    succ = {}
    todo = []
    for seed in seeds:
        verdict = check_sn(seed, sig, fuel)
        if isinstance(verdict, NotSN):
            raise NotTerminatingException(seed)
        if not isinstance(verdict, SN):
            raise FuelExceededException(fuel)
        todo.append(seed)
    while todo:
        t = todo.pop()
        if t.key in terms:
            continue
        if len(terms) >= fuel:
            raise FuelExceededException(fuel)
        terms[t.key] = t
        succ[t.key] = reducts(t, sig)
        todo.extend(r for r in succ[t.key] if r.key not in terms)
    logger.debug('build_universe: %d terms from %d seeds', len(terms), len(seeds))
    return TermUniverse(sig, terms, succ, fuel)


def application_seeds(functions, arguments):
    """
    The functions, the arguments and every application of one to the other.

    :rtype: list
    """
    functions, arguments = list(functions), list(arguments)
    return functions + arguments + [App(f, a) for f in functions for a in arguments]


class CandidateSet(object):

    """
    A set of terms of a universe. ``decider`` answers for terms outside the
    universe; sets without one raise for such terms.
    """

    def __init__(self, universe, members, decider=None, label='set'):
        self.universe = universe
        self.members = frozenset(m.key for m in members)
        self._terms = tuple(sorted(members, key=_order))
        self._decider = decider
        self.label = label

    @property
    def decides_outside(self):
        return self._decider is not None

    def contains(self, m):
        if m in self.universe:
            return m.key in self.members
        if self._decider is None:
            raise UniverseNotApplicationClosedException([m])
        return self._decider(m)

    def __contains__(self, m):
        return self.contains(m)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self.members)

    def issubset(self, other):
        return self.members <= other.members

    def __str__(self):
        return self.label

    def to_dict(self):
        return {'set': self.label, 'members': [print_term(t) for t in self._terms]}


def candidate_set(universe, terms, label='hand-built'):
    """
    A set given by its members; every term must belong to the universe.
    """
    terms = list(terms)
    outside = [t for t in terms if t not in universe]
    if outside:
        raise UniverseNotApplicationClosedException(outside)
    return CandidateSet(universe, terms, None, label)


class _Decider(object):

    """
    Decides an inductive clause on terms outside the universe by recursion on
    their reduction tree.
    """

    def __init__(self, universe, clause):
        self.universe = universe
        self.clause = clause
        self.memo = {}
        self.target = None

    def __call__(self, m):
        if m.key in self.memo:
            return self.memo[m.key]
        verdict = check_sn(m, self.universe.sig, self.universe.fuel)
        if isinstance(verdict, NotSN):
            result = False
        elif not isinstance(verdict, SN):
            raise FuelExceededException(self.universe.fuel)
        else:
            result = self.clause(m, reducts(m, self.universe.sig), self.target.contains)
        self.memo[m.key] = result
        return result


def _least_fixpoint(universe, clause, label):
    decider = _Decider(universe, clause)
    members = {}
    changed = True
    rounds = 0
    while changed:
        changed = False
        rounds += 1
        for t in universe:
            if t.key in members:
                continue
            if clause(t, universe.reducts(t), lambda r: r.key in members):
                members[t.key] = t
                changed = True
    logger.debug('%s: fixpoint after %d rounds, %d members', label, rounds, len(members))
    out = CandidateSet(universe, members.values(), decider, label)
    decider.target = out
    return out


def _backward(m, rs, member, sig):
    return is_simple(m, sig) and all(member(r) for r in rs)


def r0_set(universe):
    """
    The least reducibility candidate: simple terms all of whose reducts are
    in it.

    :rtype: CandidateSet
    """
    sig = universe.sig

    def clause(m, rs, member):
        return _backward(m, rs, member, sig)

    return _least_fixpoint(universe, clause, 'R0')


def con_candidate(name, args, universe):
    """
    The least set containing ``c M1 ... Mk`` for Mi in the i-th argument set,
    and the simple terms whose reducts are all in it.

    :param str name: constructor
    :param args: CandidateSets, one per argument of the constructor
    :rtype: CandidateSet
    """
    sig = universe.sig
    args = tuple(args)
    if not sig.is_constructor(name):
        raise ValueError('"%s" is not a constructor' % name)
    if len(args) != sig.arity(name):
        raise ValueError('"%s" has arity %d, got %d sets' % (name, sig.arity(name), len(args)))

    def clause(m, rs, member):
        head, ms = spine(m)
        if isinstance(head, Const) and head.name == name and len(ms) == len(args):
            return all(x.contains(a) for x, a in zip(args, ms))
        return _backward(m, rs, member, sig)

    label = name if not args else '%s %s' % (name, ' '.join('(%s)' % x for x in args))
    return _least_fixpoint(universe, clause, label)


def arrow_candidate(x, y, universe):
    """
    Terms N such that ``N M`` is in y for every universe member M of x.

    :rtype: CandidateSet
    :raises UniverseNotApplicationClosedException: when y only knows its
        universe and some needed application is missing from it
    """
    domain = list(x)
    missing = []
    members = []
    for n in universe:
        ok = True
        for m in domain:
            nm = App(n, m)
            if nm not in universe and not y.decides_outside:
                missing.append(nm)
                ok = False
            elif ok and not y.contains(nm):
                ok = False
        if ok:
            members.append(n)
    if missing:
        raise UniverseNotApplicationClosedException(missing)

    def decide(n):
        return all(y.contains(App(n, m)) for m in domain)

    return CandidateSet(universe, members, decide, '%s -> %s' % (x, y))


def intersect(x, y):
    """
    Intersection of two sets of the same universe.

    :rtype: CandidateSet
    """
    if x.universe is not y.universe:
        raise ValueError('the sets belong to different universes')
    decider = None
    if x.decides_outside and y.decides_outside:
        def decider(m):
            return x.contains(m) and y.contains(m)
    return CandidateSet(x.universe, [t for t in x if t.key in y.members], decider, '%s & %s' % (x, y))


def red_set(u, universe):
    """
    The candidate a neighbourhood stands for: ∇ is R0, a constructor
    neighbourhood the constructor candidate of its arguments, and a set of
    arrows the intersection of their arrow candidates.

    :param NbhdNF u: the neighbourhood
    :rtype: CandidateSet
    """
    cache = universe._red_sets
    if u in cache:
        return cache[u]
    if u == NABLA:
        out = r0_set(universe)
    elif isinstance(u, NfCon):
        out = con_candidate(u.name, [red_set(a, universe) for a in u.args], universe)
    else:
        out = None
        for d, c in sorted(u.arrows, key=str):
            part = arrow_candidate(red_set(d, universe), red_set(c, universe), universe)
            out = part if out is None else intersect(out, part)
    out.label = print_nbhd(u)
    cache[u] = out
    return out


def cr_violations(x):
    """
    Failures of the candidate conditions on the universe of x: a member that
    is not strongly normalising or outside the universe, a reduct of a member
    that is not a member, or a simple term outside x whose reducts are all in x.

    :rtype: list
    """
    universe = x.universe
    out = []
    inside = set()
    for t in x:
        if t not in universe:
            out.append({'condition': 'CR1', 'term': print_term(t)})
        else:
            inside.add(t.key)
    for t in universe:
        rs = universe.reducts(t)
        if t.key in inside:
            for r in rs:
                if r.key not in x.members:
                    out.append({'condition': 'CR2', 'term': print_term(t), 'reduct': print_term(r)})
        elif is_simple(t, universe.sig) and all(r.key in x.members for r in rs):
            out.append({'condition': 'CR3', 'term': print_term(t)})
    return out


def cr_check(x):
    """
    Whether x is a reducibility candidate relative to its universe.

    :rtype: bool
    """
    return not cr_violations(x)


def soundness_probe(g, m, u, universe, max_instances=None):
    """
    Substitutes members of the candidates of the context types for the free
    variables of m and checks that each instance is in the candidate of u.
    Every tuple of members is tried unless max_instances caps the members
    taken per variable; a cap that drops members is logged.

    :param g: typing context (Context or dict name -> NbhdNF)
    :param Term m: the subject of a valid typing judgement
    :param NbhdNF u: its type
    :param TermUniverse universe: supplies the instances
    :param int max_instances: optional cap on the instances tried per variable
    :rtype: bool
    :raises UniverseCoverageException: when a context type has no instance
    :raises ValueError: when max_instances is not positive
    """
    if max_instances is not None and max_instances < 1:
        raise ValueError('max_instances must be positive, got %s' % max_instances)
    bindings = list(g.items()) if isinstance(g, dict) else list(g)
    names = [x for x, _ in bindings if x in m.free]
    pools = []
    for x, t in bindings:
        if x not in names:
            continue
        pool = list(red_set(t, universe))
        if not pool:
            raise UniverseCoverageException('no instance of %s : %s in the universe' % (x, print_nbhd(t)))
        if max_instances is not None and len(pool) > max_instances:
            logger.warning('soundness_probe: tried %d of %d instances of %s : %s',
                           max_instances, len(pool), x, print_nbhd(t))
            pool = pool[:max_instances]
        pools.append(pool)
    target = red_set(u, universe)
    ok = True
    for instance in itertools.product(*pools):
        mapping = dict(zip(names, instance))
        term = substitute_all(m, mapping)
        if not target.contains(term):
            logger.warning('soundness_probe: %s is not in the candidate of %s', print_term(term), print_nbhd(u))
            ok = False
    return ok


def pool_variables():
    return [Var(x) for x in VARIABLE_POOL]
