"""
Seeded random checking of the lattice laws of formal neighbourhoods.
"""
import itertools
import logging
import random

from .nbhd_module import (NABLA, NfCon, NfArrows, arrow, classify, complexity, continuity_witness, eq, leq,
                          meet, meet_all)
from .random_module import random_nbhd, random_arrows

logger = logging.getLogger(__name__)


class LawReport(object):

    """
    Outcome of check_laws: how many samples were drawn and every violated law
    """

    def __init__(self, samples, checks, violations):
        self.samples = samples
        self.checks = checks
        self.violations = violations

    @property
    def ok(self):
        return not self.violations

    def to_dict(self):
        return {'ok': self.ok, 'samples': self.samples, 'checks': self.checks, 'violations': self.violations}


def brute_force_covers(arrows, u, v):
    """
    Whether some nonempty subset of arrows, all with domains containing u,
    has a codomain meet included in v.
    """
    arrows = list(arrows)
    for size in range(1, len(arrows) + 1):
        for subset in itertools.combinations(arrows, size):
            if all(leq(u, d) for d, _ in subset) and leq(meet_all(c for _, c in subset), v):
                return True
    return False


def _laws(a, b, c, rng, constructors, max_complexity):
    ab = meet(a, b)
    yield 'reflexivity', leq(a, a)
    yield 'transitivity', not (leq(a, b) and leq(b, c)) or leq(a, c)
    yield 'meet-lower-left', leq(ab, a)
    yield 'meet-lower-right', leq(ab, b)
    yield 'meet-greatest', not (leq(c, a) and leq(c, b)) or leq(c, ab)
    yield 'meet-greatest-sampled', leq(meet(c, ab), ab)
    yield 'meet-complexity', complexity(ab) <= max(complexity(a), complexity(b))
    yield 'meet-commutative', eq(ab, meet(b, a))
    yield 'meet-associative', eq(meet(ab, c), meet(a, meet(b, c)))
    yield 'meet-idempotent', eq(meet(a, a), a)
    yield 'nabla-least', leq(NABLA, a)
    yield 'nabla-absorbs', eq(meet(NABLA, a), NABLA)
    yield 'arrow-meet', eq(meet(arrow(a, b), arrow(a, c)), arrow(a, meet(b, c)))
    yield 'arrow-contravariance', not leq(b, a) or leq(arrow(a, c), arrow(b, c))
    yield 'arrow-covariance', not leq(b, c) or leq(arrow(a, b), arrow(a, c))
    yield 'partition', classify(a) == classify(b) or not eq(a, b)
    if isinstance(a, NfCon) and isinstance(b, NfCon):
        if a.name == b.name:
            yield 'constructor-meet', eq(ab, NfCon(a.name, tuple(meet(x, y) for x, y in zip(a.args, b.args))))
        else:
            yield 'constructor-clash', ab == NABLA and not eq(a, b)
    if isinstance(a, NfCon) and isinstance(b, NfArrows):
        yield 'constructor-arrow-clash', ab == NABLA
    arrows = random_arrows(rng, constructors, max_complexity, rng.randint(1, 3))
    source = NfArrows(frozenset(arrows))
    for u, v in [(a, b), (arrows[0][0], arrows[0][1]), (arrows[0][0], meet(arrows[0][1], c))]:
        included = leq(source, arrow(u, v))
        yield 'continuity-brute-force', included == brute_force_covers(arrows, u, v)
        if included:
            witness = continuity_witness(arrows, u, v)
            yield 'continuity-witness', bool(witness) and leq(meet_all(arrows[i][1] for i in witness), v)


def check_laws(constructors, count=1000, max_complexity=4, seed=0):
    """
    Draws count random triples and checks every law on them.

    :param dict constructors: constructor name -> arity
    :param int count: number of triples
    :param int max_complexity: complexity bound of the samples
    :param int seed: random seed
    :rtype: LawReport
    """
    rng = random.Random(seed)
    checks = 0
    violations = []
    for i in range(count):
        a, b, c = [random_nbhd(rng, constructors, max_complexity) for _ in range(3)]
        for law, holds in _laws(a, b, c, rng, constructors, max_complexity):
            checks += 1
            if not holds:
                logger.warning('law %s violated by %s, %s, %s', law, a, b, c)
                violations.append({'law': law, 'sample': i, 'operands': [str(a), str(b), str(c)]})
    return LawReport(count, checks, violations)
