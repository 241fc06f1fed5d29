"""
Ad hoc oracle probes read from a text file::

    # comment
    seed (\\x. x) y
    member \\x. x : ! -> !
    probe x : !, y : S ! |- S x : S !

Every probe runs on one universe built from the seeds, the member terms and
the variable pool.
"""
import logging
from dataclasses import dataclass

from uplbench.intersection import DEFAULT_DEPTH, Context, Refuted, Valid, check_type, parse_context, parse_typing
from uplbench.neighbourhoods import print_nbhd
from uplbench.reduction import DEFAULT_FUEL
from uplbench.syntax import ParseException, erase, parse_term, print_term

from .api_exception_module import UniverseCoverageException, UniverseNotApplicationClosedException
from .candidate_module import build_universe, pool_variables, red_set, soundness_probe

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
UNKNOWN = 'unknown'


@dataclass(frozen=True)
class Seed(object):
    term: object


@dataclass(frozen=True)
class Member(object):
    term: object
    nbhd: object


@dataclass(frozen=True)
class Probe(object):
    context: Context
    term: object
    nbhd: object


@dataclass(frozen=True)
class ProbeResult(object):
    line: int
    text: str
    outcome: str
    detail: str = ''

    def to_dict(self):
        return {'line': self.line, 'probe': self.text, 'outcome': self.outcome, 'detail': self.detail}


class ProbeReport(object):

    def __init__(self, universe_size, results):
        self.universe_size = universe_size
        self.results = tuple(results)

    @property
    def outcome(self):
        outcomes = [r.outcome for r in self.results]
        if FAIL in outcomes:
            return FAIL
        if UNKNOWN in outcomes:
            return UNKNOWN
        return PASS

    def to_dict(self):
        return {'outcome': self.outcome, 'universe_size': self.universe_size,
                'results': [r.to_dict() for r in self.results]}


def _judgement(text, sig, lineno):
    if ':' not in text:
        raise ParseException('expected "TERM : NBHD"', line=lineno, column=1)
    return parse_typing(text, sig)


def parse_probes(text, sig):
    """
    :rtype: list
    :returns: (line number, source text, Seed / Member / Probe) triples
    """
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(' ')
        rest = rest.strip()
        try:
            if word == 'seed':
                item = Seed(erase(parse_term(rest, sig)))
            elif word == 'member':
                item = Member(*_judgement(rest, sig, lineno))
            elif word == 'probe':
                ctx_text, sep, judgement = rest.partition('|-')
                if not sep:
                    raise ParseException('expected "probe CONTEXT |- TERM : NBHD"', line=lineno, column=1)
                item = Probe(parse_context(ctx_text, sig), *_judgement(judgement, sig, lineno))
            else:
                raise ParseException('unknown probe "%s"' % word, line=lineno, column=1)
        except ParseException as e:
            if e.line == lineno:
                raise
            raise ParseException(e.reason, line=lineno, column=e.column)
        out.append((lineno, line, item))
    return out


def run_probes(text, sig, depth=DEFAULT_DEPTH, fuel=DEFAULT_FUEL, max_instances=None):
    """
    Parses and runs a probe file.

    :rtype: ProbeReport
    :raises NotTerminatingException: when a seed or member term diverges
    """
    probes = parse_probes(text, sig)
    seeds = pool_variables()
    for _, _, item in probes:
        if not isinstance(item, Probe):
            seeds.append(item.term)
    universe = build_universe(seeds, sig, fuel)
    results = []
    for lineno, line, item in probes:
        if isinstance(item, Seed):
            continue
        try:
            if isinstance(item, Member):
                ok = red_set(item.nbhd, universe).contains(item.term)
                results.append(ProbeResult(lineno, line, PASS if ok else FAIL))
                continue
            outcome = check_type(item.context, item.term, item.nbhd, depth, sig)
            if isinstance(outcome, Refuted):
                results.append(ProbeResult(lineno, line, FAIL, 'not derivable: %s' % outcome.reason))
            elif not isinstance(outcome, Valid):
                results.append(ProbeResult(lineno, line, UNKNOWN, outcome.reason))
            elif soundness_probe(item.context, item.term, item.nbhd, universe, max_instances):
                results.append(ProbeResult(lineno, line, PASS))
            else:
                results.append(ProbeResult(lineno, line, FAIL, '%s has an instance outside the candidate of %s' % (
                    print_term(item.term), print_nbhd(item.nbhd))))
        except (UniverseCoverageException, UniverseNotApplicationClosedException) as e:
            results.append(ProbeResult(lineno, line, UNKNOWN, e.message))
    logger.debug('run_probes: %d probes on %d terms', len(results), len(universe))
    return ProbeReport(len(universe), results)
