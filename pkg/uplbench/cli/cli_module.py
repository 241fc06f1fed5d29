"""
The ``uplbench`` command.

Exit codes: 0 for a positive answer (valid, SN, holds), 1 for a negative one
(refuted, not SN, violated), 2 when the answer is unknown within the
configured fuel or depth, 3 on malformed input.
"""
import argparse
import io
import json
import logging
import random
import sys

from uplbench.convert_json import to_json_object
from uplbench.intersection import Refuted, Valid, check_type, infer, parse_context, parse_typing
from uplbench.log_module import setup_logger
from uplbench.mltt import FAIL, PASS, TypeTheory, run_script, standard_theory
from uplbench.neighbourhoods import check_laws, classify, leq, meet, parse_nbhd, print_nbhd, random_nbhd
from uplbench.oracle import FuelExceededException, run_probes
from uplbench.reduction import STRATEGIES, NormalForm, NotSN, SN, check_sn, normalize, reducts
from uplbench.semantics import DEPTH_INSUFFICIENT, HOLDS, Certified, certify_sn, model_equation_report, parse_corpus
from uplbench.semantics import VIOLATED, TOP, sem_approx
from uplbench.syntax import erase, parse_term, print_term, validate_signature
from uplbench.api_exception_module import UplBenchException
from uplbench.version import __version__

from .config_module import STANDARD, CliConfig

logger = logging.getLogger(__name__)

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_INPUT_ERROR = 3


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(message)


class UsageError(Exception):
    pass


def _text(words):
    return ' '.join(words)


def _read(path):
    with io.open(path, encoding='utf-8') as f:
        return f.read()


def _term(args, sig):
    return erase(parse_term(_text(args.term), sig))


def cmd_parse(args, config, sig):
    m = parse_term(_text(args.term), sig)
    return EXIT_POSITIVE, {'term': print_term(m), 'free': sorted(m.free)}, print_term(m)


def cmd_normalize(args, config, sig):
    result = normalize(_term(args, sig), sig, config.fuel, args.strategy)
    if isinstance(result, NormalForm):
        return EXIT_POSITIVE, result, '%s\n(%d steps)' % (print_term(result.term), result.steps)
    return EXIT_UNKNOWN, result, 'no normal form within %d steps; reached %s' % (config.fuel, print_term(result.term))


def cmd_reducts(args, config, sig):
    found = reducts(_term(args, sig), sig)
    return EXIT_POSITIVE, {'reducts': [print_term(r) for r in found]}, '\n'.join(print_term(r) for r in found)


def cmd_sn(args, config, sig):
    verdict = check_sn(_term(args, sig), sig, config.fuel)
    if isinstance(verdict, SN):
        return EXIT_POSITIVE, verdict, 'SN (longest reduction: %d steps)' % verdict.longest
    if isinstance(verdict, NotSN):
        lines = ['not SN, cycle of length %d:' % verdict.cycle_length]
        lines.extend('  %s' % print_term(t) for t in verdict.witness)
        return EXIT_NEGATIVE, verdict, '\n'.join(lines)
    return EXIT_UNKNOWN, verdict, 'unknown after visiting %d terms' % verdict.fuel_spent


def cmd_nbhd(args, config, sig):
    if args.action == 'laws':
        constructors = dict((c, sig.arity(c)) for c in sig.constructors)
        report = check_laws(constructors, args.count, config.depth, config.seed)
        text = '%d samples, %d checks, %d violations' % (report.samples, report.checks, len(report.violations))
        return (EXIT_POSITIVE if report.ok else EXIT_NEGATIVE), report, text
    if args.action == 'random':
        rng = random.Random(config.seed)
        constructors = dict((c, sig.arity(c)) for c in sig.constructors)
        samples = [print_nbhd(random_nbhd(rng, constructors, config.depth)) for _ in range(args.count)]
        return EXIT_POSITIVE, {'nbhds': samples}, '\n'.join(samples)
    us = [parse_nbhd(text, sig) for text in args.nbhds]
    expected = {'leq': 2, 'meet': 2, 'classify': 1}[args.action]
    if len(us) != expected:
        raise UsageError('nbhd %s takes %d neighbourhoods' % (args.action, expected))
    if args.action == 'leq':
        answer = leq(us[0], us[1])
        return (EXIT_POSITIVE if answer else EXIT_NEGATIVE), {'leq': answer}, str(answer).lower()
    if args.action == 'meet':
        u = meet(us[0], us[1])
        return EXIT_POSITIVE, u, print_nbhd(u)
    cls = classify(us[0])
    return EXIT_POSITIVE, {'class': cls.value}, cls.value


def cmd_check(args, config, sig):
    m, u = parse_typing(_text(args.judgement), sig)
    g = parse_context(args.context, sig)
    outcome = check_type(g, m, u, config.depth, sig, config.max_steps)
    if isinstance(outcome, Valid):
        if args.xml:
            return EXIT_POSITIVE, outcome, outcome.derivation.to_xml().decode('utf-8').rstrip()
        return EXIT_POSITIVE, outcome, str(outcome.derivation)
    if isinstance(outcome, Refuted):
        return EXIT_NEGATIVE, outcome, 'refuted: %s' % outcome.reason
    return EXIT_UNKNOWN, outcome, 'unknown: %s' % outcome.reason


def cmd_infer(args, config, sig):
    types = sorted(print_nbhd(u) for u in infer(parse_context(args.context, sig), _term(args, sig), config.depth,
                                                sig, config.max_steps))
    return (EXIT_POSITIVE if types else EXIT_UNKNOWN), {'types': types}, '\n'.join(types)


def cmd_sem(args, config, sig):
    m = _term(args, sig)
    approx = sem_approx(m, dict((x, TOP) for x in m.free), config.depth, sig, config.max_steps)
    if approx.is_bottom:
        return EXIT_NEGATIVE, approx, 'bottom (no neighbourhood found at depth %d)' % config.depth
    return EXIT_POSITIVE, approx, '\n'.join(sorted(print_nbhd(u) for u in approx.generators))


def cmd_certify(args, config, sig):
    result = certify_sn(_term(args, sig), config.depth, sig, not args.no_cross_check, config.fuel, config.max_steps)
    if isinstance(result, Certified):
        if not result.sound:
            return EXIT_NEGATIVE, result, 'certificate %s contradicted by an infinite reduction' % print_nbhd(
                result.nbhd)
        return EXIT_POSITIVE, result, 'certified at depth %d: %s' % (result.depth, print_nbhd(result.nbhd))
    return EXIT_UNKNOWN, result, 'no certificate up to depth %d' % result.depth


def _entry_text(entry):
    fields = entry.to_dict()
    kind = fields.pop('kind')
    return '%s %s' % (kind, ' | '.join(str(v) for v in fields.values()))


def cmd_model_report(args, config, sig):
    corpus = parse_corpus(_read(args.file), sig)
    report = model_equation_report(corpus, config.depth, sig, config.delta, config.max_steps)
    lines = ['%-18s %s' % (e.status, _entry_text(e.entry)) for e in report.entries]
    counts = report.counts()
    lines.append('%d holds, %d depth-insufficient, %d violated' % (
        counts[HOLDS], counts[DEPTH_INSUFFICIENT], counts[VIOLATED]))
    code = {HOLDS: EXIT_POSITIVE, DEPTH_INSUFFICIENT: EXIT_UNKNOWN}.get(report.status, EXIT_NEGATIVE)
    return code, report, '\n'.join(lines)


def cmd_oracle(args, config, sig):
    try:
        report = run_probes(_read(args.file), sig, config.depth, config.fuel)
    except FuelExceededException as e:
        return EXIT_UNKNOWN, {'outcome': 'unknown', 'reason': e.message}, e.message
    lines = ['line %d: %s %s' % (r.line, r.outcome, r.detail) for r in report.results]
    lines.append('universe of %d terms: %s' % (report.universe_size, report.outcome))
    return _outcome_code(report.outcome), report, '\n'.join(lines)


def cmd_mltt(args, config, sig):
    base = standard_theory() if config.is_standard else TypeTheory(sig)
    report = run_script(_read(args.file), sig, base, config.fuel)
    lines = ['line %d: %s: %s %s' % (e.line, e.directive, e.outcome, e.detail) for e in report.entries]
    lines.append(report.outcome)
    return _outcome_code(report.outcome), report, '\n'.join(lines)


def cmd_validate(args, config, sig):
    report = validate_signature(sig)
    if report.ok:
        return EXIT_POSITIVE, report, 'valid: %d rules' % len(sig.rules)
    return EXIT_NEGATIVE, report, '\n'.join('%s: %s' % (v.kind, v.message) for v in report)


def _outcome_code(outcome):
    if outcome == PASS:
        return EXIT_POSITIVE
    if outcome == FAIL:
        return EXIT_NEGATIVE
    return EXIT_UNKNOWN


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--sig', default=STANDARD, help='signature file, or "std" for the standard library')
    common.add_argument('--fuel', type=int, default=CliConfig.fuel, help='reduction fuel')
    common.add_argument('--depth', type=int, default=CliConfig.depth, help='neighbourhood complexity bound')
    common.add_argument('--delta', type=int, default=CliConfig.delta, help='extra depth for model equation checks')
    common.add_argument('--max-steps', type=int, default=CliConfig.max_steps, help='type search step budget')
    common.add_argument('--seed', type=int, default=0, help='seed of randomised checks')
    common.add_argument('--json', action='store_true', help='print results as JSON')
    common.add_argument('--verbose', action='store_true', help='log debug messages')
    return common


def build_parser():
    """
    :rtype: argparse.ArgumentParser
    """
    common = _common_options()
    parser = _ArgumentParser(prog='uplbench',
                             description='Strong normalisation workbench for untyped rewriting programs.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command', parser_class=_ArgumentParser)
    commands.required = True

    def command(name, func, help_text, term=True):
        p = commands.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        if term:
            p.add_argument('term', nargs='+', help='term in concrete syntax')
        return p

    command('parse', cmd_parse, 'parse and print a term')
    p = command('normalize', cmd_normalize, 'normal form of a term')
    p.add_argument('--strategy', choices=STRATEGIES, default=STRATEGIES[0])
    command('reducts', cmd_reducts, 'one step reducts of a term')
    command('sn', cmd_sn, 'decide strong normalisation by exploring the reduction graph')
    p = command('nbhd', cmd_nbhd, 'neighbourhood lattice operations', term=False)
    p.add_argument('action', choices=['leq', 'meet', 'classify', 'laws', 'random'])
    p.add_argument('nbhds', nargs='*', help='neighbourhoods in concrete syntax')
    p.add_argument('--count', type=int, default=1000, help='samples drawn by laws and random')
    p = command('check', cmd_check, 'search an intersection typing derivation', term=False)
    p.add_argument('judgement', nargs='+', help='"TERM : NBHD"')
    p.add_argument('--context', default='', help='"x : U, y : V"')
    p.add_argument('--xml', action='store_true', help='print the derivation as XML')
    p = command('infer', cmd_infer, 'neighbourhoods of a term within the depth')
    p.add_argument('--context', default='', help='"x : U, y : V"')
    command('sem', cmd_sem, 'finite approximation of the meaning of a term')
    p = command('certify', cmd_certify, 'certify strong normalisation semantically')
    p.add_argument('--no-cross-check', action='store_true', help='skip the reduction graph cross check')
    for name, func, help_text in (('model-report', cmd_model_report, 'check model equations on a corpus file'),
                                  ('oracle', cmd_oracle, 'run reducibility candidate probes'),
                                  ('mltt', cmd_mltt, 'run a type theory script')):
        p = command(name, func, help_text, term=False)
        p.add_argument('file')
    command('validate', cmd_validate, 'validate the rewrite rules of the signature', term=False)
    return parser


def _emit(out, config, payload, text):
    if config.json:
        out.write(json.dumps(to_json_object(payload), indent=2, sort_keys=True))
    else:
        out.write(text)
    out.write('\n')


def run(argv=None, stdout=None, stderr=None):
    """
    Runs one subcommand.

    :param list argv: arguments without the program name
    :rtype: int
    :returns: the exit code

    :Example:

    >>> run(['nbhd', 'leq', '!', 'S !'])
    true
    0
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        config = CliConfig.from_args(args)
    except (UsageError, ValueError) as e:
        stderr.write('uplbench: %s\n' % e)
        return EXIT_INPUT_ERROR
    setup_logger(config.log_level)
    try:
        sig = config.load_signature()
        code, payload, text = args.func(args, config, sig)
    except (UplBenchException, UsageError, ValueError, IOError) as e:
        logger.debug('input error in %s', args.command, exc_info=True)
        stderr.write('uplbench: %s\n' % e)
        return EXIT_INPUT_ERROR
    _emit(stdout, config, payload, text)
    return code


def main():
    sys.exit(run(sys.argv[1:]))
