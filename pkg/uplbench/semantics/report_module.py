"""
Desk-scale checks of the model equations on a corpus of terms.

Every check compares approximations computed at ``depth``. A generator found
on one side and missing on the other is confirmed by a typing search at
``depth + delta``; only a refuted search or an invalid derivation counts as a
violation, an inconclusive search makes the entry depth-insufficient.
"""
import logging
from dataclasses import dataclass

from uplbench.neighbourhoods import NABLA, arrow, print_nbhd
from uplbench.intersection import (DEFAULT_MAX_STEPS, Context, DerivationException, Refuted, Valid, check_derivation,
                                   check_type, invert_app)
from uplbench.reduction import head_iota_step
from uplbench.syntax import NAME_PATTERN, App, Lam, ParseException, erase, parse_term, print_term, substitute

from .filter_module import TOP, apply_approx, filter_member, sem_approx

logger = logging.getLogger(__name__)

HOLDS = 'holds'
DEPTH_INSUFFICIENT = 'depth-insufficient'
VIOLATED = 'violated'

DEFAULT_DELTA = 2


@dataclass(frozen=True)
class AppEntry(object):
    function: object
    argument: object

    def to_dict(self):
        return {'kind': 'app', 'function': print_term(self.function), 'argument': print_term(self.argument)}


@dataclass(frozen=True)
class BetaEntry(object):
    variable: str
    body: object
    argument: object

    def to_dict(self):
        return {'kind': 'beta', 'variable': self.variable, 'body': print_term(self.body),
                'argument': print_term(self.argument)}


@dataclass(frozen=True)
class IotaEntry(object):
    term: object

    def to_dict(self):
        return {'kind': 'iota', 'term': print_term(self.term)}


@dataclass(frozen=True)
class CheckResult(object):
    check: str
    status: str
    detail: str = ''

    def to_dict(self):
        return {'check': self.check, 'status': self.status, 'detail': self.detail}


def _worst(statuses):
    statuses = list(statuses)
    if VIOLATED in statuses:
        return VIOLATED
    if DEPTH_INSUFFICIENT in statuses:
        return DEPTH_INSUFFICIENT
    return HOLDS


class EntryReport(object):

    def __init__(self, entry, checks):
        self.entry = entry
        self.checks = tuple(checks)

    @property
    def status(self):
        return _worst(c.status for c in self.checks)

    def to_dict(self):
        return {'entry': self.entry.to_dict(), 'status': self.status, 'checks': [c.to_dict() for c in self.checks]}


class ModelReport(object):

    """
    Per entry statuses of model_equation_report
    """

    def __init__(self, depth, delta, entries):
        self.depth = depth
        self.delta = delta
        self.entries = tuple(entries)

    @property
    def status(self):
        return _worst(e.status for e in self.entries)

    @property
    def ok(self):
        return self.status == HOLDS

    def counts(self):
        out = {HOLDS: 0, DEPTH_INSUFFICIENT: 0, VIOLATED: 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    def to_dict(self):
        return {'depth': self.depth, 'delta': self.delta, 'status': self.status, 'counts': self.counts(),
                'entries': [e.to_dict() for e in self.entries]}


class _Checker(object):

    def __init__(self, sig, depth, delta, max_steps):
        self.sig = sig
        self.depth = depth
        self.delta = delta
        self.max_steps = max_steps

    def approx(self, m, rho=None):
        rho = dict(rho or {})
        for x in m.free - set(rho):
            rho[x] = TOP
        return sem_approx(m, rho, self.depth, self.sig, self.max_steps)

    def confirm(self, g, m, u):
        outcome = check_type(g, m, u, self.depth + self.delta, self.sig, self.max_steps)
        if isinstance(outcome, Valid):
            return HOLDS, ''
        if isinstance(outcome, Refuted):
            return VIOLATED, '%s : %s refuted: %s' % (print_term(m), print_nbhd(u), outcome.reason)
        return DEPTH_INSUFFICIENT, '%s : %s not found at depth %d' % (print_term(m), print_nbhd(u),
                                                                      self.depth + self.delta)

    def top_context(self, m):
        return Context((x, NABLA) for x in sorted(m.free))

    def included(self, name, source, target, g, m):
        """
        Every generator of source belongs to target, or is confirmed for
        ``g ⊢ m``.
        """
        statuses = []
        details = []
        for u in sorted(source.generators, key=str):
            if filter_member(target, u):
                continue
            status, detail = self.confirm(g, m, u)
            statuses.append(status)
            if detail:
                details.append(detail)
        return CheckResult(name, _worst(statuses), '; '.join(details))

    def app_soundness(self, n, m):
        applied = apply_approx(self.approx(n), self.approx(m))
        nm = App(n, m)
        return self.included('application-soundness', applied, self.approx(nm), self.top_context(nm), nm)

    def app_witness(self, n, m):
        nm = App(n, m)
        whole = self.approx(nm)
        for d in whole.derivations:
            try:
                u, d_fun, d_arg = invert_app(d)
            except DerivationException as e:
                return CheckResult('application-witness', VIOLATED, e.message)
            if not (check_derivation(d_fun, self.sig) and check_derivation(d_arg, self.sig)):
                return CheckResult('application-witness', VIOLATED,
                                   'invalid inversion of %s : %s' % (print_term(nm), print_nbhd(d.type)))
            if d_fun.type != arrow(u, d.type):
                return CheckResult('application-witness', VIOLATED,
                                   'witness %s does not produce %s' % (print_nbhd(u), print_nbhd(d.type)))
        return CheckResult('application-witness', HOLDS)

    def agree(self, name, left, right, g_left, m_left, g_right, m_right):
        a = self.included(name, left, right, g_right, m_right)
        b = self.included(name, right, left, g_left, m_left)
        return CheckResult(name, _worst([a.status, b.status]), '; '.join(x for x in (a.detail, b.detail) if x))

    def substitution(self, x, n, m):
        arg = self.approx(m)
        substituted = substitute(n, x, m)
        extended = self.approx(n, {x: arg})
        g_sub = self.top_context(substituted)
        g_ext = self.top_context(n).without(x)
        if x in n.free:
            if arg.is_bottom:
                if extended.is_bottom and self.approx(substituted).is_bottom:
                    return CheckResult('substitution', HOLDS)
                return CheckResult('substitution', DEPTH_INSUFFICIENT,
                                   'no approximation of %s at depth %d' % (print_term(m), self.depth))
            g_ext = g_ext.extend(x, arg.least())
        return self.agree('substitution', self.approx(substituted), extended, g_sub, substituted, g_ext, n)

    def abstraction(self, x, n, m):
        lam = Lam(x, n)
        arg = self.approx(m)
        if arg.is_bottom:
            return CheckResult('abstraction', HOLDS, 'argument approximates to bottom')
        applied = apply_approx(self.approx(lam), arg)
        extended = self.approx(n, {x: arg})
        redex = App(lam, m)
        g_ext = self.top_context(n).without(x)
        if x in n.free:
            g_ext = g_ext.extend(x, arg.least())
        return self.agree('abstraction', applied, extended, self.top_context(redex), redex, g_ext, n)

    def iota(self, m):
        contractum = head_iota_step(m, self.sig)
        lhs = self.approx(m)
        if contractum is None:
            if filter_member(lhs, NABLA):
                return CheckResult('iota-top', HOLDS)
            status, detail = self.confirm(self.top_context(m), m, NABLA)
            return CheckResult('iota-top', status, detail)
        rhs = self.approx(contractum)
        return self.agree('iota', lhs, rhs, self.top_context(m), m, self.top_context(contractum), contractum)

    def run(self, entry):
        logger.debug('model_equation_report: %s', entry)
        if isinstance(entry, AppEntry):
            return EntryReport(entry, [self.app_soundness(entry.function, entry.argument),
                                       self.app_witness(entry.function, entry.argument)])
        if isinstance(entry, BetaEntry):
            redex = App(Lam(entry.variable, entry.body), entry.argument)
            return EntryReport(entry, [self.app_soundness(Lam(entry.variable, entry.body), entry.argument),
                                       self.app_witness(Lam(entry.variable, entry.body), entry.argument),
                                       self.substitution(entry.variable, entry.body, entry.argument),
                                       self.abstraction(entry.variable, entry.body, entry.argument),
                                       self.beta_step(redex)])
        return EntryReport(entry, [self.iota(entry.term)])

    def beta_step(self, redex):
        lhs = self.approx(redex)
        contractum = substitute(redex.function.body, redex.function.binder, redex.argument)
        rhs = self.approx(contractum)
        return self.agree('beta', lhs, rhs, self.top_context(redex), redex, self.top_context(contractum), contractum)


def model_equation_report(corpus, depth, sig, delta=DEFAULT_DELTA, max_steps=DEFAULT_MAX_STEPS):
    """
    Checks the model equations on every corpus entry.

    :param corpus: AppEntry, BetaEntry and IotaEntry values
    :param int depth: search depth of the compared approximations
    :param Signature sig: the signature
    :param int delta: extra depth granted to confirmations
    :rtype: ModelReport
    """
    if depth < 1 or delta < 0:
        raise ValueError('depth must be positive and delta non-negative')
    checker = _Checker(sig, depth, delta, max_steps)
    entries = []
    for entry in corpus:
        report = checker.run(entry)
        if report.status == VIOLATED:
            logger.warning('model equation violated on %s', entry.to_dict())
        entries.append(report)
    return ModelReport(depth, delta, entries)


def parse_corpus(text, sig):
    """
    Reads a corpus file::

        # comment
        app \\x. x | 0
        beta x | S x | 0
        iota less (S 0) 0

    :rtype: list
    """
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(' ')
        parts = [p.strip() for p in rest.split('|')]
        try:
            if word == 'app' and len(parts) == 2:
                out.append(AppEntry(erase(parse_term(parts[0], sig)), erase(parse_term(parts[1], sig))))
            elif word == 'beta' and len(parts) == 3 and NAME_PATTERN.fullmatch(parts[0]):
                out.append(BetaEntry(parts[0], erase(parse_term(parts[1], sig)), erase(parse_term(parts[2], sig))))
            elif word == 'iota' and len(parts) == 1:
                out.append(IotaEntry(erase(parse_term(parts[0], sig))))
            else:
                raise ParseException('expected "app N | M", "beta x | N | M" or "iota TERM"', line=lineno, column=1)
        except ParseException as e:
            if e.line == lineno:
                raise
            raise ParseException(e.reason, line=lineno, column=e.column)
    return out
