"""
Signatures: constructor and defined-constant arities plus the rewrite rules
of the defined constants, and their validation.
"""
from collections import Counter
from dataclasses import dataclass
from types import MappingProxyType

from .api_exception_module import SignatureException
from .terms_module import Var, Const, apply, spine, print_term


@dataclass(frozen=True)
class PVar(object):
    name: str

    def variables(self):
        return [self.name]

    def to_term(self):
        return Var(self.name)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class PCon(object):
    name: str
    args: tuple = ()

    def variables(self):
        out = []
        for a in self.args:
            out.extend(a.variables())
        return out

    def to_term(self):
        return apply(Const(self.name), *[a.to_term() for a in self.args])

    def __str__(self):
        if not self.args:
            return self.name
        return '(%s)' % ' '.join([self.name] + [str(a) for a in self.args])


@dataclass(frozen=True, eq=False)
class RewriteRule(object):

    """
    ``head p1 ... pk = rhs``
    """

    head: str
    lhs: tuple
    rhs: object

    def variables(self):
        out = []
        for p in self.lhs:
            out.extend(p.variables())
        return out

    def lhs_term(self):
        return apply(Const(self.head), *[p.to_term() for p in self.lhs])

    def __str__(self):
        return '%s = %s' % (print_term(self.lhs_term()), print_term(self.rhs))

    def to_dict(self):
        return {'rule': str(self)}


class Signature(object):

    """
    Constructor and defined-constant arities together with the rewrite rules
    """

    def __init__(self, constructors=None, defineds=None, rules=()):
        """
        :param dict constructors: constructor name -> arity
        :param dict defineds: defined constant name -> arity
        :param rules: sequence of RewriteRule
        """
        self.constructors = MappingProxyType(dict(constructors or {}))
        self.defineds = MappingProxyType(dict(defineds or {}))
        self.rules = tuple(rules)
        by_head = {}
        for r in self.rules:
            by_head.setdefault(r.head, []).append(r)
        self._rules_by_head = dict((k, tuple(v)) for k, v in by_head.items())

    def declares(self, name):
        return name in self.constructors or name in self.defineds

    def is_constructor(self, name):
        return name in self.constructors

    def is_defined(self, name):
        return name in self.defineds

    def arity(self, name):
        """
        :raises ValueError: when name is not declared
        """
        if name in self.constructors:
            return self.constructors[name]
        if name in self.defineds:
            return self.defineds[name]
        raise ValueError('Unknown constant "%s"' % name)

    def rules_for(self, name):
        return self._rules_by_head.get(name, ())

    def with_rules(self, rules):
        return Signature(self.constructors, self.defineds, rules)

    def __repr__(self):
        return 'Signature(%d constructors, %d defined constants, %d rules)' % (
            len(self.constructors), len(self.defineds), len(self.rules))


def _to_pattern(m, sig, line):
    if isinstance(m, Var):
        return PVar(m.name)
    head, args = spine(m)
    if isinstance(head, Const) and sig.is_constructor(head.name):
        return PCon(head.name, tuple(_to_pattern(a, sig, line) for a in args))
    raise SignatureException('"%s" is not a constructor pattern' % print_term(m), line=line)


def parse_rule(text, sig, line=None):
    """
    Parses ``lhs = rhs`` into a RewriteRule.

    :param str text: rule text without the leading ``rule`` keyword
    :param Signature sig: declarations used to resolve identifiers
    :rtype: RewriteRule
    """
    from .parser_module import parse_tree, resolve, TermBuilder
    from .api_exception_module import ParseException

    try:
        lhs, rhs = TermBuilder().transform(parse_tree(text, 'rule'))
        lhs, rhs = resolve(lhs, sig), resolve(rhs, sig)
    except ParseException as e:
        raise SignatureException(e.message, line=line)
    head, args = spine(lhs)
    if not isinstance(head, Const):
        raise SignatureException('the head of a rule must be a constant', line=line)
    return RewriteRule(head.name, tuple(_to_pattern(a, sig, line) for a in args), rhs)


def load_signature(text):
    """
    Reads the line oriented signature format::

        # comment
        constructor S 1
        defined less 2
        rule less x 0 = Inr 0

    Declarations may appear in any order relative to the rules.

    :param str text: signature file contents
    :rtype: Signature
    """
    from .parser_module import canonical_name

    tables = {'constructor': {}, 'defined': {}}
    rule_lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(' ')
        if word in tables:
            parts = rest.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise SignatureException('expected "%s <name> <arity>"' % word, line=lineno)
            name = canonical_name(parts[0])
            if name in tables[word]:
                raise SignatureException('"%s" is declared twice' % name, line=lineno)
            tables[word][name] = int(parts[1])
        elif word == 'rule':
            rule_lines.append((lineno, rest))
        else:
            raise SignatureException('unknown declaration "%s"' % word, line=lineno)
    declared = Signature(tables['constructor'], tables['defined'])
    return declared.with_rules([parse_rule(text, declared, lineno) for lineno, text in rule_lines])


@dataclass(frozen=True)
class Violation(object):
    kind: str
    message: str
    rules: tuple = ()

    def to_dict(self):
        return {'kind': self.kind, 'message': self.message, 'rules': list(self.rules)}


class ValidationReport(object):

    """
    Result of validate_signature; empty means valid
    """

    def __init__(self, violations):
        self.violations = tuple(violations)

    @property
    def ok(self):
        return not self.violations

    def kinds(self):
        return set(v.kind for v in self.violations)

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def to_dict(self):
        return {'ok': self.ok, 'violations': [v.to_dict() for v in self.violations]}


def _pattern_problems(p, sig):
    if isinstance(p, PVar):
        return []
    out = []
    if not sig.is_constructor(p.name):
        out.append(('undeclared-constant', '"%s" is not a declared constructor' % p.name))
    elif sig.arity(p.name) != len(p.args):
        out.append(('arity-mismatch', 'constructor "%s" has arity %d but is applied to %d patterns' % (
            p.name, sig.arity(p.name), len(p.args))))
    for a in p.args:
        out.extend(_pattern_problems(a, sig))
    return out


def validate_signature(sig):
    """
    Checks that the rewrite system is left linear and mutually disjoint and
    that every rule is well formed.

    :param Signature sig: signature to validate
    :rtype: ValidationReport
    :returns: every violation found; an empty report means the signature is valid
    """
    from .unification_module import unify_all, rename_apart

    violations = []
    for name in sorted(set(sig.constructors) & set(sig.defineds)):
        violations.append(Violation('name-clash', '"%s" is both a constructor and a defined constant' % name))
    for i, r in enumerate(sig.rules):
        if not sig.is_defined(r.head):
            violations.append(Violation('unknown-head', '%s: "%s" is not a defined constant' % (r, r.head), (i,)))
        elif sig.arity(r.head) != len(r.lhs):
            violations.append(Violation('arity-mismatch', '%s: "%s" has arity %d but the rule has %d patterns' % (
                r, r.head, sig.arity(r.head), len(r.lhs)), (i,)))
        for p in r.lhs:
            for kind, message in _pattern_problems(p, sig):
                violations.append(Violation(kind, '%s: %s' % (r, message), (i,)))
        repeated = sorted(n for n, c in Counter(r.variables()).items() if c > 1)
        if repeated:
            violations.append(Violation('non-linear-lhs', '%s: %s occur more than once in the left hand side' % (
                r, ', '.join(repeated)), (i,)))
        escaping = sorted(r.rhs.free - set(r.variables()))
        if escaping:
            violations.append(Violation('rhs-variable-escape', '%s: %s not bound by the left hand side' % (
                r, ', '.join(escaping)), (i,)))
    for i, r in enumerate(sig.rules):
        for j in range(i + 1, len(sig.rules)):
            s = sig.rules[j]
            if r.head != s.head or len(r.lhs) != len(s.lhs):
                continue
            try:
                unifier = unify_all(rename_apart(r.lhs, '#1'), rename_apart(s.lhs, '#2'))
            except ValueError:
                continue
            shown = ', '.join('%s := %s' % (k, v) for k, v in sorted(unifier.items()))
            violations.append(Violation('overlapping-rules', '%s and %s overlap (unifier: %s)' % (
                r, s, shown or 'identity'), (i, j)))
    return ValidationReport(violations)
