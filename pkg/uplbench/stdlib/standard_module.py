"""
The standard library: natural numbers, sums, pairs, vectors, the order on
numerals and the double negation shift program.

``get`` reads a vector from the inside out: ``trim (S x) n`` peels ``n - x - 1``
outer pairs with ``tail`` and ``head`` projects the element of the remaining
pair. With ``v = Pair (Pair 0 a) b``::

    get B 2 0 p v
      -> head 0 (trim 1 2 p (vec B) tail v)
      -> head 0 (trim 0 1 p P' h' v)
      -> head 0 (trim 0 0 p P' h' (h' 0 v))
      -> head 0 (h' 0 v)
      -> head 0 (tail 1 v)
      -> head 0 (Pair 0 a)
      -> a
"""
import io
import itertools
import os
from functools import lru_cache

from uplbench.syntax import Var, Lam, Const, apply, load_signature, substitute_all
from uplbench.reduction import DEFAULT_FUEL, NormalForm, normalize

SIGNATURE_FILE = os.path.join(os.path.dirname(__file__), 'standard.sig')
DECLARATIONS_FILE = os.path.join(os.path.dirname(__file__), 'standard.tt')
DNS_SCRIPT_FILE = os.path.join(os.path.dirname(__file__), 'dns.tt')


def _read(path):
    with io.open(path, encoding='utf-8') as f:
        return f.read()


def signature_text():
    return _read(SIGNATURE_FILE)


def declarations_text():
    return _read(DECLARATIONS_FILE)


def dns_script_text():
    return _read(DNS_SCRIPT_FILE)


@lru_cache(maxsize=None)
def standard_signature():
    """
    The standard signature, loaded once from the bundled signature file.

    :rtype: uplbench.syntax.Signature
    """
    return load_signature(signature_text())


def numeral(n):
    """
    ``S (S ... 0)`` with n successors.

    :rtype: Term
    """
    if n < 0:
        raise ValueError('numerals are non-negative')
    m = Const('0')
    for _ in range(n):
        m = apply(Const('S'), m)
    return m


def vec_value(elems):
    """
    The vector ``Pair (... (Pair 0 x1) ...) xn``.

    :rtype: Term
    """
    m = Const('0')
    for e in elems:
        m = apply(Const('Pair'), m, e)
    return m


def dns_term():
    """
    ``λB.λH.λK. Phi B H K 0 0``, the double negation shift program.

    :rtype: Term
    """
    return Lam('B', Lam('H', Lam('K', apply(Const('Phi'), Var('B'), Var('H'), Var('K'),
                                            Const('0'), Const('0')))))


def get_term(n, i, elems, family=None):
    """
    ``get B n i 0 v`` for the vector of elems; B defaults to a variable.
    """
    return apply(Const('get'), family or Var('B'), numeral(n), numeral(i), Const('0'), vec_value(elems))


def regression_get(n, i, elems, fuel=DEFAULT_FUEL):
    """
    Normal form of ``get B n i 0 v`` where v holds elems.

    :param int n: length of the vector
    :param int i: index, below n
    :param elems: normal terms
    :rtype: Term
    :returns: the normal form, elems[i] when everything is in range
    """
    elems = list(elems)
    if not 0 <= i < n or n != len(elems):
        raise ValueError('expected i < n = len(elems), got i=%d, n=%d, %d elements' % (i, n, len(elems)))
    result = normalize(get_term(n, i, elems), standard_signature(), fuel)
    if not isinstance(result, NormalForm):
        raise ValueError('get did not reach a normal form within %d steps' % fuel)
    return result.term


def get_stability(n, i, elems, extra, fuel=DEFAULT_FUEL):
    """
    Whether ``get`` on n elements and on the same elements followed by extra
    (with n + 1) agree at index i.

    :rtype: bool
    """
    elems = list(elems)
    return regression_get(n, i, elems, fuel) == regression_get(n + 1, i, elems + [extra], fuel)


def rule_instances(sig=None, values=None, per_rule=2):
    """
    Closed instances of the rules of sig: each pattern variable is replaced
    by a closed normal value.

    :param Signature sig: defaults to the standard signature
    :param values: closed normal terms used for pattern variables
    :param int per_rule: instances kept per rule
    :rtype: list
    :returns: (rule, left hand side instance) pairs
    """
    sig = sig or standard_signature()
    values = list(values) if values is not None else [Const('0'), numeral(1)]
    out = []
    for rule in sig.rules:
        pattern_vars = sorted(rule.variables())
        choices = itertools.product(values, repeat=len(pattern_vars))
        for combo in itertools.islice(choices, per_rule):
            sub = dict(zip(pattern_vars, combo))
            out.append((rule, substitute_all(rule.lhs_term(), sub)))
    return out
