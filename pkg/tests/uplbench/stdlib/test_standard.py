import itertools
import unittest

from uplbench.reduction import NormalForm, head_iota_step, normalize
from uplbench.stdlib import (dns_term, get_term, get_stability, numeral, regression_get, rule_instances,
                             standard_signature, vec_value)
from uplbench.syntax import Const, Var, apply
from tests.uplbench.helpers import std, term

ELEMENTS = [Var('a'), Var('b'), Var('c'), Var('d')]


def _nf(m):
    result = normalize(m, std())
    assert isinstance(result, NormalForm)
    return result.term


class StandardSignatureTests(unittest.TestCase):

    def test_standard_signature_is_cached(self):
        """
        standard_signature() should load the bundled file once
        """
        self.assertIs(standard_signature(), standard_signature())
        self.assertTrue(std().is_constructor('Pair'))
        self.assertEqual(7, std().arity('Psi'))

    def test_numeral(self):
        """
        numeral() should stack successors on zero
        """
        self.assertEqual(term('0'), numeral(0))
        self.assertEqual(term('S (S 0)'), numeral(2))
        with self.assertRaises(ValueError):
            numeral(-1)

    def test_vec_value(self):
        """
        vec_value() should nest pairs with the first element innermost
        """
        self.assertEqual(term('0'), vec_value([]))
        self.assertEqual(term('Pair (Pair 0 a) b'), vec_value([Var('a'), Var('b')]))

    def test_dns_term(self):
        """
        dns_term() should start Phi at zero with the empty vector
        """
        self.assertEqual(term('\\B. \\H. \\K. Phi B H K 0 0'), dns_term())
        self.assertEqual(frozenset(), dns_term().free)

    def test_order(self):
        """
        <= and less should decide the order on every pair of numerals up to 8
        """
        for m, n in itertools.product(range(9), repeat=2):
            self.assertEqual(term('N1' if m <= n else 'N0'), _nf(apply(Const('<='), numeral(m), numeral(n))))
            self.assertEqual(term('Inl 0' if m < n else 'Inr 0'), _nf(apply(Const('less'), numeral(m), numeral(n))))

    def test_rec(self):
        """
        Rec should iterate its step function
        """
        for n in range(7):
            self.assertEqual(numeral(n), _nf(apply(term('Rec 0 (\\x. \\r. S r)'), numeral(n))))
            self.assertEqual(numeral(2 * n), _nf(apply(term('Rec 0 (\\x. \\r. S (S r))'), numeral(n))))


class GetTests(unittest.TestCase):

    def test_get_term(self):
        """
        get_term() should apply get to a numeral vector
        """
        self.assertEqual(term('get B (S 0) 0 0 (Pair 0 a)'), get_term(1, 0, [Var('a')]))

    def test_regression_get(self):
        """
        regression_get() should return the element at every index of vectors up to length 4
        """
        for n in range(1, 5):
            for i in range(n):
                self.assertEqual(ELEMENTS[i], regression_get(n, i, ELEMENTS[:n]))

    def test_regression_get_range(self):
        """
        regression_get() should reject an index outside the vector
        """
        with self.assertRaises(ValueError):
            regression_get(2, 2, ELEMENTS[:2])
        with self.assertRaises(ValueError):
            regression_get(3, 0, ELEMENTS[:2])

    def test_get_stability(self):
        """
        get_stability() should hold for every index of short vectors
        """
        for n in range(1, 5):
            for i in range(n):
                self.assertTrue(get_stability(n, i, ELEMENTS[:n], Var('e')))


class RuleInstanceTests(unittest.TestCase):

    def test_rule_instances(self):
        """
        rule_instances() should give head redexes for every rule
        """
        instances = rule_instances()
        self.assertEqual(2 * len(std().rules), len(instances))
        for rule, m in instances:
            self.assertEqual(frozenset(), m.free)
            self.assertIsNotNone(head_iota_step(m, std()), str(rule))
