import unittest

from hypothesis import assume, given, settings

from uplbench.reduction import (LEFTMOST_OUTERMOST, RIGHTMOST_INNERMOST, FuelExhausted, NormalForm, NotSN, SN,
                                Unknown, check_sn, head_iota_step, is_normal, is_simple, match_pattern,
                                matching_rules, normalize, reducts, step)
from uplbench.syntax import App, Const, PCon, PVar
from tests.uplbench.helpers import OMEGA, std, term
from tests.uplbench.strategies import terms


class NormalizeTests(unittest.TestCase):

    def test_normalize_beta(self):
        """
        normalize() should contract beta redexes and count the steps
        """
        self.assertEqual(NormalForm(term('0'), 1), normalize(term('(\\x. x) 0'), std()))

    def test_normalize_iota(self):
        """
        normalize() should use the rules of the defined constants
        """
        self.assertEqual(term('Inl 0'), normalize(term('less (S 0) (S (S 0))'), std()).term)
        self.assertEqual(term('N1'), normalize(term('0 <= S 0'), std()).term)
        self.assertEqual(term('N0'), normalize(term('S (S 0) <= S 0'), std()).term)
        self.assertEqual(term('S (S 0)'), normalize(term('Rec 0 (\\x. \\r. S r) (S (S 0))'), std()).term)

    def test_normalize_open_terms(self):
        """
        normalize() should stop at stuck applications of defined constants
        """
        self.assertEqual(term('Inr 0'), normalize(term('less x 0'), std()).term)
        self.assertEqual(term('less x (S 0)'), normalize(term('less x (S 0)'), std()).term)

    def test_normalize_fuel(self):
        """
        normalize() should give up after fuel steps
        """
        result = normalize(term(OMEGA), std(), fuel=10)
        self.assertIsInstance(result, FuelExhausted)
        self.assertEqual(10, result.steps)
        with self.assertRaises(ValueError):
            normalize(term('0'), std(), fuel=0)

    def test_normalize_strategies(self):
        """
        normalize() should reach the normal form of a lazy term only leftmost outermost
        """
        m = term('(\\x. 0) (%s)' % OMEGA)
        self.assertEqual(term('0'), normalize(m, std(), 50, LEFTMOST_OUTERMOST).term)
        self.assertIsInstance(normalize(m, std(), 50, RIGHTMOST_INNERMOST), FuelExhausted)

    def test_step(self):
        """
        step() should pick the redex of the strategy and None on normal terms
        """
        m = term('(\\x. x) ((\\y. y) 0)')
        self.assertEqual(term('(\\y. y) 0'), step(m, std()))
        self.assertEqual(term('(\\x. x) 0'), step(m, std(), RIGHTMOST_INNERMOST))
        self.assertIsNone(step(term('S 0'), std()))
        with self.assertRaises(ValueError):
            step(m, std(), 'random')

    def test_reducts(self):
        """
        reducts() should return every one step reduct, root redexes first
        """
        m = term('(\\x. S x) ((\\y. y) 0)')
        self.assertEqual((term('S ((\\y. y) 0)'), term('(\\x. S x) 0')), reducts(m, std()))
        self.assertEqual((), reducts(term('S x'), std()))

    def test_reducts_alpha_duplicates(self):
        """
        reducts() should keep one of several alpha-equal reducts
        """
        m = term('(\\x. x) ((\\y. y) 0)')
        self.assertEqual((term('(\\y. y) 0'),), reducts(m, std()))
        self.assertEqual(1, len(reducts(term('(\\x. x) ((\\x. x) 0)'), std())))

    def test_match_pattern(self):
        """
        match_pattern() should bind pattern variables and fail on clashes
        """
        self.assertEqual({'x': Const('0')}, match_pattern(PCon('S', (PVar('x'),)), App(Const('S'), Const('0'))))
        self.assertIsNone(match_pattern(PCon('S', (PVar('x'),)), Const('0')))
        found = matching_rules('less', [term('S 0'), term('0')], std())
        self.assertEqual(['less x 0 = Inr 0'], [str(r) for r, _ in found])

    def test_head_iota_step(self):
        """
        head_iota_step() should only contract a root iota redex
        """
        self.assertEqual(term('Inr 0'), head_iota_step(term('less 0 0'), std()))
        self.assertIsNone(head_iota_step(term('(\\x. x) 0'), std()))
        self.assertIsNone(head_iota_step(term('less 0'), std()))

    def test_is_simple(self):
        """
        is_simple() should exclude abstractions, constructor terms and partial applications
        """
        sig = std()
        self.assertFalse(is_simple(term('\\x. x'), sig))
        self.assertFalse(is_simple(term('S 0'), sig))
        self.assertFalse(is_simple(term('less 0'), sig))
        self.assertTrue(is_simple(term('less 0 0'), sig))
        self.assertTrue(is_simple(term('x 0'), sig))
        self.assertTrue(is_simple(term('(\\x. x) 0'), sig))

    @given(terms())
    @settings(max_examples=200, derandomize=True)
    def test_normal_forms_have_no_reducts(self, m):
        """
        normalize() should only return terms without reducts
        """
        result = normalize(m, std(), fuel=50)
        assume(isinstance(result, NormalForm))
        self.assertTrue(is_normal(result.term, std()))
        self.assertEqual((), reducts(result.term, std()))


class CheckSnTests(unittest.TestCase):

    def test_omega(self):
        """
        check_sn() should find the cycle of length 1 of the self application loop
        """
        verdict = check_sn(term(OMEGA), std())
        self.assertIsInstance(verdict, NotSN)
        self.assertEqual(1, verdict.cycle_length)
        self.assertEqual('NotSN', verdict.to_dict()['verdict'])

    def test_lazy_loop(self):
        """
        check_sn() should reject a term that has both a normal form and an infinite reduction
        """
        self.assertIsInstance(check_sn(term('(\\x. 0) (%s)' % OMEGA), std()), NotSN)

    def test_sn(self):
        """
        check_sn() should report the longest reduction and the normal forms
        """
        verdict = check_sn(term('(\\x. x) ((\\y. y) 0)'), std())
        self.assertEqual(SN(2, frozenset([term('0')])), verdict)

    def test_stuck_constructor_application(self):
        """
        check_sn() should accept a constructor applied to too many arguments
        """
        self.assertEqual(SN(0, frozenset([term('0 Nat')])), check_sn(term('0 Nat'), std()))

    def test_fuel(self):
        """
        check_sn() should answer Unknown when the graph exceeds the fuel
        """
        m = term('Rec 0 (\\x. \\r. S r) (S (S (S 0)))')
        self.assertIsInstance(check_sn(m, std(), fuel=2), Unknown)
        self.assertIsInstance(check_sn(m, std()), SN)

    @given(terms(max_leaves=6))
    @settings(max_examples=100, derandomize=True)
    def test_reducts_are_shorter(self, m):
        """
        check_sn() should give every reduct of an SN term a shorter longest reduction
        """
        verdict = check_sn(m, std(), fuel=200)
        assume(isinstance(verdict, SN))
        for r in reducts(m, std()):
            below = check_sn(r, std(), fuel=200)
            self.assertIsInstance(below, SN)
            self.assertLess(below.longest, verdict.longest)
