import unittest

from hypothesis import given, settings

from uplbench.neighbourhoods import (NABLA, NbhdClass, NfArrows, NfCon, PreconditionException, arrow, arrows_to,
                                     classify, complexity, continuity_witness, embed, eq, leq, match_nbhd, meet,
                                     meet_all, normalize_nbhd, parse_nbhd, print_nbhd, split_arrows)
from uplbench.syntax import ParseException, PCon, PVar
from tests.uplbench.helpers import nbhd, std
from tests.uplbench.strategies import nbhds

ZERO = NfCon('0')
S_NABLA = NfCon('S', (NABLA,))


class NbhdTests(unittest.TestCase):

    def test_parse_nbhd(self):
        """
        parse_nbhd() should return the normal form of the neighbourhood
        """
        self.assertEqual(S_NABLA, nbhd('S ! & S 0'))
        self.assertEqual(NABLA, nbhd('S ! & (! -> !)'))
        self.assertEqual(NfCon('+', (NABLA, ZERO)), nbhd('(+) ! 0'))
        self.assertEqual(NfArrows(frozenset([(NABLA, ZERO), (ZERO, S_NABLA)])), nbhd('(! -> 0) & (0 -> S !)'))

    def test_parse_nbhd_errors(self):
        """
        parse_nbhd() should reject unknown constructors and wrong arities
        """
        for text in ['S ! !', 'Foo !', 'Pair !', '! ->']:
            with self.assertRaises(ParseException):
                parse_nbhd(text, std())

    def test_print_nbhd(self):
        """
        print_nbhd() should print arrows right associative and parenthesize arguments
        """
        self.assertEqual('! -> S !', print_nbhd(arrow(NABLA, S_NABLA)))
        self.assertEqual('(! -> !) -> 0', print_nbhd(arrow(arrow(NABLA, NABLA), ZERO)))
        self.assertEqual('S (S 0)', print_nbhd(NfCon('S', (NfCon('S', (ZERO,)),))))
        self.assertEqual('(! -> 0) & (0 -> S !)', print_nbhd(nbhd('(0 -> S !) & (! -> 0)')))

    def test_leq(self):
        """
        leq() should order neighbourhoods with the least element first
        """
        self.assertTrue(leq(NABLA, S_NABLA))
        self.assertFalse(leq(S_NABLA, NABLA))
        self.assertTrue(leq(S_NABLA, NfCon('S', (ZERO,))))
        self.assertFalse(leq(NfCon('S', (ZERO,)), S_NABLA))
        self.assertFalse(leq(ZERO, NfCon('Nat')))
        self.assertFalse(leq(ZERO, arrow(NABLA, NABLA)))

    def test_leq_arrows(self):
        """
        leq() should make arrows contravariant in the domain and covariant in the codomain
        """
        self.assertTrue(leq(arrow(ZERO, S_NABLA), arrow(NABLA, S_NABLA)))
        self.assertFalse(leq(arrow(NABLA, S_NABLA), arrow(ZERO, S_NABLA)))
        self.assertTrue(leq(arrow(ZERO, NABLA), arrow(ZERO, S_NABLA)))
        self.assertTrue(leq(meet(arrow(ZERO, ZERO), arrow(ZERO, S_NABLA)), arrow(ZERO, ZERO)))
        self.assertTrue(eq(meet(arrow(ZERO, NfCon('S', (ZERO,))), arrow(ZERO, S_NABLA)),
                           arrow(ZERO, S_NABLA)))

    def test_meet(self):
        """
        meet() should be componentwise on constructors and union on arrows
        """
        self.assertEqual(NABLA, meet(ZERO, NfCon('Nat')))
        self.assertEqual(NABLA, meet(ZERO, arrow(NABLA, NABLA)))
        self.assertEqual(S_NABLA, meet(NfCon('S', (ZERO,)), NfCon('S', (NfCon('Nat'),))))
        self.assertEqual(2, len(meet(arrow(NABLA, ZERO), arrow(ZERO, ZERO)).arrows))
        with self.assertRaises(ValueError):
            meet_all([])

    def test_classify_and_complexity(self):
        """
        classify() and complexity() should follow the normal form
        """
        self.assertEqual(NbhdClass.NABLA, classify(NABLA))
        self.assertEqual(NbhdClass.CONSTRUCTOR, classify(ZERO))
        self.assertEqual(NbhdClass.ARROWS, classify(arrow(NABLA, NABLA)))
        self.assertEqual(0, complexity(NABLA))
        self.assertEqual(2, complexity(NfCon('S', (S_NABLA,))))
        self.assertEqual(2, complexity(arrow(ZERO, NABLA)))

    def test_continuity_witness(self):
        """
        continuity_witness() should return the arrows whose domain contains the target domain
        """
        arrows = [(NfCon('S', (ZERO,)), ZERO), (ZERO, NfCon('Nat'))]
        self.assertEqual(frozenset([0]), continuity_witness(arrows, S_NABLA, ZERO))
        with self.assertRaises(PreconditionException):
            continuity_witness(arrows, NfCon('Nat'), ZERO)

    def test_match_nbhd(self):
        """
        match_nbhd() should match constructor patterns and leave arrows to variables
        """
        pattern = PCon('S', (PVar('x'),))
        self.assertEqual({'x': ZERO}, match_nbhd(pattern, NfCon('S', (ZERO,))))
        self.assertIsNone(match_nbhd(pattern, NABLA))
        self.assertEqual({'y': arrow(NABLA, NABLA)}, match_nbhd(PVar('y'), arrow(NABLA, NABLA)))

    def test_split_arrows(self):
        """
        split_arrows() should undo arrows_to()
        """
        u = arrows_to([ZERO, S_NABLA], NfCon('Nat'))
        self.assertEqual(([ZERO, S_NABLA], NfCon('Nat')), split_arrows(u, 2))
        self.assertIsNone(split_arrows(ZERO, 1))

    @given(nbhds())
    @settings(max_examples=200, derandomize=True)
    def test_print_parse(self, u):
        """
        parse_nbhd() should read back what print_nbhd() prints
        """
        self.assertEqual(u, parse_nbhd(print_nbhd(u), std()))
        self.assertEqual(u, normalize_nbhd(embed(u)))

    @given(nbhds(), nbhds(), nbhds())
    @settings(max_examples=300, derandomize=True)
    def test_meet_is_greatest_lower_bound(self, a, b, c):
        """
        meet() should be the greatest lower bound for leq()
        """
        ab = meet(a, b)
        self.assertTrue(leq(ab, a) and leq(ab, b))
        if leq(c, a) and leq(c, b):
            self.assertTrue(leq(c, ab))
        self.assertTrue(eq(ab, meet(b, a)))

    @given(nbhds(), nbhds(), nbhds())
    @settings(max_examples=300, derandomize=True)
    def test_leq_is_a_preorder(self, a, b, c):
        """
        leq() should be reflexive and transitive
        """
        self.assertTrue(leq(a, a))
        if leq(a, b) and leq(b, c):
            self.assertTrue(leq(a, c))
