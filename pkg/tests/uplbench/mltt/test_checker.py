import unittest

from uplbench.mltt import (UNKNOWN, ConstDecl, DuplicateNameException, TTContext, TypeTheory,
                           UnknownConstantException, UnsupportedJudgementException, standard_theory)
from uplbench.syntax import Const, parse_term
from tests.uplbench.helpers import OMEGA, std


def tt(text):
    return parse_term(text, std(), allow_annotations=True)


class TypeTheoryTests(unittest.TestCase):

    def setUp(self):
        self.theory = standard_theory()

    def test_check_term(self):
        """
        check_term() should check constants against their declared types
        """
        self.assertTrue(self.theory.check_term([], tt('S 0'), tt('Nat')))
        self.assertTrue(self.theory.check_term([], tt('0'), tt('N1')))
        self.assertFalse(self.theory.check_term([], tt('0'), tt('N0')))
        self.assertFalse(self.theory.check_term([], tt('S'), tt('Nat')))
        self.assertTrue(self.theory.check_term([('n', tt('Nat'))], tt('S n'), tt('Nat')))

    def test_check_term_schematic(self):
        """
        check_term() should solve schematic names from the arguments and the expected type
        """
        self.assertTrue(self.theory.check_term([], tt('Inl 0'), tt('N1 + N0')))
        self.assertTrue(self.theory.check_term([], tt('Inl{A := N1, B := N0} 0'), tt('N1 + N0')))
        self.assertFalse(self.theory.check_term([], tt('Inl{A := N0, B := N0} 0'), tt('N0 + N0')))

    def test_check_term_dependent(self):
        """
        check_term() should compare types up to computation
        """
        self.assertTrue(self.theory.check_term([], tt('\\A. \\x. x'), tt('Pi A:U. A -> A')))
        self.assertTrue(self.theory.check_term([], tt('less 0 0'), tt('N0 + N1')))
        self.assertTrue(self.theory.check_term([], tt('vec (\\n. Nat) (S 0)'), tt('U')))

    def test_universe_is_not_a_term(self):
        """
        check_term() should refuse to state U : U
        """
        with self.assertRaises(UnsupportedJudgementException):
            self.theory.check_term([], Const('U'), Const('U'))
        self.assertFalse(self.theory.check_term([], Const('U'), tt('Nat')))

    def test_is_type(self):
        """
        is_type() should accept U, products and terms of U
        """
        self.assertTrue(self.theory.is_type([], tt('U')))
        self.assertTrue(self.theory.is_type([], tt('Nat -> Nat')))
        self.assertTrue(self.theory.is_type([], tt('Pi n:Nat. vec (\\k. Nat) n')))
        self.assertFalse(self.theory.is_type([], tt('0')))

    def test_is_type_before_computation(self):
        """
        is_type() should refuse a term that only computes to U and accept terms of U that compute to products
        """
        self.assertFalse(self.theory.is_type([], tt('(\\x. U) 0')))
        self.assertFalse(self.theory.is_type([], tt('Nat -> (\\x. U) 0')))
        self.assertTrue(self.theory.is_type([], tt('not N0')))
        self.assertTrue(self.theory.is_type([('A', tt('U'))], tt('A -> not A')))
        self.assertFalse(self.theory.check_context([('A', tt('(\\x. U) 0'))]))

    def test_infer_term(self):
        """
        infer_term() should return the codomain of the declared type
        """
        inferred = self.theory.infer_term([], tt('S 0'))
        self.assertTrue(self.theory.convertible(inferred, tt('Nat')))
        self.assertIsNone(self.theory.infer_term([], tt('U')))

    def test_check_context(self):
        """
        check_context() should check each type in the context before it
        """
        self.assertTrue(self.theory.check_context([('A', tt('U')), ('x', tt('A'))]))
        self.assertFalse(self.theory.check_context([('x', tt('0'))]))
        with self.assertRaises(DuplicateNameException):
            self.theory.check_context([('n', tt('Nat')), ('n', tt('Nat'))])

    def test_convertible(self):
        """
        convertible() should answer UNKNOWN when the fuel runs out
        """
        self.assertTrue(self.theory.convertible(tt('vec (\\n. Nat) 0'), tt('N1')))
        self.assertFalse(self.theory.convertible(tt('N0'), tt('N1')))
        answer = TypeTheory(std(), fuel=50).convertible(tt(OMEGA), tt('N1'))
        self.assertIs(UNKNOWN, answer)
        self.assertFalse(answer)

    def test_unknown_constant(self):
        """
        check_term() should raise for constants without a declared type
        """
        with self.assertRaises(UnknownConstantException):
            TypeTheory(std()).check_term([], tt('S 0'), tt('Nat'))

    def test_declarations(self):
        """
        declare() should keep every declaration of an overloaded constant
        """
        theory = TypeTheory(std(), [ConstDecl('0', tt('Nat'))])
        theory.declare(ConstDecl('0', tt('N1')))
        self.assertEqual(2, len(theory.declarations('0')))
        self.assertEqual(2, len(theory.copy().declarations()))
        self.assertEqual(['A', 'B'], standard_theory().declarations('Inl')[0].schematic_names())

    def test_context_lookup(self):
        """
        lookup() should find the last binding of a name
        """
        ctx = TTContext([('x', tt('Nat'))]).extend('x', tt('N0'))
        self.assertEqual(tt('N0'), ctx.lookup('x'))
        self.assertIsNone(ctx.lookup('y'))
