import unittest

from hypothesis import given, settings

from uplbench.syntax import App, Const, Inst, Lam, Var, alpha_eq, apply, constants, erase, free_vars, parse_term
from uplbench.syntax import print_term, spine, substitute, substitute_all, term_size
from tests.uplbench.helpers import std
from tests.uplbench.strategies import terms


class TermTests(unittest.TestCase):

    def test_alpha_equal_terms_are_equal(self):
        """
        == should ignore the names of bound variables
        """
        self.assertEqual(Lam('x', Var('x')), Lam('y', Var('y')))
        self.assertNotEqual(Lam('x', Var('y')), Lam('y', Var('y')))
        self.assertEqual(hash(Lam('x', Var('x'))), hash(Lam('y', Var('y'))))

    def test_named_key(self):
        """
        named_key should tell alpha equal terms apart by their binders
        """
        self.assertNotEqual(Lam('x', Var('x')).named_key, Lam('y', Var('y')).named_key)

    def test_free_vars(self):
        """
        free_vars() should return the variables not bound by an abstraction
        """
        self.assertEqual(frozenset(['y']), free_vars(Lam('x', App(Var('x'), Var('y')))))
        self.assertEqual(frozenset(), free_vars(Const('S')))

    def test_substitute_avoids_capture(self):
        """
        substitute() should rename a binder that would capture the replacement
        """
        result = substitute(Lam('y', Var('x')), 'x', Var('y'))
        self.assertEqual(Lam('z', Var('y')), result)
        self.assertNotEqual('y', result.binder)

    def test_substitute_bound_occurrence(self):
        """
        substitute() should leave bound occurrences alone
        """
        m = Lam('x', Var('x'))
        self.assertIs(m, substitute(m, 'x', Const('0')))

    def test_substitute_all_is_simultaneous(self):
        """
        substitute_all() should not substitute into the replacements
        """
        m = App(Var('x'), Var('y'))
        self.assertEqual(App(Var('y'), Var('x')), substitute_all(m, {'x': Var('y'), 'y': Var('x')}))

    def test_spine_and_apply(self):
        """
        spine() should undo apply()
        """
        m = apply(Const('Pair'), Const('0'), Var('x'))
        self.assertEqual((Const('Pair'), [Const('0'), Var('x')]), spine(m))
        self.assertEqual(5, term_size(m))

    def test_erase(self):
        """
        erase() should replace instantiation annotations by bare constants
        """
        m = App(Inst('exit', (('A', Const('Nat')),)), Var('p'))
        self.assertEqual(App(Const('exit'), Var('p')), erase(m))
        self.assertEqual({'exit', 'Nat'}, constants(m))

    def test_print_term(self):
        """
        print_term() should print infix constants, arrows and products
        """
        sig = std()
        for text in ['S 0', '\\x. S x', 'x <= S y', '(+)', 'Nat -> U', 'Pi A:U. A -> A', 'Phi B H K 0 0',
                     'vec B x * B x', '(\\x. x) (S 0)']:
            self.assertEqual(text, print_term(parse_term(text, sig)))

    @given(terms())
    @settings(max_examples=200, derandomize=True)
    def test_print_parse(self, m):
        """
        parse_term() should read back what print_term() prints
        """
        self.assertEqual(m, parse_term(print_term(m), std()))

    @given(terms(), terms())
    @settings(max_examples=200, derandomize=True)
    def test_substitution_free_vars(self, n, m):
        """
        substitute() should replace exactly the free occurrences of the variable
        """
        expected = set(n.free) - {'x'}
        if 'x' in n.free:
            expected |= m.free
        self.assertEqual(expected, set(substitute(n, 'x', m).free))

    @given(terms())
    @settings(max_examples=100, derandomize=True)
    def test_substitute_unused_variable(self, n):
        """
        substitute() should not change a term without free occurrences of the variable
        """
        self.assertTrue(alpha_eq(n, substitute(n, 'w', Const('0'))))
