import unittest

from uplbench.syntax import App, Const, Lam, Var, ParseException, load_signature, parse_term, print_term
from tests.uplbench.helpers import std


class ParserTests(unittest.TestCase):

    def test_parse_term(self):
        """
        parse_term() should turn declared identifiers into constants
        """
        self.assertEqual(Lam('x', App(Const('S'), Var('x'))), parse_term('\\x. S x', std()))
        self.assertEqual(Lam('x', App(Const('S'), Var('x'))), parse_term(u'λx. S x', std()))
        self.assertEqual(Var('foo'), parse_term('foo', std()))

    def test_parse_term_binder_shadows_constant(self):
        """
        parse_term() should read a bound identifier as a variable even when it names a constant
        """
        self.assertEqual(Lam('S', Var('S')), parse_term('\\S. S', std()))

    def test_parse_infix(self):
        """
        parse_term() should read infix constants left associative
        """
        m = parse_term('x <= y', std())
        self.assertEqual(App(App(Const('<='), Var('x')), Var('y')), m)
        self.assertEqual(m, parse_term(u'x ≤ y', std()))
        self.assertEqual(Const('+'), parse_term('(+)', std()))

    def test_parse_aliases(self):
        """
        parse_term() should accept the Greek names of Phi and Psi
        """
        self.assertEqual(parse_term('Phi B H K 0 0', std()), parse_term(u'Φ B H K 0 0', std()))

    def test_parse_pi(self):
        """
        parse_term() should encode Pi and arrows with Fun
        """
        m = parse_term('Nat -> U', std())
        self.assertEqual(App(App(Const('Fun'), Const('Nat')), Lam('_', Const('U'))), m)
        pi = parse_term('Pi n:Nat. vec B n', std())
        self.assertEqual('Pi n:Nat. vec B n', print_term(pi))

    def test_parse_pi_after_arrow(self):
        """
        parse_term() should accept a Pi binder as the codomain of an arrow
        """
        m = parse_term('Nat -> Pi n:Nat. vec B n', std())
        pi = parse_term('Pi n:Nat. vec B n', std())
        self.assertEqual(App(App(Const('Fun'), Const('Nat')), Lam('_', pi)), m)
        self.assertEqual(m, parse_term('Nat -> (Pi n:Nat. vec B n)', std()))
        self.assertEqual(m, parse_term(print_term(m), std()))
        rec = parse_term('C 0 -> (Pi n:Nat. C n -> C (S n)) -> Pi n:Nat. C n', std())
        self.assertEqual(rec, parse_term(print_term(rec), std()))

    def test_parse_lambda_after_arrow(self):
        """
        parse_term() should accept an abstraction as the codomain of an arrow
        """
        m = parse_term('Nat -> \\x. x', std())
        self.assertEqual(App(App(Const('Fun'), Const('Nat')), Lam('_', Lam('x', Var('x')))), m)

    def test_parse_arrow_without_fun(self):
        """
        parse_term() should reject arrows when the signature has no Fun
        """
        sig = load_signature('constructor 0 0\n')
        with self.assertRaises(ParseException):
            parse_term('0 -> 0', sig)

    def test_parse_undeclared_operator(self):
        """
        parse_term() should reject an infix constant missing from the signature
        """
        sig = load_signature('constructor 0 0\n')
        with self.assertRaises(ParseException):
            parse_term('0 + 0', sig)

    def test_parse_annotation(self):
        """
        parse_term() should only accept instantiation annotations when asked to
        """
        with self.assertRaises(ParseException):
            parse_term('exit{A := Nat} p', std())
        m = parse_term('exit{A := Nat} p', std(), allow_annotations=True)
        self.assertEqual('exit{A := Nat} p', print_term(m))

    def test_parse_error_position(self):
        """
        parse_term() should report where the input stops making sense
        """
        with self.assertRaises(ParseException) as ctx:
            parse_term('\\x. ) y', std())
        self.assertEqual(1, ctx.exception.line)
        self.assertIsNotNone(ctx.exception.column)
        self.assertTrue(str(ctx.exception).startswith('Error parse-error: line 1'))
