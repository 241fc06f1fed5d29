import random
import unittest

from uplbench.intersection import infer
from uplbench.neighbourhoods import NABLA, NfCon, arrow
from uplbench.reduction import SN, check_sn
from uplbench.semantics import (BOTTOM, TOP, Certified, SemApprox, Unknown, apply_approx, bottom, certify_all,
                                certify_sn, filter_eq, filter_member, principal, sem_approx, top)
from uplbench.syntax import App, Const, Lam, Var
from tests.uplbench.helpers import OMEGA, nbhd, std, term

ZERO = NfCon('0')
S_ZERO = NfCon('S', (ZERO,))

CLOSED_TERMS = [
    '0', 'S 0', 'S (S 0)', 'Nat', 'N0', 'N1', 'U', 'Inl 0', 'Inr (S 0)', 'Pair 0 (S 0)',
    '\\x. x', '\\x. S x', '\\x. \\y. x', '\\x. \\y. y', '\\x. \\y. Pair y x', '\\f. \\x. f (f x)',
    '(\\x. x) 0', '(\\x. S x) 0', '(\\x. \\y. x) 0 (S 0)', '(\\f. f 0) S', '(\\f. \\x. f (f x)) S 0',
    '(\\x. x) (\\y. y)', '(\\x. x x) (\\y. y)', '(\\x. 0) (\\y. y)', '(\\x. Pair x x) (S 0)',
    'less 0 0', 'less 0 (S 0)', 'less (S 0) 0', 'less (S 0) (S (S 0))', 'less (S (S 0)) (S 0)',
    '0 <= 0', '0 <= S 0', 'S 0 <= 0', 'S 0 <= S (S 0)', 'S (S 0) <= S 0',
    'Rec 0 (\\x. \\r. S r) 0', 'Rec 0 (\\x. \\r. S r) (S 0)', 'Rec 0 (\\x. \\r. S r) (S (S 0))',
    'Rec (S 0) (\\x. \\r. r) (S 0)', 'Rec 0 (\\x. \\r. x) (S (S 0))',
    'vec (\\n. Nat) 0', 'vec (\\n. Nat) (S 0)', 'head 0 (Pair 0 (S 0))', 'tail 0 (Pair 0 (S 0))',
    'not N0', 'not (S 0 <= 0)', '\\x. less x 0', '\\x. less 0 (S x)', '\\p. head 0 p', '0 Nat',
    '(\\x. Inl x) 0', '(\\x. \\y. less x y) 0 (S 0)', '(\\g. g (S 0) 0) less', 'Pair (\\x. x) 0',
]


def _random_closed(rng, bound, size):
    if size <= 1 or (bound and rng.random() < 0.2):
        return rng.choice([Const('0'), Const('Nat')] + [Var(x) for x in bound])
    kind = rng.choice(('lam', 'lam', 'app', 'app', 'S', 'Pair', 'Inl', 'less'))
    if kind == 'lam':
        x = 'x%d' % len(bound)
        return Lam(x, _random_closed(rng, bound + [x], size - 1))
    if kind == 'S' or kind == 'Inl':
        return App(Const(kind), _random_closed(rng, bound, size - 1))
    left = rng.randint(1, size - 2) if size > 2 else 1
    first = _random_closed(rng, bound, left)
    second = _random_closed(rng, bound, max(1, size - 1 - left))
    if kind == 'app':
        return App(first, second)
    return App(App(Const(kind), first), second)


def _well_typed_corpus(count, seed):
    rng = random.Random(seed)
    found = {}
    for _ in range(40 * count):
        if len(found) >= count:
            break
        m = _random_closed(rng, [], rng.randint(2, 9))
        if m.key not in found and infer({}, m, 3, std()):
            found[m.key] = m
    return list(found.values())


class FilterTests(unittest.TestCase):

    def test_filter_member(self):
        """
        filter_member() should accept the neighbourhoods above the least generator
        """
        self.assertTrue(filter_member(TOP, S_ZERO))
        self.assertFalse(filter_member(BOTTOM, NABLA))
        self.assertTrue(filter_member(SemApprox.of(nbhd('S !')), S_ZERO))
        self.assertFalse(filter_member(SemApprox.of(S_ZERO), nbhd('S !')))

    def test_filter_elements(self):
        """
        filter_eq() should tell bottom apart from principal filters
        """
        self.assertTrue(filter_eq(top(), principal(NABLA)))
        self.assertTrue(filter_eq(bottom(), bottom()))
        self.assertFalse(filter_eq(bottom(), top()))
        self.assertTrue(SemApprox.from_filter(bottom()).is_bottom)
        self.assertTrue(filter_eq(principal(NfCon('S', (NABLA,))), SemApprox.of(S_ZERO, nbhd('S Nat')).to_filter()))

    def test_apply_approx(self):
        """
        apply_approx() should collect the codomains of the arrows the argument feeds
        """
        f = SemApprox.of(arrow(ZERO, S_ZERO))
        self.assertEqual(SemApprox.of(S_ZERO), apply_approx(f, SemApprox.of(ZERO)))
        self.assertEqual(BOTTOM, apply_approx(f, SemApprox.of(NfCon('Nat'))))
        self.assertEqual(BOTTOM, apply_approx(SemApprox.of(ZERO), SemApprox.of(ZERO)))
        self.assertEqual(TOP, apply_approx(TOP, SemApprox.of(ZERO)))
        self.assertEqual(BOTTOM, apply_approx(f, BOTTOM))

    def test_sem_approx(self):
        """
        sem_approx() should type the term under the least types of the environment
        """
        approx = sem_approx(term('S x'), {'x': SemApprox.of(ZERO)}, 1, std())
        self.assertEqual(frozenset([S_ZERO]), approx.generators)
        self.assertEqual(1, len(approx.derivations))
        self.assertTrue(sem_approx(term('S x'), {'x': BOTTOM}, 1, std()).is_bottom)
        with self.assertRaises(ValueError):
            sem_approx(term('S x'), {}, 1, std())


class CertifyTests(unittest.TestCase):

    def test_certify_simple_terms(self):
        """
        certify_sn() should certify typable terms and cross check them
        """
        result = certify_sn(term('(\\x. x) 0'), 2, std())
        self.assertIsInstance(result, Certified)
        self.assertEqual(ZERO, result.nbhd)
        self.assertEqual(1, result.depth)
        self.assertIsInstance(result.sn, SN)
        self.assertTrue(result.sound)
        self.assertEqual(Certified(NABLA, 1), certify_sn(term('x'), 1, std(), cross_check=False))

    def test_certify_incomplete(self):
        """
        certify_sn() should answer unknown for a strongly normalising term without a type
        """
        for depth in range(1, 6):
            self.assertEqual(Unknown(depth), certify_sn(term('0 Nat'), depth, std()))

    def test_certify_omega(self):
        """
        certify_sn() should never certify a diverging term
        """
        self.assertEqual(Unknown(2), certify_sn(term(OMEGA), 2, std()))

    def test_certify_all(self):
        """
        certify_all() should report no violation on sound certificates
        """
        results, violations = certify_all([term('0'), term('0 Nat')], std(), depth=2)
        self.assertIsInstance(results[0], Certified)
        self.assertIsInstance(results[1], Unknown)
        self.assertEqual([], violations)
        with self.assertRaises(ValueError):
            certify_sn(term('0'), 0, std())

    def test_certified_corpus_is_strongly_normalising(self):
        """
        certify_sn() should only certify terms whose reduction graph is finite, over hand-written and random typed terms
        """
        sig = std()
        corpus = [term(text) for text in CLOSED_TERMS] + _well_typed_corpus(160, seed=11)
        self.assertGreaterEqual(len(corpus), 200)
        certified = 0
        for m in corpus:
            self.assertEqual(frozenset(), m.free)
            result = certify_sn(m, 3, sig, cross_check=False)
            if isinstance(result, Certified):
                certified += 1
                self.assertIsInstance(check_sn(m, sig), SN, str(m))
        self.assertGreater(certified, 50)
