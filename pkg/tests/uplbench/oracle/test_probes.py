import unittest

from uplbench.oracle import FAIL, PASS, Member, NotTerminatingException, Probe, Seed, parse_probes, run_probes
from uplbench.syntax import ParseException
from tests.uplbench.helpers import OMEGA, std

PASSING = '''
# every probe holds
seed (\\z. z) 0
member \\x. x : 0 -> 0
probe x : 0 |- S x : S 0
'''

FAILING = '''
member 0 : S !
probe |- 0 : S !
'''


class ProbeTests(unittest.TestCase):

    def test_parse_probes(self):
        """
        parse_probes() should keep the line of each probe
        """
        probes = parse_probes(PASSING, std())
        self.assertEqual([3, 4, 5], [line for line, _, _ in probes])
        self.assertEqual([Seed, Member, Probe], [type(item) for _, _, item in probes])
        self.assertEqual(['x'], probes[2][2].context.names())

    def test_parse_probes_errors(self):
        """
        parse_probes() should reject unknown and malformed lines
        """
        for text in ['frob 0', 'member 0', 'probe x : 0 S x : S 0']:
            with self.assertRaises(ParseException) as ctx:
                parse_probes('\n' + text, std())
            self.assertEqual(2, ctx.exception.line)

    def test_run_probes_pass(self):
        """
        run_probes() should pass members and sound judgements
        """
        report = run_probes(PASSING, std())
        self.assertEqual(PASS, report.outcome)
        self.assertEqual(6, report.universe_size)
        self.assertEqual([PASS, PASS], [r.outcome for r in report.results])

    def test_run_probes_fail(self):
        """
        run_probes() should fail non members and underivable judgements
        """
        report = run_probes(FAILING, std())
        self.assertEqual(FAIL, report.outcome)
        self.assertEqual([FAIL, FAIL], [r.outcome for r in report.results])
        self.assertEqual('fail', report.to_dict()['outcome'])

    def test_run_probes_diverging_seed(self):
        """
        run_probes() should refuse a diverging seed
        """
        with self.assertRaises(NotTerminatingException):
            run_probes('seed %s\n' % OMEGA, std())
