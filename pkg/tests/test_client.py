from __future__ import absolute_import
import os
import shutil
import tempfile
import unittest
import six

import uplbench
from uplbench import client
from uplbench.client_module import _client_classes
from uplbench.intersection import Valid
from uplbench.mltt import PASS
from uplbench.reduction import NotSN
from uplbench.stdlib import dns_script_text

if six.PY3:
    from unittest.mock import patch
    builtins = 'builtins'
else:
    from mock import patch
    builtins = '__builtin__'

PRED_SIG = '''
constructor 0 0
constructor S 1
defined pred 1
rule pred 0 = 0
rule pred (S x) = x
'''


class ClientTests(unittest.TestCase):

    def test_call_with_standard_signature(self):
        """
        Call of client() should return client instance for the standard signature
        """
        api = client()
        self.assertIsInstance(api, uplbench.Client)
        self.assertTrue(api.sig.is_defined('less'))

    def test_call_with_signature_file(self):
        """
        Call of client() should load a signature file
        """
        folder = tempfile.mkdtemp()
        try:
            path = os.path.join(folder, 'pred.sig')
            with open(path, 'w') as f:
                f.write(PRED_SIG)
            api = client(path, fuel=100)
            self.assertEqual('0', str(api.normalize('pred (S 0)').term))
            self.assertTrue(api.validate().ok)
        finally:
            shutil.rmtree(folder)

    def test_call_with_invalid_signature(self):
        """
        Call of client() should raise error for a missing signature file
        """
        with self.assertRaises(ValueError):
            client('Non existing signature')

    def test_call_with_invalid_options(self):
        """
        Call of client() should raise error for non-positive bounds
        """
        with self.assertRaises(ValueError):
            client(depth=0)

    def test_call_with_caching_client_class_name(self):
        """
        Call of client() should cache client class
        """
        _client_classes.clear()
        orig_import = __import__
        with patch('%s.__import__' % builtins, side_effect=orig_import) as p:
            client()
            client()
            loads = [c for c in p.call_args_list if c[0][0] == 'uplbench.workbench_module']
            self.assertEqual(1, len(loads))

    def test_workbench_operations(self):
        """
        Client methods should accept terms and neighbourhoods as text
        """
        api = client(depth=2)
        self.assertIsInstance(api.check_sn('(\\x. x x) (\\x. x x)'), NotSN)
        self.assertTrue(api.leq('!', 'S !'))
        self.assertIsInstance(api.check_type('S x', 'S 0', 'x : 0'), Valid)
        self.assertIsInstance(api.check_type('S x', 'S 0', {'x': '0'}), Valid)
        self.assertTrue(api.check_term([('n', 'Nat')], 'S n', 'Nat'))
        self.assertEqual(PASS, api.run_script(dns_script_text()).outcome)
