import io
import os

STANDARD = 'std'

_client_classes = {}
_signatures = {}


def _resolve_signature(signature):
    from uplbench.syntax import Signature, load_signature
    from uplbench.stdlib import standard_signature

    if isinstance(signature, Signature):
        return signature
    if signature == STANDARD:
        return standard_signature()
    if not os.path.isfile(signature):
        raise ValueError('Invalid signature "%s". Use "%s" or the path of a signature file' % (signature, STANDARD))
    sig = _signatures.get(signature)
    if sig is None:
        with io.open(signature, encoding='utf-8') as f:
            sig = load_signature(f.read())
        _signatures[signature] = sig
    return sig


def client(signature=STANDARD, **options):
    """
    Initialize a workbench client.

    :param signature: "std", the path of a signature file, or a Signature
    :param int fuel: reduction fuel (optional, default value is 100000)
    :param int depth: neighbourhood complexity bound (optional, default value is 3)
    :param int delta: extra depth of model equation checks (optional, default value is 2)
    :param int max_steps: type search step budget (optional, default value is 200000)

    :rtype: uplbench.Client
    :returns: workbench client

    :Example: Create a client over the standard library

    >>> api = uplbench.client()

    >>> api = uplbench.client('my.sig', fuel=1000, depth=2)

    """
    client_class = _client_classes.get('workbench')
    if client_class is None:
        client_class = getattr(__import__('uplbench.workbench_module'), 'workbench_module').Client
        _client_classes['workbench'] = client_class
    return client_class(_resolve_signature(signature), **options)
