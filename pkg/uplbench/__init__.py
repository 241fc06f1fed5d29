from .api_exception_module import UplBenchException
from .client_module import client
from .version import __version__


def __getattr__(name):
    if name == 'Client':
        from .workbench_module import Client
        return Client
    raise AttributeError('module %r has no attribute %r' % (__name__, name))
