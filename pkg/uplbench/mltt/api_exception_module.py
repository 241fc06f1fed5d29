from uplbench.api_exception_module import UplBenchException


class DuplicateNameException(UplBenchException):

    """
    A context binds the same name twice
    """

    def __init__(self, name, **kwargs):
        self.name = name
        super(DuplicateNameException, self).__init__('duplicate-name', '"%s" is bound twice' % name, **kwargs)


class UnknownConstantException(UplBenchException):

    """
    A constant has no declared type
    """

    def __init__(self, name, **kwargs):
        self.name = name
        super(UnknownConstantException, self).__init__(
            'unknown-constant', 'no declared type for "%s"' % name, **kwargs)


class UnsupportedJudgementException(UplBenchException):

    """
    A judgement outside what the type theory can state, such as ``U : U``
    """

    def __init__(self, message, **kwargs):
        super(UnsupportedJudgementException, self).__init__('unsupported-judgement', message, **kwargs)


class ScriptException(UplBenchException):

    """
    Malformed type theory script
    """

    def __init__(self, message, **kwargs):
        self.line = kwargs.get('line')
        if self.line is not None:
            message = 'line %s: %s' % (self.line, message)
        super(ScriptException, self).__init__('script-error', message, details={'line': self.line})
