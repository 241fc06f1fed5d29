from uplbench.api_exception_module import UplBenchException


class ParseException(UplBenchException):

    """
    Malformed concrete syntax
    """

    def __init__(self, message, **kwargs):
        """
        Initialize the exception.
        :type message: str
        :param message: error message
        :type line: int
        :param line: line of the offending input (optional)
        :type column: int
        :param column: column of the offending input (optional)
        """
        self.line = kwargs.get('line')
        self.column = kwargs.get('column')
        self.reason = message
        if self.line is not None and self.line > 0:
            message = 'line %s, column %s: %s' % (self.line, self.column, message)
        super(ParseException, self).__init__('parse-error', message,
                                             details={'line': self.line, 'column': self.column})


class SignatureException(UplBenchException):

    """
    Malformed signature file
    """

    def __init__(self, message, **kwargs):
        self.line = kwargs.get('line')
        if self.line is not None:
            message = 'line %s: %s' % (self.line, message)
        super(SignatureException, self).__init__('signature-error', message, details={'line': self.line})
