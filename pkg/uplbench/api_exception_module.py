class UplBenchException(Exception):

    """
    Base class of every error raised by the workbench
    """

    def __init__(self, code, message, **kwargs):
        """
        Initialize the exception.
        :type code: str
        :param code: short machine readable error code
        :type message: str
        :param message: error message
        :type details: dict
        :param details: optional extra data (positions, offending terms...)

        :rtype: uplbench.UplBenchException
        :returns: instance of exception
        """
        self.code = code
        self.message = message
        self.details = kwargs.get('details') or {}

    def __str__(self):
        return 'Error %s: %s' % (self.code, self.message)
