import re

import six


def convert_string_to_snake_case(s):
    """
    Changes String from CamelCase to snake_case
    :param s: String to convert
    :rtype: String
    :returns: String converted to snake_case
    """
    a = re.compile('((?<=[a-z0-9])[A-Z]|(?!^)[A-Z](?=[a-z]))')
    return a.sub(r'_\1', s).lower()


def convert_list_to_json(a):
    """
    Iterates over a list (or tuple, set) and converts every item
    :param a: sequence to convert
    :rtype: list
    :returns: list of JSON ready values
    """
    return [to_json_object(i) for i in a]


def convert_dict_to_json(d):
    """
    Iterates over a dictionary, converts the values and changes the keys
    from CamelCase to snake_case
    :param d: Dictionary to convert
    :rtype: dict
    :returns: dictionary with each key converted to snake_case
    """
    out = {}
    for k, v in six.iteritems(d):
        out[convert_string_to_snake_case(str(k))] = to_json_object(v)
    return out


def to_json_object(o):
    """
    Converts a result object into values the json module can dump.
    Objects exposing ``to_dict()`` are converted through it.
    :param o: value, Dictionary, sequence or result object
    :rtype: object
    :returns: JSON ready value
    """
    if hasattr(o, 'to_dict'):
        return to_json_object(o.to_dict())
    elif isinstance(o, dict):
        return convert_dict_to_json(o)
    elif isinstance(o, (list, tuple)):
        return convert_list_to_json(o)
    elif isinstance(o, (set, frozenset)):
        return sorted(convert_list_to_json(o), key=str)
    elif o is None or isinstance(o, (bool, int, float) + six.string_types):
        return o
    else:
        return str(o)
