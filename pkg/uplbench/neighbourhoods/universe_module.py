import itertools

from .nbhd_module import NABLA, NfCon, NfArrows, arrow, complexity


def get_lazy_enumerator(get_first_level):
    """
    Returns neighbourhoods as "lazy" collection.
    Builds new complexity levels on demand only.
    :type get_first_level: types.FunctionType
    :param get_first_level: function which returns the members of the first
        level and the function building the next one (or None)

    :rtype: types.GeneratorType
    :returns: lazy collection
    """
    get_level = get_first_level
    while get_level is not None:
        items, get_level = get_level()
        for item in items:
            yield item


def _single_arrows(us):
    return [u for u in us if isinstance(u, NfArrows) and len(u.arrows) == 1]


def _build_level(k, constructors, levels, pairs):
    if k == 0:
        return [NABLA]
    below = [u for level in levels for u in level]
    items = []
    for name, arity in constructors:
        if arity == 0:
            if k == 1:
                items.append(NfCon(name))
            continue
        for args in itertools.product(below, repeat=arity):
            if max(complexity(a) for a in args) == k - 1:
                items.append(NfCon(name, args))
    singles = [arrow(d, c) for d in below for c in below if max(complexity(d), complexity(c)) == k - 1]
    items.extend(singles)
    if pairs:
        earlier = _single_arrows(below)
        for i, a in enumerate(singles):
            for b in singles[i + 1:] + earlier:
                items.append(NfArrows(a.arrows | b.arrows))
    items.sort(key=str)
    return items


def iter_nbhd_universe(constructors, max_complexity, pairs=True):
    """
    Enumerates normal forms level by level: ∇, then everything of complexity
    1, then complexity 2 and so on. Arrow sets have one member, or two when
    pairs is set.

    :param dict constructors: constructor name -> arity
    :param int max_complexity: last level produced
    :param bool pairs: also produce meets of two arrows
    :rtype: types.GeneratorType
    """
    constructors = sorted(constructors.items())
    levels = []

    def level_getter(k):
        def get_level():
            items = _build_level(k, constructors, levels, pairs)
            levels.append(items)
            return items, (level_getter(k + 1) if k < max_complexity else None)
        return get_level

    return get_lazy_enumerator(level_getter(0))


def nbhd_universe(constructors, max_complexity, pairs=True, limit=None):
    """
    The complexity-stratified universe of normal forms.

    :param dict constructors: constructor name -> arity
    :param int max_complexity: largest complexity included
    :param bool pairs: include meets of two arrows
    :param int limit: keep only the first limit members (optional)
    :rtype: tuple

    :Example:

    >>> nbhd_universe({'0': 0}, 1)
    (NABLA, NfArrows([(NABLA, NABLA)]), NfCon('0', ()))
    """
    return tuple(itertools.islice(iter_nbhd_universe(constructors, max_complexity, pairs), limit))
