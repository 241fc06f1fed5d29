from .nbhd_module import NABLA, NfCon, NfArrows


def random_nbhd(rng, constructors, max_complexity):
    """
    Draws a normal form of complexity at most max_complexity.

    :param random.Random rng: source of randomness
    :param dict constructors: constructor name -> arity
    :param int max_complexity: complexity bound
    :rtype: NbhdNF
    """
    if max_complexity <= 0:
        return NABLA
    kind = rng.choice(('nabla', 'con', 'con', 'arrows', 'arrows'))
    if kind == 'nabla':
        return NABLA
    if kind == 'con' and constructors:
        name = rng.choice(sorted(constructors))
        return NfCon(name, tuple(random_nbhd(rng, constructors, max_complexity - 1)
                                 for _ in range(constructors[name])))
    arrows = [(random_nbhd(rng, constructors, max_complexity - 1),
               random_nbhd(rng, constructors, max_complexity - 1))
              for _ in range(rng.randint(1, 3))]
    return NfArrows(frozenset(arrows))


def random_arrows(rng, constructors, max_complexity, size):
    """
    A list of size random arrows whose components have complexity below
    max_complexity.
    """
    return [(random_nbhd(rng, constructors, max_complexity - 1),
             random_nbhd(rng, constructors, max_complexity - 1)) for _ in range(size)]
