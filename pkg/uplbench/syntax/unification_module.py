"""
Robinson unification over constructor patterns, used to decide whether two
rewrite rules overlap.
"""
from .signature_module import PVar, PCon


def occurs_in(name, p):
    if isinstance(p, PVar):
        return p.name == name
    return any(occurs_in(name, a) for a in p.args)


def apply_substitution(p, s):
    if isinstance(p, PVar):
        return apply_substitution(s[p.name], s) if p.name in s else p
    return PCon(p.name, tuple(apply_substitution(a, s) for a in p.args))


def unify(p, q):
    """
    Unifies two patterns.

    :rtype: dict
    :returns: most general unifier (variable name -> pattern)
    :raises ValueError: when the patterns are not unifiable
    """
    if isinstance(p, PVar) and isinstance(q, PVar) and p.name == q.name:
        return {}
    elif isinstance(p, PVar):
        if occurs_in(p.name, q):
            raise ValueError('Not unifiable')
        return {p.name: q}
    elif isinstance(q, PVar):
        if occurs_in(q.name, p):
            raise ValueError('Not unifiable')
        return {q.name: p}
    if p.name != q.name or len(p.args) != len(q.args):
        raise ValueError('Not unifiable')
    return unify_all(p.args, q.args)


def unify_all(ps, qs):
    """
    Unifies two sequences of patterns position by position.
    """
    if len(ps) != len(qs):
        raise ValueError('Not unifiable')
    rv = {}
    for x, y in zip(ps, qs):
        x = apply_substitution(x, rv)
        y = apply_substitution(y, rv)
        rv = compose_substitutions(rv, unify(x, y))
    return rv


def compose_substitutions(r, s):
    s1 = dict((k, v) for k, v in s.items() if k not in r)
    r1 = {}
    for k, v in r.items():
        v = apply_substitution(v, s)
        if isinstance(v, PVar) and v.name == k:
            continue
        r1[k] = v
    r1.update(s1)
    return r1


def rename_apart(patterns, suffix):
    """
    Renames every variable of the patterns by appending suffix.
    """
    def go(p):
        if isinstance(p, PVar):
            return PVar(p.name + suffix)
        return PCon(p.name, tuple(go(a) for a in p.args))
    return tuple(go(p) for p in patterns)
