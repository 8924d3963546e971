"""Deliberate single-exponent faults used to show the suites are not vacuous.

A mutation is switched on through ``COVERING_SERRE_MUTATION`` (comma
separated names, inherited by worker processes) or the :func:`mutate`
context manager.  Engine code asks :func:`active` at the formula site.
"""
import contextlib
import os

#: name -> formula family it perturbs
KNOWN = {
    "commute_pi": "F^(a)E^(b) reordering: pi exponent ab+jm+C(j,2) gains +j",
    "dot_pi_a": "dot expansion of divided powers: drops the pi^a factor",
    "iserre_sign": "iSerre sum sign: pi exponent n*p(j)+C(n,2) loses C(n,2)",
    "t_q_exponent": "T(w,u,l) summand: q exponent (l+u)(c-e) gains +1",
    "zpoly_q_exponent": "binomial theorem sum: q^(-k(m-1)) becomes q^(-km)",
}

_active = {
    name.strip()
    for name in os.environ.get("COVERING_SERRE_MUTATION", "").split(",")
    if name.strip()
}
_caches = []


def active(name):
    return name in _active


def register_cache(fn):
    """Record an ``lru_cache``-wrapped function whose values depend on mutations."""
    _caches.append(fn)
    return fn


def _clear():
    for fn in _caches:
        fn.cache_clear()


def current():
    return sorted(_active)


@contextlib.contextmanager
def mutate(*names):
    for name in names:
        if name not in KNOWN:
            raise KeyError(f"unknown mutation {name!r}")
    saved = set(_active)
    _active.update(names)
    _clear()
    try:
        yield
    finally:
        _active.clear()
        _active.update(saved)
        _clear()
