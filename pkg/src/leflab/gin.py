"""Generic initial ideals (degrevlex) by random change of coordinates.

A trial draws a dense integer matrix with entries in [-B, B], moves the ideal
and takes its leading term ideal.  The result is accepted once two trials
agree and the common answer is strongly stable; each retry doubles B.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field

from .groebner import Ideal, MonomialIdeal, saturate
from .hilbert import hilbert_function
from .polyring import LinearChange, Polynomial

log = logging.getLogger(__name__)

DEFAULT_SEED = 0xC0FFEE
DEFAULT_BOUND = 1000
DEFAULT_RETRIES = 8


class GinError(RuntimeError):
    """No two random trials agreed on a strongly stable ideal."""


@dataclass
class GinCertificate:
    result: MonomialIdeal
    trials_agreeing: int
    seed: int
    coefficient_bound: int
    strongly_stable: bool
    trials: int = 0
    history: list = field(default_factory=list)
    # a change whose leading term ideal equals ``result``; reused for saturation
    change: LinearChange | None = None
    moved: Ideal | None = None


def is_strongly_stable(M: MonomialIdeal) -> bool:
    n = M.nvars
    for t in M.mingens:
        for j in range(1, n):
            if not t[j]:
                continue
            for i in range(j):
                s = list(t)
                s[j] -= 1
                s[i] += 1
                if not M.contains(s):
                    return False
    return True


def regularity(M: MonomialIdeal) -> int:
    """Largest minimal generator degree; 0 for the unit and zero ideals."""
    if not is_strongly_stable(M):
        raise ValueError(f"{M} is not strongly stable")
    return max((sum(g) for g in M.mingens), default=0)


def gin_saturate(M: MonomialIdeal) -> MonomialIdeal:
    """Set x_n = 1 in every generator and re-minimalize."""
    return MonomialIdeal([g[:-1] + (0,) for g in M.mingens], M.nvars)


def random_change(rng: random.Random, nvars: int, bound: int) -> LinearChange:
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(nvars)] for _ in range(nvars)]
        try:
            return LinearChange(rows)
        except ValueError:
            continue


_CACHE: dict = {}


def _ideal_key(I: Ideal):
    return (I.nvars, tuple(sorted((tuple(sorted(g.terms.items())) for g in I.generators))))


def clear_cache():
    _CACHE.clear()


def rgin(I: Ideal, seed: int | None = None, bound: int = DEFAULT_BOUND,
         max_retries: int = DEFAULT_RETRIES) -> GinCertificate:
    """Generic initial ideal of I for degrevlex, with its certificate.

    Deterministic in ``seed``; raises :class:`GinError` after ``max_retries``
    trials without two agreeing strongly stable answers.
    """
    seed = DEFAULT_SEED if seed is None else seed
    key = (_ideal_key(I), seed, bound, max_retries)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    n = I.nvars
    if I.is_zero():
        cert = GinCertificate(MonomialIdeal([], n), 2, seed, bound, True, 0,
                              change=LinearChange.identity(n), moved=I)
        _CACHE[key] = cert
        return cert
    rng = random.Random(seed)
    seen: list = []
    b = bound
    for trial in range(max_retries):
        if trial >= 2:
            b *= 2
        g = random_change(rng, n, b)
        moved = I.apply_change(g)
        lt = moved.leading_term_ideal()
        stable = is_strongly_stable(lt)
        log.debug("gin trial %d (bound %d): %s stable=%s", trial, b, lt, stable)
        match = next((s for s in seen if s[0] == lt), None)
        seen.append((lt, g, moved, b))
        if match is not None and stable:
            cert = GinCertificate(lt, sum(1 for s in seen if s[0] == lt), seed, b, True,
                                  trial + 1, [s[0] for s in seen], change=match[1],
                                  moved=match[2])
            _CACHE[key] = cert
            return cert
    raise GinError(f"gin did not stabilize after {max_retries} trials: "
                   + "; ".join(str(s[0]) for s in seen))


def saturation(I: Ideal, seed: int | None = None, **gin_options) -> Ideal:
    """I^sat = I : m^infinity through generic coordinates, certified by Hilbert
    functions against the saturated gin."""
    from .groebner import irrelevant_saturation  # noqa: F401  (same construction)
    from .polyring import apply_change

    cert = rgin(I, seed, **gin_options)
    n = I.nvars
    target = gin_saturate(cert.result)
    top = max((sum(g) for g in cert.result.mingens), default=0) + 1
    rng = random.Random((cert.seed, "saturation").__repr__())
    g, moved = cert.change, cert.moved
    for attempt in range(gin_options.get("max_retries", DEFAULT_RETRIES)):
        sat = saturate(moved, Polynomial.variable(n - 1, n))
        lt = sat.leading_term_ideal()
        if all(hilbert_function(lt, d) == hilbert_function(target, d) for d in range(top + 1)):
            return Ideal([apply_change(h, g.inverse()) for h in sat.groebner_basis()], n)
        log.debug("saturation certificate failed on attempt %d", attempt)
        g = random_change(rng, n, cert.coefficient_bound)
        moved = I.apply_change(g)
    raise GinError("saturation could not be certified")


def is_saturated(I: Ideal, seed: int | None = None, **gin_options) -> bool:
    """True iff no minimal generator of rgin(I) involves the last variable."""
    M = rgin(I, seed, **gin_options).result
    return not any(g[-1] for g in M.mingens)
