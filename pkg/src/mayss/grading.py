"""Prime context, tridegrees, and base-p degree profiles.

Everything downstream is graded by a tridegree (s, t, u): s is the filtration
(homological degree), t the internal degree, u the auxiliary weight.  Internal
degrees decompose uniquely as t = q*(c_n p^n + ... + c_1 p + c_0) + c_{-1}
with q = 2(p-1), 0 <= c_j < p, 0 <= c_{-1} < q; that profile drives both the
fast vanishing tests and the enumeration pruning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeContext:
    """An odd prime p >= 5 together with q = 2(p-1)."""

    p: int
    q: int


def make_context(p: int) -> PrimeContext:
    """Validate p and build the context all other operations take."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 5 or not _is_prime(p):
        raise ParameterError("p=%r is not an odd prime >= 5" % (p,))
    return PrimeContext(p=p, q=2 * (p - 1))


@dataclass(frozen=True)
class Tridegree:
    s: int
    t: int
    u: int

    def __add__(self, other: "Tridegree") -> "Tridegree":
        return Tridegree(self.s + other.s, self.t + other.t, self.u + other.u)

    def scaled(self, e: int) -> "Tridegree":
        return Tridegree(e * self.s, e * self.t, e * self.u)


ZERO_DEGREE = Tridegree(0, 0, 0)


def stem(d: Tridegree) -> int:
    """Topological dimension t - s of a tridegree."""
    return d.t - d.s


@dataclass(frozen=True)
class PAdicProfile:
    """The unique expansion t = q*sum(digits[j] * p^j) + c_minus1.

    digits has no trailing zeros (the top digit is nonzero); t = 0 is the
    empty profile (c_minus1 = 0, digits = ()).
    """

    c_minus1: int
    digits: tuple[int, ...]

    @property
    def top(self) -> int:
        """Index of the highest digit, -1 when there are no digits."""
        return len(self.digits) - 1


def padic_profile(t: int, ctx: PrimeContext) -> PAdicProfile:
    """Decompose a nonnegative internal degree into its profile."""
    if t < 0:
        raise ParameterError("internal degree must be nonnegative, got %d" % t)
    body, c_minus1 = divmod(t, ctx.q)
    digits = []
    while body:
        body, r = divmod(body, ctx.p)
        digits.append(r)
    return PAdicProfile(c_minus1=c_minus1, digits=tuple(digits))


def profile_to_degree(profile: PAdicProfile, ctx: PrimeContext) -> int:
    """Inverse of padic_profile; validates the digit bounds."""
    if not 0 <= profile.c_minus1 < ctx.q:
        raise ParameterError("c_minus1=%d out of range [0, %d)" % (profile.c_minus1, ctx.q))
    for j, c in enumerate(profile.digits):
        if not 0 <= c < ctx.p:
            raise ParameterError("digit c_%d=%d out of range [0, %d)" % (j, c, ctx.p))
    if profile.digits and profile.digits[-1] == 0:
        raise ParameterError("top digit must be nonzero")
    body = 0
    for c in reversed(profile.digits):
        body = body * ctx.p + c
    return ctx.q * body + profile.c_minus1


def generator_tridegree(kind: str, i: int, j: int | None, ctx: PrimeContext) -> Tridegree:
    """Tridegree of a single multiplicative generator.

    kind "h": exterior, (1, 2(p^i - 1) p^j, 2i - 1), i >= 1, j >= 0.
    kind "b": polynomial, (2, 2(p^i - 1) p^(j+1), (2i - 1) p), i >= 1, j >= 0.
    kind "a": polynomial, (1, 2 p^i - 1, 2i + 1), i >= 0, no second index.
    """
    p = ctx.p
    if kind == "h":
        if i < 1 or j is None or j < 0:
            raise ParameterError("h requires i >= 1 and j >= 0, got (%r, %r)" % (i, j))
        return Tridegree(1, 2 * (p**i - 1) * p**j, 2 * i - 1)
    if kind == "b":
        if i < 1 or j is None or j < 0:
            raise ParameterError("b requires i >= 1 and j >= 0, got (%r, %r)" % (i, j))
        return Tridegree(2, 2 * (p**i - 1) * p ** (j + 1), (2 * i - 1) * p)
    if kind == "a":
        if i < 0 or j is not None:
            raise ParameterError("a requires a single index i >= 0, got (%r, %r)" % (i, j))
        return Tridegree(1, 2 * p**i - 1, 2 * i + 1)
    raise ParameterError("unknown generator kind %r" % (kind,))
