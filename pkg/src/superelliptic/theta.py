"""Half-integer theta characteristic combinatorics for hyperelliptic
curves: parity, syzygy, Goepel group counting, the branch-point
characteristic map, and the combinatorial vanishing criterion for even
thetanulls.

Characteristics are stored as bit vectors (bit 1 standing for the entry
1/2); all arithmetic is mod 2.  The parity and pairing conventions are
locked by the genus 2 census (10 even and 6 odd characteristics).
"""

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .errors import DomainError


@dataclass(frozen=True)
class HalfIntChar:
    top: tuple
    bottom: tuple

    def __post_init__(self):
        if len(self.top) != len(self.bottom):
            raise DomainError("top and bottom rows differ in length")
        if not all(b in (0, 1) for b in self.top + self.bottom):
            raise DomainError("entries must be 0 or 1 (standing for 0 or 1/2)")

    @property
    def g(self):
        return len(self.top)

    @classmethod
    def zero(cls, g):
        return cls((0,) * g, (0,) * g)

    def __add__(self, other):
        if self.g != other.g:
            raise DomainError("mixed genus")
        return HalfIntChar(
            tuple((a + b) % 2 for a, b in zip(self.top, other.top)),
            tuple((a + b) % 2 for a, b in zip(self.bottom, other.bottom)),
        )

    def halves(self):
        """Entries as exact fractions (0 or 1/2), top row then bottom."""
        from fractions import Fraction
        h = Fraction(1, 2)
        return (
            tuple(b * h for b in self.top),
            tuple(b * h for b in self.bottom),
        )


def parity(m):
    """+1 for even characteristics, -1 for odd: (-1)^(4 m' . m'')."""
    return -1 if sum(a * b for a, b in zip(m.top, m.bottom)) % 2 else 1


def all_characteristics(g):
    for top in product((0, 1), repeat=g):
        for bottom in product((0, 1), repeat=g):
            yield HalfIntChar(top, bottom)


def pairing(m, a):
    """|m, a| = sum (m_i' a_i - m_i a_i') taken mod 2."""
    if m.g != a.g:
        raise DomainError("mixed genus")
    return sum(mb * at - mt * ab for mt, mb, at, ab in
               zip(m.top, m.bottom, a.top, a.bottom)) % 2


def syzygetic(m, a):
    return pairing(m, a) == 0


def triple_pairing(m, a, b):
    return (pairing(a, b) + pairing(b, m) + pairing(m, a)) % 2


def triple_syzygetic(m, a, b):
    return triple_pairing(m, a, b) == 0


def parity_census(g):
    """(number even, number odd) among all 2^(2g) characteristics."""
    even = sum(1 for m in all_characteristics(g) if parity(m) == 1)
    return even, 4**g - even


def gopel_count(g, r):
    """Number of Goepel groups (totally syzygetic subgroups) of order 2^r."""
    if not 0 <= r <= g:
        raise DomainError("need 0 <= r <= g")
    num = 1
    for j in range(r):
        num *= 2 ** (2 * g - 2 * j) - 1
    den = 1
    for j in range(1, r + 1):
        den *= 2**j - 1
    if num % den:
        raise AssertionError("Goepel count is not integral")  # pragma: no cover
    return num // den


def gopel_groups(g, r):
    """Brute-force list of all Goepel groups of order 2^r (small g only)."""
    chars = [m for m in all_characteristics(g)]
    nonzero = [m for m in chars if any(m.top) or any(m.bottom)]
    found = set()
    zero = HalfIntChar.zero(g)

    def extend(basis, span):
        if len(basis) == r:
            found.add(frozenset(span))
            return
        for m in nonzero:
            if m in span:
                continue
            if any(not syzygetic(m, b) for b in span):
                continue
            new_span = set(span)
            for s in list(span):
                new_span.add(s + m)
            extend(basis + [m], new_span)

    extend([], {zero})
    return [sorted(s, key=lambda c: (c.top, c.bottom)) for s in found]


def branch_characteristic(g, T):
    """eps_T = sum of eps(k) over k in T, for branch indices in 1..2g+1."""
    zero = HalfIntChar.zero(g)
    acc = zero
    for k in T:
        acc = acc + _eps(g, k)
    return acc


def _eps(g, k):
    if not 1 <= k <= 2 * g + 1:
        raise DomainError(f"branch index {k} out of range 1..{2 * g + 1}")
    if k % 2 == 1:
        i = (k + 1) // 2  # 1-based column of the 1/2 in the top row
        if i == g + 1:
            return HalfIntChar((0,) * g, (1,) * g)
        top = tuple(1 if j == i - 1 else 0 for j in range(g))
        bottom = tuple(1 if j < i - 1 else 0 for j in range(g))
        return HalfIntChar(top, bottom)
    i = k // 2
    top = tuple(1 if j == i - 1 else 0 for j in range(g))
    bottom = tuple(1 if j < i else 0 for j in range(g))
    return HalfIntChar(top, bottom)


def branch_index_set(g):
    return tuple(range(1, 2 * g + 2))


def odd_branch_indices(g):
    """The set U of odd indices whose symmetric difference drives vanishing."""
    return tuple(range(1, 2 * g + 2, 2))


def vanishing_even_thetanulls(g):
    """Even-cardinality subsets T (one per class) with even characteristic
    whose theta constant vanishes: #(T symdiff U) != g + 1.  Odd
    characteristics vanish identically and are not counted."""
    if g < 1:
        raise DomainError("need g >= 1")
    S = branch_index_set(g)
    U = set(odd_branch_indices(g))
    out = []
    for size in range(0, 2 * g + 2, 2):
        for T in combinations(S, size):
            if parity(branch_characteristic(g, T)) != 1:
                continue
            if len(set(T) ^ U) != g + 1:
                out.append(T)
    return out


def vanishing_count_formula(g):
    return 2 ** (g - 1) * (2**g + 1) - comb(2 * g + 1, g)
