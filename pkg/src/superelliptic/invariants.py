"""Invariants of binary sextics and octavics, isomorphism testing for the
corresponding genus 2 and 3 superelliptic curves, root-multiplicity
classification, and dihedral invariants of curves in normal form.

Sextic calibration.  The generating invariants are computed through the
Clebsch transvectants A, B, C, D and then converted to the tuple
(J2, J4, J6, J10).  The conversion constants below were solved exactly
(linear algebra over Q against the explicit triple-root polynomials), so
that a sextic with a root of multiplicity exactly three satisfies

    J2 = 3 r^2,   J4 = 81 r^4,   J6 = r^6,   J10 = 0,   r != 0,

equivalently J4 = 9 J2^2 and 27 J6 = J2^3 in ratio form.  With this
calibration J2, J4, J6 are primitive integer polynomials in the
coefficients; J10 is taken to be the discriminant itself.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    BinaryForm,
    discriminant,
    match_weighted_scale,
    transvectant,
)
from .errors import DomainError, SingularCurveError, UnsupportedCaseError

SEXTIC_WEIGHTS = (2, 4, 6, 10)
OCTAVIC_WEIGHTS = (2, 3, 4, 5, 6, 7, 8, 9, 10)

# J2 = c * A; J4 = x A^2 + y B; J6 = z C  (solved exactly, see module docstring)
_J2_FROM_A = Fraction(-60)
_J4_FROM_A2 = Fraction(90000)
_J4_FROM_B = Fraction(-540000)
_J6_FROM_C = Fraction(-562500)


def _tv(f, g, r):
    """Transvectant that propagates degenerate (identically zero) covariants."""
    if not isinstance(f, BinaryForm) or not isinstance(g, BinaryForm):
        return None
    t = transvectant(f, g, r)
    return t


def _scalar(field, t):
    return field.zero if t is None else t


@dataclass(frozen=True)
class SexticInvariants:
    J2: object
    J4: object
    J6: object
    J10: object
    A: object
    B: object
    C: object
    D: object
    Afrak: object
    Bfrak: object
    Cfrak: object
    Dfrak: object

    def tuple(self):
        return (self.J2, self.J4, self.J6, self.J10)


@dataclass(frozen=True)
class OctavicInvariants:
    J2: object
    J3: object
    J4: object
    J5: object
    J6: object
    J7: object
    J8: object
    J9: object
    J10: object

    def tuple(self):
        return (
            self.J2, self.J3, self.J4, self.J5, self.J6,
            self.J7, self.J8, self.J9, self.J10,
        )

    def moduli_tuple(self):
        """The generators J2..J7 used for moduli points and equivalence."""
        return (self.J2, self.J3, self.J4, self.J5, self.J6, self.J7)


@dataclass(frozen=True)
class DihedralInvariants:
    r: int
    u: tuple


def clebsch_sextic(f):
    """Clebsch invariants (A, B, C, D) of a binary sextic."""
    if not isinstance(f, BinaryForm) or f.degree != 6:
        raise DomainError("clebsch_sextic needs a binary sextic")
    field = f.field
    ff4 = _tv(f, f, 4)
    A = _scalar(field, _tv(f, f, 6))
    B = _scalar(field, _tv(ff4, ff4, 4))
    delta = _tv(ff4, ff4, 2)
    C = _scalar(field, _tv(ff4, delta, 4))
    y1 = _tv(f, ff4, 4)
    y2 = _tv(ff4, y1, 2)
    y3 = _tv(ff4, y2, 2)
    D = _scalar(field, _tv(y3, y1, 2))
    return A, B, C, D


def igusa_sextic(f):
    """Full invariant record of a binary sextic (see module docstring)."""
    if not isinstance(f, BinaryForm) or f.degree != 6:
        raise DomainError("igusa_sextic needs a binary sextic")
    field = f.field
    A, B, C, D = clebsch_sextic(f)
    J2 = field.from_fraction(_J2_FROM_A) * A
    J4 = field.from_fraction(_J4_FROM_A2) * A * A + field.from_fraction(_J4_FROM_B) * B
    J6 = field.from_fraction(_J6_FROM_C) * C
    J10 = discriminant(f)
    # integral invariants from the J's, inverting the displayed relations
    Afrak = 8 * J2
    Bfrak = 4 * J2 * J2 - 96 * J4
    Cfrak = 8 * J2**3 - 160 * J2 * J4 - 576 * J6
    Dfrak = 4096 * J10
    return SexticInvariants(J2, J4, J6, J10, A, B, C, D, Afrak, Bfrak, Cfrak, Dfrak)


def octavic_invariants(f):
    """The scaled transvectant invariants J2..J10 of a binary octavic."""
    if not isinstance(f, BinaryForm) or f.degree != 8:
        raise DomainError("octavic_invariants needs a binary octavic")
    field = f.field
    p = field.characteristic
    if p and p <= 7:
        raise UnsupportedCaseError("octavic invariants need characteristic 0 or > 7")
    g = _tv(f, f, 4)
    k = _tv(f, f, 6)
    h = _tv(k, k, 2)
    m = _tv(f, k, 4)
    n = _tv(f, h, 4)
    pp = _tv(g, k, 4)
    q = _tv(g, h, 4)
    fr = field.from_fraction
    J2 = fr(Fraction(2**2 * 5 * 7)) * _scalar(field, _tv(f, f, 8))
    J3 = fr(Fraction(2**4 * 5**2 * 7**3, 3)) * _scalar(field, _tv(f, g, 8))
    J4 = fr(Fraction(2**9 * 3 * 7**4)) * _scalar(field, _tv(k, k, 4))
    J5 = fr(Fraction(2**9 * 5 * 7**5)) * _scalar(field, _tv(m, k, 4))
    J6 = fr(Fraction(2**14 * 3**2 * 7**6)) * _scalar(field, _tv(k, h, 4))
    J7 = fr(Fraction(2**14 * 3 * 5 * 7**7)) * _scalar(field, _tv(m, h, 4))
    J8 = fr(Fraction(2**17 * 3 * 5**2 * 7**9)) * _scalar(field, _tv(pp, h, 4))
    J9 = fr(Fraction(2**19 * 3**2 * 5 * 7**9)) * _scalar(field, _tv(n, h, 4))
    J10 = fr(Fraction(2**22 * 3**2 * 5**2 * 7**11)) * _scalar(field, _tv(q, h, 4))
    return OctavicInvariants(J2, J3, J4, J5, J6, J7, J8, J9, J10)


def sextic_equivalent(f, g):
    """GL2-equivalence certificate for two nonsingular binary sextics.

    Returns a scalar r with J_w(f) = r^w J_w(g) for all weights, or None.
    """
    inv_f = igusa_sextic(f)
    inv_g = igusa_sextic(g)
    if not inv_f.J10 or not inv_g.J10:
        raise SingularCurveError("sextic equivalence needs nonzero discriminants")
    matches = match_weighted_scale(inv_f.tuple(), inv_g.tuple(), SEXTIC_WEIGHTS, f.field)
    return matches[0] if matches else None


def octavic_equivalent(f, g):
    """Same as sextic_equivalent for octavics, using the generators J2..J7."""
    if not discriminant(f) or not discriminant(g):
        raise SingularCurveError("octavic equivalence needs nonzero discriminants")
    inv_f = octavic_invariants(f).moduli_tuple()
    inv_g = octavic_invariants(g).moduli_tuple()
    matches = match_weighted_scale(inv_f, inv_g, OCTAVIC_WEIGHTS[:6], f.field)
    return matches[0] if matches else None


SEPARABLE = "separable"
EXACTLY_3 = "exactly-3"
GE_4 = "ge-4"
EXACTLY_4 = "exactly-4"
GE_5 = "ge-5"
OTHER_REPEATED = "other-repeated"


def multiplicity_profile(f):
    """Root-multiplicity classification of a sextic or octavic via invariants."""
    if not isinstance(f, BinaryForm) or f.degree not in (6, 8):
        raise DomainError("multiplicity_profile handles degrees 6 and 8 only")
    field = f.field
    disc = discriminant(f)
    if disc:
        return SEPARABLE
    if f.degree == 6:
        inv = igusa_sextic(f)
        if not inv.J2 and not inv.J4 and not inv.J6:
            return GE_4
        if inv.J2 and inv.J4 == 9 * inv.J2**2 and 27 * inv.J6 == inv.J2**3:
            return EXACTLY_3
        return OTHER_REPEATED
    inv = octavic_invariants(f)
    head = (inv.J2, inv.J3, inv.J4, inv.J5, inv.J6, inv.J7, inv.J8)
    if not any(head):
        return GE_5
    if inv.J2 and inv.J3:
        r = inv.J3 / (6 * inv.J2)
        expected = (
            2 * r**2, 12 * r**3, 2**6 * r**4, 2**6 * r**5,
            2**9 * r**6, 2**9 * r**7, 2**11 * 3**2 * r**8,
        )
        if head == expected:
            return EXACTLY_4
    return OTHER_REPEATED


def dihedral_invariants(n, coeffs, r):
    """Dihedral invariants of y^n = x^s + a_(r-1) x^(s-delta) + ... + a_1 x^delta + 1.

    coeffs lists a_1 .. a_(r-1) of the normal form, r = s/delta > 2; the
    returned u_i = a_1^(r-i) a_i + a_(r-1)^(r-i) a_(r-i) are constant on
    orbits of the rotation/inversion action on normal forms.
    """
    if r <= 2:
        raise DomainError("dihedral invariants need r = s/delta > 2")
    if len(coeffs) != r - 1:
        raise DomainError(f"expected {r - 1} coefficients a_1..a_{r - 1}")
    if n < 2:
        raise DomainError("superelliptic level n must be >= 2")
    a = {i + 1: c for i, c in enumerate(coeffs)}
    u = tuple(
        a[1] ** (r - i) * a[i] + a[r - 1] ** (r - i) * a[r - i]
        for i in range(1, r)
    )
    return DihedralInvariants(r=r, u=u)
