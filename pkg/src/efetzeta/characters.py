"""Dirichlet characters: validation, primitivity, Gauss sums, the
exceptional set of the character exponential-sum equation, and the
trigonometric quotient/polynomial pair built from a character."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DivisionNearZero, DomainError, NotACharacter, PrimitiveMismatch

_ROOT_TOL = 1e-12
_ZERO_TOL = 1e-10


def euler_totient(q: int) -> int:
    if q < 1:
        raise DomainError(f"q must be >= 1, got {q}")
    return sum(1 for l in range(1, q + 1) if math.gcd(l, q) == 1)


@dataclass(frozen=True)
class DirichletCharacter:
    """Character of modulus q stored as an explicit value table.

    values[l] is chi(l) for residues l = 0 .. q-1; lookups reduce mod q.
    Construct through make_character / principal_character so the axioms
    are checked.
    """

    q: int
    values: tuple[complex, ...]

    def __call__(self, n: int) -> complex:
        return self.values[n % self.q]

    @property
    def is_principal(self) -> bool:
        return all(
            self.values[l] == (1.0 if math.gcd(l, self.q) == 1 else 0.0)
            for l in range(self.q))

    def __repr__(self) -> str:  # keep tables readable in test output
        return f"DirichletCharacter(q={self.q})"


def make_character(q: int, values) -> DirichletCharacter:
    """Validate a value table as a Dirichlet character mod q."""
    if q < 1:
        raise NotACharacter(f"modulus must be >= 1, got {q}")
    vals = tuple(complex(v) for v in values)
    if len(vals) != q:
        raise NotACharacter(f"expected {q} values, got {len(vals)}")
    for l in range(q):
        coprime = math.gcd(l, q) == 1 or q == 1
        if coprime:
            if abs(abs(vals[l]) - 1.0) > _ROOT_TOL:
                raise NotACharacter(
                    f"chi({l}) must be a root of unity, |chi|={abs(vals[l])}")
        elif abs(vals[l]) > _ROOT_TOL:
            raise NotACharacter(f"chi({l}) must vanish for gcd({l},{q})>1")
    for a in range(q):
        for b in range(q):
            if abs(vals[(a * b) % q] - vals[a] * vals[b]) > 10 * _ROOT_TOL:
                raise NotACharacter(
                    f"not completely multiplicative at ({a},{b})")
    return DirichletCharacter(q, vals)


def principal_character(q: int) -> DirichletCharacter:
    if q < 1:
        raise DomainError(f"q must be >= 1, got {q}")
    vals = tuple(
        complex(1.0 if math.gcd(l, q) == 1 or q == 1 else 0.0)
        for l in range(q))
    return DirichletCharacter(q, vals)


def is_primitive(chi: DirichletCharacter) -> bool:
    """True iff for every proper divisor d of q some a = 1 (mod d),
    gcd(a,q)=1, has chi(a) != 1."""
    q = chi.q
    if q == 1 or chi.is_principal:
        raise DomainError("primitivity is defined for nonprincipal chi, q > 1")
    for d in range(1, q):
        if q % d != 0:
            continue
        witnessed = False
        for a in range(1, q + 1):
            if a % d == 1 % d and math.gcd(a, q) == 1 and abs(chi(a) - 1.0) > _ROOT_TOL:
                witnessed = True
                break
        if not witnessed:
            return False
    return True


def character_exp_sum(chi: DirichletCharacter, n: int) -> complex:
    """sum_{l=1}^{q-1} chi(l) e^{2 pi i n l / q} (the Gauss sum at n=1)."""
    q = chi.q
    acc = 0.0 + 0.0j
    for l in range(1, q):
        acc += chi(l) * cmath.exp(2j * math.pi * ((n * l) % q) / q)
    return acc


def gauss_sum(chi: DirichletCharacter) -> complex:
    if chi.q <= 1:
        raise DomainError("Gauss sum needs q > 1")
    return character_exp_sum(chi, 1)


@dataclass(frozen=True)
class ExceptionalSet:
    """Integers |n| <= n_max where the character exponential sum vanishes."""

    q: int
    n_max: int
    members: frozenset[int]

    def __contains__(self, n: int) -> bool:
        return n in self.members

    def sorted(self) -> list[int]:
        return sorted(self.members)


def exceptional_set(chi: DirichletCharacter, n_max: int) -> ExceptionalSet:
    """Numeric exceptional set; for primitive chi it must equal
    {0} + {n : gcd(n,q) > 1} and PrimitiveMismatch is raised otherwise."""
    if chi.q <= 1 or chi.is_principal:
        raise DomainError("exceptional set needs q > 1 and chi != chi0")
    members = {
        n for n in range(-n_max, n_max + 1)
        if abs(character_exp_sum(chi, n)) < _ZERO_TOL
    }
    if is_primitive(chi):
        gcd_set = {n for n in range(-n_max, n_max + 1)
                   if n != 0 and math.gcd(abs(n), chi.q) > 1} | {0}
        if members != gcd_set:
            raise PrimitiveMismatch(
                f"numeric set {sorted(members)} != gcd set {sorted(gcd_set)}")
    return ExceptionalSet(chi.q, n_max, frozenset(members))


def eval_Pq(chi: DirichletCharacter, z: complex) -> complex:
    """P_q(2z) = (2/i) sum chi(l) e^{i(2l-q)z}, evaluated at argument y=2z."""
    q = chi.q
    half = complex(z) / 2.0
    acc = 0.0 + 0.0j
    for l in range(1, q):
        acc += chi(l) * cmath.exp(1j * (2 * l - q) * half)
    return (2.0 / 1j) * acc


def eval_Tq(chi: DirichletCharacter, z: complex) -> complex:
    """T_q(2z) = sin(qz) / sum chi(l) e^{i(2l-q)z}, at argument y=2z.

    For q in {3, 4} the quotient extends over the denominator zeros via the
    entire closed forms; elsewhere a near-zero denominator is an error.
    """
    q = chi.q
    if q <= 2:
        raise DomainError("T_q needs q > 2")
    y = complex(z)
    if q == 3:
        return 0.5j * (1.0 + 2.0 * cmath.cos(y))
    if q == 4:
        return 1j * cmath.cos(y)
    denom = eval_Pq(chi, y) * (1j / 2.0)
    if abs(denom) < 1e-9:
        raise DivisionNearZero(f"P_{q} vanishes near y={y}")
    return cmath.sin(q * y / 2.0) / denom


# Proportionality constants between the display definitions above and the
# shorthand values used by the starred node formulas downstream:
#   T_3(y) = T3_VS_COS_FORM * (1 + 2 cos y);  T_4(y) = T4_VS_COS * cos y
#   P_3(y) = P3_VS_USED * sin(y/2);           P_4(y) = P4_VS_USED * (2 sin y)
T3_VS_COS_FORM = 0.5j
T4_VS_COS = 1j
P3_VS_USED = -4.0
P4_VS_USED = -2.0

# Shorthand P values the starred formulas are normalized with.
def p3_used(y: complex) -> complex:
    return cmath.sin(complex(y) / 2.0)


def p4_used(y: complex) -> complex:
    return 2.0 * cmath.sin(complex(y))


def _cyclic_characters(q: int, g: int) -> list[DirichletCharacter]:
    """All characters mod prime q from a primitive root g."""
    phi = q - 1
    # discrete log table: a = g^t mod q
    dlog = {}
    t, a = 0, 1
    for t in range(phi):
        dlog[a] = t
        a = (a * g) % q
    chars = []
    for j in range(phi):
        vals = [0.0j] * q
        for l in range(1, q):
            vals[l] = cmath.exp(2j * math.pi * (j * dlog[l]) / phi)
        chars.append(make_character(q, vals))
    return chars


@lru_cache(maxsize=None)
def builtin_characters() -> dict[str, DirichletCharacter]:
    """Small library: chi(.,1), chi(.,3), chi(.,4), and all characters
    mod 5 and mod 7 (from primitive roots 2 and 3)."""
    lib: dict[str, DirichletCharacter] = {}
    lib["chi_1"] = principal_character(1)
    lib["chi_3"] = make_character(3, [0.0, 1.0, -1.0])
    lib["chi_4"] = make_character(4, [0.0, 1.0, 0.0, -1.0])
    for j, chi in enumerate(_cyclic_characters(5, 2)):
        lib[f"chi_5_{j}"] = chi
    for j, chi in enumerate(_cyclic_characters(7, 3)):
        lib[f"chi_7_{j}"] = chi
    return lib


def nonprincipal_real_character(q: int) -> DirichletCharacter:
    """The headline characters: q = 3 and q = 4 value tables."""
    lib = builtin_characters()
    if q == 3:
        return lib["chi_3"]
    if q == 4:
        return lib["chi_4"]
    raise DomainError(f"no built-in nonprincipal real character for q={q}")


def character_from_dict(d: dict) -> DirichletCharacter:
    """JSON wire format {"q": int, "values": [[re, im], ...]}."""
    try:
        q = int(d["q"])
        values = [complex(re, im) for re, im in d["values"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise NotACharacter(f"malformed character object: {exc}") from exc
    return make_character(q, values)


def character_to_dict(chi: DirichletCharacter) -> dict:
    return {"q": chi.q, "values": [[v.real, v.imag] for v in chi.values]}
