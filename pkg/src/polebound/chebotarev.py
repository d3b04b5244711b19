"""Exact finite-group computations: sharpness examples and a model oracle.

The sharpness examples compare |trace| values of two 2-dimensional
representations over a fibered product of Galois groups; by the
Chebotarev density theorem the density of the place set is exactly the
counting fraction, so enumeration is the whole computation.  Quaternion
coordinates are stored doubled (so the 24 binary-tetrahedral units have
integer coordinates) and every trace is an exact integer.

The model oracle instantiates a dihedral scenario's ratio characters as
explicit characters of Z/n with the involution acting by inversion, and
reads pole orders off as multiplicities of the trivial character.  Group
algebra elements are integer coefficient vectors, so the oracle shares no
code path with the symbolic engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .algebra import CaseSpec, DIHEDRAL

Quat = tuple  # doubled coordinates (2a, 2b, 2c, 2d)


def qmul(x: Quat, y: Quat) -> Quat:
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    prod = (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)
    assert all(v % 2 == 0 for v in prod)
    return tuple(v // 2 for v in prod)


Q8_ELEMENTS = [(2, 0, 0, 0), (-2, 0, 0, 0), (0, 2, 0, 0), (0, -2, 0, 0),
               (0, 0, 2, 0), (0, 0, -2, 0), (0, 0, 0, 2), (0, 0, 0, -2)]

BT_ELEMENTS = Q8_ELEMENTS + [
    (sa, sb, sc, sd)
    for sa in (1, -1) for sb in (1, -1) for sc in (1, -1) for sd in (1, -1)]


@dataclass
class FiniteGroup:
    """Explicit finite group with an optional 2-dim |trace| assignment."""

    elements: list
    op: Callable
    trace2: Optional[Callable] = None  # |tr rho| in {0, 1, 2}
    name: str = "group"

    def __post_init__(self):
        elems = set(self.elements)
        if len(elems) != len(self.elements):
            raise ValueError("duplicate elements")
        for x in self.elements:
            if self.op(x, self.identity()) != x:
                raise ValueError("identity fails")
        for x in self.elements[: min(len(self.elements), 8)]:
            for y in self.elements[: min(len(self.elements), 8)]:
                if self.op(x, y) not in elems:
                    raise ValueError("not closed")
                for z in self.elements[: min(len(self.elements), 8)]:
                    if self.op(self.op(x, y), z) != self.op(x, self.op(y, z)):
                        raise ValueError("not associative")
        for x in self.elements:
            if not any(self.op(x, y) == self.identity() for y in self.elements):
                raise ValueError("missing inverse")

    def identity(self):
        for x in self.elements:
            if all(self.op(x, y) == y for y in self.elements[:4]):
                return x
        raise ValueError("no identity")

    def __len__(self):
        return len(self.elements)


def _quat_trace(x: Quat) -> int:
    return abs(x[0])  # doubled real part = |tr| of the 2-dim representation


def build_group(kind, n: int = 0) -> FiniteGroup:
    """kinds: 'Q8', 'Z4', 'binary_tetrahedral', ('cyclic', n)."""
    if kind == "Q8":
        return FiniteGroup(list(Q8_ELEMENTS), qmul, _quat_trace, "Q8")
    if kind == "binary_tetrahedral":
        return FiniteGroup(list(BT_ELEMENTS), qmul, _quat_trace, "A4~")
    if kind == "Z4":
        return build_group("cyclic", 4)
    if kind == "cyclic":
        return FiniteGroup(list(range(n)), lambda x, y: (x + y) % n,
                           name=f"Z{n}")
    raise ValueError(f"unsupported group kind {kind!r}")


_OMEGA = (-1, 1, 1, 1)  # (-1+i+j+k)/2, a generator of A4~/Q8
_OMEGA_COSET = frozenset(qmul(_OMEGA, q) for q in Q8_ELEMENTS)


def omega_coset(x: Quat) -> int:
    """Coset of x in A4~/Q8 = Z/3 (0 for Q8, 1 for omega, 2 for omega^2)."""
    if x in frozenset(Q8_ELEMENTS):
        return 0
    return 1 if x in _OMEGA_COSET else 2


@dataclass
class FiberedSubgroup:
    """{(a, b) in G1 x G2 : q1(a) = q2(b)} for common-quotient maps q1, q2."""

    g1: FiniteGroup
    g2: FiniteGroup
    elements: list

    def __len__(self):
        return len(self.elements)


def fibered_subgroup(g1: FiniteGroup, q1: Callable, g2: FiniteGroup,
                     q2: Callable, quotient_size: int) -> FiberedSubgroup:
    im1 = {q1(a) for a in g1.elements}
    im2 = {q2(b) for b in g2.elements}
    if len(im1) != quotient_size or im1 != im2:
        raise ValueError("quotient maps are not onto a common quotient")
    for x in g1.elements[:6]:
        for y in g1.elements[:6]:
            if q1(g1.op(x, y)) != (q1(x) + q1(y)) % quotient_size:
                raise ValueError("q1 is not a homomorphism")
    for x in g2.elements[:6]:
        for y in g2.elements[:6]:
            if q2(g2.op(x, y)) != (q2(x) + q2(y)) % quotient_size:
                raise ValueError("q2 is not a homomorphism")
    elems = [(a, b) for a in g1.elements for b in g2.elements
             if q1(a) == q2(b)]
    expect = len(g1) * len(g2) // quotient_size
    if len(elems) != expect:
        raise ValueError(f"fibered subgroup has {len(elems)} != {expect}")
    return FiberedSubgroup(g1, g2, elems)


def density(h: FiberedSubgroup, comparison: str) -> Fraction:
    """Exact density of {(a,b) : |tr a| <cmp> |tr b|} in the subgroup."""
    t1, t2 = h.g1.trace2, h.g2.trace2
    if t1 is None or t2 is None:
        raise ValueError("both components need trace assignments")
    ops = {"gt": lambda x, y: x > y, "neq": lambda x, y: x != y,
           "eq": lambda x, y: x == y}
    cmp = ops[comparison]
    count = sum(1 for a, b in h.elements if cmp(t1(a), t2(b)))
    return Fraction(count, len(h.elements))


# ---------------------------------------------------------------------------
# the worked examples

def example_tetrahedral() -> dict:
    bt = build_group("binary_tetrahedral")
    h = fibered_subgroup(bt, omega_coset, bt, omega_coset, 3)
    return {"size": len(h), "gt": density(h, "gt"), "neq": density(h, "neq")}


def _q8_mod_i(x: Quat) -> int:
    return 0 if x in {(2, 0, 0, 0), (-2, 0, 0, 0), (0, 2, 0, 0),
                      (0, -2, 0, 0)} else 1


def example_dihedral1() -> dict:
    q8 = build_group("Q8")
    h = fibered_subgroup(q8, _q8_mod_i, q8, _q8_mod_i, 2)
    return {"size": len(h), "gt": density(h, "gt"), "neq": density(h, "neq")}


def example_dihedral2() -> dict:
    q8 = build_group("Q8")
    h = fibered_subgroup(q8, lambda x: 0, q8, lambda x: 0, 1)
    return {"size": len(h), "gt": density(h, "gt"), "neq": density(h, "neq")}


def verify_property_P_Z4() -> dict:
    """Character-table check over Z/4 = <j>: psi3^tau = psi2,
    psi3/psi3^tau = psi1, and the square of that ratio is principal.

    Characters carry the table's labels: psi0 trivial, psi1 the order-2
    character, psi2(j) = -sqrt(-1), psi3(j) = sqrt(-1); tau inverts j.
    """
    n = 4
    exponent = {"psi0": 0, "psi1": 2, "psi2": 3, "psi3": 1}
    chars = {name: (lambda g, k=k: pow(1j, (k * g) % n))
             for name, k in exponent.items()}

    def tau(char):
        return lambda g: char((-g) % n)

    def equal(f, g):
        return all(f(x) == g(x) for x in range(n))

    psi3_tau = tau(chars["psi3"])
    ratio = lambda g: chars["psi3"](g) / psi3_tau(g)
    return {
        "psi3_tau_is_psi2": equal(psi3_tau, chars["psi2"]),
        "ratio_is_psi1": equal(ratio, chars["psi1"]),
        "ratio_squared_principal": equal(lambda g: ratio(g) ** 2,
                                         chars["psi0"]),
        "psi2_tau_is_psi3": equal(tau(chars["psi2"]), chars["psi3"]),
    }


# ---------------------------------------------------------------------------
# model oracle for the symbolic pole engine

class InstantiationError(ValueError):
    pass


def _coeff0(poly: dict, mods: tuple) -> int:
    return poly.get(tuple(0 for _ in mods), 0)


def _poly_mul(p: dict, q: dict, mods: tuple) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple((a + b) % m for a, b, m in zip(e1, e2, mods))
            out[key] = out.get(key, 0) + c1 * c2
    return out


def _poly_pow(p: dict, k: int, mods: tuple) -> dict:
    out = {tuple(0 for _ in mods): 1}
    for _ in range(k):
        out = _poly_mul(out, p, mods)
    return out


def _ind_char(exp: tuple, mods: tuple) -> dict:
    """1 + nu + nu^-1 as a group-algebra element: the restriction to the
    cyclic part of chi + Ind(nu), the adjoint-lift character."""
    zero = tuple(0 for _ in mods)
    neg = tuple((-e) % m for e, m in zip(exp, mods))
    out = {zero: 1}
    out[exp] = out.get(exp, 0) + 1
    out[neg] = out.get(neg, 0) + 1
    return out


def model_oracle(instantiation: dict, key: tuple,
                 spec: Optional[CaseSpec] = None) -> int:
    """Pole order of Pi_1^j x Pi_2^k in an explicit dihedral model.

    instantiation:
      same field:      {"n": modulus, "nu1": a1, "nu2": a2}
      different field: {"n1": m1, "nu1": a1, "n2": m2, "nu2": a2}

    Same field: the model group is Dih(Z/n); the adjoint character is -1
    off the rotation subgroup and 1 + nu + nu^-1 on it, so the moment is
    (coeff_0(prod) + (-1)^(j+k)) / 2.  Different fields: the Klein
    four-group acts on Z/m1 x Z/m2 with tau_i inverting the i-th factor
    only; the four sectors contribute analogous terms.

    When a CaseSpec is given the instantiation is first checked against
    its relations (subflag orders, twist inequivalence).
    """
    j, k = key
    if spec is not None:
        _check_instantiation(instantiation, spec)
    if "n" in instantiation or "mods" in instantiation:
        mods, e1, e2 = _same_field_model(instantiation)
        a1 = _ind_char(e1, mods)
        a2 = _ind_char(e2, mods)
        prod = _poly_mul(_poly_pow(a1, j, mods), _poly_pow(a2, k, mods), mods)
        total = _coeff0(prod, mods) + (-1) ** (j + k)
        assert total % 2 == 0
        return total // 2
    m1, m2 = instantiation["n1"], instantiation["n2"]
    mods = (m1, m2)
    a1 = _ind_char((instantiation["nu1"] % m1, 0), mods)
    a2 = _ind_char((0, instantiation["nu2"] % m2), mods)
    p1j = _poly_pow(a1, j, mods)
    p2k = _poly_pow(a2, k, mods)
    both = _coeff0(_poly_mul(p1j, p2k, mods), mods)
    only1 = _coeff0(p1j, mods) * (-1) ** k
    only2 = _coeff0(p2k, mods) * (-1) ** j
    neither = (-1) ** (j + k)
    total = both + only1 + only2 + neither
    assert total % 4 == 0
    return total // 4


def _same_field_model(inst: dict):
    """Normalize a same-field instantiation to (mods, exp1, exp2)."""
    if "n" in inst:
        n = inst["n"]
        return (n,), (inst["nu1"] % n,), (inst["nu2"] % n,)
    mods = tuple(inst["mods"])
    e1 = tuple(a % m for a, m in zip(inst["nu1"], mods))
    e2 = tuple(a % m for a, m in zip(inst["nu2"], mods))
    return mods, e1, e2


def _order(a, n) -> int:
    if isinstance(a, tuple):
        from math import lcm
        return lcm(*(max(_order(x, m), 1) for x, m in zip(a, n)))
    o = 1
    x = a % n
    while x:
        x = (x + a) % n
        o += 1
    return o


def _check_flag(order: int, flag: str) -> bool:
    if flag == "P":
        return order == 2
    if flag == "IP":
        return order == 4
    if flag == "Q":
        return order == 3
    return order not in (1, 2, 3, 4)


def _check_instantiation(inst: dict, spec: CaseSpec) -> None:
    if spec.side1.cls != DIHEDRAL or spec.side2.cls != DIHEDRAL:
        raise InstantiationError("model oracle covers dihedral scenarios")
    same = "n" in inst or "mods" in inst
    if same != bool(spec.same_field):
        raise InstantiationError("field wiring does not match the scenario")
    if same:
        mods, e1, e2 = _same_field_model(inst)
        o1, o2 = _order(e1, mods), _order(e2, mods)
        if all((a - b) % m == 0 for a, b, m in zip(e1, e2, mods)) or \
           all((a + b) % m == 0 for a, b, m in zip(e1, e2, mods)):
            raise InstantiationError("twist-equivalent instantiation")
    else:
        o1, o2 = _order(inst["nu1"], inst["n1"]), _order(inst["nu2"], inst["n2"])
    for o, flag in ((o1, spec.side1.subflag), (o2, spec.side2.subflag)):
        if not _check_flag(o, flag):
            raise InstantiationError(f"order {o} violates subflag {flag}")


def instantiations_for(spec: CaseSpec, max_order: int = 24,
                       with_products: bool = True):
    """Instantiations of a dihedral scenario: cyclic models up to
    max_order, plus (same field) Z/m x Z/2 models that separate the
    identifications a single cyclic group forces."""
    out = []
    if spec.same_field:
        for n in range(2, max_order + 1):
            for a1 in range(1, n):
                for a2 in range(1, n):
                    inst = {"n": n, "nu1": a1, "nu2": a2}
                    try:
                        _check_instantiation(inst, spec)
                    except InstantiationError:
                        continue
                    out.append(inst)
        if with_products:
            shapes = [(m, 2) for m in range(2, max_order // 2 + 1)]
            shapes += [(3, 3), (4, 3), (4, 4), (5, 5), (6, 4), (6, 6)]
            for mods in shapes:
                for e1 in itertools.product(*(range(m) for m in mods)):
                    for e2 in itertools.product(*(range(m) for m in mods)):
                        inst = {"mods": mods, "nu1": e1, "nu2": e2}
                        try:
                            _check_instantiation(inst, spec)
                        except InstantiationError:
                            continue
                        out.append(inst)
    else:
        for n1 in range(2, max_order + 1):
            for n2 in range(2, max_order + 1):
                for a1 in range(1, n1):
                    for a2 in range(1, n2):
                        inst = {"n1": n1, "nu1": a1, "n2": n2, "nu2": a2}
                        try:
                            _check_instantiation(inst, spec)
                        except InstantiationError:
                            continue
                        out.append(inst)
    return out
