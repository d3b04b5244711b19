"""Formal Hecke-character groups and irreducible representation symbols.

Characters are integer exponent vectors over named generators.  Each
scenario keeps one generator scope per base field: scope ``"F"`` for
characters of the ground field and one scope per quadratic extension tag
(``"K"``, ``"K1"``, ``"K2"``).  The Galois involution tau acts on every
extension scope by inversion (forced for ratio characters psi/psi^tau,
which are the only extension characters the engine manipulates).

Equality questions are answered three-valued: forced yes (the vector lies
in the relation lattice), forced no (assuming it trivial would pull a
declared-nontrivial vector into the lattice), or an explicit Query that a
Branch may assign either way, subject to consistency.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Optional, Union

from .lattice import Lattice

# ---------------------------------------------------------------------------
# sparse exponent vectors

Vec = tuple  # tuple[tuple[str, int], ...], sorted, no zero coefficients

ZERO: Vec = ()


def vec(*pairs) -> Vec:
    acc: dict[str, int] = {}
    for sym, e in pairs:
        acc[sym] = acc.get(sym, 0) + e
        if acc[sym] == 0:
            del acc[sym]
    return tuple(sorted(acc.items()))


def vadd(*vs: Vec) -> Vec:
    return vec(*(p for v in vs for p in v))


def vneg(v: Vec) -> Vec:
    return tuple((s, -e) for s, e in v)


def vscale(v: Vec, k: int) -> Vec:
    if k == 0:
        return ZERO
    return tuple((s, k * e) for s, e in v)


def vsub(a: Vec, b: Vec) -> Vec:
    return vadd(a, vneg(b))


def dense(v: Vec, syms: list[str]) -> list[int]:
    d = dict(v)
    out = [d.pop(s, 0) for s in syms]
    if d:
        raise ScopeError(f"symbols {sorted(d)} not declared in scope {syms}")
    return out


def sparse(row, syms: list[str]) -> Vec:
    return vec(*zip(syms, row))


class ScopeError(KeyError):
    pass


# ---------------------------------------------------------------------------
# three-valued answers

@dataclass(frozen=True)
class Query:
    """A yes/no question the relations do not decide.

    qid is stable across runs: it is derived from base-relation canonical
    forms only.  kind selects the assignment semantics in Branch.assign.
    """

    qid: str
    kind: str              # 'charF' | 'charK' | 'bool' | 'sigma'
    scope: str = "F"
    vecs: tuple = ()       # equality vectors added on a yes assignment
    meta: tuple = ()

    def __repr__(self):
        return f"Query({self.qid})"


Tri = Union[bool, Query]


def tri_or(*parts: Tri) -> Tri:
    """Three-valued OR; surfaces the first undecided sub-question."""
    pending = None
    for p in parts:
        if p is True:
            return True
        if p is not False and pending is None:
            pending = p
    return pending if pending is not None else False


def tri_and(*parts: Tri) -> Tri:
    pending = None
    for p in parts:
        if p is False:
            return False
        if p is not True and pending is None:
            pending = p
    return pending if pending is not None else True


# ---------------------------------------------------------------------------
# branches

@dataclass(frozen=True)
class Branch:
    """A partial assignment to undetermined queries.

    Immutable; assignments extend the scenario's relation store.  Each
    disjunction records finitely many equality vectors of which at least
    one must hold (used for base-change membership constraints).
    """

    f_eqs: tuple = ()
    f_neqs: tuple = ()
    k_eqs: tuple = ()       # tuple[(scope, vec)]
    k_neqs: tuple = ()
    bools: tuple = ()       # tuple[(qid, bool)]
    sigma_subst: tuple = () # tuple[(side, (field, alpha_vec))]
    disjunctions: tuple = ()  # tuple[(scope, (vec, ...))]
    log: tuple = ()         # tuple[(qid, bool)]

    def bool_value(self, qid: str) -> Optional[bool]:
        for q, v in self.bools:
            if q == qid:
                return v
        return None

    def sigma_image(self, side: int):
        for s, img in self.sigma_subst:
            if s == side:
                return img
        return None


EMPTY_BRANCH = Branch()


# ---------------------------------------------------------------------------
# representation symbols

@dataclass(frozen=True)
class Char:
    """One-dimensional symbol: a character of the ground field."""

    expr: Vec

    dim = 1


@dataclass(frozen=True)
class Induced:
    """I_K(alpha . bc(twist)): a dihedral GL(2) symbol over field tag K.

    alpha is an exponent vector in the K scope; twist collects ground-field
    factors whose base change the relations do not resolve (everything
    resolvable -- chi_K and descents of this field -- is absorbed into
    alpha during normalization).
    """

    field: str
    alpha: Vec
    twist: Vec = ZERO

    dim = 2


@dataclass(frozen=True)
class AdTwist:
    """Ad(pi_side) tensored by a ground-field character (cuspidal, dim 3)."""

    side: int
    twist: Vec = ZERO

    dim = 3


@dataclass(frozen=True)
class SigmaOct:
    """The dihedral constituent of an octahedral fourth-symmetric-power."""

    side: int
    twist: Vec = ZERO

    dim = 2


@dataclass(frozen=True)
class Sym4Cusp:
    """The cuspidal 5-dimensional fourth-symmetric-power constituent."""

    side: int
    twist: Vec = ZERO

    dim = 5


@dataclass(frozen=True)
class Opaque:
    """An unexpanded product.  automorphic=False means no analytic control:
    any pole question that cannot be reassociated away is unresolvable."""

    factors: tuple
    automorphic: bool

    @property
    def dim(self) -> int:
        d = 1
        for f in self.factors:
            d *= f.dim
        return d


RepExpr = Union[Char, Induced, AdTwist, SigmaOct, Sym4Cusp, Opaque]

TRIVIAL = Char(ZERO)

DIHEDRAL = "dihedral"
TETRAHEDRAL = "tetrahedral"
OCTAHEDRAL = "octahedral"
NSP = "nsp"  # non-solvable polyhedral

CLASSES = (DIHEDRAL, TETRAHEDRAL, OCTAHEDRAL, NSP)
SUBFLAGS = ("P", "IP", "Q", "R")  # IP = not P, but I(nu) satisfies P


@dataclass(frozen=True)
class SideSpec:
    cls: str
    subflag: Optional[str] = None


@dataclass(frozen=True)
class CaseSpec:
    side1: SideSpec
    side2: SideSpec
    same_field: Optional[bool] = None

    def swapped(self) -> "CaseSpec":
        return CaseSpec(self.side2, self.side1, self.same_field)

    def label(self) -> str:
        def one(s: SideSpec) -> str:
            return s.cls + (f":{s.subflag}" if s.subflag else "")

        tail = ""
        if self.same_field is not None:
            tail = ",sameK" if self.same_field else ",diffK"
        return f"{one(self.side1)},{one(self.side2)}{tail}"


class InvalidCaseSpec(ValueError):
    pass


# ---------------------------------------------------------------------------
# scenario

class Scenario:
    """Case assumptions compiled to generator scopes plus a relation store.

    Descent symbols (ground-field square roots of tau-invariant extension
    characters) are created lazily but deterministically; their declared
    disequalities encode the cross-field separation facts the source
    arguments rely on:

      * descents of nu and nu^2 are never another quadratic field's chi
        and never equal to a descent from a different field;
      * descents of nu^3 (order-6 branches) keep the cross-field
        separation but may coincide with the other field's chi -- exactly
        the identifications the case tables leave open.
    """

    def __init__(self, spec: CaseSpec):
        validate_spec(spec)
        self.spec = spec
        self.f_syms: list[str] = []
        self.base_f_eqs: list[Vec] = []
        self.base_f_neqs: list[Vec] = []
        self.k_syms: dict[str, list[str]] = {}
        self.base_k_eqs: dict[str, list[Vec]] = {}
        self.base_k_neqs: dict[str, list[Vec]] = {}
        self.field_of: dict[int, Optional[str]] = {1: None, 2: None}
        self.chi: dict[str, str] = {}
        self.nu: dict[int, str] = {}
        self.mu: dict[int, str] = {}
        self.eta: dict[int, str] = {}
        # descent bookkeeping: (field, canon +/- orbit key) -> symbol
        self._descents: dict[tuple, str] = {}
        self.descent_meta: dict[str, tuple] = {}  # sym -> (field, kvec, power_kind)
        self._fresh: dict[tuple, tuple] = {}

        d1 = spec.side1.cls == DIHEDRAL
        d2 = spec.side2.cls == DIHEDRAL
        same = bool(spec.same_field) and d1 and d2
        for i, side in ((1, spec.side1), (2, spec.side2)):
            if side.cls == DIHEDRAL:
                tag = "K" if same else f"K{i}"
                self.field_of[i] = tag
                if tag not in self.k_syms:
                    self.k_syms[tag] = []
                    self.base_k_eqs[tag] = []
                    self.base_k_neqs[tag] = []
                    csym = f"chi_{tag}"
                    self.chi[tag] = csym
                    self._add_f_symbol(csym)
                    self.base_f_eqs.append(vec((csym, 2)))
                    self.base_f_neqs.append(vec((csym, 1)))
                nsym = f"nu{i}"
                self.nu[i] = nsym
                self.k_syms[tag].append(nsym)
                self._flag_relations(tag, nsym, side.subflag)
            elif side.cls == TETRAHEDRAL:
                m = f"mu{i}"
                self.mu[i] = m
                self._add_f_symbol(m)
                self.base_f_eqs.append(vec((m, 3)))
                self.base_f_neqs.append(vec((m, 1)))
            elif side.cls == OCTAHEDRAL:
                e = f"eta{i}"
                self.eta[i] = e
                self._add_f_symbol(e)
                self.base_f_eqs.append(vec((e, 2)))
                self.base_f_neqs.append(vec((e, 1)))
        if d1 and d2 and not same:
            c1, c2 = self.chi["K1"], self.chi["K2"]
            self.base_f_neqs.append(vec((c1, 1), (c2, 1)))
        if d1 and d2 and same:
            n1, n2 = vec((self.nu[1], 1)), vec((self.nu[2], 1))
            # pi_1, pi_2 not twist-equivalent: same-field adjoints differ
            self.base_k_neqs["K"].append(vsub(n1, n2))
            self.base_k_neqs["K"].append(vadd(n1, n2))
        # flag-level descents exist from the start (Ad decompositions use them)
        for i in (1, 2):
            side = spec.side1 if i == 1 else spec.side2
            if side.cls == DIHEDRAL and side.subflag == "P":
                self.descent(self.field_of[i], vec((self.nu[i], 1)))

    # -- construction helpers ------------------------------------------------

    def _add_f_symbol(self, sym: str) -> None:
        if sym in self.f_syms:
            raise InvalidCaseSpec(f"duplicate symbol {sym}")
        self.f_syms.append(sym)

    def _flag_relations(self, tag: str, nsym: str, flag: str) -> None:
        eqs, neqs = self.base_k_eqs[tag], self.base_k_neqs[tag]
        one = vec((nsym, 1))
        if flag == "P":
            eqs.append(vscale(one, 2))
            neqs.append(one)
        elif flag == "IP":
            eqs.append(vscale(one, 4))
            neqs.append(vscale(one, 2))
        elif flag == "Q":
            eqs.append(vscale(one, 3))
            neqs.append(vscale(one, 2))
        elif flag == "R":
            neqs.append(vscale(one, 2))
            neqs.append(vscale(one, 3))
            neqs.append(vscale(one, 4))
        else:  # pragma: no cover
            raise InvalidCaseSpec(f"bad subflag {flag}")

    def side_class(self, i: int) -> str:
        return (self.spec.side1 if i == 1 else self.spec.side2).cls

    def side_flag(self, i: int) -> Optional[str]:
        return (self.spec.side1 if i == 1 else self.spec.side2).subflag

    def dihedral_tags(self) -> list[str]:
        return list(self.k_syms)

    # -- lattices -------------------------------------------------------------

    def f_lattice(self, br: Branch) -> Lattice:
        rows = [dense(v, self.f_syms) for v in self.base_f_eqs]
        rows += [dense(v, self.f_syms) for v in br.f_eqs]
        return Lattice(len(self.f_syms), rows)

    def k_lattice(self, tag: str, br: Branch) -> Lattice:
        syms = self.k_syms[tag]
        rows = [dense(v, syms) for v in self.base_k_eqs[tag]]
        rows += [dense(v, syms) for sc, v in br.k_eqs if sc == tag]
        return Lattice(len(syms), rows)

    def _canon(self, v: Vec, scope: str, br: Branch = EMPTY_BRANCH) -> Vec:
        if scope == "F":
            lat, syms = self.f_lattice(br), self.f_syms
        else:
            lat, syms = self.k_lattice(scope, br), self.k_syms[scope]
        return sparse(lat.reduce(dense(v, syms)), syms)

    def canon_orbit(self, v: Vec, scope: str) -> Vec:
        """Base-relation canonical form of {v, -v}; stable query payload."""
        a = self._canon(v, scope)
        b = self._canon(vneg(v), scope)
        return min(a, b)

    # -- descents ---------------------------------------------------------------

    def descent(self, tag: str, kvec: Vec) -> str:
        """Ground-field descent symbol of a tau-invariant K-character.

        Both descents of kvec exist; the returned symbol delta is one of
        them, the other is delta*chi.  Creation is idempotent on the +/-
        orbit of the base-canonical form.
        """
        key = (tag, self.canon_orbit(kvec, tag))
        if key in self._descents:
            return self._descents[key]
        power = self._power_kind(tag, kvec)
        sym = f"d_{tag}_" + "_".join(f"{s}{e}" for s, e in key[1])
        self._add_f_symbol(sym)
        self._descents[key] = sym
        self.descent_meta[sym] = (tag, key[1], power)
        chi = self.chi[tag]
        self.base_f_eqs.append(vec((sym, 2)))
        self.base_f_neqs.append(vec((sym, 1)))
        self.base_f_neqs.append(vec((sym, 1), (chi, 1)))
        for other_tag, other_chi in self.chi.items():
            if other_tag == tag:
                continue
            if power in (1, 2):
                self.base_f_neqs.append(vec((sym, 1), (other_chi, 1)))
                self.base_f_neqs.append(vec((sym, 1), (chi, 1), (other_chi, 1)))
        for other, (otag, _, _) in list(self.descent_meta.items()):
            if other == sym or otag == tag:
                continue
            ochi = self.chi[otag]
            for a in (0, 1):
                for b in (0, 1):
                    self.base_f_neqs.append(
                        vec((sym, 1), (other, 1), (chi, a), (ochi, b)))
        return sym

    def _power_kind(self, tag: str, kvec: Vec):
        d = dict(self.canon_orbit(kvec, tag))
        for i in (1, 2):
            n = self.nu.get(i)
            if n and set(d) == {n}:
                k = abs(d[n])
                if k in (1, 2, 3):
                    return k
        return "other"

    # -- three-valued triviality -------------------------------------------------

    def tri_k(self, tag: str, v: Vec, br: Branch) -> Tri:
        syms = self.k_syms[tag]
        lat = self.k_lattice(tag, br)
        dv = dense(v, syms)
        if lat.contains(dv):
            return True
        ext = lat.extend([dv])
        neqs = self.base_k_neqs[tag] + [w for sc, w in br.k_neqs if sc == tag]
        for d in neqs:
            if ext.contains(dense(d, syms)):
                return False
        payload = self.canon_orbit(v, tag)
        qid = f"char:{tag}:{payload}"
        return Query(qid, "charK", scope=tag, vecs=(payload,))

    def tri_f(self, v: Vec, br: Branch) -> Tri:
        lat = self.f_lattice(br)
        dv = dense(v, self.f_syms)
        if lat.contains(dv):
            return True
        ext = lat.extend([dv])
        for d in itertools.chain(self.base_f_neqs, br.f_neqs):
            if ext.contains(dense(d, self.f_syms)):
                return False
        # same-field descent pairs reduce to an extension-scope question
        red = sparse(lat.reduce(dv), self.f_syms)
        ds = [(s, self.descent_meta[s]) for s, e in red
              if s in self.descent_meta and e % 2]
        if len(ds) == 2 and ds[0][1][0] == ds[1][1][0]:
            rest = [s for s, _ in red if s not in (ds[0][0], ds[1][0])]
            tag = ds[0][1][0]
            if all(s == self.chi[tag] for s in rest):
                k1, k2 = ds[0][1][1], ds[1][1][1]
                align = vec((ds[0][0], 1), (ds[1][0], 1))
                sub = self.tri_k(tag, vsub(k1, k2), br)
                if sub is False:
                    sub = self.tri_k(tag, vadd(k1, k2), br)
                if isinstance(sub, Query):
                    return replace(sub, meta=(("align", align),))
                if sub is True:
                    # identified pair: decided by the chi offset
                    resid = vadd(red, align)
                    return self.tri_f(resid, br) if resid != red else True
                return False
        payload = self.canon_orbit(v, "F")
        qid = f"char:F:{payload}"
        return Query(qid, "charF", scope="F", vecs=(payload,))

    def tri_bc(self, tag: str, gamma: Vec, kappa: Vec, br: Branch) -> Tri:
        """Does the base change of ground-field gamma to K_tag equal kappa?

        Base changes are exactly the tau-invariant characters with kernel
        {1, chi}.  kappa not tau-invariant: no.  kappa trivial: gamma in
        {1, chi}.  Otherwise gamma must be one of the two descents.
        """
        if not gamma:
            return self.tri_k(tag, kappa, br)
        inv = self.tri_k(tag, vscale(kappa, 2), br)
        if inv is not True:
            return False if inv is False else inv
        kz = self.tri_k(tag, kappa, br)
        chi = self.chi[tag]
        if kz is True:
            return tri_or(self.tri_f(gamma, br),
                          self.tri_f(vadd(gamma, vec((chi, 1))), br))
        if kz is False:
            d = self.descent(tag, kappa)
            return tri_or(
                self.tri_f(vadd(gamma, vec((d, 1))), br),
                self.tri_f(vadd(gamma, vec((d, 1), (chi, 1))), br))
        return kz

    # -- fresh characters (GL(3) x GL(2) cuspidality rule) -------------------------

    def fresh_pair(self, ad_side: int, partner_key: str) -> tuple[Vec, Vec]:
        """nu', xi for Ad(pi_side) x (2-dim partner): xi nontrivial quadratic,
        nu' unconstrained.  Deterministic per (side, partner)."""
        key = (ad_side, partner_key)
        if key not in self._fresh:
            np_sym = f"nuP_{ad_side}_{partner_key}"
            xi_sym = f"xi_{ad_side}_{partner_key}"
            self._add_f_symbol(np_sym)
            self._add_f_symbol(xi_sym)
            self.base_f_eqs.append(vec((xi_sym, 2)))
            self.base_f_neqs.append(vec((xi_sym, 1)))
            self._fresh[key] = (vec((np_sym, 1)), vec((xi_sym, 1)))
        return self._fresh[key]


def char_reduce(sc: Scenario, v: Vec, scope: str = "F",
                br: Branch = EMPTY_BRANCH) -> Vec:
    """Canonical representative of a character expression; idempotent."""
    return sc._canon(v, scope, br)


def char_is_trivial(sc: Scenario, v: Vec, scope: str = "F",
                    br: Branch = EMPTY_BRANCH) -> Tri:
    """Three-valued triviality: True, False, or a stable Query."""
    return sc.tri_f(v, br) if scope == "F" else sc.tri_k(scope, v, br)


def validate_spec(spec: CaseSpec) -> None:
    for side in (spec.side1, spec.side2):
        if side.cls not in CLASSES:
            raise InvalidCaseSpec(f"unknown class {side.cls!r}")
        if side.cls == DIHEDRAL:
            if side.subflag not in SUBFLAGS:
                raise InvalidCaseSpec(
                    f"dihedral side needs a subflag in {SUBFLAGS}")
        elif side.subflag is not None:
            raise InvalidCaseSpec(
                f"subflag given for non-dihedral side {side.cls}")
    both_di = spec.side1.cls == DIHEDRAL and spec.side2.cls == DIHEDRAL
    if both_di and spec.same_field is None:
        raise InvalidCaseSpec("dihedral-dihedral case needs sameK/diffK")
    if not both_di and spec.same_field is not None:
        raise InvalidCaseSpec("same_field only applies to dihedral pairs")


def scenario_build(spec: CaseSpec) -> Scenario:
    return Scenario(spec)


# ---------------------------------------------------------------------------
# duals and equivalence

def rep_dual(a: RepExpr) -> RepExpr:
    if isinstance(a, Char):
        return Char(vneg(a.expr))
    if isinstance(a, Induced):
        return Induced(a.field, vneg(a.alpha), vneg(a.twist))
    if isinstance(a, AdTwist):
        return AdTwist(a.side, vneg(a.twist))
    if isinstance(a, SigmaOct):
        return SigmaOct(a.side, vneg(a.twist))
    if isinstance(a, Sym4Cusp):
        return Sym4Cusp(a.side, vneg(a.twist))
    return Opaque(tuple(rep_dual(f) for f in a.factors), a.automorphic)


class UnresolvableProduct(Exception):
    """Raised when a pole question has no known analytic handle."""


def absorb_twist(sc: Scenario, field: str, alpha: Vec, twist: Vec):
    """Fold the resolvable part of a ground-field twist into alpha.

    chi of the field base-changes to 1; a descent of this field base
    changes back to its source character.  Everything else stays in the
    twist."""
    chi_sym = sc.chi[field]
    keep = []
    for s, e in twist:
        if s == chi_sym:
            continue
        meta = sc.descent_meta.get(s)
        if meta and meta[0] == field:
            alpha = vadd(alpha, vscale(meta[1], e))
        else:
            keep.append((s, e))
    return alpha, vec(*keep)


def _subst_sigma(a: RepExpr, sc: Scenario, br: Branch) -> RepExpr:
    if isinstance(a, SigmaOct):
        img = br.sigma_image(a.side)
        if img is not None:
            tag, alpha, twist = img
            alpha, twist = absorb_twist(sc, tag, alpha, vadd(twist, a.twist))
            return Induced(tag, alpha, twist)
    return a


def rep_equiv(a: RepExpr, b: RepExpr, sc: Scenario, br: Branch) -> Tri:
    a = _subst_sigma(a, sc, br)
    b = _subst_sigma(b, sc, br)
    if a.dim != b.dim:
        return False
    if isinstance(a, Char) and isinstance(b, Char):
        return sc.tri_f(vsub(a.expr, b.expr), br)
    if isinstance(a, AdTwist) and isinstance(b, AdTwist):
        if a.side != b.side:
            return False  # Ad(pi_1), Ad(pi_2) are not twist-equivalent
        delta = vsub(a.twist, b.twist)
        cls = sc.side_class(a.side)
        if cls == TETRAHEDRAL:
            m = vec((sc.mu[a.side], 1))
            return tri_or(sc.tri_f(delta, br),
                          sc.tri_f(vsub(delta, m), br),
                          sc.tri_f(vadd(delta, m), br))
        return sc.tri_f(delta, br)
    if isinstance(a, Sym4Cusp) and isinstance(b, Sym4Cusp):
        if a.side != b.side:
            return _bool_query(sc, br, "sym4", a.side, b.side,
                               vsub(a.twist, b.twist))
        return sc.tri_f(vsub(a.twist, b.twist), br)
    if isinstance(a, Induced) and isinstance(b, Induced):
        return _induced_equiv(a, b, sc, br)
    if isinstance(a, SigmaOct) and isinstance(b, SigmaOct):
        if a.side == b.side:
            delta = vsub(a.twist, b.twist)
            e = vec((sc.eta[a.side], 1))
            return tri_or(sc.tri_f(delta, br), sc.tri_f(vadd(delta, e), br))
        return _bool_query(sc, br, "sigma2", a.side, b.side,
                           vsub(a.twist, b.twist))
    si, ind = None, None
    if isinstance(a, SigmaOct) and isinstance(b, Induced):
        si, ind = a, b
    elif isinstance(b, SigmaOct) and isinstance(a, Induced):
        si, ind = b, a
    if si is not None:
        return _sigma_vs_induced(si, ind, sc, br)
    if isinstance(a, Opaque) and isinstance(b, Opaque):
        if a == b:
            return True
        return _bool_query(sc, br, "opq", repr(a), repr(b), ZERO)
    return False


def _bool_query(sc: Scenario, br: Branch, kind: str, x, y, delta: Vec) -> Tri:
    key = tuple(sorted((str(x), str(y))))
    qid = f"{kind}:{key[0]}~{key[1]}:{sc.canon_orbit(delta, 'F')}"
    val = br.bool_value(qid)
    if val is not None:
        return val
    return Query(qid, "bool")


def _induced_equiv(a: Induced, b: Induced, sc: Scenario, br: Branch) -> Tri:
    if a.field != b.field:
        # distinct declared quadratic fields: Satake parameters at places
        # split in one and inert in the other never agree
        return False
    gd = vsub(a.twist, b.twist)
    return tri_or(sc.tri_bc(a.field, gd, vsub(b.alpha, a.alpha), br),
                  sc.tri_bc(a.field, gd, vneg(vadd(b.alpha, a.alpha)), br))


def _sigma_vs_induced(si: SigmaOct, ind: Induced, sc: Scenario,
                      br: Branch) -> Tri:
    # undetermined: sigma's quadratic field is not pinned relative to the
    # dihedral fields.  The yes branch substitutes sigma by the induced
    # symbol (twist-adjusted) and constrains eta's base change.
    alpha, twist = absorb_twist(sc, ind.field, ind.alpha,
                                vsub(ind.twist, si.twist))
    qid = (f"sigma:{si.side}~I:{ind.field}:"
           f"{sc.canon_orbit(alpha, ind.field)}:"
           f"{sc.canon_orbit(twist, 'F')}")
    val = br.bool_value(qid)
    if val is not None:
        if not val:
            return False
        img = br.sigma_image(si.side)
        if img is not None:
            sub = _subst_sigma(SigmaOct(si.side, si.twist), sc, br)
            return rep_equiv(sub, ind, sc, br)
        return True
    return Query(qid, "sigma", meta=(si.side, ind.field, alpha, twist))


# ---------------------------------------------------------------------------
# branch assignment / consistency

def assign(sc: Scenario, br: Branch, q: Query, value: bool) -> list[Branch]:
    """Extend a branch by one query answer; returns consistent extensions.

    A sigma: yes assignment triggers the self-twist consequence
    sigma x eta ~ sigma => bc(eta) in {1, alpha^-2}, which either forces
    eta = chi (when alpha^-2 is not tau-invariant) or becomes a finite
    disjunction over the descents of alpha^2.
    """
    base = replace(br, log=br.log + ((q.qid, value),))
    out: list[Branch] = []
    if q.kind == "charF":
        if value:
            nb = replace(base, f_eqs=base.f_eqs + q.vecs)
        else:
            nb = replace(base, f_neqs=base.f_neqs + q.vecs)
        out.append(nb)
    elif q.kind == "charK":
        vecs = tuple((q.scope, v) for v in q.vecs)
        extra_f = tuple(v for k, v in q.meta if k == "align") if value else ()
        if value:
            nb = replace(base, k_eqs=base.k_eqs + vecs,
                         f_eqs=base.f_eqs + extra_f)
        else:
            nb = replace(base, k_neqs=base.k_neqs + vecs)
        out.append(nb)
    elif q.kind == "bool":
        out.append(replace(base, bools=base.bools + ((q.qid, value),)))
    elif q.kind == "sigma":
        nb = replace(base, bools=base.bools + ((q.qid, value),))
        if not value:
            out.append(nb)
        else:
            side, tag, alpha, twist = q.meta
            nb = replace(nb, sigma_subst=nb.sigma_subst
                         + ((side, (tag, alpha, twist)),))
            out.extend(_eta_consequence(sc, nb, side, tag, alpha))
    else:  # pragma: no cover
        raise ValueError(q.kind)
    return [b for b in out if branch_lattice_consistent(sc, b)]


def _eta_consequence(sc: Scenario, br: Branch, side: int, tag: str,
                     alpha: Vec) -> list[Branch]:
    eta = vec((sc.eta[side], 1))
    chi = vec((sc.chi[tag], 1))
    inv = sc.tri_k(tag, vscale(alpha, 4), br)
    out: list[Branch] = []
    forced = replace(br, f_eqs=br.f_eqs + (vsub(eta, chi),))
    if inv is False:
        out.append(forced)
    else:
        cands = [vsub(eta, chi)]
        a2 = vscale(alpha, 2)
        if sc.tri_k(tag, a2, br) is not True:
            d = sc.descent(tag, a2)
            cands.append(vadd(eta, vec((d, 1))))
            cands.append(vadd(eta, vec((d, 1)), chi))
        disj = replace(br, disjunctions=br.disjunctions + (("F", tuple(cands)),))
        if inv is True:
            out.append(disj)
        else:
            # undetermined tau-invariance of alpha^-2: branch on it here
            out.extend(assign(sc, forced, inv, False))
            out.extend(assign(sc, disj, inv, True))
    return out


def branch_lattice_consistent(sc: Scenario, br: Branch) -> bool:
    lat = sc.f_lattice(br)
    for d in itertools.chain(sc.base_f_neqs, br.f_neqs):
        if lat.contains(dense(d, sc.f_syms)):
            return False
    for tag in sc.k_syms:
        klat = sc.k_lattice(tag, br)
        neqs = sc.base_k_neqs[tag] + [w for s, w in br.k_neqs if s == tag]
        for d in neqs:
            if klat.contains(dense(d, sc.k_syms[tag])):
                return False
    for scope, cands in br.disjunctions:
        possible = False
        for v in cands:
            t = sc.tri_f(v, br) if scope == "F" else sc.tri_k(scope, v, br)
            if t is not False:
                possible = True
                break
        if not possible:
            return False
    return True


# ---------------------------------------------------------------------------
# explicit finite models (spec'd consistency check; the lattice test above
# is exact, the model search additionally produces witnesses)

def branch_consistent(sc: Scenario, br: Branch, bound: int = 24):
    """Search for a finite cyclic-model witness of the branch.

    Returns (consistent, model_or_None, warning).  The lattice check is
    exact; the explicit search realizes each extension scope inside Z/n,
    n <= bound, with tau acting by inversion.  warning=True means the
    lattice says consistent but no witness was found below the bound.
    """
    if not branch_lattice_consistent(sc, br):
        return False, None, False
    for tag in sc.k_syms:
        model = _scope_model(sc, tag, br, bound)
        if model is None:
            return True, None, True
    models = {tag: _scope_model(sc, tag, br, bound) for tag in sc.k_syms}
    return True, models, False


def _scope_model(sc: Scenario, tag: str, br: Branch, bound: int):
    syms = sc.k_syms[tag]
    eqs = sc.base_k_eqs[tag] + [v for s, v in br.k_eqs if s == tag]
    neqs = sc.base_k_neqs[tag] + [v for s, v in br.k_neqs if s == tag]
    for n in range(1, bound + 1):
        for assign_ in itertools.product(range(n), repeat=len(syms)):
            env = dict(zip(syms, assign_))
            if all(sum(e * env[s] for s, e in v) % n == 0 for v in eqs) and \
               all(sum(e * env[s] for s, e in v) % n != 0 for v in neqs):
                return n, env
    return None
