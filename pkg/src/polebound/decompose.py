"""Rewrite rules: products of adjoint lifts into isobaric constituent lists.

Every rule preserves total dimension.  Products with no known analytic
handle (a cuspidal 5-dimensional constituent times anything, or two
distinct cuspidal adjoints) become non-automorphic Opaque markers; pole
questions against those are answered by reassociation when possible and
are otherwise unresolvable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    AdTwist, Branch, Char, Induced, Opaque, Query, RepExpr, Scenario,
    SigmaOct, Sym4Cusp, Tri, UnresolvableProduct, DIHEDRAL, TETRAHEDRAL,
    OCTAHEDRAL, NSP, TRIVIAL, absorb_twist, rep_dual, rep_equiv, vadd,
    vscale, vsub, vec, _subst_sigma,
)


class NeedQuery(Exception):
    """Evaluation hit an undetermined question; the caller must branch."""

    def __init__(self, query: Query):
        self.query = query


@dataclass
class EvalCtx:
    """Resolves Tri answers during evaluation.

    strict mode raises NeedQuery on the first undetermined answer; dry-run
    mode records it (and treats splits optimistically) so bipartitions can
    be ranked by how much branching they would need.
    """

    sc: Scenario
    br: Branch
    strict: bool = True
    queries: list = field(default_factory=list)
    blocked: bool = False

    def tri(self, t: Tri):
        if isinstance(t, Query):
            if self.strict:
                raise NeedQuery(t)
            if t.qid not in [q.qid for q in self.queries]:
                self.queries.append(t)
            return None
        return t


@dataclass
class RuleTrace:
    steps: list = field(default_factory=list)

    def record(self, rule: str, inputs, outputs) -> None:
        din = 1
        for x in inputs:
            din *= x.dim
        dout = sum(x.dim for x in outputs)
        assert din == dout, f"{rule}: dimension {din} -> {dout}"
        self.steps.append((rule, tuple(inputs), tuple(outputs)))


def adjoint_of(side: int, sc: Scenario) -> list[RepExpr]:
    """Isobaric constituents of Ad(pi_side)."""
    cls = sc.side_class(side)
    if cls != DIHEDRAL:
        return [AdTwist(side)]
    tag = sc.field_of[side]
    chi = vec((sc.chi[tag], 1))
    if sc.side_flag(side) == "P":
        beta = vec((sc.descent(tag, vec((sc.nu[side], 1))), 1))
        return [Char(chi), Char(beta), Char(vadd(beta, chi))]
    return [Char(chi), Induced(tag, vec((sc.nu[side], 1)))]


def _norm_induced(x: Induced, ctx: EvalCtx, out: list) -> None:
    sc, br = ctx.sc, ctx.br
    alpha, twist = absorb_twist(sc, x.field, x.alpha, x.twist)
    split = ctx.tri(sc.tri_k(x.field, vscale(alpha, 2), br))
    if split:
        chi = vec((sc.chi[x.field], 1))
        trivial = ctx.tri(sc.tri_k(x.field, alpha, br))
        if trivial is None:
            trivial = False
        if trivial:
            out.extend([Char(twist), Char(vadd(twist, chi))])
        else:
            d = vec((sc.descent(x.field, alpha), 1))
            out.extend([Char(vadd(twist, d)), Char(vadd(twist, d, chi))])
    else:
        out.append(Induced(x.field, alpha, twist))


def normalize(r: RepExpr, ctx: EvalCtx) -> list[RepExpr]:
    r = _subst_sigma(r, ctx.sc, ctx.br)
    out: list[RepExpr] = []
    if isinstance(r, Induced):
        _norm_induced(r, ctx, out)
    else:
        out.append(r)
    return out


def _twist(r: RepExpr, t, ctx: EvalCtx) -> list[RepExpr]:
    if not t:
        return normalize(r, ctx)
    if isinstance(r, Char):
        return [Char(vadd(r.expr, t))]
    if isinstance(r, Induced):
        return normalize(Induced(r.field, r.alpha, vadd(r.twist, t)), ctx)
    if isinstance(r, AdTwist):
        return [AdTwist(r.side, vadd(r.twist, t))]
    if isinstance(r, SigmaOct):
        return normalize(SigmaOct(r.side, vadd(r.twist, t)), ctx)
    if isinstance(r, Sym4Cusp):
        return [Sym4Cusp(r.side, vadd(r.twist, t))]
    return [Opaque(r.factors + (Char(t),), r.automorphic)]


def square_constituents(side: int, twist, sc: Scenario) -> list[RepExpr]:
    """Ad(pi) x Ad(pi) for a non-dihedral side, tensored by a character.

    The 9 dimensions decompose through the fourth symmetric power:
    tetrahedral 1+1+1+3+3, octahedral 1+3+2+3, non-solvable 1+3+5.
    """
    cls = sc.side_class(side)
    if cls == TETRAHEDRAL:
        m = vec((sc.mu[side], 1))
        return [Char(twist), Char(vadd(twist, m)), Char(vadd(twist, vscale(m, 2))),
                AdTwist(side, twist), AdTwist(side, twist)]
    if cls == OCTAHEDRAL:
        e = vec((sc.eta[side], 1))
        return [Char(twist), AdTwist(side, twist), SigmaOct(side, twist),
                AdTwist(side, vadd(twist, e))]
    if cls == NSP:
        return [Char(twist), AdTwist(side, twist), Sym4Cusp(side, twist)]
    raise AssertionError(cls)


def square_decompose(side: int, sc: Scenario,
                     br: Branch = None) -> list[RepExpr]:
    """The 9-dimensional decomposition of Ad(pi_side) x Ad(pi_side)."""
    from .algebra import EMPTY_BRANCH
    ctx = EvalCtx(sc, br if br is not None else EMPTY_BRANCH, strict=True)
    return side_multiset((side, side), ctx)


def pair_decompose(a: RepExpr, b: RepExpr, ctx: EvalCtx) -> list[RepExpr]:
    """Decompose a x b into constituents (possibly a single Opaque)."""
    sc = ctx.sc
    a = _subst_sigma(a, sc, ctx.br)
    b = _subst_sigma(b, sc, ctx.br)
    if isinstance(b, Char):
        a, b = b, a
    if isinstance(a, Char):
        return _twist(b, a.expr, ctx)
    if isinstance(a, Induced) and isinstance(b, Induced):
        if a.field == b.field:
            # I(alpha) x I(beta) = I(alpha beta) + I(alpha beta^tau)
            t = vadd(a.twist, b.twist)
            out: list[RepExpr] = []
            _norm_induced(Induced(a.field, vadd(a.alpha, b.alpha), t), ctx, out)
            _norm_induced(Induced(a.field, vsub(a.alpha, b.alpha), t), ctx, out)
            return out
        return [Opaque((a, b), automorphic=True)]
    if isinstance(a, AdTwist) and isinstance(b, AdTwist):
        if a.side == b.side:
            return [c for r in square_constituents(
                        a.side, vadd(a.twist, b.twist), sc)
                    for c in normalize(r, ctx)]
        return [Opaque((a, b), automorphic=False)]
    ad, partner = None, None
    if isinstance(a, AdTwist) and isinstance(b, (Induced, SigmaOct)):
        ad, partner = a, b
    elif isinstance(b, AdTwist) and isinstance(a, (Induced, SigmaOct)):
        ad, partner = b, a
    if ad is not None:
        # GL(3) x GL(2) cuspidality rule for a dihedral partner:
        # Ad x I = (Ad @ nu') + (Ad @ nu' xi), xi a nontrivial quadratic
        key = _partner_key(partner, sc)
        nu_p, xi = sc.fresh_pair(ad.side, key)
        base = vadd(ad.twist, partner.twist, nu_p)
        return [AdTwist(ad.side, base), AdTwist(ad.side, vadd(base, xi))]
    if isinstance(a, (Induced, SigmaOct)) and isinstance(b, (Induced, SigmaOct)):
        return [Opaque((a, b), automorphic=True)]
    return [Opaque((a, b), automorphic=False)]


def _partner_key(p: RepExpr, sc: Scenario) -> str:
    if isinstance(p, SigmaOct):
        return f"sig{p.side}"
    return f"I{p.field}." + "_".join(
        f"{s}{e}" for s, e in sc.canon_orbit(p.alpha, p.field))


def product_normalize(factors: list[list[RepExpr]], ctx: EvalCtx,
                      trace: RuleTrace | None = None) -> list[RepExpr]:
    """Left-fold of x over isobaric sums, distributing over constituents."""
    if not factors:
        return [TRIVIAL]
    acc = [c for r in factors[0] for c in normalize(r, ctx)]
    for f in factors[1:]:
        nxt: list[RepExpr] = []
        for x in acc:
            for y in f:
                out = pair_decompose(x, y, ctx)
                if trace is not None:
                    trace.record("pair", (x, y), out)
                nxt.extend(out)
        acc = nxt
    return acc


def side_multiset(ids: tuple[int, ...], ctx: EvalCtx,
                  trace: RuleTrace | None = None) -> list[RepExpr]:
    """Constituents of the product of adjoints named by side ids (0 = 1)."""
    factors = [[TRIVIAL] if i == 0 else adjoint_of(i, ctx.sc) for i in ids]
    return product_normalize(factors, ctx, trace)


def pairing_order(left: list[RepExpr], right: list[RepExpr],
                  ctx: EvalCtx) -> int | None:
    """-ord_{s=1} of the full Rankin-Selberg pairing of two isobaric sums.

    Counts constituent pairs (a, b) with b ~ dual(a), reassociating around
    non-automorphic opaque factors.  Returns None in dry-run mode when the
    count is undetermined; raises UnresolvableProduct when some pole has
    no analytic handle in any association.
    """
    total = 0
    for a in left:
        for b in right:
            c = _pair_contribution(a, b, ctx)
            if c is None:
                if ctx.strict:  # pragma: no cover
                    raise AssertionError("strict mode returned None")
                continue
            total += c
    return total


def _pair_contribution(a: RepExpr, b: RepExpr, ctx: EvalCtx) -> int | None:
    a = _subst_sigma(a, ctx.sc, ctx.br)
    b = _subst_sigma(b, ctx.sc, ctx.br)
    # Opaque products are never compared head-on: a non-cuspidal product
    # can hide low-dimensional constituents, so every pole question is
    # reassociated through a factor with known analytic continuation.
    if isinstance(a, Opaque) and isinstance(b, Opaque):
        ctx.blocked = True
        if ctx.strict:
            raise UnresolvableProduct(f"{a} x {b}")
        return None
    if isinstance(a, Opaque) or isinstance(b, Opaque):
        op, x = (a, b) if isinstance(a, Opaque) else (b, a)
        return _opaque_pair(op, x, ctx)
    t = ctx.tri(rep_equiv(b, rep_dual(a), ctx.sc, ctx.br))
    if t is None:
        return None
    return 1 if t else 0


def _opaque_pair(op: Opaque, x: RepExpr, ctx: EvalCtx) -> int | None:
    """-ord L((A x B) x X) via -ord L(A x (B x X)) when B x X decomposes.

    The remaining factor A is paired recursively, so a non-automorphic
    product is never silently treated as holomorphic: if no association
    isolates products with known analytic continuation, the question is
    unresolvable.
    """
    if len(op.factors) == 2:
        for p, q in (op.factors, op.factors[::-1]):
            saved_queries = list(ctx.queries)
            saved_blocked = ctx.blocked
            try:
                prod = pair_decompose(q, x, ctx)
                if any(isinstance(c, Opaque) and not c.automorphic
                       for c in prod):
                    raise UnresolvableProduct("inner product unresolved")
                total, undetermined = 0, False
                for c in prod:
                    sub = _pair_contribution(p, c, ctx)
                    if sub is None:
                        undetermined = True
                        continue
                    total += sub
                if ctx.blocked and not saved_blocked:
                    raise UnresolvableProduct("blocked in recursion")
                return None if undetermined else total
            except UnresolvableProduct:
                ctx.queries = saved_queries
                ctx.blocked = saved_blocked
                continue
    ctx.blocked = True
    if ctx.strict:
        raise UnresolvableProduct(f"{op} x {x}")
    return None
