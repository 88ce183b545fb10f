"""Hopf-algebra structure data inside a braided graded category.

Structure maps are GradedMorphisms; axioms are checked by computing exact
residual matrices (a check passes iff its residual is identically zero).
The antipode is found by solving the convolution-inverse equation as an
exact linear system in its matrix entries.  Also here: Yetter-Drinfeld
module checks, their induced braiding, and bosonization by a finite
abelian group.
"""

from collections import namedtuple

from .exactalg import (Matrix, NoSolutionError, EngineError,
                       solve_product_constraints)
from .gradedcat import (AbelianGroup, Bicharacter, Context, GradedMorphism,
                        GradedObject, braiding, braiding_inverse,
                        identity_mor, tensor_obj, unit_object)


class SingularAntipodeError(EngineError):
    code = "SingularAntipode"


class CheckReport:
    """Named exact residuals; passes iff every residual is zero."""

    def __init__(self, checks):
        self.checks = list(checks)

    @property
    def passed(self):
        return all(r.is_zero() for _, r in self.checks)

    def failures(self):
        return [name for name, r in self.checks if not r.is_zero()]

    def residual(self, name):
        for n, r in self.checks:
            if n == name:
                return r
        raise KeyError(name)

    def witness(self, name):
        """First nonzero entry of a named residual, as (row, col, value)."""
        r = self.residual(name).matrix
        for i in range(r.rows):
            for j in range(r.cols):
                if r.entries[i][j]:
                    return (i, j, r.entries[i][j])
        return None

    def __repr__(self):
        bad = self.failures()
        return "CheckReport(passed)" if not bad else "CheckReport(failed: %s)" % ", ".join(bad)


class AlgebraData:
    """An associative unital algebra on a graded carrier."""

    def __init__(self, carrier, m, u):
        HH = tensor_obj(carrier, carrier)
        unit = unit_object(carrier.ctx)
        assert m.source == HH and m.target == carrier, "bad multiplication type"
        assert u.source == unit and u.target == carrier, "bad unit type"
        self.carrier = carrier
        self.m = m
        self.u = u

    def _key(self):
        return (self.carrier, self.m, self.u)

    def __eq__(self, other):
        return type(other) is type(self) and other._key() == self._key()

    def __hash__(self):
        return hash((type(self).__name__,) + self._key())


class CoalgebraData:
    """A coassociative counital coalgebra on a graded carrier."""

    def __init__(self, carrier, delta, eps):
        HH = tensor_obj(carrier, carrier)
        unit = unit_object(carrier.ctx)
        assert delta.source == carrier and delta.target == HH, "bad coproduct type"
        assert eps.source == carrier and eps.target == unit, "bad counit type"
        self.carrier = carrier
        self.delta = delta
        self.eps = eps

    def _key(self):
        return (self.carrier, self.delta, self.eps)

    def __eq__(self, other):
        return type(other) is type(self) and other._key() == self._key()

    def __hash__(self):
        return hash((type(self).__name__,) + self._key())


class BialgebraData:
    """Algebra + coalgebra, compatible through the ambient braiding."""

    def __init__(self, carrier, m, u, delta, eps):
        self.carrier = carrier
        self.m = m
        self.u = u
        self.delta = delta
        self.eps = eps
        AlgebraData(carrier, m, u)
        CoalgebraData(carrier, delta, eps)

    def as_algebra(self):
        return AlgebraData(self.carrier, self.m, self.u)

    def as_coalgebra(self):
        return CoalgebraData(self.carrier, self.delta, self.eps)

    def _key(self):
        return (self.carrier, self.m, self.u, self.delta, self.eps)

    def __eq__(self, other):
        return type(other) is type(self) and other._key() == self._key()

    def __hash__(self):
        return hash((type(self).__name__,) + self._key())


class HopfAlgebraData(BialgebraData):
    """Bialgebra with a chosen antipode."""

    def __init__(self, carrier, m, u, delta, eps, S):
        super().__init__(carrier, m, u, delta, eps)
        assert S.source == carrier and S.target == carrier, "bad antipode type"
        self.S = S

    def as_bialgebra(self):
        return BialgebraData(self.carrier, self.m, self.u, self.delta, self.eps)

    def _key(self):
        return super()._key() + (self.S,)


def check_algebra(A):
    H = A.carrier
    i = identity_mor(H)
    return CheckReport([
        ("associativity", A.m * (A.m @ i) - A.m * (i @ A.m)),
        ("unit_left", A.m * (A.u @ i) - i),
        ("unit_right", A.m * (i @ A.u) - i),
    ])


def check_coalgebra(C):
    H = C.carrier
    i = identity_mor(H)
    return CheckReport([
        ("coassociativity", (C.delta @ i) * C.delta - (i @ C.delta) * C.delta),
        ("counit_left", (C.eps @ i) * C.delta - i),
        ("counit_right", (i @ C.eps) * C.delta - i),
    ])


def check_bialgebra(B):
    H = B.carrier
    i = identity_mor(H)
    sigma = braiding(H, H)
    mult_compat = (B.delta * B.m
                   - (B.m @ B.m) * (i @ sigma @ i) * (B.delta @ B.delta))
    unit_compat = B.delta * B.u - (B.u @ B.u)
    counit_compat = B.eps * B.m - (B.eps @ B.eps)
    unit_counit = B.eps * B.u - identity_mor(unit_object(H.ctx))
    return CheckReport(
        check_algebra(B.as_algebra()).checks
        + check_coalgebra(B.as_coalgebra()).checks
        + [("mult_compat", mult_compat),
           ("unit_compat", unit_compat),
           ("counit_compat", counit_compat),
           ("unit_counit", unit_counit)])


def check_hopf(H):
    i = identity_mor(H.carrier)
    ue = H.u * H.eps
    return CheckReport(
        check_bialgebra(H).checks
        + [("antipode_left", H.m * (H.S @ i) * H.delta - ue),
           ("antipode_right", H.m * (i @ H.S) * H.delta - ue)])


def convolution(B, f, g):
    """Convolution product of endomorphisms of the carrier of B."""
    H = B.carrier
    assert f.source == H and f.target == H
    assert g.source == H and g.target == H
    return B.m * (f @ g) * B.delta


def solve_antipode(B):
    """The convolution inverse of the identity, or NoSolutionError.

    The two-sided antipode equation is linear in the entries of S; a
    NonUnique outcome cannot occur for a counital coproduct and would be an
    internal error.
    """
    H = B.carrier
    n = H.dim
    field = H.ctx.field
    m_mat, d_mat = B.m.matrix, B.delta.matrix
    terms = []
    for k in range(n):
        A_k = Matrix(field, [[m_mat.entries[p][i * n + k] for i in range(n)]
                             for p in range(n)])
        B_k = Matrix(field, [[d_mat.entries[j * n + k][q] for q in range(n)]
                             for j in range(n)])
        terms.append((A_k, B_k))
    ue = (B.u * B.eps).matrix
    S_mat = solve_product_constraints(field, [(terms, ue)], (n, n))
    S = GradedMorphism(H, H, S_mat)
    i = identity_mor(H)
    if not (B.m * (i @ S) * B.delta - B.u * B.eps).is_zero():
        raise NoSolutionError("left convolution inverse is not two-sided")
    return S


# ---------------------------------------------------------------------------
# Yetter-Drinfeld modules
# ---------------------------------------------------------------------------

class YDModuleData:
    """A carrier with an action H (x) V -> V and a coaction V -> H (x) V."""

    def __init__(self, hopf, carrier, action, coaction):
        H = hopf.carrier
        assert action.source == tensor_obj(H, carrier) and action.target == carrier, \
            "bad action type"
        assert coaction.source == carrier and coaction.target == tensor_obj(H, carrier), \
            "bad coaction type"
        self.hopf = hopf
        self.carrier = carrier
        self.action = action
        self.coaction = coaction

    def _key(self):
        return (self.hopf, self.carrier, self.action, self.coaction)

    def __eq__(self, other):
        return type(other) is type(self) and other._key() == self._key()

    def __hash__(self):
        return hash(("YDModuleData",) + self._key())


def check_yd(yd):
    """Module + comodule axioms and the Yetter-Drinfeld compatibility."""
    Hd = yd.hopf
    H, V = Hd.carrier, yd.carrier
    a, rho = yd.action, yd.coaction
    iH, iV = identity_mor(H), identity_mor(V)
    lhs = (Hd.m @ a) * (iH @ braiding(H, H) @ iV) * (Hd.delta @ rho)
    rhs = ((Hd.m @ iV) * (iH @ braiding(V, H)) * ((rho * a) @ iH)
           * (iH @ braiding(H, V)) * (Hd.delta @ iV))
    return CheckReport([
        ("module_assoc", a * (Hd.m @ iV) - a * (iH @ a)),
        ("module_unit", a * (Hd.u @ iV) - iV),
        ("comodule_coassoc", (Hd.delta @ iV) * rho - (iH @ rho) * rho),
        ("comodule_counit", (Hd.eps @ iV) * rho - iV),
        ("yd_compat", lhs - rhs),
    ])


def yd_braiding(V, W):
    """The induced braiding c: V (x) W -> W (x) V of two YD modules."""
    assert V.hopf == W.hopf
    H = V.hopf.carrier
    return ((W.action @ identity_mor(V.carrier))
            * (identity_mor(H) @ braiding(V.carrier, W.carrier))
            * (V.coaction @ identity_mor(W.carrier)))


def yd_braiding_inverse(V, W):
    """Inverse of yd_braiding(V, W); requires an invertible antipode."""
    assert V.hopf == W.hopf
    Hd = V.hopf
    H = Hd.carrier
    try:
        S_inv = Hd.S.matrix.inverse()
    except NoSolutionError:
        raise SingularAntipodeError("antipode is not invertible") from None
    Sm1 = GradedMorphism(H, H, S_inv)
    iV, iW = identity_mor(V.carrier), identity_mor(W.carrier)
    return (braiding_inverse(V.carrier, W.carrier)
            * (W.action @ iV)
            * (braiding_inverse(H, W.carrier) @ iV)
            * (iW @ Sm1 @ iV)
            * (iW @ V.coaction))


# ---------------------------------------------------------------------------
# bosonization
# ---------------------------------------------------------------------------

BosonizationResult = namedtuple(
    "BosonizationResult", ["hopf", "projection", "inclusion", "group_hopf"])


def _group_label(g):
    return "g" + "_".join(str(c) for c in g) if g else "e"


def bosonize_with_maps(R, group=None):
    """Bosonize a braided Hopf algebra by its grading group.

    Returns the ordinary (trivially braided) Hopf algebra on R (x) kG, the
    projection onto kG, the inclusion of kG, and the group Hopf algebra
    built on the matching basis order.  Basis order is R-major: (r_i, g_k)
    with k the fast index.
    """
    ctx = R.carrier.ctx
    group = group or ctx.group
    assert group == ctx.group, "bosonization group must be the grading group"
    field = ctx.field
    triv_group = AbelianGroup([])
    tctx = Context(field, triv_group, Bicharacter.trivial(triv_group))
    els = group.elements()
    gidx = {g: k for k, g in enumerate(els)}
    nR, nG = R.carrier.dim, len(els)
    N = nR * nG
    carrier = GradedObject(
        tctx, [("%s#%s" % (lr, _group_label(g)), ())
               for lr, _ in R.carrier.basis for g in els])

    z = field.zero
    chi = ctx.chi
    m_R, d_R, e_R, u_R, S_R = (R.m.matrix, R.delta.matrix, R.eps.matrix,
                               R.u.matrix, R.S.matrix)
    deg = R.carrier.degree

    # multiplication: (r_i # g_k)(r_j # g_l) = chi(g_k, |r_j|) (r_i r_j # g_k g_l)
    m_data = {}
    for i in range(nR):
        for j in range(nR):
            col_R = i * nR + j
            for p in range(nR):
                c = m_R.entries[p][col_R]
                if not c:
                    continue
                for k, gk in enumerate(els):
                    cc = c * chi.value(field, gk, deg(j))
                    if not cc:
                        continue
                    for l, gl in enumerate(els):
                        out_g = gidx[group.add(gk, gl)]
                        row = p * nG + out_g
                        col = (i * nG + k) * N + (j * nG + l)
                        m_data[(row, col)] = cc
    m = GradedMorphism(tensor_obj(carrier, carrier), carrier,
                       Matrix.from_dict(field, N, N * N, m_data))

    # coproduct: (r # g) |-> sum (r1 # |r2| g) (x) (r2 # g)
    d_data = {}
    for i in range(nR):
        for p in range(nR):
            for q in range(nR):
                c = d_R.entries[p * nR + q][i]
                if not c:
                    continue
                dq = deg(q)
                for k, gk in enumerate(els):
                    a = gidx[group.add(dq, gk)]
                    row = (p * nG + a) * N + (q * nG + k)
                    col = i * nG + k
                    d_data[(row, col)] = c
    delta = GradedMorphism(carrier, tensor_obj(carrier, carrier),
                           Matrix.from_dict(field, N * N, N, d_data))

    unit = unit_object(tctx)
    e_data = {}
    for i in range(nR):
        c = e_R.entries[0][i]
        if c:
            for k in range(nG):
                e_data[(0, i * nG + k)] = c
    eps = GradedMorphism(carrier, unit, Matrix.from_dict(field, 1, N, e_data))

    e_index = gidx[group.zero]
    u_data = {}
    for i in range(nR):
        c = u_R.entries[i][0]
        if c:
            u_data[(i * nG + e_index, 0)] = c
    u = GradedMorphism(unit, carrier, Matrix.from_dict(field, N, 1, u_data))

    bialR = BialgebraData(carrier, m, u, delta, eps)
    S = solve_antipode(bialR)
    hopf = HopfAlgebraData(carrier, m, u, delta, eps, S)

    group_hopf = _group_algebra_on(tctx, group)
    # projection (r # g) |-> eps_R(r) g   and   inclusion g |-> 1 # g
    p_data = {}
    for i in range(nR):
        c = e_R.entries[0][i]
        if c:
            for k in range(nG):
                p_data[(k, i * nG + k)] = c
    projection = GradedMorphism(carrier, group_hopf.carrier,
                                Matrix.from_dict(field, nG, N, p_data))
    i_data = {}
    for i in range(nR):
        c = u_R.entries[i][0]
        if c:
            for k in range(nG):
                i_data[(i * nG + k, k)] = c
    inclusion = GradedMorphism(group_hopf.carrier, carrier,
                               Matrix.from_dict(field, N, nG, i_data))
    return BosonizationResult(hopf, projection, inclusion, group_hopf)


def bosonize(R, group=None):
    """The bosonization Hopf algebra alone (see bosonize_with_maps)."""
    return bosonize_with_maps(R, group).hopf


def _group_algebra_on(tctx, group):
    """Group Hopf algebra of a finite abelian group, trivially graded."""
    field = tctx.field
    els = group.elements()
    gidx = {g: k for k, g in enumerate(els)}
    n = len(els)
    carrier = GradedObject(tctx, [(_group_label(g), ()) for g in els])
    one = field.one
    m = GradedMorphism.from_dict(
        tensor_obj(carrier, carrier), carrier,
        {(gidx[group.add(a, b)], i * n + j): one
         for i, a in enumerate(els) for j, b in enumerate(els)})
    unit = unit_object(tctx)
    u = GradedMorphism.from_dict(unit, carrier, {(gidx[group.zero], 0): one})
    delta = GradedMorphism.from_dict(
        carrier, tensor_obj(carrier, carrier),
        {(i * n + i, i): one for i in range(n)})
    eps = GradedMorphism.from_dict(carrier, unit,
                                   {(0, i): one for i in range(n)})
    S = GradedMorphism.from_dict(carrier, carrier,
                                 {(gidx[group.neg(a)], i): one
                                  for i, a in enumerate(els)})
    return HopfAlgebraData(carrier, m, u, delta, eps, S)


def check_hopf_morphism(f, A, B):
    """Exact residuals for f: A -> B being a morphism of Hopf algebras."""
    assert f.source == A.carrier and f.target == B.carrier
    return CheckReport([
        ("respects_m", f * A.m - B.m * (f @ f)),
        ("respects_u", f * A.u - B.u),
        ("respects_delta", B.delta * f - (f @ f) * A.delta),
        ("respects_eps", B.eps * f - A.eps),
        ("respects_antipode", B.S * f - f * A.S),
    ])
