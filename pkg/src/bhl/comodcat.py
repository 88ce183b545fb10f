"""Left comodules over a braided Hopf algebra and their category structure.

Comodules form a monoidal category acted on by the ambient graded category:
`act` tensors a comodule with a plain graded object on the right (the
object carries the trivial coaction).  Hom spaces are computed exactly as
kernels of the colinearity equations.
"""

from collections import defaultdict

from .exactalg import Matrix, SparseEliminator, _kernel_from_rref
from .gradedcat import (GradedMorphism, GradedObject, braiding,
                        direct_sum_obj, identity_mor, left_dual, tensor_obj,
                        unit_object)


class Comodule:
    """A left comodule: carrier V with coaction V -> H (x) V.

    `hopf` may be any structure with carrier/delta/eps (coalgebra data is
    enough for hom spaces; tensor and dual need the full Hopf structure).
    Comodule axioms are verified exactly at construction.
    """

    def __init__(self, hopf, carrier, coaction):
        H = hopf.carrier
        assert coaction.source == carrier, "coaction source mismatch"
        assert coaction.target == tensor_obj(H, carrier), "coaction target mismatch"
        iV = identity_mor(carrier)
        iH = identity_mor(H)
        assert ((hopf.delta @ iV) * coaction == (iH @ coaction) * coaction), \
            "coaction is not coassociative"
        assert (hopf.eps @ iV) * coaction == iV, "coaction violates the counit"
        self.hopf = hopf
        self.carrier = carrier
        self.coaction = coaction

    def _key(self):
        return (self.hopf, self.carrier, self.coaction)

    def __eq__(self, other):
        return isinstance(other, Comodule) and other._key() == self._key()

    def __hash__(self):
        return hash(("Comodule", self.carrier, self.coaction))

    def __repr__(self):
        return "Comodule(%r)" % (self.carrier,)


def regular_comodule(H):
    """H coacting on itself by the coproduct."""
    return Comodule(H, H.carrier, H.delta)


def trivial_comodule(H, V):
    """V with coaction u (x) id."""
    return Comodule(H, V, H.u @ identity_mor(V))


def unit_comodule(H):
    return trivial_comodule(H, unit_object(H.carrier.ctx))


def comodule_tensor(A, B):
    """Tensor product comodule; the coactions are merged through m and the
    ambient braiding."""
    assert A.hopf == B.hopf
    Hd = A.hopf
    H = Hd.carrier
    iV = identity_mor(A.carrier)
    iW = identity_mor(B.carrier)
    iH = identity_mor(H)
    rho = ((Hd.m @ iV @ iW)
           * (iH @ braiding(A.carrier, H) @ iW)
           * (A.coaction @ B.coaction))
    return Comodule(Hd, tensor_obj(A.carrier, B.carrier), rho)


def comodule_dual(A):
    """Left dual comodule on *V, twisting the coaction through the antipode."""
    Hd = A.hopf
    H = Hd.carrier
    V = A.carrier
    d = left_dual(V)
    iD = identity_mor(d.space)
    rho = (((Hd.S @ iD) * braiding(d.space, H)) @ d.ev) \
        * (iD @ A.coaction @ iD) \
        * (d.coev @ iD)
    return Comodule(Hd, d.space, rho)


def act(B, X):
    """The right action of the ambient category: B (x) X with X inert."""
    assert isinstance(X, GradedObject)
    return Comodule(B.hopf, tensor_obj(B.carrier, X),
                    B.coaction @ identity_mor(X))


def direct_sum_comodule(A, B):
    """Block direct sum of two comodules."""
    assert A.hopf == B.hopf
    Hd = A.hopf
    nH = Hd.carrier.dim
    dA, dB = A.carrier.dim, B.carrier.dim
    carrier = direct_sum_obj(A.carrier, B.carrier)
    n = dA + dB
    field = carrier.ctx.field
    data = {}
    for (r, c) in _nonzero(A.coaction.matrix):
        h, v = divmod(r, dA)
        data[(h * n + v, c)] = A.coaction.matrix.entries[r][c]
    for (r, c) in _nonzero(B.coaction.matrix):
        h, w = divmod(r, dB)
        data[(h * n + dA + w, dA + c)] = B.coaction.matrix.entries[r][c]
    rho = GradedMorphism(carrier, tensor_obj(Hd.carrier, carrier),
                         Matrix.from_dict(field, nH * n, n, data))
    return Comodule(Hd, carrier, rho)


def _nonzero(m):
    out = []
    for i in range(m.rows):
        row = m.entries[i]
        for j in range(m.cols):
            if row[j]:
                out.append((i, j))
    return out


def hom_space(A, B):
    """The space of comodule morphisms A -> B.

    Returns a Matrix whose columns are the canonical basis, each column the
    row-major vectorization of a degree-preserving colinear map
    F(A) -> F(B).
    """
    assert A.hopf.carrier == B.hopf.carrier, "comodules over different coalgebras"
    assert A.hopf.delta == B.hopf.delta and A.hopf.eps == B.hopf.eps, \
        "comodules over different coalgebras"
    VA, VB = A.carrier, B.carrier
    dA, dB = VA.dim, VB.dim
    field = VA.ctx.field
    unknowns = {}
    for i in range(dB):
        for j in range(dA):
            if VB.degree(i) == VA.degree(j):
                unknowns[(i, j)] = len(unknowns)
    rows = defaultdict(dict)
    for (r, c) in _nonzero(B.coaction.matrix):
        h, i2 = divmod(r, dB)
        v = B.coaction.matrix.entries[r][c]
        for j in range(dA):
            k = unknowns.get((c, j))
            if k is not None:
                eq = rows[(h, i2, j)]
                eq[k] = eq.get(k, field.zero) + v
    for (r, c) in _nonzero(A.coaction.matrix):
        h, j2 = divmod(r, dA)
        v = A.coaction.matrix.entries[r][c]
        for i2 in range(dB):
            k = unknowns.get((i2, j2))
            if k is not None:
                eq = rows[(h, i2, c)]
                eq[k] = eq.get(k, field.zero) - v
    elim = SparseEliminator(field)
    for key in sorted(rows):
        vec = {k: v for k, v in rows[key].items() if v}
        elim.add(vec)
    small = _kernel_from_rref(field, len(unknowns), elim.rref_rows())
    # expand back to full row-major (i, j) coordinates
    z = field.zero
    full = [[z] * small.cols for _ in range(dB * dA)]
    for (i, j), k in unknowns.items():
        for c in range(small.cols):
            full[i * dA + j][c] = small.entries[k][c]
    return Matrix(field, full, cols=small.cols)


def hom_basis(A, B):
    """hom_space reshaped into a list of GradedMorphisms."""
    mat = hom_space(A, B)
    dA, dB = A.carrier.dim, B.carrier.dim
    out = []
    for c in range(mat.cols):
        grid = [[mat.entries[i * dA + j][c] for j in range(dA)] for i in range(dB)]
        out.append(GradedMorphism(A.carrier, B.carrier,
                                  Matrix(A.carrier.ctx.field, grid, cols=dA)))
    return out


def is_comodule_morphism(f, A, B):
    """Exact colinearity residual of f: F(A) -> F(B)."""
    iH = identity_mor(A.hopf.carrier)
    return (B.coaction * f - (iH @ f) * A.coaction).is_zero()


class FlagReport:
    """Named boolean checks (used where residual matrices do not apply)."""

    def __init__(self, checks):
        self.checks = list(checks)

    @property
    def passed(self):
        return all(ok for _, ok in self.checks)

    def failures(self):
        return [name for name, ok in self.checks if not ok]

    def __repr__(self):
        bad = self.failures()
        return "FlagReport(passed)" if not bad else "FlagReport(failed: %s)" % ", ".join(bad)


def _default_l(B, X):
    carrier = tensor_obj(B.carrier, X)
    return identity_mor(carrier)


def check_monoidal_module(H, comodules, objects, l=None):
    """The comodule category as a module category over the ambient one.

    Verifies, for the given test comodules B and objects X, Y: the structure
    map l_{B,X}: F(B (|) X) -> F(B) (x) X is colinear into act(B, X), is the
    identity when either argument is the unit, and satisfies the strict
    mixed-associativity coherence.  `l` defaults to the identity (the module
    structure is strict); a perturbed l makes the report fail.
    """
    l = l or _default_l
    checks = []
    unit = unit_object(H.carrier.ctx)
    for bi, B in enumerate(comodules):
        lBu = l(B, unit)
        checks.append(("unit_object_law[%d]" % bi,
                       (lBu - identity_mor(B.carrier)).is_zero()))
        for xi, X in enumerate(objects):
            lBX = l(B, X)
            BX = act(B, X)
            checks.append(("l_colinear[%d,%d]" % (bi, xi),
                           lBX.source == BX.carrier
                           and is_comodule_morphism(lBX, BX, BX)))
            for yi, Y in enumerate(objects):
                lhs = (l(B, X) @ identity_mor(Y)) * l(act(B, X), Y)
                rhs = l(B, tensor_obj(X, Y))
                checks.append(("mixed_assoc[%d,%d,%d]" % (bi, xi, yi),
                               (lhs - rhs).is_zero()))
    return FlagReport(checks)


def check_section(H, objects):
    """The trivial-coaction functor G is a strict monoidal section of the
    forgetful functor F: F(G(V)) = V on the nose and G(V (x) W) equals
    G(V) (x) G(W) as comodules."""
    checks = []
    unitc = unit_comodule(H)
    checks.append(("unit_comodule", trivial_comodule(H, unit_object(H.carrier.ctx)) == unitc))
    for vi, V in enumerate(objects):
        GV = trivial_comodule(H, V)
        checks.append(("FG_identity[%d]" % vi, GV.carrier == V))
        checks.append(("G_unit_absorb[%d]" % vi,
                       comodule_tensor(unitc, GV) == GV
                       and comodule_tensor(GV, unitc) == GV))
        for wi, W in enumerate(objects):
            GW = trivial_comodule(H, W)
            lhs = comodule_tensor(GV, GW)
            rhs = trivial_comodule(H, tensor_obj(V, W))
            checks.append(("G_monoidal[%d,%d]" % (vi, wi), lhs == rhs))
    return FlagReport(checks)
