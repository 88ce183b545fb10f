"""Exact linear algebra over cyclotomic number fields.

Scalars live in Q(zeta_n), represented as residues modulo the n-th
cyclotomic polynomial with Fraction coefficients.  Everything downstream
(graded categories, Hopf structure checks, coend quotients) reduces to the
handful of primitives in this module: rref, kernel, cokernel and exact
solves for unknown linear maps.  All results are exact; "zero" always means
identically zero.
"""

from fractions import Fraction


class EngineError(Exception):
    """Base class for all structured engine failures."""

    code = "EngineError"

    def __init__(self, message=""):
        super().__init__(message or self.code)


class NoSolutionError(EngineError):
    code = "NoSolution"


class NonUniqueError(EngineError):
    code = "NonUnique"


# ---------------------------------------------------------------------------
# polynomial helpers (ascending coefficient lists of Fractions)
# ---------------------------------------------------------------------------

def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return _poly_trim(out)


def _poly_divmod(p, q):
    """Exact division with remainder; q need not be monic."""
    p = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quot = [Fraction(0)] * max(len(p) - dq, 0)
    while len(p) - 1 >= dq and _poly_trim(p):
        dp = len(p) - 1
        c = p[-1] / lead
        quot[dp - dq] = c
        for i in range(dq + 1):
            p[dp - dq + i] -= c * q[i]
        _poly_trim(p)
    return quot, p


def cyclotomic_polynomial(n):
    """Coefficients (ascending, Fractions) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic order must be >= 1")
    # x^n - 1 divided by the product of Phi_d over proper divisors d of n
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    den = [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    quot, rem = _poly_divmod(num, den)
    assert not rem, "cyclotomic division must be exact"
    return quot


class CycloField:
    """The cyclotomic field Q(zeta_n), elements stored modulo Phi_n."""

    _cache = {}

    def __new__(cls, order):
        if order in cls._cache:
            return cls._cache[order]
        self = super().__new__(cls)
        cls._cache[order] = self
        self.order = order
        self.modulus = tuple(cyclotomic_polynomial(order))
        self.degree = len(self.modulus) - 1
        # reduction table: x^(degree + k) expressed in the power basis,
        # covering products of residues and all powers zeta^k, k < order
        m = self.degree
        n_entries = max(2 * m - 1, order) - m
        red = []
        if n_entries > 0:
            cur = [-c for c in self.modulus[:m]]  # x^m
            red.append(list(cur))
            for _ in range(n_entries - 1):
                nxt = [Fraction(0)] + cur[: m - 1]
                top = cur[m - 1]
                if top:
                    base = red[0]
                    for i in range(m):
                        nxt[i] += top * base[i]
                red.append(nxt)
                cur = nxt
        self._reduction = tuple(tuple(r) for r in red)
        self._zero = None
        self._one = None
        return self

    def __repr__(self):
        return "CycloField(%d)" % self.order

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.order == self.order

    def __hash__(self):
        return hash(("CycloField", self.order))

    def scalar(self, value):
        """Embed a rational number (int or Fraction)."""
        c = [Fraction(0)] * self.degree
        c[0] = Fraction(value)
        return Scalar(self, c)

    @property
    def zero(self):
        if self._zero is None:
            self._zero = self.scalar(0)
        return self._zero

    @property
    def one(self):
        if self._one is None:
            self._one = self.scalar(1)
        return self._one

    def zeta(self, power=1):
        """zeta_n^power as a field element."""
        power %= self.order
        c = [Fraction(0)] * max(self.degree, power + 1)
        c[power] = Fraction(1)
        return Scalar(self, self._reduce(c))

    def root_of_unity(self, root_order, power=0):
        """A primitive root_order-th root of unity raised to `power`.

        Available when root_order divides the field order, or for
        root_order <= 2 (then the root is rational).
        """
        power %= root_order
        if root_order == 1:
            return self.one
        if self.order % root_order == 0:
            return self.zeta(power * (self.order // root_order))
        if root_order == 2:
            return self.scalar(1 if power == 0 else -1)
        raise ValueError(
            "field Q(zeta_%d) has no %d-th root of unity" % (self.order, root_order))

    def _reduce(self, coeffs):
        m = self.degree
        out = list(coeffs[:m]) + [Fraction(0)] * (m - min(len(coeffs), m))
        for k in range(m, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self._reduction[k - m]
                for i in range(m):
                    out[i] += c * row[i]
        return out


class Scalar:
    """An element of a CycloField: a residue in the power basis."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        assert len(self.coeffs) == field.degree
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, Scalar):
            assert other.field == self.field, "scalars from different fields"
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.order, self.coeffs))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        m = self.field.degree
        if m == 1:
            return Scalar(self.field, (a[0] * b[0],))
        prod = [Fraction(0)] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Scalar(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        m = self.field.degree
        if m == 1:
            return Scalar(self.field, (1 / self.coeffs[0],))
        # extended Euclid in Q[x]: s*self + t*Phi = gcd = const
        r0, r1 = list(self.field.modulus), _poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while True:
            q, r = _poly_divmod(r0, r1)
            if not r:
                break
            s = [a for a in s0]
            qs1 = _poly_mul(q, s1)
            s = [Fraction(0)] * max(len(s0), len(qs1))
            for i, a in enumerate(s0):
                s[i] += a
            for i, a in enumerate(qs1):
                s[i] -= a
            _poly_trim(s)
            r0, r1, s0, s1 = r1, r, s1, s
        assert len(r1) == 1, "modulus not coprime to element"
        inv = [c / r1[0] for c in s1]
        return Scalar(self.field, self.field._reduce(inv))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __repr__(self):
        return "Scalar(%s)" % (format_scalar(self),)


def format_scalar(s):
    """Canonical human/serialization form: rational polynomial in z."""
    terms = []
    for k, c in enumerate(s.coeffs):
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            z = "z" if k == 1 else "z^%d" % k
            if c == 1:
                terms.append(z)
            elif c == -1:
                terms.append("-" + z)
            else:
                terms.append("%s*%s" % (c, z))
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += "+" + t if not t.startswith("-") else t
    return out


def parse_scalar(field, text):
    """Inverse of format_scalar; accepts any signed sum of rational z-terms."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty scalar literal")
    coeffs = [Fraction(0)] * field.degree
    extra = {}
    # split into signed terms
    terms, cur, depth = [], "", 0
    for ch in text:
        if ch in "+-" and cur and cur[-1] not in "+-*/^" and depth == 0:
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    for term in terms:
        if not term or term in "+-":
            raise ValueError("bad scalar literal %r" % text)
        sign = 1
        if term[0] == "+":
            term = term[1:]
        elif term[0] == "-":
            sign, term = -1, term[1:]
        if "z" in term:
            head, _, tail = term.partition("z")
            if head.endswith("*"):
                head = head[:-1]
            coef = Fraction(head) if head else Fraction(1)
            if tail.startswith("^"):
                power = int(tail[1:])
            elif tail == "":
                power = 1
            else:
                raise ValueError("bad scalar term %r" % term)
        else:
            coef = Fraction(term)
            power = 0
        coef *= sign
        if power < field.degree:
            coeffs[power] += coef
        else:
            extra[power] = extra.get(power, Fraction(0)) + coef
    s = Scalar(field, coeffs)
    for power, coef in sorted(extra.items()):
        s = s + field.zeta(power) * coef
    return s


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Dense exact matrix over a CycloField (row-major, immutable)."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, entries, cols=None):
        self.field = field
        self.entries = tuple(tuple(e for e in row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else (cols or 0)
        for row in self.entries:
            assert len(row) == self.cols, "ragged matrix"

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_rational(cls, field, rows):
        return cls(field, [[field.scalar(v) for v in row] for row in rows])

    @classmethod
    def from_dict(cls, field, rows, cols, data):
        """Build from {(i, j): Scalar}."""
        z = field.zero
        grid = [[z] * cols for _ in range(rows)]
        for (i, j), v in data.items():
            grid[i][j] = v
        return cls(field, grid)

    @classmethod
    def column(cls, field, values):
        return cls(field, [[v] for v in values])

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and other.field == self.field
                and other.entries == self.entries)

    def __hash__(self):
        return hash((self.field.order, self.entries))

    def __repr__(self):
        return "Matrix(%dx%d over %r)" % (self.rows, self.cols, self.field)

    def is_zero(self):
        return not any(any(row) for row in self.entries)

    def __add__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(self.field, [[a + b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(self.field, [[a - b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.field, [[-a for a in row] for row in self.entries])

    def scale(self, s):
        return Matrix(self.field, [[s * a for a in row] for row in self.entries])

    def __mul__(self, other):
        """Matrix product."""
        if isinstance(other, (int, Fraction, Scalar)):
            s = other if isinstance(other, Scalar) else self.field.scalar(other)
            return self.scale(s)
        assert self.cols == other.rows, \
            "shape mismatch %dx%d * %dx%d" % (self.rows, self.cols, other.rows, other.cols)
        z = self.field.zero
        a, b = self.entries, other.entries
        out = []
        for i in range(self.rows):
            arow = a[i]
            orow = [z] * other.cols
            for k in range(self.cols):
                v = arow[k]
                if v:
                    brow = b[k]
                    for j in range(other.cols):
                        w = brow[j]
                        if w:
                            orow[j] = orow[j] + v * w
            out.append(orow)
        return Matrix(self.field, out, cols=other.cols)

    __rmul__ = scale

    def __matmul__(self, other):
        """Kronecker (tensor) product, row-major on both indices."""
        out = []
        for i in range(self.rows):
            for k in range(other.rows):
                row = []
                for j in range(self.cols):
                    v = self.entries[i][j]
                    if v:
                        row.extend(v * w for w in other.entries[k])
                    else:
                        row.extend([self.field.zero] * other.cols)
                out.append(row)
        return Matrix(self.field, out)

    def transpose(self):
        if not self.entries:
            return Matrix.zeros(self.field, self.cols, 0)
        return Matrix(self.field, list(zip(*self.entries)), cols=self.rows)

    def hstack(self, other):
        assert self.rows == other.rows
        return Matrix(self.field, [list(r1) + list(r2)
                                   for r1, r2 in zip(self.entries, other.entries)])

    def column_vector(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def rank(self):
        return len(rref(self)[1])

    def inverse(self):
        assert self.rows == self.cols, "inverse of non-square matrix"
        n = self.rows
        aug, pivots = rref(self.hstack(Matrix.identity(self.field, n)))
        if len(pivots) < n or pivots != tuple(range(n)):
            raise NoSolutionError("matrix is singular")
        return Matrix(self.field, [row[n:] for row in aug.entries])


# ---------------------------------------------------------------------------
# sparse elimination core
# ---------------------------------------------------------------------------

class SparseEliminator:
    """Incremental exact Gaussian elimination on sparse row vectors.

    Rows are dicts {column: Scalar}.  `add` forward-reduces a vector against
    the current echelon rows and installs it (normalized) if independent.
    `rref_rows` back-substitutes once and returns the canonical reduced
    echelon basis of the accumulated row space, sorted by pivot.  The final
    basis depends only on the row space, not on insertion order.
    """

    def __init__(self, field):
        self.field = field
        self.rows = {}  # pivot column -> row dict (row[pivot] == 1)

    def add(self, vec):
        """Reduce vec (dict, consumed) into the basis; True if rank grew."""
        rows = self.rows
        while vec:
            p = min(vec)
            c = vec[p]
            if not c:
                del vec[p]
                continue
            row = rows.get(p)
            if row is None:
                inv = c.inverse()
                rows[p] = {k: v * inv for k, v in vec.items() if v}
                return True
            for k, v in row.items():
                if k in vec:
                    nv = vec[k] - c * v
                    if nv:
                        vec[k] = nv
                    else:
                        del vec[k]
                else:
                    vec[k] = -c * v
        return False

    def reduce(self, vec):
        """Forward-reduce a copy of vec; returns the (sparse) residual."""
        vec = dict(vec)
        rows = self.rows
        out = {}
        while vec:
            p = min(vec)
            c = vec.pop(p)
            if not c:
                continue
            row = rows.get(p)
            if row is None:
                out[p] = c
                continue
            for k, v in row.items():
                if k == p:
                    continue
                if k in vec:
                    nv = vec[k] - c * v
                    if nv:
                        vec[k] = nv
                    else:
                        del vec[k]
                else:
                    vec[k] = -c * v
        return out

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def rref_rows(self):
        """Canonical reduced rows as a list of (pivot, row-dict), pivot ascending."""
        pivs = sorted(self.rows)
        reduced = {}
        for p in reversed(pivs):
            row = dict(self.rows[p])
            for k in [k for k in row if k != p and k in reduced]:
                c = row.pop(k)
                if c:
                    for kk, vv in reduced[k].items():
                        if kk == k:
                            continue
                        if kk in row:
                            nv = row[kk] - c * vv
                            if nv:
                                row[kk] = nv
                            else:
                                del row[kk]
                        else:
                            row[kk] = -c * vv
            reduced[p] = row
        return [(p, reduced[p]) for p in pivs]


def _matrix_to_sparse_rows(m):
    out = []
    for i in range(m.rows):
        row = {}
        for j, v in enumerate(m.entries[i]):
            if v:
                row[j] = v
        out.append(row)
    return out


def rref(m):
    """Reduced row echelon form.

    Returns (R, pivots): R has the same shape as m (zero rows at the bottom),
    pivots is the ascending tuple of pivot column indices.
    """
    elim = SparseEliminator(m.field)
    for row in _matrix_to_sparse_rows(m):
        elim.add(row)
    rows = elim.rref_rows()
    z = m.field.zero
    grid = []
    for _, row in rows:
        dense = [z] * m.cols
        for j, v in row.items():
            dense[j] = v
        grid.append(dense)
    while len(grid) < m.rows:
        grid.append([z] * m.cols)
    return Matrix(m.field, grid), tuple(p for p, _ in rows)


def kernel(m):
    """Exact null space; columns of the result form the canonical basis."""
    elim = SparseEliminator(m.field)
    for row in _matrix_to_sparse_rows(m):
        elim.add(row)
    return _kernel_from_rref(m.field, m.cols, elim.rref_rows())


def _kernel_from_rref(field, ncols, rref_rows):
    pivots = [p for p, _ in rref_rows]
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    z, o = field.zero, field.one
    cols = []
    for j in free:
        v = [z] * ncols
        v[j] = o
        for p, row in rref_rows:
            c = row.get(j)
            if c:
                v[p] = -c
        cols.append(v)
    if not cols:
        return Matrix(field, [[] for _ in range(ncols)])
    return Matrix(field, list(zip(*cols)))


class QuotientPresentation:
    """An ambient space modulo the column span of a relation matrix.

    projection . section = identity on the quotient; projection kills the
    relations; rank(relations) + quotient_dim = ambient_dim.  The section
    hits the coordinates not used as pivots by the reduced relation basis,
    so presentations are canonical given the relation span.
    """

    def __init__(self, ambient_dim, relation_matrix, quotient_dim, projection, section):
        self.ambient_dim = ambient_dim
        self.relation_matrix = relation_matrix
        self.quotient_dim = quotient_dim
        self.projection = projection
        self.section = section
        self.verify()

    def verify(self):
        q, amb = self.quotient_dim, self.ambient_dim
        assert self.projection.rows == q and self.projection.cols == amb
        assert self.section.rows == amb and self.section.cols == q
        assert (self.projection * self.section) == Matrix.identity(self.projection.field, q)
        if self.relation_matrix.cols:
            assert (self.projection * self.relation_matrix).is_zero()
        assert self.relation_matrix.rank() + q == amb


def cokernel_from_rref(field, ambient_dim, rref_rows):
    """Canonical quotient presentation from the reduced relation row basis."""
    pivots = [p for p, _ in rref_rows]
    pivot_set = set(pivots)
    free = [j for j in range(ambient_dim) if j not in pivot_set]
    z, o = field.zero, field.one
    qdim = len(free)
    proj = [[z] * ambient_dim for _ in range(qdim)]
    for jq, j in enumerate(free):
        proj[jq][j] = o
    for p, row in rref_rows:
        for jq, j in enumerate(free):
            c = row.get(j)
            if c:
                proj[jq][p] = -c
    sect = [[z] * qdim for _ in range(ambient_dim)]
    for jq, j in enumerate(free):
        sect[j][jq] = o
    rel = [[z] * len(rref_rows) for _ in range(ambient_dim)]
    for k, (_, row) in enumerate(rref_rows):
        for j, v in row.items():
            rel[j][k] = v
    return QuotientPresentation(
        ambient_dim=ambient_dim,
        relation_matrix=Matrix(field, rel, cols=len(rref_rows)),
        quotient_dim=qdim,
        projection=Matrix(field, proj, cols=ambient_dim),
        section=Matrix(field, sect, cols=qdim),
    )


def cokernel(m):
    """Quotient of the row-index space of m by the span of m's columns."""
    elim = SparseEliminator(m.field)
    for j in range(m.cols):
        vec = {}
        for i in range(m.rows):
            v = m.entries[i][j]
            if v:
                vec[i] = v
        elim.add(vec)
    return cokernel_from_rref(m.field, m.rows, elim.rref_rows())


# ---------------------------------------------------------------------------
# solving for unknown maps
# ---------------------------------------------------------------------------

def solve_product_constraints(field, constraint_groups, shape):
    """Solve for X of the given (rows, cols) shape, exactly.

    Each constraint group is (terms, C) with terms a list of (A, B) pairs,
    requiring  sum_t  A_t * X * B_t  =  C.  Raises NoSolutionError if the
    system is inconsistent and NonUniqueError if X is underdetermined.
    """
    r, c = shape
    n_unknowns = r * c
    rhs_col = n_unknowns
    elim = SparseEliminator(field)
    for terms, C in constraint_groups:
        for A, B in terms:
            assert A.cols == r and B.rows == c, "constraint shape mismatch"
            assert C.rows == A.rows and C.cols == B.cols
        for p in range(C.rows):
            for q in range(C.cols):
                row = {}
                for A, B in terms:
                    arow = A.entries[p]
                    for i in range(r):
                        a = arow[i]
                        if not a:
                            continue
                        base = i * c
                        for j in range(c):
                            b = B.entries[j][q]
                            if b:
                                k = base + j
                                cur = row.get(k)
                                row[k] = (cur + a * b) if cur is not None else a * b
                rhs = C.entries[p][q]
                if rhs:
                    row[rhs_col] = -rhs
                row = {k: v for k, v in row.items() if v}
                elim.add(row)
    if rhs_col in elim.rows:
        raise NoSolutionError("constraints are inconsistent")
    if elim.rank < n_unknowns:
        raise NonUniqueError("constraints leave %d free parameters"
                             % (n_unknowns - elim.rank))
    values = {}
    for p, row in elim.rref_rows():
        v = row.get(rhs_col, field.zero)
        values[p] = -v
    z = field.zero
    grid = [[values.get(i * c + j, z) for j in range(c)] for i in range(r)]
    return Matrix(field, grid)


def solve_unknown_map(field, constraints, shape):
    """Solve A_i * X * B_i = C_i (all i) for the unknown matrix X."""
    return solve_product_constraints(
        field, [([(A, B)], C) for (A, B, C) in constraints], shape)
