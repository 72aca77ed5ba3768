"""Yetter-Drinfel'd modules, their braidings, and braided Leibniz brackets.

A *Hopf descriptor* is any object with a finite distinguished basis exposing

    field, size, labels, unit, generators, has_antipode,
    product(i, j)        -> {idx: coeff}      (exact; may raise DegreeOverflowError)
    coproduct(i)         -> [(coeff, a, b)]
    counit(i)            -> scalar
    antipode(i)          -> {idx: coeff}
    generator_word(i)    -> [generator indices] with product i
    check_action_axioms(module) -> witness | None

Group algebras (:mod:`rackyd.group_hopf`) and degree-truncated enveloping
algebras (:mod:`rackyd.envelope`) implement this.  Inside this module the
descriptor's products are always exact: degree overflow is an error, never a
silent truncation.

A right module and right comodule M over a descriptor carries the map

    tau(x (x) y) = y_(0) (x) x . y_(1)

and the classical fact is that tau satisfies the braid relation precisely
when M satisfies the Yetter-Drinfel'd compatibility condition

    (x h_(2))_(0) (x) h_(1) (x h_(2))_(1)  =  x_(0) h_(1) (x) x_(1) h_(2)

(checked on basis elements against descriptor generators, which suffices by
bilinearity).  When the descriptor has an antipode the condition is
equivalent to

    (x h)_(0) (x) (x h)_(1)  =  x_(0) h_(2) (x) S(h_(1)) x_(1) h_(3),

and both forms are computed.

A braided Leibniz algebra is a space with a bracket ``<|`` and a map tau on
the square satisfying

    (x <| y) <| z = x <| (y <| z) + (x <| z<1>) <| y<2>

where ``tau(y (x) z) = sum z<1> (x) y<2>``.  Every identity checked here is
multilinear in the swept arguments (tau is applied before bracketing), so
brute force over basis tuples is a complete verification, not a sample.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DegreeOverflowError, ShapeError, ValidationError
from .linalg import Matrix, flat2, mat_mul, kron
from .scalars import QQ


def _norm(d):
    return {k: v for k, v in d.items() if v}


def _acc(out, key, coeff):
    out[key] = out.get(key, coeff - coeff) + coeff


def hvec_mul(hopf, a: dict, b: dict) -> dict:
    """Product of two descriptor elements given as sparse basis combinations."""
    out = {}
    for i, ca in a.items():
        for j, cb in b.items():
            for k, cp in hopf.product(i, j).items():
                _acc(out, k, ca * cb * cp)
    return _norm(out)


def hvec_counit(hopf, a: dict):
    total = hopf.field.zero
    for i, c in a.items():
        total = total + c * hopf.counit(i)
    return total


def hvec_antipode(hopf, a: dict) -> dict:
    out = {}
    for i, c in a.items():
        for k, cs in hopf.antipode(i).items():
            _acc(out, k, c * cs)
    return _norm(out)


def hvec_coproduct(hopf, a: dict) -> dict:
    out = {}
    for i, c in a.items():
        for cc, x, y in hopf.coproduct(i):
            _acc(out, (x, y), c * cc)
    return _norm(out)


def coproduct2(hopf, i: int):
    """(Delta (x) id) Delta on a basis element, as [(coeff, a, b, c)]."""
    out = []
    for c, x, y in hopf.coproduct(i):
        for c2, x1, x2 in hopf.coproduct(x):
            out.append((c * c2, x1, x2, y))
    return out


def check_hopf_axioms(hopf, skip_overflow=False):
    """Verify the bialgebra/Hopf laws of a descriptor on basis elements.

    Checks coassociativity, the counit laws, multiplicativity of the coproduct
    and counit, counit(S(h)) = counit(h), and (when an antipode is present)
    the convolution identities S(h_(1)) h_(2) = counit(h) 1 = h_(1) S(h_(2)).
    Returns the first witness, or None.  With ``skip_overflow`` pairs whose
    exact product leaves a truncated descriptor's window are skipped (used for
    degree-truncated descriptors, whose laws only hold inside the window).
    """
    field = hopf.field
    one = field.one
    unit = hopf.unit
    for i in range(hopf.size):
        lhs, rhs = {}, {}
        for c, a, b in hopf.coproduct(i):
            for c2, a1, a2 in hopf.coproduct(a):
                _acc(lhs, (a1, a2, b), c * c2)
            for c2, b1, b2 in hopf.coproduct(b):
                _acc(rhs, (a, b1, b2), c * c2)
        if _norm(lhs) != _norm(rhs):
            return ("coassociativity", i)
        left, right = {}, {}
        for c, a, b in hopf.coproduct(i):
            _acc(left, b, c * hopf.counit(a))
            _acc(right, a, c * hopf.counit(b))
        if _norm(left) != {i: one} or _norm(right) != {i: one}:
            return ("counit law", i)
        if hopf.has_antipode:
            if hvec_counit(hopf, hopf.antipode(i)) != hopf.counit(i):
                return ("counit of antipode", i)
            conv_l, conv_r = {}, {}
            for c, a, b in hopf.coproduct(i):
                for k, cs in hopf.antipode(a).items():
                    for k2, cp in hopf.product(k, b).items():
                        _acc(conv_l, k2, c * cs * cp)
                for k, cs in hopf.antipode(b).items():
                    for k2, cp in hopf.product(a, k).items():
                        _acc(conv_r, k2, c * cs * cp)
            want = _norm({unit: hopf.counit(i)})
            if _norm(conv_l) != want or _norm(conv_r) != want:
                return ("antipode convolution identity", i)
    for i in range(hopf.size):
        for j in range(hopf.size):
            try:
                prod = hopf.product(i, j)
                rhs = {}
                for c, a, b in hopf.coproduct(i):
                    for c2, x, y in hopf.coproduct(j):
                        for k1, cp1 in hopf.product(a, x).items():
                            for k2, cp2 in hopf.product(b, y).items():
                                _acc(rhs, (k1, k2), c * c2 * cp1 * cp2)
            except DegreeOverflowError:
                if skip_overflow:
                    continue
                raise
            if hvec_counit(hopf, prod) != hopf.counit(i) * hopf.counit(j):
                return ("counit not multiplicative", i, j)
            lhs = {}
            for k, c in prod.items():
                for c2, a, b in hopf.coproduct(k):
                    _acc(lhs, (a, b), c * c2)
            if _norm(lhs) != _norm(rhs):
                return ("coproduct not an algebra map", i, j)
    return None


class YDModule:
    """A right module and right comodule over a Hopf descriptor.

    ``action[m][k]`` is the sparse vector ``e_m . g_k`` for the k-th entry of
    ``hopf.generators``; ``coaction[m]`` is ``delta(e_m)`` as a list of
    ``(m_idx, h_idx, coeff)`` triples.  Construction verifies counitality of
    the coaction and the descriptor's module axioms on generator pairs, but
    *not* the Yetter-Drinfel'd condition -- deliberately broken instances are
    representable and reported by :func:`check_yd`.
    """

    def __init__(self, hopf, basis, action, coaction):
        self.hopf = hopf
        self.field = hopf.field
        self.basis = tuple(str(b) for b in basis)
        n = len(self.basis)
        gens = list(hopf.generators)
        self._gen_pos = {g: k for k, g in enumerate(gens)}
        if len(action) != n:
            raise ValidationError("action table must have one row per basis vector")
        act = []
        for row in action:
            if len(row) != len(gens):
                raise ValidationError("action row must have one entry per generator")
            act.append(tuple(_norm(dict(v)) for v in row))
            for v in act[-1]:
                for m in v:
                    if not 0 <= m < n:
                        raise ValidationError(f"action target {m} out of range")
        self.action = tuple(act)
        if len(coaction) != n:
            raise ValidationError("coaction table must have one row per basis vector")
        coact = []
        for terms in coaction:
            combined = {}
            for m, h, c in terms:
                if not 0 <= m < n:
                    raise ValidationError(f"coaction module index {m} out of range")
                if not 0 <= h < hopf.size:
                    raise ValidationError(f"coaction descriptor index {h} out of range")
                _acc(combined, (m, h), c)
            coact.append(tuple(sorted((m, h, c) for (m, h), c in _norm(combined).items())))
        self.coaction = tuple(coact)
        for i in range(n):
            out = {}
            for m, h, c in self.coaction[i]:
                _acc(out, m, c * hopf.counit(h))
            if _norm(out) != {i: self.field.one}:
                raise ValidationError(f"coaction is not counital on basis vector {i}")
        witness = hopf.check_action_axioms(self)
        if witness is not None:
            raise ValidationError(f"action violates the module axioms at {witness}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def act_gen(self, m: int, h_idx: int) -> dict:
        return dict(self.action[m][self._gen_pos[h_idx]])

    def act_basis(self, vec: dict, h_idx: int) -> dict:
        """Apply a single descriptor *basis* element on the right of a vector."""
        if h_idx == self.hopf.unit:
            return dict(vec)
        if h_idx in self._gen_pos:
            out = {}
            for m, c in vec.items():
                for m2, c2 in self.action[m][self._gen_pos[h_idx]].items():
                    _acc(out, m2, c * c2)
            return _norm(out)
        out = dict(vec)
        for g in self.hopf.generator_word(h_idx):
            out = self.act_basis(out, g)
        return out

    def act_hvec(self, vec: dict, hvec: dict) -> dict:
        out = {}
        for h, c in hvec.items():
            for m, c2 in self.act_basis(vec, h).items():
                _acc(out, m, c * c2)
        return _norm(out)

    def coact_vec(self, vec: dict) -> dict:
        """delta extended linearly, as a sparse {(m_idx, h_idx): coeff} dict."""
        out = {}
        for m, c in vec.items():
            for m0, h, c2 in self.coaction[m]:
                _acc(out, (m0, h), c * c2)
        return _norm(out)


@dataclass(frozen=True)
class YDReport:
    ok: bool
    ok_coproduct_form: bool
    ok_antipode_form: bool | None
    witness: tuple | None


def check_yd(module: YDModule) -> YDReport:
    """Verify the Yetter-Drinfel'd condition on all (basis, generator) pairs.

    Both the coproduct form and (when the descriptor has an antipode) the
    antipode form are computed independently; for a Hopf descriptor they are
    equivalent and the two booleans agree on every instance we construct.
    """
    hopf = module.hopf
    one = module.field.one
    wit2 = wit3 = None
    ok2 = ok3 = True
    for m in range(module.dim):
        for h in hopf.generators:
            lhs, rhs = {}, {}
            for c, h1, h2 in hopf.coproduct(h):
                xv = module.act_basis({m: one}, h2)
                for mi, cm in xv.items():
                    for m0, hk, ck in module.coaction[mi]:
                        for hp, cp in hopf.product(h1, hk).items():
                            _acc(lhs, (m0, hp), c * cm * ck * cp)
            for m0, hk, ck in module.coaction[m]:
                for c, h1, h2 in hopf.coproduct(h):
                    xv = module.act_basis({m0: one}, h1)
                    for m1, cm in xv.items():
                        for hp, cp in hopf.product(hk, h2).items():
                            _acc(rhs, (m1, hp), c * ck * cm * cp)
            if _norm(lhs) != _norm(rhs):
                ok2 = False
                if wit2 is None:
                    wit2 = (m, h)
                break
        if not ok2:
            break
    if hopf.has_antipode:
        ok3 = True
        for m in range(module.dim):
            for h in hopf.generators:
                lhs, rhs = {}, {}
                xv = module.act_basis({m: one}, h)
                for mi, cm in xv.items():
                    for m0, hk, ck in module.coaction[mi]:
                        _acc(lhs, (m0, hk), cm * ck)
                for c, h1, h2, h3 in coproduct2(hopf, h):
                    for m0, hk, ck in module.coaction[m]:
                        xv2 = module.act_basis({m0: one}, h2)
                        sh1 = hopf.antipode(h1)
                        for m1, cm in xv2.items():
                            for hs, cs in sh1.items():
                                for hp1, cp1 in hopf.product(hs, hk).items():
                                    for hp2, cp2 in hopf.product(hp1, h3).items():
                                        _acc(rhs, (m1, hp2), c * ck * cm * cs * cp1 * cp2)
                if _norm(lhs) != _norm(rhs):
                    ok3 = False
                    if wit3 is None:
                        wit3 = (m, h)
                    break
            if not ok3:
                break
    else:
        ok3 = None
    ok = ok2 and (ok3 is not False)
    return YDReport(ok, ok2, ok3, wit2 if wit2 is not None else wit3)


@dataclass(frozen=True)
class BraidingMatrix:
    """The matrix of tau on M (x) M, in the global flattening convention."""

    matrix: Matrix
    factor_basis: tuple
    convention: str = "second-factor-major"

    @property
    def factor_dim(self) -> int:
        return len(self.factor_basis)

    def to_json_dict(self):
        return {
            "basis_order": self.convention,
            "factor_basis": list(self.factor_basis),
            "matrix": self.matrix.to_json_dict(),
        }

    @classmethod
    def from_json_dict(cls, d, field=QQ):
        try:
            m = Matrix.from_json_dict(d["matrix"], field)
            return cls(m, tuple(d["factor_basis"]), d.get("basis_order", "second-factor-major"))
        except (KeyError, TypeError) as exc:
            raise ValidationError("braiding JSON needs factor_basis/matrix") from exc


def braiding(module: YDModule) -> BraidingMatrix:
    """Matrix of ``tau(x (x) y) = y_(0) (x) x . y_(1)`` on basis pairs."""
    n = module.dim
    one = module.field.one
    zero = module.field.zero
    data = [[zero] * (n * n) for _ in range(n * n)]
    for a in range(n):
        for b in range(n):
            col = flat2(a, b, n)
            for b0, hk, ck in module.coaction[b]:
                for m, cm in module.act_basis({a: one}, hk).items():
                    row = flat2(b0, m, n)
                    data[row][col] = data[row][col] + ck * cm
    return BraidingMatrix(Matrix(data, n * n, n * n) if n else Matrix.zeros(0, 0, module.field),
                          module.basis)


def flip_matrix(n: int, field=QQ) -> Matrix:
    """The tensor flip e_i (x) e_j -> e_j (x) e_i as a matrix."""
    zero, one = field.zero, field.one
    data = [[zero] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            data[flat2(j, i, n)][flat2(i, j, n)] = one
    return Matrix(data, n * n, n * n) if n else Matrix.zeros(0, 0, field)


def _square_side(t) -> tuple[Matrix, int]:
    m = t.matrix if isinstance(t, BraidingMatrix) else t
    if m.rows != m.cols:
        raise ShapeError("braiding matrix must be square")
    n = round(m.rows ** 0.5)
    if n * n != m.rows:
        raise ShapeError("braiding matrix size must be a perfect square")
    return m, n


@dataclass(frozen=True)
class YBEReport:
    ok: bool
    defect: Matrix | None = dc_field(default=None, repr=False)


def check_ybe(t, field=QQ) -> YBEReport:
    """Exact Yang-Baxter check: (T x 1)(1 x T)(T x 1) = (1 x T)(T x 1)(1 x T)."""
    m, n = _square_side(t)
    if n == 0:
        return YBEReport(True)
    eye = Matrix.identity(n, field)
    t12 = kron(m, eye)
    t23 = kron(eye, m)
    lhs = mat_mul(mat_mul(t12, t23), t12)
    rhs = mat_mul(mat_mul(t23, t12), t23)
    if lhs == rhs:
        return YBEReport(True)
    return YBEReport(False, lhs - rhs)


def is_involutive(t) -> bool:
    m, _ = _square_side(t)
    return mat_mul(m, m).is_identity()


@dataclass(frozen=True)
class QConditionsReport:
    ok: bool
    equivariance: bool
    coderivation_condition: bool
    witnesses: dict


def check_q_conditions(module: YDModule, q) -> QConditionsReport:
    """Check the two conditions that make ``x <| y = x q(y)`` braided Leibniz.

    ``q`` maps the module into the descriptor, given as one sparse descriptor
    vector per basis element.  Its image must lie in ker(counit); that is a
    precondition forced by the colinearity condition, so a violation raises.
    The two reported conditions are

        h_(1) q(x h_(2)) = q(x) h                      (equivariance: right
                                                        linearity for the
                                                        adjoint action)
        Delta q(x) = 1 (x) q(x) + q(x_(0)) (x) x_(1)   (colinearity for the
                                                        coaction
                                                        h -> h_(1) (x) h_(2)
                                                             - 1 (x) h)
    """
    hopf = module.hopf
    one = module.field.one
    q = [_norm(dict(v)) for v in q]
    if len(q) != module.dim:
        raise ValidationError("q needs one value per basis vector")
    for i, v in enumerate(q):
        if hvec_counit(hopf, v):
            raise ValidationError(f"im q must lie in ker(counit); fails at basis {i}")
    witnesses = {}
    equivariance = True
    for m in range(module.dim):
        for h in hopf.generators:
            lhs = {}
            for c, h1, h2 in hopf.coproduct(h):
                qx = {}
                for mi, cm in module.act_basis({m: one}, h2).items():
                    for hk, ck in q[mi].items():
                        _acc(qx, hk, cm * ck)
                for hp, cp in hvec_mul(hopf, {h1: one}, qx).items():
                    _acc(lhs, hp, c * cp)
            rhs = hvec_mul(hopf, q[m], {h: one})
            if _norm(lhs) != rhs:
                equivariance = False
                witnesses["equivariance"] = (m, h)
                break
        if not equivariance:
            break
    coderivation = True
    for m in range(module.dim):
        lhs = hvec_coproduct(hopf, q[m])
        rhs = {}
        for hk, ck in q[m].items():
            _acc(rhs, (hopf.unit, hk), ck)
        for m0, hk, ck in module.coaction[m]:
            for ha, ca in q[m0].items():
                _acc(rhs, (ha, hk), ck * ca)
        if lhs != _norm(rhs):
            coderivation = False
            witnesses["coderivation_condition"] = (m,)
            break
    return QConditionsReport(equivariance and coderivation, equivariance, coderivation, witnesses)


@dataclass(frozen=True)
class BraidedLeibnizData:
    """A bracket table together with a braiding on the same carrier."""

    basis: tuple
    bracket: tuple  # bracket[i][j] = sparse vector e_i <| e_j
    tau: BraidingMatrix
    field: object = QQ

    @property
    def dim(self) -> int:
        return len(self.basis)

    def bra(self, vec: dict, j: int) -> dict:
        out = {}
        for i, c in vec.items():
            for k, c2 in self.bracket[i][j].items():
                _acc(out, k, c * c2)
        return _norm(out)

    def bra_vec(self, vec: dict, w: dict) -> dict:
        out = {}
        for j, c in w.items():
            for k, c2 in self.bra(vec, j).items():
                _acc(out, k, c * c2)
        return _norm(out)


def braided_leibniz_from_q(module: YDModule, q) -> BraidedLeibnizData:
    """Bracket ``x <| y = x q(y)`` with the canonical braiding of the module.

    Preconditions (the module is Yetter-Drinfel'd and q satisfies both
    conditions of :func:`check_q_conditions`) are enforced; the result then
    passes :func:`check_braided_leibniz`.
    """
    rep = check_yd(module)
    if not rep.ok:
        raise ValidationError(f"not a Yetter-Drinfel'd module (witness {rep.witness})")
    qrep = check_q_conditions(module, q)
    if not qrep.ok:
        raise ValidationError(f"q conditions fail: {qrep.witnesses}")
    one = module.field.one
    q = [_norm(dict(v)) for v in q]
    bracket = tuple(
        tuple(module.act_hvec({i: one}, q[j]) for j in range(module.dim))
        for i in range(module.dim)
    )
    return BraidedLeibnizData(module.basis, bracket, braiding(module), module.field)


@dataclass(frozen=True)
class BraidedLeibnizReport:
    ok: bool
    witness: tuple | None


def check_braided_leibniz(data: BraidedLeibnizData) -> BraidedLeibnizReport:
    """Brute-force the braided Leibniz identity over all basis triples."""
    n = data.dim
    if data.tau.factor_dim != n:
        raise ShapeError("tau factor basis must match the bracket carrier")
    tau = data.tau.matrix.data
    one = data.field.one
    for i in range(n):
        ei = {i: one}
        for j in range(n):
            xy = data.bra(ei, j)
            for k in range(n):
                lhs = data.bra(xy, k)
                rhs = dict(data.bra_vec(ei, data.bracket[j][k]))
                col = flat2(j, k, n)
                for r in range(n * n):
                    c = tau[r][col]
                    if c:
                        u, v = r % n, r // n
                        for kk, cc in data.bra(data.bra(ei, u), v).items():
                            _acc(rhs, kk, c * cc)
                if lhs != _norm(rhs):
                    return BraidedLeibnizReport(False, (i, j, k))
    return BraidedLeibnizReport(True, None)
