"""Finite-dimensional right Leibniz algebras from structure constants.

A (right) Leibniz algebra has a bilinear bracket with

    [[x, y], z] = [x, [y, z]] + [[x, z], y];

Lie algebras are exactly the antisymmetric ones.  The quotient by the ideal
generated by all squares [x, x] is a Lie algebra g_Lie, the right adjoint
action of g_Lie lifts to g (squares bracket to zero from the right, so the
lift cannot depend on the representative -- this is re-verified at run time
and treated as an internal error if it ever failed), and the quotient map
pi: g -> g_Lie together with that action is the equivariant pair fed into
:mod:`rackyd.envelope`.

Two constructions live here besides the quotient: the unital shelf on
k (+) g,

    (a + u) <| (a' + v) = a a' + a' u + [u, v],

and the first-order module structure on the same space over the truncated
enveloping algebra of g_Lie, whose braiding matrix is the package's flagship
concrete computation (see ``first_order_yd``).  The module's induced
operation ``x <| y = x . (scalar part of y + pi(y))`` coincides with the
unital shelf coefficient for coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .envelope import EnvelopingDescriptor, LieMapObject, TruncatedPBW, check_lie
from .errors import ConsistencyError, ValidationError
from .linalg import Matrix, reduce_mod, rref
from .scalars import QQ
from .yd import YDModule, _acc, _norm


class LeibnizAlgebra:
    """Structure constants of a bilinear bracket on a finite basis.

    The container does not enforce the Leibniz identity (counterexamples must
    be representable); :func:`check_leibniz` decides it, and every operation
    that needs it states so.
    """

    def __init__(self, basis, brackets, field=QQ):
        self.field = field
        self.basis = tuple(str(b) for b in basis)
        n = len(self.basis)
        self.brackets = tuple(tuple(_norm(dict(v)) for v in row) for row in brackets)
        if len(self.brackets) != n or any(len(row) != n for row in self.brackets):
            raise ValidationError("bracket table must be n x n")
        for row in self.brackets:
            for v in row:
                for k in v:
                    if not 0 <= k < n:
                        raise ValidationError(f"bracket target {k} out of range")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def bracket(self, i: int, j: int) -> dict:
        return dict(self.brackets[i][j])

    def bracket_vec(self, u: dict, v: dict) -> dict:
        out = {}
        for i, c in u.items():
            for j, c2 in v.items():
                for k, c3 in self.brackets[i][j].items():
                    _acc(out, k, c * c2 * c3)
        return _norm(out)

    def __eq__(self, other):
        return (
            isinstance(other, LeibnizAlgebra)
            and self.basis == other.basis
            and self.brackets == other.brackets
        )

    def __repr__(self):
        return f"LeibnizAlgebra({list(self.basis)})"

    def to_json_dict(self):
        entries = []
        for i in range(self.dim):
            for j in range(self.dim):
                if self.brackets[i][j]:
                    entries.append({
                        "i": i,
                        "j": j,
                        "out": {str(k): str(c) for k, c in sorted(self.brackets[i][j].items())},
                    })
        return {"dim": self.dim, "basis": list(self.basis), "brackets": entries}

    @classmethod
    def from_json_dict(cls, d, field=QQ):
        try:
            n = d["dim"]
            basis = d["basis"]
            raw = d["brackets"]
        except (KeyError, TypeError) as exc:
            raise ValidationError("Leibniz JSON needs dim/basis/brackets") from exc
        if len(basis) != n:
            raise ValidationError("basis length does not match dim")
        table = [[{} for _ in range(n)] for _ in range(n)]
        for entry in raw:
            try:
                i, j, out = entry["i"], entry["j"], entry["out"]
            except (KeyError, TypeError) as exc:
                raise ValidationError("bracket entry needs i/j/out") from exc
            if not (0 <= i < n and 0 <= j < n):
                raise ValidationError(f"bracket entry ({i},{j}) out of range")
            table[i][j] = {int(k): field.parse(v) for k, v in out.items()}
        return cls(basis, table, field)


@dataclass(frozen=True)
class LeibnizReport:
    ok: bool
    witness: tuple | None


def check_leibniz(alg: LeibnizAlgebra) -> LeibnizReport:
    """Brute-force the Leibniz identity over all basis triples (sufficient by
    trilinearity)."""
    n = alg.dim
    for i in range(n):
        for j in range(n):
            xy = alg.brackets[i][j]
            for k in range(n):
                lhs = alg.bracket_vec(xy, {k: alg.field.one})
                rhs = dict(alg.bracket_vec({i: alg.field.one}, alg.brackets[j][k]))
                for m, c in alg.bracket_vec(alg.brackets[i][k], {j: alg.field.one}).items():
                    _acc(rhs, m, c)
                if lhs != _norm(rhs):
                    return LeibnizReport(False, (i, j, k))
    return LeibnizReport(True, None)


def _require_leibniz(alg: LeibnizAlgebra):
    rep = check_leibniz(alg)
    if not rep.ok:
        raise ValidationError(f"Leibniz identity fails at basis triple {rep.witness}")


# ---------------------------------------------------------------------------
# a small fixture corpus

def heisenberg_voros(field=QQ) -> LeibnizAlgebra:
    """The 3-dimensional Heisenberg-Voros algebra.

    Basis (x, y, z) with [x,x] = [y,y] = [x,y] = z and [y,x] = -z; a central
    extension of the abelian 2-dimensional algebra whose cocycle has both a
    symmetric and an antisymmetric part, so it is Leibniz but not Lie.
    """
    one = field.one
    table = [[{} for _ in range(3)] for _ in range(3)]
    table[0][0] = {2: one}
    table[1][1] = {2: one}
    table[0][1] = {2: one}
    table[1][0] = {2: -one}
    return LeibnizAlgebra(("x", "y", "z"), table, field)


def abelian_lie(n: int, field=QQ) -> LeibnizAlgebra:
    return LeibnizAlgebra(
        tuple(f"e{i}" for i in range(n)),
        [[{} for _ in range(n)] for _ in range(n)],
        field,
    )


def nonabelian_lie2(field=QQ) -> LeibnizAlgebra:
    """The 2-dimensional nonabelian Lie algebra: [e1, e2] = e1."""
    one = field.one
    table = [[{}, {0: one}], [{0: -one}, {}]]
    return LeibnizAlgebra(("e1", "e2"), table, field)


def sl2(field=QQ) -> LeibnizAlgebra:
    """sl(2) on (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
    one = field.one
    two = one + one
    table = [[{} for _ in range(3)] for _ in range(3)]
    table[0][1] = {2: one}
    table[1][0] = {2: -one}
    table[2][0] = {0: two}
    table[0][2] = {0: -two}
    table[2][1] = {1: -two}
    table[1][2] = {1: two}
    return LeibnizAlgebra(("e", "f", "h"), table, field)


def central_square2(field=QQ) -> LeibnizAlgebra:
    """2-dimensional Leibniz algebra with [x,x] = y, y central on both sides."""
    table = [[{1: field.one}, {}], [{}, {}]]
    return LeibnizAlgebra(("x", "y"), table, field)


def non_leibniz1(field=QQ) -> LeibnizAlgebra:
    """The 1-dimensional table [x,x] = x; fails the identity (x vs 2x)."""
    return LeibnizAlgebra(("x",), [[{0: field.one}]], field)


# ---------------------------------------------------------------------------
# squares ideal and the Lie quotient

def _squares_ideal_rows(alg: LeibnizAlgebra):
    n = alg.dim
    field = alg.field
    one = field.one

    def as_vec(d):
        v = [field.zero] * n
        for k, c in d.items():
            v[k] = c
        return tuple(v)

    gens = []
    for i in range(n):
        gens.append(as_vec(alg.brackets[i][i]))
        for j in range(i + 1, n):
            pol = dict(alg.brackets[i][j])
            for k, c in alg.brackets[j][i].items():
                _acc(pol, k, c)
            gens.append(as_vec(_norm(pol)))
    rows, pivots = rref(gens, field)
    # close under bracketing with g on both sides
    changed = True
    while changed:
        changed = False
        new = []
        for row in rows:
            w = {k: c for k, c in enumerate(row) if c}
            for j in range(n):
                for cand in (alg.bracket_vec(w, {j: one}), alg.bracket_vec({j: one}, w)):
                    vec = as_vec(cand)
                    if any(reduce_mod(vec, rows, pivots)):
                        new.append(vec)
        if new:
            rows, pivots = rref(list(rows) + new, field)
            changed = True
    return rows, pivots


def squares_ideal(alg: LeibnizAlgebra):
    """Echelon basis of the smallest bracket-closed subspace containing all
    squares [v, v] (generated by the basis squares and their polarizations,
    which span the same set by bilinearity)."""
    _require_leibniz(alg)
    rows, _ = _squares_ideal_rows(alg)
    return tuple(rows)


@dataclass(frozen=True)
class LieQuotientData:
    """The quotient pi: g -> g_Lie with a chosen section and lifted action."""

    parent: LeibnizAlgebra
    ideal: tuple
    quotient: LeibnizAlgebra
    pi: Matrix
    section: Matrix
    action_mats: tuple  # per quotient basis vector: v -> [v, lift]

    @property
    def dim(self) -> int:
        return self.quotient.dim


def lie_quotient(alg: LeibnizAlgebra) -> LieQuotientData:
    """Quotient by the squares ideal, with section and lifted right action.

    The quotient bracket is verified antisymmetric and Jacobi; the lifted
    action is verified independent of the section (every ideal element
    brackets to zero from the right).  Either failing would contradict the
    general theory, so both raise ConsistencyError, not ValidationError.
    """
    _require_leibniz(alg)
    field = alg.field
    n = alg.dim
    rows, pivots = _squares_ideal_rows(alg)
    for row in rows:
        w = {k: c for k, c in enumerate(row) if c}
        for i in range(n):
            if alg.bracket_vec({i: field.one}, w):
                raise ConsistencyError(
                    "lifted action depends on the section: an ideal element "
                    "does not bracket to zero from the right"
                )
    complement = [j for j in range(n) if j not in set(pivots)]
    q = len(complement)
    cpos = {c: k for k, c in enumerate(complement)}

    def project(vec_dict):
        full = [field.zero] * n
        for k, c in vec_dict.items():
            full[k] = c
        res = reduce_mod(full, rows, pivots)
        return {cpos[j]: res[j] for j in complement if res[j]}

    pi = Matrix(
        [[project({j: field.one}).get(k, field.zero) for j in range(n)] for k in range(q)],
        q, n,
    )
    section = Matrix(
        [[field.one if (j in cpos and cpos[j] == k) else field.zero for k in range(q)]
         for j in range(n)],
        n, q,
    )
    qbrackets = [
        [project(alg.bracket(complement[a], complement[b])) for b in range(q)]
        for a in range(q)
    ]
    quotient = LeibnizAlgebra([alg.basis[c] for c in complement], qbrackets, field)
    witness = check_lie(quotient.brackets, field)
    if witness is not None:
        raise ConsistencyError(f"quotient by the squares ideal must be Lie: {witness}")
    action_mats = []
    for k in range(q):
        w = complement[k]
        cols = [alg.bracket(i, w) for i in range(n)]
        action_mats.append(Matrix(
            [[cols[i].get(j, field.zero) for i in range(n)] for j in range(n)],
            n, n,
        ))
    return LieQuotientData(alg, tuple(rows), quotient, pi, section, tuple(action_mats))


def lie_map_object(alg: LeibnizAlgebra) -> LieMapObject:
    """The equivariant pair pi: g -> g_Lie as input for the enveloping build."""
    lq = lie_quotient(alg)
    n, q = alg.dim, lq.dim
    action = [
        [
            _norm({j: lq.action_mats[k][j, m] for j in range(n)})
            for m in range(n)
        ]
        for k in range(q)
    ]
    f = [_norm({k: lq.pi[k, m] for k in range(q)}) for m in range(n)]
    return LieMapObject(lq.quotient.brackets, lq.quotient.basis, alg.basis, action, f, alg.field)


# ---------------------------------------------------------------------------
# the unital shelf and the first-order module on k (+) g

@dataclass(frozen=True)
class BilinearMap:
    """A bilinear operation given by its table on basis pairs."""

    basis: tuple
    table: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def apply(self, u: dict, v: dict) -> dict:
        out = {}
        for i, c in u.items():
            for j, c2 in v.items():
                for k, c3 in self.table[i][j].items():
                    _acc(out, k, c * c2 * c3)
        return _norm(out)


def unital_shelf(alg: LeibnizAlgebra) -> BilinearMap:
    """The operation (a + u) <| (a' + v) = a a' + a' u + [u, v] on k (+) g.

    Index 0 is the adjoined unit; indices 1.. are the algebra basis.  For the
    Heisenberg-Voros algebra the z-output coefficient on general arguments is
    a'd + bb' + bc' - cb' + cc'.
    """
    _require_leibniz(alg)
    one = alg.field.one
    n = alg.dim
    table = [[{} for _ in range(n + 1)] for _ in range(n + 1)]
    table[0][0] = {0: one}
    for i in range(n):
        table[i + 1][0] = {i + 1: one}
        for j in range(n):
            table[i + 1][j + 1] = {k + 1: c for k, c in alg.brackets[i][j].items()}
    return BilinearMap(("1",) + alg.basis, tuple(tuple(row) for row in table))


def first_order_yd(alg: LeibnizAlgebra, degree: int = 2) -> YDModule:
    """The module-comodule on k (+) g over the truncated enveloping algebra.

    Coaction: 1 -> 1 (x) 1 and v -> v (x) 1 + 1 (x) pi(v).  Action: the unit
    of H acts as the identity, a degree-1 monomial acts by the lifted bracket
    (the adjoined scalar line brackets to zero).  This satisfies the
    Yetter-Drinfel'd condition, and its braiding matrix for the
    Heisenberg-Voros algebra is the 16x16 integer matrix produced by the
    ``hv-rmatrix`` command.  The induced operation
    ``x <| y = x . (scalar part of y + pi(y))`` equals :func:`unital_shelf`,
    which is re-verified on construction.
    """
    if degree < 2:
        raise ValidationError("first-order module needs degree >= 2 for exact checks")
    lq = lie_quotient(alg)
    field = alg.field
    one = field.one
    n, q = alg.dim, lq.dim
    pbw = TruncatedPBW(lq.quotient.brackets, degree, lq.quotient.basis, field)
    hopf = EnvelopingDescriptor(pbw)
    basis = ("1",) + alg.basis
    action = [[{} for _ in range(q)]]
    for i in range(n):
        row = []
        for k in range(q):
            row.append(_norm({j + 1: lq.action_mats[k][j, i] for j in range(alg.dim)}))
        action.append(row)
    coaction = [[(0, pbw.unit, one)]]
    for i in range(n):
        terms = [(i + 1, pbw.unit, one)]
        for k in range(q):
            c = lq.pi[k, i]
            if c:
                terms.append((0, pbw.gen_index[k], c))
        coaction.append(terms)
    module = YDModule(hopf, basis, action, coaction)
    shelf = unital_shelf(alg)
    for j in range(n + 1):
        qj = {pbw.unit: one} if j == 0 else _norm(
            {pbw.gen_index[k]: lq.pi[k, j - 1] for k in range(q)}
        )
        for i in range(n + 1):
            if module.act_hvec({i: one}, qj) != shelf.table[i][j]:
                raise ConsistencyError(
                    "first-order module does not induce the unital shelf"
                )
    return module
