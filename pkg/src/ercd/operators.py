"""Real-linear operators on C^4 with exact matrix entries.

The universal carrier is a pair of 4x4 matrices (A, B) acting as
phi -> A phi + B conj(phi): A is the linear part, B the antilinear part.
Every basis element of the extended algebra is pure-linear or
pure-antilinear, but sums (needed for span computations and the
basis-change operator of the bosonic representation) may carry both.

The algebra is real: scalar multiplication is restricted to real field
elements, and multiplication by i is composition with the operator i.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Tuple

from .scalars import ExactScalar, ZERO, ONE, I_UNIT

Matrix = Tuple[Tuple[ExactScalar, ...], ...]
Spinor = Tuple[ExactScalar, ...]


# ---------------------------------------------------------------------------
# exact matrix helpers (tuples of tuples, immutable)
# ---------------------------------------------------------------------------

def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(ExactScalar.coerce(x) if not isinstance(x, ExactScalar) else x
                       for x in row) for row in rows)


def mzero(n: int = 4) -> Matrix:
    return tuple((ZERO,) * n for _ in range(n))


def mident(n: int = 4) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def madd(x: Matrix, y: Matrix) -> Matrix:
    return tuple(tuple(a + b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


def mneg(x: Matrix) -> Matrix:
    return tuple(tuple(-a for a in row) for row in x)


def mscale(x: Matrix, s: ExactScalar) -> Matrix:
    if not s:
        return mzero(len(x))
    return tuple(tuple(s * a for a in row) for row in x)


def mmul(x: Matrix, y: Matrix) -> Matrix:
    n = len(x)
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        xrow = x[i]
        orow = out[i]
        for k in range(n):
            s = xrow[k]
            if not s:
                continue  # basis matrices are sparse; skipping zeros matters
            yrow = y[k]
            for j in range(n):
                t = yrow[j]
                if t:
                    orow[j] = orow[j] + s * t
    return tuple(tuple(row) for row in out)


def mconj(x: Matrix) -> Matrix:
    return tuple(tuple(a.conjugate() for a in row) for row in x)


def mtrans(x: Matrix) -> Matrix:
    return tuple(tuple(x[j][i] for j in range(len(x))) for i in range(len(x)))


def mdagger(x: Matrix) -> Matrix:
    return mconj(mtrans(x))


def meq(x: Matrix, y: Matrix) -> bool:
    return all(a == b for rx, ry in zip(x, y) for a, b in zip(rx, ry))


def mis_zero(x: Matrix) -> bool:
    return all(not a for row in x for a in row)


# ---------------------------------------------------------------------------
# GeneralOp
# ---------------------------------------------------------------------------

class GeneralOp:
    """phi -> A phi + B conj(phi) on C^4, with exact entries."""

    __slots__ = ("A", "B")

    def __init__(self, A: Matrix | None = None, B: Matrix | None = None):
        self.A = A if A is not None else mzero()
        self.B = B if B is not None else mzero()

    # constructors
    @classmethod
    def linear(cls, A) -> "GeneralOp":
        return cls(mat(A) if not _is_matrix(A) else A, None)

    @classmethod
    def antilinear(cls, B) -> "GeneralOp":
        return cls(None, mat(B) if not _is_matrix(B) else B)

    @classmethod
    def identity(cls) -> "GeneralOp":
        return cls(mident(), None)

    @classmethod
    def zero(cls) -> "GeneralOp":
        return cls(None, None)

    @classmethod
    def imaginary_unit(cls) -> "GeneralOp":
        """The operator i, i.e. phi -> i phi."""
        return cls(mscale(mident(), I_UNIT), None)

    @classmethod
    def conjugation(cls) -> "GeneralOp":
        """The antilinear involution phi -> conj(phi)."""
        return cls(None, mident())

    # composition: (X Y)(phi) = X(Y(phi))
    def __matmul__(self, other: "GeneralOp") -> "GeneralOp":
        A = madd(mmul(self.A, other.A), mmul(self.B, mconj(other.B)))
        B = madd(mmul(self.A, other.B), mmul(self.B, mconj(other.A)))
        return GeneralOp(A, B)

    def __add__(self, other: "GeneralOp") -> "GeneralOp":
        return GeneralOp(madd(self.A, other.A), madd(self.B, other.B))

    def __sub__(self, other: "GeneralOp") -> "GeneralOp":
        return self + (-other)

    def __neg__(self) -> "GeneralOp":
        return GeneralOp(mneg(self.A), mneg(self.B))

    def scaled(self, r) -> "GeneralOp":
        """Scale by a real field element. The algebra is real: multiplying
        by i must be written as composition with GeneralOp.imaginary_unit()."""
        r = ExactScalar.coerce(r) if not isinstance(r, ExactScalar) else r
        if not r.is_real:
            raise ValueError("scalars are restricted to the reals; "
                             "compose with the operator i instead")
        return GeneralOp(mscale(self.A, r), mscale(self.B, r))

    def adjoint(self) -> "GeneralOp":
        """Adjoint with respect to <X^+ phi, psi> = <X psi, phi> on the
        antilinear part: A -> A^dagger, B -> B^T."""
        return GeneralOp(mdagger(self.A), mtrans(self.B))

    def apply(self, phi: Spinor) -> Spinor:
        out = []
        for i in range(4):
            acc = ZERO
            for j in range(4):
                aij = self.A[i][j]
                if aij:
                    acc = acc + aij * phi[j]
                bij = self.B[i][j]
                if bij:
                    acc = acc + bij * phi[j].conjugate()
            out.append(acc)
        return tuple(out)

    # predicates
    @property
    def is_linear(self) -> bool:
        return mis_zero(self.B)

    @property
    def is_antilinear(self) -> bool:
        return mis_zero(self.A)

    @property
    def is_zero(self) -> bool:
        return mis_zero(self.A) and mis_zero(self.B)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneralOp):
            return NotImplemented
        return meq(self.A, other.A) and meq(self.B, other.B)

    def __hash__(self) -> int:
        return hash((self.A, self.B))

    def __repr__(self) -> str:
        kind = ("zero" if self.is_zero
                else "linear" if self.is_linear
                else "antilinear" if self.is_antilinear
                else "mixed")
        return f"<GeneralOp {kind}>"

    # realification: C^4 = R^8 with phi = u + iv |-> (u; v)
    def realify(self) -> Matrix:
        """8x8 real matrix (entries in Q(sqrt2)) reproducing the action on R^8.

        Injective multiplicative homomorphism:
        realify(X @ Y) == mmul(realify(X), realify(Y)).
        """
        ar, ai = _re_im(self.A)
        br, bi = _re_im(self.B)
        top = [row_l + row_r for row_l, row_r in zip(madd(ar, br), madd(mneg(ai), bi))]
        bot = [row_l + row_r for row_l, row_r in zip(madd(ai, bi), madd(ar, mneg(br)))]
        return tuple(tuple(row) for row in top + bot)

    def vectorize(self) -> Tuple[ExactScalar, ...]:
        """64 real components: row-major A real parts, A imaginary parts,
        then B likewise. Fixed order so rank computations are reproducible."""
        comps = []
        for part in (self.A, self.B):
            for pick in (_re, _im):
                for row in part:
                    comps.extend(pick(x) for x in row)
        return tuple(comps)


def _is_matrix(x) -> bool:
    return isinstance(x, tuple) and x and isinstance(x[0], tuple)


def _re(x: ExactScalar) -> ExactScalar:
    return ExactScalar(x.a, x.b)


def _im(x: ExactScalar) -> ExactScalar:
    return ExactScalar(x.c, x.d)


def _re_im(m: Matrix):
    return (tuple(tuple(_re(x) for x in row) for row in m),
            tuple(tuple(_im(x) for x in row) for row in m))


def compose(*ops: GeneralOp) -> GeneralOp:
    out = ops[0]
    for op in ops[1:]:
        out = out @ op
    return out


def commutator(x: GeneralOp, y: GeneralOp) -> GeneralOp:
    return x @ y - y @ x


def anticommutator(x: GeneralOp, y: GeneralOp) -> GeneralOp:
    return x @ y + y @ x


def scale_int(x: GeneralOp, num: int, den: int = 1) -> GeneralOp:
    return x.scaled(ExactScalar(Fraction(num, den)))
