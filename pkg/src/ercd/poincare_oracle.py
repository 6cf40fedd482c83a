"""Independent symbolic oracle for the generator structure constants.

The spin-free (scalar) reduction of the ten generators acts on functions
of momentum as first-order differential operators:

    p0 = -i w,  p_n = i q_n,
    j_ln: f -> q_n df/dq_l - q_l df/dq_n,
    j_0k: f -> w df/dq_k + (q_k / 2w) f,        w = sqrt(q^2 + m^2).

Their commutators are computed symbolically (sympy), the expansion
coefficients over the ten generators are recovered by an exact linear
solve at rational sample points, and each expansion is then verified as
a symbolic identity. Matrix/spin parts cannot change the structure
constants of a representation, so the fitted constants of the full
generators must match this table; any deviation is a genuine finding.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Tuple

import sympy as sp

NAMES = ["p0", "p1", "p2", "p3", "j23", "j31", "j12", "j01", "j02", "j03"]

_Q = sp.symbols("q1 q2 q3", real=True)
_M = sp.Symbol("m", positive=True)
_W = sp.sqrt(_Q[0] ** 2 + _Q[1] ** 2 + _Q[2] ** 2 + _M ** 2)

DiffOp = Tuple[Dict[int, sp.Expr], sp.Expr]  # ({a: coeff of d/dq_a}, zeroth)


def _scalar_generators() -> List[DiffOp]:
    i = sp.I
    gens: List[DiffOp] = [({}, -i * _W)]
    for n in range(3):
        gens.append(({}, i * _Q[n]))
    for (l, n) in ((2, 3), (3, 1), (1, 2)):
        gens.append(({l - 1: _Q[n - 1], n - 1: -_Q[l - 1]}, sp.Integer(0)))
    for k in range(3):
        gens.append(({k: _W}, _Q[k] / (2 * _W)))
    return gens


def _commutator(f: DiffOp, g: DiffOp) -> DiffOp:
    fc, f0 = f
    gc, g0 = g
    out_c: Dict[int, sp.Expr] = {}
    for b in range(3):
        expr = sp.Integer(0)
        for a, fa in fc.items():
            if b in gc:
                expr += fa * sp.diff(gc[b], _Q[a])
        for a, ga in gc.items():
            if b in fc:
                expr -= ga * sp.diff(fc[b], _Q[a])
        expr = sp.cancel(sp.together(expr))
        if expr != 0:
            out_c[b] = expr
    zero = sp.Integer(0)
    for a, fa in fc.items():
        zero += fa * sp.diff(g0, _Q[a])
    for a, ga in gc.items():
        zero -= ga * sp.diff(f0, _Q[a])
    return out_c, sp.cancel(sp.together(zero))


_SAMPLE_POINTS = (
    (1, 2, 3), (2, -1, 1), (-3, 1, 2), (1, 1, -2), (2, 3, -1), (-1, -2, 2),
)


def _slot_values(op: DiffOp, pt) -> List[sp.Expr]:
    subs = {**{_Q[a]: sp.Integer(pt[a]) for a in range(3)}, _M: sp.Integer(1)}
    vals = []
    for b in range(3):
        vals.append(op[0].get(b, sp.Integer(0)).subs(subs))
    vals.append(op[1].subs(subs))
    return vals


def _solve_expansion(gens: List[DiffOp], target: DiffOp
                     ) -> List[sp.Rational]:
    lams = sp.symbols(f"lam0:{len(gens)}")
    equations = []
    for pt in _SAMPLE_POINTS:
        tvals = _slot_values(target, pt)
        gvals = [_slot_values(g, pt) for g in gens]
        for slot in range(4):
            eq = sum(lams[k] * gvals[k][slot] for k in range(len(gens)))
            equations.append(sp.Eq(eq, tvals[slot]))
    sol = sp.linsolve(equations, lams)
    if not sol:
        raise ValueError("scalar-realization commutator does not close")
    values = list(sol)[0]
    out = []
    for v in values:
        v = sp.nsimplify(sp.simplify(v))
        if not v.is_rational:
            raise ValueError(f"non-rational structure constant {v}")
        out.append(sp.Rational(v))
    return out


def _verify_expansion(gens: List[DiffOp], target: DiffOp,
                      lam: List[sp.Rational]) -> bool:
    for b in range(3):
        expr = target[0].get(b, sp.Integer(0))
        for k, g in enumerate(gens):
            expr -= lam[k] * g[0].get(b, sp.Integer(0))
        if sp.simplify(expr) != 0:
            return False
    expr = target[1] - sum(lam[k] * gens[k][1] for k in range(len(gens)))
    return sp.simplify(expr) == 0


@lru_cache(maxsize=1)
def oracle_structure_table() -> Tuple[Dict[Tuple[str, str], Tuple[float, ...]],
                                      bool]:
    """Structure constants of all 45 generator pairs, with every
    expansion re-verified as a symbolic identity. Returns (table, verified).
    """
    gens = _scalar_generators()
    table: Dict[Tuple[str, str], Tuple[float, ...]] = {}
    verified = True
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            comm = _commutator(gens[i], gens[j])
            lam = _solve_expansion(gens, comm)
            if not _verify_expansion(gens, comm, lam):
                verified = False
            table[(NAMES[i], NAMES[j])] = tuple(float(v) for v in lam)
    return table, verified
