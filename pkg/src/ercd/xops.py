"""Operators polynomial in position with momentum-dependent matrix
coefficients, and the ten translation/rotation/boost generators built
from them.

Normal form keeps all position factors on the left: a term x^alpha S(q)
means "apply the matrix symbol, then multiply by positions", with
x_a acting as i d/dq_a in momentum space. Reordering rule:

    x_a S = S x_a + i dS/dq_a   (so S x_a = x_a S - i dS/dq_a)

which holds for antilinear coefficients too (positions are real and
commute with conjugation). The time coordinate never mixes with the
q-calculus; an optional x0 coefficient is tracked separately and only
enters the evolution-operator symmetry check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .algebras import breve_spin, pd_gammas
from .duals import DerivativeEngine
from .operators import GeneralOp
from .symbols import (MomentumSymbol, gmat_add, gmat_mul, gmat_scale,
                      omega, sample_momenta, to_complex_matrix)

Multi = Tuple[int, int, int]
ZERO_MULTI: Multi = (0, 0, 0)
_E = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _madd_multi(a: Multi, b: Multi) -> Multi:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


@dataclass
class XOp:
    """Normal-form position polynomial with symbol coefficients."""

    coeffs: Dict[Multi, MomentumSymbol]
    mass: float
    t_coeff: Optional[MomentumSymbol] = None
    name: str = ""

    def degree(self) -> int:
        return max((sum(k) for k in self.coeffs), default=0)

    def __add__(self, other: "XOp") -> "XOp":
        if self.mass != other.mass:
            raise ValueError("mass mismatch between operators")
        out = dict(self.coeffs)
        for k, sym in other.coeffs.items():
            out[k] = out[k] + sym if k in out else sym
        t = self.t_coeff
        if other.t_coeff is not None:
            t = other.t_coeff if t is None else t + other.t_coeff
        return XOp(out, self.mass, t, f"{self.name}+{other.name}")

    def __neg__(self) -> "XOp":
        return XOp({k: s.scaled(-1.0) for k, s in self.coeffs.items()},
                   self.mass,
                   None if self.t_coeff is None else self.t_coeff.scaled(-1.0),
                   f"-{self.name}")

    def __sub__(self, other: "XOp") -> "XOp":
        return self + (-other)

    def evaluate(self, q) -> Dict[Multi, Tuple[np.ndarray, np.ndarray]]:
        return {k: sym.value_at(q) for k, sym in self.coeffs.items()}


def xop_from_symbol(sym: MomentumSymbol, mass: float, name: str = "") -> XOp:
    return XOp({ZERO_MULTI: sym}, mass, None, name or sym.label)


def position_op(a: int, mass: float) -> XOp:
    """The canonical position operator x_a ~ i d/dq_a (unit coefficient)."""
    ident = MomentumSymbol.constant(GeneralOp.identity(), mass, "I")
    return XOp({_E[a]: ident}, mass, None, f"x{a + 1}")


def _push_left(s: MomentumSymbol, beta: Multi, t: MomentumSymbol
               ) -> List[Tuple[Multi, MomentumSymbol]]:
    """Normal-form terms of S x^beta T (all positions moved left)."""
    if beta == ZERO_MULTI:
        return [(ZERO_MULTI, s @ t)]
    b = next(i for i in range(3) if beta[i])
    rest = list(beta)
    rest[b] -= 1
    rest_multi: Multi = (rest[0], rest[1], rest[2])
    out = []
    for gamma, sym in _push_left(s, rest_multi, t):
        out.append((_madd_multi(gamma, _E[b]), sym))
    correction = s.deriv(b).times_i().scaled(-1.0)  # -i dS/dq_b
    for gamma, sym in _push_left(correction, rest_multi, t):
        out.append((gamma, sym))
    return out


def xop_compose(x: XOp, y: XOp) -> XOp:
    """Product in normal form; flip-law composition on the coefficients,
    derivative corrections from moving coefficients past positions."""
    if x.mass != y.mass:
        raise ValueError("mass mismatch between operators")
    if x.t_coeff is not None or y.t_coeff is not None:
        raise ValueError("time terms do not enter products; compose the "
                         "spatial parts and handle x0 in the symmetry check")
    out: Dict[Multi, MomentumSymbol] = {}
    for alpha, s in x.coeffs.items():
        for beta, t in y.coeffs.items():
            for gamma, sym in _push_left(s, beta, t):
                key = _madd_multi(alpha, gamma)
                out[key] = out[key] + sym if key in out else sym
    return XOp(out, x.mass, None, f"({x.name})({y.name})")


def xop_commutator(x: XOp, y: XOp) -> XOp:
    return xop_compose(x, y) - xop_compose(y, x)


def xop_max_norm(x: XOp, q) -> float:
    worst = 0.0
    for a, b in x.evaluate(q).values():
        worst = max(worst, float(np.max(np.abs(a))), float(np.max(np.abs(b))))
    return worst


# ---------------------------------------------------------------------------
# the ten generators
# ---------------------------------------------------------------------------

_SPIN_SLOT = {(2, 3): 0, (3, 1): 1, (1, 2): 2}  # (l, n) -> spin component


def build_poincare_generators(mass: float) -> List[Tuple[str, XOp]]:
    """Translation, rotation and boost generators for the diagonalized
    wave equation, anti-Hermitian convention:

        p0 = -i g0 omega,  p_n = i q_n,
        j_ln = x_l p_n - x_n p_l + spin_ln   (covariant components,
                                              x_lower = -x_upper),
        j_0k = x0 p_k + i g0 ( x_k omega + p_k/(2 omega)
                               + (spin x p)_k / (omega + m) ).

    All are verified on the t = 0 slice; the x0 p_k piece is kept as the
    separate time coefficient that feeds the evolution-commutator check.
    """
    if mass <= 0:
        raise ValueError("boost generators need m > 0")
    gc0 = to_complex_matrix(pd_gammas().get("g0").A)
    ig0 = 1j * gc0
    ident4 = np.eye(4, dtype=complex)
    zero4 = np.zeros((4, 4), dtype=complex)
    spin = breve_spin()
    spin_mats = [(to_complex_matrix(op.A), to_complex_matrix(op.B))
                 for _, op in spin]

    def scalar_sym(fn, label):
        return MomentumSymbol.linear_matrix(fn, mass, label)

    gens: List[Tuple[str, XOp]] = []

    # p0
    p0 = scalar_sym(lambda q: gmat_scale(-1j * omega(q, mass), gc0), "p0")
    gens.append(("p0", xop_from_symbol(p0, mass, "p0")))

    # p_n
    for n in range(3):
        pn = scalar_sym(lambda q, n=n: gmat_scale(1j * q[n], ident4), f"p{n + 1}")
        gens.append((f"p{n + 1}", xop_from_symbol(pn, mass, f"p{n + 1}")))

    # rotations: j_ln = -x^l (i q_n) + x^n (i q_l) + spin_ln
    for (l, n) in ((2, 3), (3, 1), (1, 2)):
        s_a, s_b = spin_mats[_SPIN_SLOT[(l, n)]]
        spin_sym = MomentumSymbol(lambda q, a=s_a, b=s_b: (a, b), mass,
                                  f"s{l}{n}",
                                  has_linear=bool(np.any(s_a)),
                                  has_antilinear=bool(np.any(s_b)))
        coeffs: Dict[Multi, MomentumSymbol] = {
            _E[l - 1]: scalar_sym(lambda q, n=n: gmat_scale(-1j * q[n - 1], ident4),
                                  f"-iq{n}"),
            _E[n - 1]: scalar_sym(lambda q, l=l: gmat_scale(1j * q[l - 1], ident4),
                                  f"iq{l}"),
            ZERO_MULTI: spin_sym,
        }
        gens.append((f"j{l}{n}", XOp(coeffs, mass, None, f"j{l}{n}")))

    # boosts: x-coefficient -i g0 omega; constant part
    # i g0 (i q_k / (2 omega))  +  i g0 (spin x iq)_k / (omega + m);
    # time part x0 (i q_k)
    for k in range(3):
        def boost_x(q, _k=k):
            return gmat_scale(-1j * omega(q, mass), gc0)

        def boost_const(q, _k=k):
            w = omega(q, mass)
            # i g0 * i q_k/(2w) = -(q_k/2w) g0
            a_acc = gmat_scale(-q[_k] / (2.0 * w), gc0)
            b_acc = zero4
            # (spin x iq)_k = sum eps_klm spin_l (i q_m), left-scaled
            lm = ((_k + 1) % 3, (_k + 2) % 3)
            for l, m_idx, sign in ((lm[0], lm[1], 1.0), (lm[1], lm[0], -1.0)):
                c = sign * 1j / (w + mass)
                s_a, s_b = spin_mats[l]
                a_acc = gmat_add(a_acc,
                                 gmat_mul(ig0, gmat_scale(c * q[m_idx], s_a)))
                b_acc = gmat_add(b_acc,
                                 gmat_mul(ig0, gmat_scale(c * q[m_idx], s_b)))
            return a_acc, b_acc

        x_sym = scalar_sym(boost_x, "-ig0w")
        const_sym = MomentumSymbol(boost_const, mass, f"j0{k + 1}c",
                                   has_linear=True, has_antilinear=True)
        t_sym = scalar_sym(lambda q, _k=k: gmat_scale(1j * q[_k], ident4),
                           f"iq{k + 1}")
        coeffs = {_E[k]: x_sym, ZERO_MULTI: const_sym}
        gens.append((f"j0{k + 1}", XOp(coeffs, mass, t_sym, f"j0{k + 1}")))

    return gens


# ---------------------------------------------------------------------------
# evolution-operator symmetry for XOps
# ---------------------------------------------------------------------------

def evolution_commutator_residual(gen: XOp, mass: float,
                                  samples: Sequence[Tuple[float, float, float]]
                                  ) -> float:
    """Max norm of [d_0 + iH, G] over samples, H the diagonalized
    Hamiltonian. For time-independent spatial parts the commutator is
    [iH, G_spatial] plus the x0 coefficient surfacing through d_0."""
    gc0 = to_complex_matrix(pd_gammas().get("g0").A)
    i_h = MomentumSymbol.linear_matrix(
        lambda q: gmat_scale(1j * omega(q, mass), gc0), mass, "iH")
    i_h_xop = xop_from_symbol(i_h, mass, "iH")
    spatial = XOp(gen.coeffs, mass, None, gen.name)
    comm = xop_commutator(i_h_xop, spatial)
    if gen.t_coeff is not None:
        comm = comm + xop_from_symbol(gen.t_coeff, mass, "t-part")
    return max(xop_max_norm(comm, q) for q in samples)


# ---------------------------------------------------------------------------
# closure fitting
# ---------------------------------------------------------------------------

@dataclass
class ClosureResult:
    pair: Tuple[str, str]
    residual: float
    constants: np.ndarray  # real coefficients over the generator list


@dataclass
class PoincareClosureReport:
    names: List[str]
    results: List[ClosureResult]
    max_residual: float
    oracle_comparison: Optional[float] = None
    oracle_verified: Optional[bool] = None
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.max_residual < 1e-8 and (self.oracle_comparison is None
                                             or self.oracle_comparison < 1e-8)


class _GenData:
    """Per-sample-point evaluation cache: values and q-gradients of every
    coefficient at q and -q. Dual mode gets value and all three gradient
    components from a single seeded pass per coefficient and point."""

    __slots__ = ("val", "grad")

    def __init__(self, xop: XOp, q, engine: DerivativeEngine):
        from .duals import grad_component, seed, value
        self.val = {}
        self.grad = {}
        for point_key, point in (("+", q), ("-", tuple(-c for c in q))):
            for multi, sym in xop.coeffs.items():
                if engine.mode == "dual":
                    am, bm = sym(seed(point))
                    self.val[(point_key, multi)] = (_strip(am, value),
                                                    _strip(bm, value))
                    self.grad[(point_key, multi)] = [
                        (_strip(am, lambda x, a=a: grad_component(x, a)),
                         _strip(bm, lambda x, a=a: grad_component(x, a)))
                        for a in range(3)]
                else:
                    self.val[(point_key, multi)] = sym.value_at(point)
                    ga = engine.gradient(lambda qq, s=sym: s.value_at(qq)[0],
                                         point)
                    gb = engine.gradient(lambda qq, s=sym: s.value_at(qq)[1],
                                         point)
                    self.grad[(point_key, multi)] = [(ga[a], gb[a])
                                                     for a in range(3)]


def _strip(m, pick) -> np.ndarray:
    arr = np.asarray(m, dtype=object)
    out = np.empty((4, 4), dtype=complex)
    for i in range(4):
        for j in range(4):
            out[i, j] = pick(arr[i, j])
    return out


def _star(left_val, right, multi_r):
    """Flip-law product of evaluated coefficient data.

    left_val: (A, B) of the left factor at q (or its derivative at q);
    right: _GenData of the right factor; multi_r: its coefficient key.
    """
    la, lb = left_val
    ra, rb = right.val[("+", multi_r)]
    ram, rbm = right.val[("-", multi_r)]
    a = la @ ra + lb @ np.conj(rbm)
    b = la @ rb + lb @ np.conj(ram)
    return a, b


def _compose_slots(x: XOp, xdat: _GenData, y: XOp, ydat: _GenData):
    """Coefficient slots of (x y) at one sample point, degree <= 1 inputs."""
    slots: Dict[Multi, Tuple[np.ndarray, np.ndarray]] = {}

    def acc(key: Multi, pair):
        if key in slots:
            pa, pb = slots[key]
            slots[key] = (pa + pair[0], pb + pair[1])
        else:
            slots[key] = pair

    for alpha, s in x.coeffs.items():
        s_val = xdat.val[("+", alpha)]
        s_grad = xdat.grad[("+", alpha)]
        for beta in y.coeffs:
            if beta == ZERO_MULTI:
                acc(alpha, _star(s_val, ydat, beta))
            else:
                if sum(beta) > 1:
                    raise ValueError("fast commutator path handles degree <= 1")
                b = next(i for i in range(3) if beta[i])
                acc(_madd_multi(alpha, beta), _star(s_val, ydat, beta))
                da, db = s_grad[b]
                acc(alpha, _star((-1j * da, -1j * db), ydat, beta))
    return slots


def _commutator_slots(x: XOp, xdat: _GenData, y: XOp, ydat: _GenData):
    xy = _compose_slots(x, xdat, y, ydat)
    yx = _compose_slots(y, ydat, x, xdat)
    keys = set(xy) | set(yx)
    out = {}
    z = np.zeros((4, 4), dtype=complex)
    for k in keys:
        a1, b1 = xy.get(k, (z, z))
        a2, b2 = yx.get(k, (z, z))
        out[k] = (a1 - a2, b1 - b2)
    return out


def poincare_closure_check(mass: float, n_samples: int = 200, seed: int = 42,
                           tol: float = 1e-8,
                           compare_oracle: bool = True
                           ) -> PoincareClosureReport:
    """Fit every pairwise commutator of the ten generators into their real
    span by least squares over seeded sample points; certify closure by
    the fit residual and compare the fitted structure constants against
    the scalar-realization symbolic oracle."""
    gens = build_poincare_generators(mass)
    names = [n for n, _ in gens]
    xops = [XOp(g.coeffs, mass, None, g.name) for _, g in gens]
    samples = sample_momenta(n_samples, seed=seed, radius=5.0)
    # the origin makes boost coefficients finite but keep q away from
    # exact zero where direction-degenerate equations add no information
    engine = DerivativeEngine("dual")

    data = [[_GenData(x, q, engine) for x in xops] for q in samples]

    all_gen_keys: List[Multi] = sorted({k for x in xops for k in x.coeffs})

    results: List[ClosureResult] = []
    worst = 0.0
    for i in range(len(xops)):
        for j in range(i + 1, len(xops)):
            rows: List[np.ndarray] = []
            rhs: List[float] = []
            for s_idx, q in enumerate(samples):
                slots = _commutator_slots(xops[i], data[s_idx][i],
                                          xops[j], data[s_idx][j])
                keys = sorted(set(slots) | set(all_gen_keys))
                for key in keys:
                    z = np.zeros((4, 4), dtype=complex)
                    ca, cb = slots.get(key, (z, z))
                    gen_vals = []
                    for g_idx, x in enumerate(xops):
                        if key in x.coeffs:
                            ga, gb = data[s_idx][g_idx].val[("+", key)]
                        else:
                            ga, gb = z, z
                        gen_vals.append((ga, gb))
                    for part in (0, 1):
                        cpart = (ca, cb)[part]
                        gpart = [gv[part] for gv in gen_vals]
                        flat_c = cpart.ravel()
                        flat_g = np.stack([g.ravel() for g in gpart], axis=1)
                        rows.append(np.concatenate([flat_g.real, flat_g.imag]))
                        rhs.append(np.concatenate([flat_c.real, flat_c.imag]))
            m_mat = np.vstack(rows)
            v = np.concatenate(rhs)
            coef, *_ = np.linalg.lstsq(m_mat, v, rcond=None)
            resid = float(np.max(np.abs(m_mat @ coef - v)))
            worst = max(worst, resid)
            results.append(ClosureResult((names[i], names[j]), resid, coef))

    report = PoincareClosureReport(names, results, worst)
    if compare_oracle:
        from .poincare_oracle import oracle_structure_table
        table, verified = oracle_structure_table()
        dev = 0.0
        for res in results:
            expected = table[res.pair]
            dev = max(dev, float(np.max(np.abs(
                res.constants - np.array(expected, dtype=float)))))
        report.oracle_comparison = dev
        report.oracle_verified = verified
        if dev >= tol:
            report.notes.append(
                "fitted constants deviate from the scalar-realization oracle")
    return report


# ---------------------------------------------------------------------------
# Casimir evaluation
# ---------------------------------------------------------------------------

@dataclass
class CasimirReport:
    mass: float
    momentum_square_value: complex
    momentum_square_spread: float
    spin_square_exact: bool
    sign_flag: str

    @property
    def passed(self) -> bool:
        return (abs(self.momentum_square_value + self.mass ** 2) < 1e-10
                and self.momentum_square_spread < 1e-12
                and self.spin_square_exact)


def casimir_report(mass: float, n_samples: int = 50, seed: int = 42
                   ) -> CasimirReport:
    """p^mu p_mu = p0 p0 - sum p_n p_n evaluated over samples (expected
    -m^2 I, constant in q), and the exact matrix factor of the spin-square
    invariant (expected -2 diag(1,1,1,0))."""
    from .relations import casimir_spin_squared
    from .scalars import ExactScalar

    gens = dict(build_poincare_generators(mass))
    p0 = gens["p0"].coeffs[ZERO_MULTI]
    ps = [gens[f"p{n}"].coeffs[ZERO_MULTI] for n in (1, 2, 3)]
    samples = sample_momenta(n_samples, seed=seed, radius=5.0)
    values = []
    deviation = 0.0
    for q in samples:
        acc, _ = (p0 @ p0).value_at(q)
        for pn in ps:
            an, _ = (pn @ pn).value_at(q)
            acc = acc - an
        off = acc - acc[0, 0] * np.eye(4)
        deviation = max(deviation, float(np.max(np.abs(off))))
        values.append(acc[0, 0])
    values = np.array(values)
    spread = float(np.max(np.abs(values - values[0])))

    spin_sq = casimir_spin_squared(breve_spin())
    minus_two = ExactScalar(-2)
    zero = ExactScalar(0)
    expected = GeneralOp.linear((
        (minus_two, zero, zero, zero),
        (zero, minus_two, zero, zero),
        (zero, zero, minus_two, zero),
        (zero, zero, zero, zero)))
    return CasimirReport(
        mass,
        complex(values[0]),
        max(spread, deviation),
        spin_sq == expected,
        "computed p.p = -m^2 I; magnitude matches the quoted invariant, "
        "sign differs under the anti-Hermitian generator convention")
