"""Constructors for every named generator set of the extended algebra.

Each element carries a label and a provenance string giving its defining
composition, so tables and reports can be diffed against the standard
form of the algebra by eye.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from .operators import GeneralOp, commutator, compose, mat
from .scalars import ExactScalar, HALF, I_UNIT, INV_SQRT2, ONE, ZERO

Pair = Tuple[int, int]

QUARTER = ExactScalar(Fraction(1, 4))
MINUS_HALF = ExactScalar(Fraction(-1, 2))


@dataclass(frozen=True)
class OrtSet:
    """Named, ordered collection of basis operators with provenance labels."""

    name: str
    elements: Tuple[Tuple[str, GeneralOp], ...]
    provenance: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self):
        labels = [lbl for lbl, _ in self.elements]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in ort set {self.name!r}")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Tuple[str, GeneralOp]]:
        return iter(self.elements)

    def labels(self) -> List[str]:
        return [lbl for lbl, _ in self.elements]

    def ops(self) -> List[GeneralOp]:
        return [op for _, op in self.elements]

    def get(self, label: str) -> GeneralOp:
        for lbl, op in self.elements:
            if lbl == label:
                return op
        raise KeyError(f"{label!r} not in ort set {self.name!r}")

    def provenance_of(self, label: str) -> str:
        for lbl, text in self.provenance:
            if lbl == label:
                return text
        return ""


def _ortset(name: str, items: Sequence[Tuple[str, GeneralOp, str]]) -> OrtSet:
    return OrtSet(name,
                  tuple((lbl, op) for lbl, op, _ in items),
                  tuple((lbl, prov) for lbl, _, prov in items))


# ---------------------------------------------------------------------------
# Dirac matrices, standard representation
# ---------------------------------------------------------------------------

def pauli_matrices():
    s1 = mat([[0, 1], [1, 0]])
    s2 = ((ZERO, -I_UNIT), (I_UNIT, ZERO))
    s3 = mat([[1, 0], [0, -1]])
    return s1, s2, s3


def _block_gamma(sk):
    # [[0, s], [-s, 0]]
    rows = []
    for i in range(2):
        rows.append((ZERO, ZERO, sk[i][0], sk[i][1]))
    for i in range(2):
        rows.append((-sk[i][0], -sk[i][1], ZERO, ZERO))
    return tuple(rows)


@lru_cache(maxsize=None)
def pd_gammas() -> OrtSet:
    """The five anticommuting generators g0..g4, metric (+----).

    g0 = diag(1,1,-1,-1); gk = [[0, sigma_k],[-sigma_k, 0]];
    g4 = g0 g1 g2 g3 (more convenient than the usual chirality matrix:
    it squares to -I like the spatial generators).
    """
    s1, s2, s3 = pauli_matrices()
    g0 = GeneralOp.linear(mat([[1, 0, 0, 0], [0, 1, 0, 0],
                               [0, 0, -1, 0], [0, 0, 0, -1]]))
    g1 = GeneralOp.linear(_block_gamma(s1))
    g2 = GeneralOp.linear(_block_gamma(s2))
    g3 = GeneralOp.linear(_block_gamma(s3))
    g4 = compose(g0, g1, g2, g3)
    return _ortset("pd_gammas", [
        ("g0", g0, "diag(1,1,-1,-1)"),
        ("g1", g1, "offblock(sigma1)"),
        ("g2", g2, "offblock(sigma2)"),
        ("g3", g3, "offblock(sigma3)"),
        ("g4", g4, "g0 g1 g2 g3"),
    ])


@lru_cache(maxsize=None)
def extended_gammas() -> OrtSet:
    """The seven generators g1..g7 obtained by adjoining conjugation and i.

    g5 = g1 g3 C, g6 = i g1 g3 C, g7 = i g0; all square to -I and pairwise
    anticommute (compact signature -2*delta).
    """
    g = pd_gammas()
    i_op = GeneralOp.imaginary_unit()
    c_op = GeneralOp.conjugation()
    g5 = compose(g.get("g1"), g.get("g3"), c_op)
    g6 = compose(i_op, g5)
    g7 = compose(i_op, g.get("g0"))
    return _ortset("extended_gammas", [
        ("g1", g.get("g1"), "offblock(sigma1)"),
        ("g2", g.get("g2"), "offblock(sigma2)"),
        ("g3", g.get("g3"), "offblock(sigma3)"),
        ("g4", g.get("g4"), "g0 g1 g2 g3"),
        ("g5", g5, "g1 g3 C"),
        ("g6", g6, "i g1 g3 C"),
        ("g7", g7, "i g0"),
    ])


# ---------------------------------------------------------------------------
# rotation-generator families
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def so15_generators(gammas: "OrtSet | None" = None) -> Dict[Pair, GeneralOp]:
    """s^{mn} over indices 0..5: quarter-commutators of g0..g4, with the
    fifth index slot holding s^{m,5} = g_m / 2."""
    g = gammas if gammas is not None else pd_gammas()
    gs = [g.get(f"g{k}") for k in range(5)]
    table: Dict[Pair, GeneralOp] = {}
    for m in range(5):
        for n in range(m + 1, 5):
            table[(m, n)] = commutator(gs[m], gs[n]).scaled(QUARTER)
    for m in range(5):
        table[(m, 5)] = gs[m].scaled(HALF)
    return table


def pair_op(table: Dict[Pair, GeneralOp], a: int, b: int) -> GeneralOp:
    """Antisymmetric lookup: s^{ba} = -s^{ab}, s^{aa} = 0."""
    if a == b:
        return GeneralOp.zero()
    if (a, b) in table:
        return table[(a, b)]
    return -table[(b, a)]


@lru_cache(maxsize=None)
def cd16() -> OrtSet:
    """The 16 orts {I, alpha^{mn} = 2 s^{mn}} of the Dirac-matrix algebra."""
    table = so15_generators()
    items = [("I", GeneralOp.identity(), "identity")]
    for (m, n), s in sorted(table.items()):
        items.append((f"alpha_{m}{n}", s.scaled(2),
                      f"2*s_{m}{n}" if n < 5 else f"g{m}"))
    return _ortset("cd16", items)


@lru_cache(maxsize=None)
def ercd64() -> OrtSet:
    """All 64 orts: the 16-element basis times {1, i, C, iC} on the left."""
    base = cd16()
    i_op = GeneralOp.imaginary_unit()
    c_op = GeneralOp.conjugation()
    ic_op = i_op @ c_op
    items = []
    for prefix, factor in (("", None), ("i.", i_op), ("C.", c_op), ("iC.", ic_op)):
        for lbl, op in base:
            items.append((prefix + lbl,
                          op if factor is None else factor @ op,
                          (prefix + lbl).replace(".", " ")))
    return _ortset("ercd64", items)


@lru_cache(maxsize=None)
def so8_generators() -> Dict[Pair, GeneralOp]:
    """s^{AB} over 1..8 built from the seven extended generators;
    the eighth slot holds s^{A,8} = g_A / 2."""
    g = extended_gammas()
    gs = {k: g.get(f"g{k}") for k in range(1, 8)}
    table: Dict[Pair, GeneralOp] = {}
    for a in range(1, 8):
        for b in range(a + 1, 8):
            table[(a, b)] = commutator(gs[a], gs[b]).scaled(QUARTER)
    for a in range(1, 8):
        table[(a, 8)] = gs[a].scaled(HALF)
    return table


@lru_cache(maxsize=None)
def percd29() -> OrtSet:
    """The 29 orts {alpha^{AB} = 2 s^{AB}, I} of the proper subalgebra."""
    table = so8_generators()
    items = [("I", GeneralOp.identity(), "identity")]
    for (a, b), s in sorted(table.items()):
        items.append((f"alpha_{a}{b}", s.scaled(2),
                      f"2*s_{a}{b}" if b < 8 else f"g{a}"))
    return _ortset("percd29", items)


@lru_cache(maxsize=None)
def so6() -> OrtSet:
    """The 16 orts {I, alpha^{AB}} over indices 1..6: the pure matrix
    symmetries of the diagonalized (even-odd split) wave equation."""
    table = so8_generators()
    items = [("I", GeneralOp.identity(), "identity")]
    for a in range(1, 7):
        for b in range(a + 1, 7):
            items.append((f"alpha_{a}{b}", table[(a, b)].scaled(2), f"2*s_{a}{b}"))
    return _ortset("so6", items)


@lru_cache(maxsize=None)
def a32() -> OrtSet:
    """The 32-element maximal pure-matrix invariance set of the
    diagonalized equation: the 15 nontrivial so6 orts, their products
    with i g0, plus i g0 and I."""
    base = so6()
    ig0 = extended_gammas().get("g7")
    items = []
    for lbl, op in base:
        if lbl == "I":
            continue
        items.append((lbl, op, base.provenance_of(lbl)))
    for lbl, op in base:
        if lbl == "I":
            continue
        items.append((f"ig0.{lbl}", ig0 @ op, f"i g0 * {lbl}"))
    items.append(("ig0", ig0, "i g0"))
    items.append(("I", GeneralOp.identity(), "identity"))
    return _ortset("a32", items)


# ---------------------------------------------------------------------------
# the eight-element antilinear-extension set and its Lorentz sextet
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def pgi8() -> OrtSet:
    """{g2 C, i g2 C, g2 g4 C, i g2 g4 C, g4, i g4, i, I}: the classical
    pure-matrix invariance set of the massless equation."""
    g = pd_gammas()
    i_op = GeneralOp.imaginary_unit()
    c_op = GeneralOp.conjugation()
    g2c = g.get("g2") @ c_op
    g24c = compose(g.get("g2"), g.get("g4"), c_op)
    return _ortset("pgi8", [
        ("g2C", g2c, "g2 C"),
        ("ig2C", i_op @ g2c, "i g2 C"),
        ("g2g4C", g24c, "g2 g4 C"),
        ("ig2g4C", i_op @ g24c, "i g2 g4 C"),
        ("g4", g.get("g4"), "g4"),
        ("ig4", i_op @ g.get("g4"), "i g4"),
        ("i", i_op, "i"),
        ("I", GeneralOp.identity(), "identity"),
    ])


@lru_cache(maxsize=None)
def pgi_lorentz6() -> Dict[Pair, GeneralOp]:
    """The six-generator Lorentz realization living inside pgi8:
    s01 = (i/2) g2 C, s02 = -(1/2) g2 C, s03 = -(i/2) g4,
    s23 = (i/2) g2 g4 C, s31 = -(1/2) g2 g4 C, s12 = -(i/2)."""
    g = pd_gammas()
    i_op = GeneralOp.imaginary_unit()
    c_op = GeneralOp.conjugation()
    g2c = g.get("g2") @ c_op
    g24c = compose(g.get("g2"), g.get("g4"), c_op)
    return {
        (0, 1): (i_op @ g2c).scaled(HALF),
        (0, 2): g2c.scaled(MINUS_HALF),
        (0, 3): (i_op @ g.get("g4")).scaled(MINUS_HALF),
        (2, 3): (i_op @ g24c).scaled(HALF),
        (3, 1): g24c.scaled(MINUS_HALF),
        (1, 2): i_op.scaled(MINUS_HALF),
    }


def pgi_lorentz6_set() -> OrtSet:
    table = pgi_lorentz6()
    items = [(f"s{a}{b}", op, f"s_{a}{b}") for (a, b), op in sorted(table.items())]
    return _ortset("pgi_lorentz6", items)


# ---------------------------------------------------------------------------
# bosonic representation
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def bosonic_rep() -> Tuple[OrtSet, GeneralOp, GeneralOp]:
    """Explicit bosonic-form generators plus the basis change W, W^-1.

    Returns (ort set with bg1..bg7, bg0, bi, bC; W; W_inv). Construction
    fails loudly if any W-conjugation identity fails exactly.
    """
    r = INV_SQRT2  # 1/sqrt2
    i = I_UNIT
    one = ONE

    def sc(grid):
        return tuple(tuple(ExactScalar.coerce(x) if not isinstance(x, ExactScalar)
                           else x for x in row) for row in grid)

    def scaled(grid, s):
        return tuple(tuple(s * x for x in row) for row in sc(grid))

    z = ZERO
    bg1 = GeneralOp(scaled([[z, z, one, -one], [z, z, i, i],
                            [-one, i, z, z], [one, i, z, z]], r), None)
    bg2 = GeneralOp(scaled([[z, z, -i, i], [z, z, -one, -one],
                            [-i, one, z, z], [i, one, z, z]], r), None)
    bg3 = GeneralOp(None, sc([[z, i, z, z], [-i, z, z, z],
                              [z, z, z, -one], [z, z, one, z]]))
    bg4 = GeneralOp(None, sc([[z, one, z, z], [-one, z, z, z],
                              [z, z, z, i], [z, z, -i, z]]))
    bg5 = GeneralOp(scaled([[z, z, -one, -one], [z, z, i, -i],
                            [one, i, z, z], [one, -i, z, z]], r), None)
    bg6 = GeneralOp(scaled([[z, z, -i, -i], [z, z, one, -one],
                            [-i, -one, z, z], [-i, one, z, z]], r), None)
    bg7 = extended_gammas().get("g7")
    bg0 = GeneralOp(sc([[one, z, z, z], [z, -one, z, z],
                        [z, z, z, one], [z, z, one, z]]), None)
    bi = GeneralOp(sc([[i, z, z, z], [z, -i, z, z],
                       [z, z, z, -i], [z, z, -i, z]]), None)
    bC = GeneralOp(None, sc([[one, z, z, z], [z, -one, z, z],
                             [z, z, one, z], [z, z, z, one]]))

    sqrt2 = ExactScalar(0, 1)
    w = GeneralOp(scaled([[sqrt2, z, z, z], [z, z, z, z],
                          [z, z, z, one], [z, z, z, -one]], r),
                  scaled([[z, z, z, z], [z, z, i * sqrt2, z],
                          [z, -one, z, z], [z, -one, z, z]], r))
    w_inv = GeneralOp(scaled([[sqrt2, z, z, z], [z, z, z, z],
                              [z, z, z, z], [z, z, one, -one]], r),
                      scaled([[z, z, z, z], [z, z, -one, -one],
                              [z, i * sqrt2, z, z], [z, z, z, z]], r))

    ident = GeneralOp.identity()
    if not (w @ w_inv == ident and w_inv @ w == ident):
        raise AssertionError("basis-change operator is not invertible as printed")

    ext = extended_gammas()
    fundamental = {f"bg{k}": ext.get(f"g{k}") for k in range(1, 8)}
    fundamental["bg0"] = pd_gammas().get("g0")
    fundamental["bi"] = GeneralOp.imaginary_unit()
    fundamental["bC"] = GeneralOp.conjugation()
    explicit = {"bg1": bg1, "bg2": bg2, "bg3": bg3, "bg4": bg4, "bg5": bg5,
                "bg6": bg6, "bg7": bg7, "bg0": bg0, "bi": bi, "bC": bC}
    for lbl, x in fundamental.items():
        if compose(w, x, w_inv) != explicit[lbl]:
            raise AssertionError(f"W-conjugation identity failed for {lbl}")

    items = [(lbl, explicit[lbl], f"W {lbl[1:]} W^-1") for lbl in
             ("bg1", "bg2", "bg3", "bg4", "bg5", "bg6", "bg7", "bg0", "bi", "bC")]
    return _ortset("bosonic", items), w, w_inv


@lru_cache(maxsize=None)
def bosonic_so8_generators() -> Dict[Pair, GeneralOp]:
    """The rotation family rebuilt from the bosonic-form generators."""
    breve, _, _ = bosonic_rep()
    gs = {k: breve.get(f"bg{k}") for k in range(1, 8)}
    table: Dict[Pair, GeneralOp] = {}
    for a in range(1, 8):
        for b in range(a + 1, 8):
            table[(a, b)] = commutator(gs[a], gs[b]).scaled(QUARTER)
    for a in range(1, 8):
        table[(a, 8)] = gs[a].scaled(HALF)
    return table


@lru_cache(maxsize=None)
def breve_spin() -> OrtSet:
    """The bosonic spin triplet: two antilinear components and one linear,
    supported on the upper 3x3 block."""
    r = INV_SQRT2
    i = I_UNIT
    one = ONE
    z = ZERO

    def scaled(grid, s):
        return tuple(tuple(s * ExactScalar.coerce(x) if not isinstance(x, ExactScalar)
                           else s * x for x in row) for row in grid)

    s1 = GeneralOp(None, scaled([[z, z, i, z], [z, z, -one, z],
                                 [-i, one, z, z], [z, z, z, z]], r))
    s2 = GeneralOp(None, scaled([[z, z, one, z], [z, z, -i, z],
                                 [-one, i, z, z], [z, z, z, z]], r))
    s3 = GeneralOp((((-i), z, z, z), (z, i, z, z),
                    (z, z, z, z), (z, z, z, z)), None)
    return _ortset("breve_spin", [
        ("s1", s1, "antilinear, upper block"),
        ("s2", s2, "antilinear, upper block"),
        ("s3", s3, "diag(-i, i, 0, 0)"),
    ])


def breve_spin_from_compositions() -> List[GeneralOp]:
    """The same triplet assembled from bosonic-form generator products:
    (1/2)(bg2 bg3 - bg0 bg2 bC, bg3 bg1 + bi bg0 bg2 bC, bg1 bg2 - bi)."""
    breve, _, _ = bosonic_rep()
    bg = {k: breve.get(f"bg{k}") for k in (1, 2, 3)}
    bg0, bi, bC = breve.get("bg0"), breve.get("bi"), breve.get("bC")
    core = compose(bg0, bg[2], bC)
    s1 = (bg[2] @ bg[3] - core).scaled(HALF)
    s2 = (bg[3] @ bg[1] + bi @ core).scaled(HALF)
    s3 = (bg[1] @ bg[2] - bi).scaled(HALF)
    return [s1, s2, s3]
