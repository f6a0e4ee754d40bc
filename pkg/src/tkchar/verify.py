"""Monte Carlo oracle: sampling, classification and empirical structure.

Sampling is construction-then-conjugation: a component and an intrinsic
coordinate are drawn, the explicit representation is built, and both
matrices are conjugated by one Haar-uniform SU(2) element (normalized
4-dimensional Gaussian).  Rejection sampling against the relation is not
an option since the solution set has measure zero in SU(2) x SU(2).

Randomness is reproducible and order-independent: each sample index gets
its own generator seeded by the pair (seed, index), so the stream for a
given sample never depends on how many other samples were drawn, by whom,
or in which thread.

Classification inverts the construction from the matrices alone: the
commutator trace separates reducible from irreducible, traces pin the
eigenvalue exponents (k, kp), the eigenvector cross-ratio recovers t, and
for reducible pairs the eigenvalue pair is matched exactly-nearest against
the component labels xi^i and folded to canonical form.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .components import (
    ComponentId,
    GroupParams,
    Irr,
    Red,
    alpha_root,
    bezout_coprime,
    enumerate_irr,
    enumerate_red,
    fold_index,
    self_paired,
)
from .graph import build_graph, involution_twist
from .reps import (
    DEFAULT_WORDS,
    Word,
    build_irr,
    build_red_noncoprime,
    character,
    cross_ratio_of_pair,
    evaluate_word,
)
from .su2 import (
    DEFAULT_TOL,
    DegenerateError,
    UnitaryMatrix,
    conjugate_by,
    eigen_decompose,
    from_quaternion,
    is_reducible_pair,
    mat_pow,
    sup_diff,
    trace,
)

RELATION_TOL = 1e-6


class AmbiguousDecodeError(ValueError):
    """Raised when two admissible eigenvalue labels both fit a measured trace."""

    def __init__(self, message: str, candidates: tuple[int, ...]):
        super().__init__(message)
        self.candidates = candidates


@dataclass(frozen=True, slots=True)
class SampleConfig:
    params: GroupParams
    sample_count: int = 1000
    seed: int = 0
    reducible_fraction: float = 0.25
    word_list: tuple[Word, ...] = DEFAULT_WORDS
    tol: float = DEFAULT_TOL

    def __post_init__(self) -> None:
        if self.sample_count < 1:
            raise ValueError("sample_count must be at least 1")
        if not 0.0 <= self.reducible_fraction <= 1.0:
            raise ValueError("reducible_fraction must lie in [0, 1]")


@dataclass(frozen=True, slots=True)
class ClassifiedPoint:
    component: ComponentId
    coordinate: float
    relation_residual: float
    classification_residual: float


def sample_pair(cfg: SampleConfig, index: int) -> tuple[UnitaryMatrix, UnitaryMatrix]:
    """The index-th sample of the configured stream: a pair satisfying the relation."""
    p = cfg.params
    rng = np.random.default_rng((cfg.seed, index))
    if rng.random() < cfg.reducible_fraction:
        i = int(rng.integers(0, p.d // 2 + 1))
        theta = 2.0 * math.pi * rng.random()
        a, b = build_red_noncoprime(p, i, cmath.exp(1j * theta))
    else:
        comps = enumerate_irr(p)
        comp = comps[int(rng.integers(len(comps)))]
        t = min(max(rng.random(), 1e-12), 1.0 - 1e-12)
        a, b = build_irr(p, comp.k, comp.kp, t)
    g = rng.normal(size=4)
    conj = from_quaternion(complex(g[0], g[1]), complex(g[2], g[3]))
    return conjugate_by(a, conj), conjugate_by(b, conj)


def _trace_ladder(order: int) -> list[float]:
    return [2.0 * math.cos(math.pi * k / order) for k in range(1, order)]


def _ladder_tol(ladder: list[float]) -> float:
    if len(ladder) < 2:
        return 1.0
    return min(abs(u - v) for u, v in zip(ladder, ladder[1:])) / 2.0


def _nearest_label(tr: float, order: int) -> int:
    """Eigenvalue exponent whose ideal trace 2cos(pi*k/order) is nearest tr.

    Raises AmbiguousDecodeError when two labels fit within half the minimal
    ladder gap (cannot happen for clean inputs; guards corrupted data).
    """
    ladder = _trace_ladder(order)
    tol = _ladder_tol(ladder)
    hits = tuple(k + 1 for k, ideal in enumerate(ladder) if abs(tr - ideal) <= tol)
    if len(hits) > 1:
        raise AmbiguousDecodeError(f"trace {tr} fits labels {hits}", hits)
    return 1 + min(range(len(ladder)), key=lambda k: abs(tr - ladder[k]))


def _wrap(x: float) -> float:
    """Reduce an angle difference to (-pi, pi]."""
    return (x + math.pi) % (2.0 * math.pi) - math.pi


def _decode_red_eigenvalues(p: GroupParams, lam: complex, mu: complex) -> tuple[int, float, float]:
    """(canonical index, canonical angle, label residual) from an eigenvalue pair.

    The component index comes from matching lam^a * mu^-b against the exact
    labels xi^i; folding to i <= d/2 replaces (lam, mu) by the conjugate
    pair, and on self-paired components the involution picks the angle
    representative in [psi, psi + pi] around the twist half-angle psi.
    """
    zeta = lam ** p.a * mu ** -p.b
    i_raw = round(cmath.phase(zeta) * p.d / (2.0 * math.pi)) % p.d
    label_residual = abs(zeta - cmath.exp(2j * math.pi * i_raw / p.d))
    i_can = fold_index(i_raw, p.d)
    if i_can != i_raw:
        lam, mu = lam.conjugate(), mu.conjugate()
    u, v = bezout_coprime(p.a, p.b)
    t = (alpha_root(p, i_can).to_complex() * mu) ** u * lam ** v
    theta = cmath.phase(t) % (2.0 * math.pi)
    if self_paired(i_can, p.d):
        psi = involution_twist(p, i_can).angle / 2.0
        theta = (psi + abs(_wrap(theta - psi))) % (2.0 * math.pi)
    return i_can, theta, label_residual


def canonical_red_angle(p: GroupParams, i_raw: int, theta: float) -> tuple[int, float]:
    """Canonical (component, angle) of the raw circle point exp(i*theta) on
    raw component i_raw; the pure-angle counterpart of the matrix decoder."""
    if not 0 <= i_raw < p.d:
        raise ValueError(f"raw component index {i_raw} outside [0, {p.d})")
    t = cmath.exp(1j * theta)
    lam = t ** p.b
    mu = alpha_root(p, i_raw).conj().to_complex() * t ** p.a
    i_can, theta_can, _ = _decode_red_eigenvalues(p, lam, mu)
    return i_can, theta_can


def _near_central(x: UnitaryMatrix, tol: float) -> bool:
    return 2.0 - abs(2.0 * x.a.real) <= tol


def _rayleigh(m: UnitaryMatrix, e) -> complex:
    """Unit-normalized quadratic form <e, m e> of a unit projective point.

    On an invariant line this is the eigenvalue, and it stays accurate even
    when m is nearly central (where m's own eigenvectors are ill-conditioned
    but its eigenvalues are not)."""
    me = (m.a * e.x - m.b.conjugate() * e.y, m.b * e.x + m.a.conjugate() * e.y)
    val = e.x.conjugate() * me[0] + e.y.conjugate() * me[1]
    return val / abs(val)


def _common_eigenvalues(
    a: UnitaryMatrix, b: UnitaryMatrix, tol: float
) -> tuple[complex, complex]:
    """Eigenvalue pair of a reducible pair on one shared invariant line.

    The invariant line is read off whichever matrix is farther from central;
    the other eigenvalue comes from its Rayleigh quotient on that line."""
    if not _near_central(a, tol):
        lam, e1, _ = eigen_decompose(a, tol)
        return lam, _rayleigh(b, e1)
    if not _near_central(b, tol):
        mu, e1, _ = eigen_decompose(b, tol)
        return _rayleigh(a, e1), mu
    return (
        complex(1.0 if a.a.real > 0 else -1.0),
        complex(1.0 if b.a.real > 0 else -1.0),
    )


def classify(
    p: GroupParams, a: UnitaryMatrix, b: UnitaryMatrix, tol: float = DEFAULT_TOL
) -> ClassifiedPoint:
    """Recover the component and intrinsic coordinate of a relation-satisfying pair.

    coordinate is t in (0, 1) for irreducible points and the canonical
    circle angle for reducible ones.  The classification residual is the
    trace distance to the decoded component's ideal traces.
    """
    relation = sup_diff(mat_pow(a, p.m), mat_pow(b, p.n))
    if relation > RELATION_TOL:
        raise ValueError(f"pair violates the relation (residual {relation:.3g})")
    if is_reducible_pair(a, b, tol):
        lam, mu = _common_eigenvalues(a, b, tol)
        i_can, theta, _ = _decode_red_eigenvalues(p, lam, mu)
        lam_ideal = cmath.exp(1j * p.b * theta)
        mu_ideal = alpha_root(p, i_can).conj().to_complex() * cmath.exp(1j * p.a * theta)
        residual = abs(trace(a).real - 2.0 * lam_ideal.real) + abs(
            trace(b).real - 2.0 * mu_ideal.real
        )
        return ClassifiedPoint(Red(i_can), theta, relation, residual)
    tr_a, tr_b = trace(a).real, trace(b).real
    k = _nearest_label(tr_a, p.m)
    kp = _nearest_label(tr_b, p.n)
    if (k - kp) % 2 != 0:
        raise ValueError(f"decoded labels ({k}, {kp}) violate the parity condition")
    r = cross_ratio_of_pair(a, b, tol)
    t = r / (r - 1.0)
    residual = abs(tr_a - 2.0 * math.cos(math.pi * k / p.m)) + abs(
        tr_b - 2.0 * math.cos(math.pi * kp / p.n)
    )
    return ClassifiedPoint(Irr(k, kp), t, relation, residual)


def find_conjugator(
    a: UnitaryMatrix,
    b: UnitaryMatrix,
    a2: UnitaryMatrix,
    b2: UnitaryMatrix,
    char_tol: float = 1e-8,
    residual_tol: float = 1e-7,
) -> UnitaryMatrix | None:
    """A single SU(2) element conjugating (a, b) to (a2, b2), or None.

    Both pairs must be irreducible.  If the characters on the default word
    list disagree beyond char_tol no conjugator exists and None is returned;
    otherwise one is constructed by aligning the eigenbases of a and a2 and
    fixing the leftover diagonal phase from the second generator, and is
    returned only if it actually transports the pair within residual_tol.
    """
    if is_reducible_pair(a, b) or is_reducible_pair(a2, b2):
        raise ValueError("conjugator search requires irreducible pairs")
    chars = character(a, b)
    chars2 = character(a2, b2)
    if max(abs(u - v) for u, v in zip(chars, chars2)) > char_tol:
        return None
    _, e1, _ = eigen_decompose(a)
    _, f1, _ = eigen_decompose(a2)
    u1 = UnitaryMatrix(e1.x, e1.y)
    u2 = UnitaryMatrix(f1.x, f1.y)
    # In the aligned eigenbases both first generators are the same diagonal,
    # so the leftover freedom is diag(q, conj(q)) between the two b-frames;
    # its conjugation scales the off-diagonal entry by conj(q)^2.
    b_in_1 = conjugate_by(b, u1.inv())
    b_in_2 = conjugate_by(b2, u2.inv())
    if abs(b_in_1.b) < 1e-12 or abs(b_in_2.b) < 1e-12:
        return None
    phi = -cmath.phase(b_in_2.b / b_in_1.b) / 2.0
    conj = u2 @ UnitaryMatrix(cmath.exp(1j * phi), 0.0j) @ u1.inv()
    residual = sup_diff(conjugate_by(a, conj), a2) + sup_diff(conjugate_by(b, conj), b2)
    if residual > residual_tol:
        return None
    return conj


def component_key(comp: ComponentId) -> str:
    if isinstance(comp, Red):
        return f"red:{comp.i}"
    return f"irr:{comp.k},{comp.kp}"


def _reducible_char_grid(
    p: GroupParams, words: tuple[Word, ...], size: int = 1024
) -> tuple[np.ndarray, np.ndarray]:
    """Characters of diagonal representations on a dense grid of every raw
    circle; rows are (raw index * size + angle index), columns are words."""
    thetas = np.linspace(0.0, 2.0 * math.pi, size, endpoint=False)
    exps = [w.exponent_sums() for w in words]
    rows = np.empty((p.d * size, len(words)))
    for i in range(p.d):
        shift = alpha_root(p, i).angle
        lam_ang = p.b * thetas
        mu_ang = p.a * thetas - shift
        for col, (px, py) in enumerate(exps):
            rows[i * size : (i + 1) * size, col] = 2.0 * np.cos(px * lam_ang + py * mu_ang)
    return rows, thetas


def empirical_structure(cfg: SampleConfig) -> dict:
    """Sample, classify, and compare observed structure with the exact graph.

    Near-limit irreducible samples (t < 0.02 or t > 0.98) are matched to the
    nearest reducible character on a dense grid to reconstruct the arc
    endpoints empirically; agreement with build_graph is reported per arc.
    """
    p = cfg.params
    g = build_graph(p)
    expected = sorted(
        [component_key(info.id) for info in enumerate_red(p)]
        + [component_key(c) for c in enumerate_irr(p)]
    )
    grid, _ = _reducible_char_grid(p, cfg.word_list)
    grid_size = grid.shape[0] // p.d

    counts: Counter[str] = Counter()
    votes: dict[tuple[int, int], list[Counter]] = {
        (arc.component.k, arc.component.kp): [Counter(), Counter()] for arc in g.arcs
    }
    max_relation = 0.0
    max_classification = 0.0
    decode_errors = 0

    for index in range(cfg.sample_count):
        a, b = sample_pair(cfg, index)
        try:
            point = classify(p, a, b, cfg.tol)
        except (DegenerateError, AmbiguousDecodeError, ValueError):
            decode_errors += 1
            continue
        counts[component_key(point.component)] += 1
        max_relation = max(max_relation, point.relation_residual)
        max_classification = max(max_classification, point.classification_residual)
        comp = point.component
        if isinstance(comp, Irr) and not 0.02 <= point.coordinate <= 0.98:
            side = 0 if point.coordinate < 0.02 else 1
            vec = np.array([trace(evaluate_word(w, a, b)).real for w in cfg.word_list])
            nearest = int(np.argmin(((grid - vec) ** 2).sum(axis=1)))
            votes[(comp.k, comp.kp)][side][fold_index(nearest // grid_size, p.d)] += 1

    adjacency = []
    adjacency_ok = True
    for arc in g.arcs:
        key = (arc.component.k, arc.component.kp)
        expected_nodes = [arc.endpoints[0].node, arc.endpoints[1].node]
        arc_ok = True
        observed = []
        for side in (0, 1):
            tally = votes[key][side]
            observed.append({str(node): cnt for node, cnt in sorted(tally.items())})
            if tally and tally.most_common(1)[0][0] != expected_nodes[side]:
                arc_ok = False
        adjacency_ok = adjacency_ok and arc_ok
        adjacency.append(
            {
                "k": key[0],
                "kp": key[1],
                "expected": expected_nodes,
                "observed_t0": observed[0],
                "observed_t1": observed[1],
                "ok": arc_ok,
            }
        )

    flags = {
        "components": sorted(counts) == expected,
        "adjacency": adjacency_ok,
        "residuals": decode_errors == 0
        and max_relation <= 1e-9
        and max_classification <= 1e-6,
    }
    return {
        "schema": "tkchar-verify/1",
        "params": {"m": p.m, "n": p.n, "d": p.d},
        "seed": cfg.seed,
        "sample_count": cfg.sample_count,
        "reducible_fraction": cfg.reducible_fraction,
        "tolerance": cfg.tol,
        "counts": dict(sorted(counts.items())),
        "expected_components": expected,
        "max_relation_residual": max_relation,
        "max_classification_residual": max_classification,
        "decode_errors": decode_errors,
        "adjacency": adjacency,
        "flags": flags,
        "ok": all(flags.values()),
    }


def _round_floats(obj):
    if isinstance(obj, bool) or isinstance(obj, int) or isinstance(obj, str) or obj is None:
        return obj
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def summary_to_json(summary: dict) -> str:
    """Deterministic "tkchar-verify/1" serialization (sorted keys, 12
    significant digits on every float)."""
    import json

    return json.dumps(_round_floats(summary), indent=2, sort_keys=True)
