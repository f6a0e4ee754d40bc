"""Incidence structure of the SU(2) character variety: which irreducible
intervals attach to which reducible components, with exact coordinates.

Nodes are the reducible components Red(0) .. Red(floor(d/2)); each
irreducible component (k, kp) contributes one arc whose closure meets the
reducible locus at the two eigenvalue pairs (lam, mu) and (lam, mu^-1),
lam = exp(i*pi*k/m), mu = exp(i*pi*kp/n).  Every coordinate here is a
RootOfUnity, so endpoint equality and the defining power equations are
checked exactly.

Canonicalization: an endpoint is first computed on its raw circle i (the
unique t with t^b = lam, t^a = alpha_i * mu_eff); if i exceeds d/2 the
mirrored coordinate on component d - i is used instead, and on self-paired
components (i == -i mod d) the representative of the involution
t ~ alpha_i^(2u) * t^-1 with the smaller angle is chosen.  The involution
invariant 2*cos(angle(t) - angle(twist)/2) is the interval coordinate
s_real; for circle nodes s_real is 2*cos(angle(t)) and is informational
only (the angle itself is the coordinate).

Serialization targets the "tkchar-graph/1" layout: a JSON object with
exactly the fields params / nodes / arcs, plus DOT and schematic SVG
renderings of the same structure.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .components import (
    ComponentInfo,
    GroupParams,
    Irr,
    alpha_root,
    attachment,
    bezout_coprime,
    enumerate_irr,
    enumerate_red,
    fold_index,
    self_paired,
    xi_root,
)
from .roots import RootOfUnity, crt_attachment, root


@dataclass(frozen=True, slots=True)
class AttachmentPoint:
    """Where an arc endpoint meets a reducible component.

    node is the canonical component index, raw_index the circle on which
    t_raw solves the power equations, t_canonical the folded representative
    on the canonical component and s_real its interval coordinate (or
    positional cosine on circle nodes).
    """

    node: int
    raw_index: int
    t_raw: RootOfUnity
    t_canonical: RootOfUnity
    s_real: float
    folded: bool


@dataclass(frozen=True, slots=True)
class Arc:
    component: Irr
    endpoints: tuple[AttachmentPoint, AttachmentPoint]


@dataclass(frozen=True, slots=True)
class IncidenceGraph:
    params: GroupParams
    nodes: tuple[ComponentInfo, ...]
    arcs: tuple[Arc, ...]


def red_coordinate(p: GroupParams, i: int, lam: RootOfUnity, mu: RootOfUnity) -> RootOfUnity:
    """Exact circle coordinate of the reducible character (lam, mu) on raw component i.

    The unique t with t^b == lam and t^a == alpha_i * mu, computed as
    (alpha_i * mu)^u * lam^v for u*a + v*b == 1.  Existence requires
    lam^a * mu^-b == xi^i, which is validated.
    """
    if (lam ** p.a) * (mu ** -p.b) != xi_root(p) ** i:
        raise ValueError(f"({lam}, {mu}) does not lie on reducible component {i}")
    u, v = bezout_coprime(p.a, p.b)
    return (alpha_root(p, i) * mu) ** u * lam ** v


def involution_twist(p: GroupParams, i: int) -> RootOfUnity:
    """Constant c of the involution t ~ c * t^-1 on self-paired component i."""
    if not self_paired(i, p.d):
        raise ValueError(f"component {i} is not self-paired for d={p.d}")
    u, _ = bezout_coprime(p.a, p.b)
    return alpha_root(p, i) ** (2 * u)


def _attachment_from_raw(p: GroupParams, i_raw: int, t_raw: RootOfUnity) -> AttachmentPoint:
    """Fold a raw (circle index, coordinate) pair to its canonical representative."""
    i_can = fold_index(i_raw, p.d)
    if i_can == i_raw:
        t_on = t_raw
    else:
        # mirrored character (lam^-1, mu^-1), reconstructed from t_raw alone
        lam_inv = t_raw ** -p.b
        mu_inv = alpha_root(p, i_raw) * t_raw ** -p.a
        t_on = red_coordinate(p, i_can, lam_inv, mu_inv)
    if self_paired(i_can, p.d):
        twist = involution_twist(p, i_can)
        alt = twist * (t_on ** -1)
        # deterministic representative: the smaller angle as an exact fraction
        t_can = t_on if t_on.num * alt.den <= alt.num * t_on.den else alt
        s = 2.0 * math.cos(t_can.angle - twist.angle / 2.0)
    else:
        t_can = t_on
        s = 2.0 * math.cos(t_can.angle)
    return AttachmentPoint(
        node=i_can,
        raw_index=i_raw,
        t_raw=t_raw,
        t_canonical=t_can,
        s_real=s,
        folded=i_can != i_raw,
    )


def build_graph(p: GroupParams) -> IncidenceGraph:
    """The full incidence graph with exact attachment coordinates."""
    arcs = []
    for comp in enumerate_irr(p):
        lam = root(comp.k, p.m)
        mu = root(comp.kp, p.n)
        i0_raw, i1_raw, _, _ = attachment(p, comp.k, comp.kp)
        if p.d == 1:
            t0 = crt_attachment(comp.k, p.m, comp.kp, p.n)
            t1 = crt_attachment(comp.k, p.m, 2 * p.n - comp.kp, p.n)
        else:
            t0 = red_coordinate(p, i0_raw, lam, mu)
            t1 = red_coordinate(p, i1_raw, lam, mu.conj())
        ep0 = _attachment_from_raw(p, i0_raw, t0)
        ep1 = _attachment_from_raw(p, i1_raw, t1)
        if ep0.node == ep1.node and ep0.t_canonical == ep1.t_canonical:
            raise RuntimeError(f"arc {comp} has coincident endpoints; invariant violated")
        arcs.append(Arc(comp, (ep0, ep1)))
    return IncidenceGraph(p, tuple(enumerate_red(p)), tuple(arcs))


def is_connected(g: IncidenceGraph) -> bool:
    """Whether every node is reachable from Red(0) through arcs."""
    if not g.nodes:
        return True
    adjacency: dict[int, set[int]] = {info.id.i: set() for info in g.nodes}
    for arc in g.arcs:
        n0, n1 = arc.endpoints[0].node, arc.endpoints[1].node
        adjacency[n0].add(n1)
        adjacency[n1].add(n0)
    seen = {g.nodes[0].id.i}
    frontier = [g.nodes[0].id.i]
    while frontier:
        nxt = frontier.pop()
        for other in adjacency[nxt]:
            if other not in seen:
                seen.add(other)
                frontier.append(other)
    return len(seen) == len(g.nodes)


def shared_endpoints(g: IncidenceGraph) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Pairs of distinct (arc index, side) whose attachment points coincide.

    Whether different arcs may share an endpoint is reported, not asserted;
    coprime orders provably never produce coincidences (tested), the general
    case is left to the data.
    """
    seen: dict[tuple[int, RootOfUnity], tuple[int, int]] = {}
    collisions = []
    for ai, arc in enumerate(g.arcs):
        for side, ep in enumerate(arc.endpoints):
            key = (ep.node, ep.t_canonical)
            if key in seen:
                collisions.append((seen[key], (ai, side)))
            else:
                seen[key] = (ai, side)
    return collisions


def _sig12(x: float) -> float:
    """Round to 12 significant digits for stable serialization."""
    return float(f"{x:.12g}")


def to_json(g: IncidenceGraph) -> str:
    """"tkchar-graph/1" document: exactly the fields params, nodes, arcs."""
    doc = {
        "params": {"m": g.params.m, "n": g.params.n, "d": g.params.d},
        "nodes": [
            {"id": info.id.i, "topology": info.su2_topology} for info in g.nodes
        ],
        "arcs": [
            {
                "k": arc.component.k,
                "kp": arc.component.kp,
                "endpoints": [
                    {
                        "node": ep.node,
                        "t_num": ep.t_canonical.num,
                        "t_den": ep.t_canonical.den,
                        "s_real": _sig12(ep.s_real),
                    }
                    for ep in arc.endpoints
                ],
            }
            for arc in g.arcs
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def to_dot(g: IncidenceGraph) -> str:
    """Undirected DOT multigraph, nodes red<i>, one edge per arc."""
    lines = [
        "graph components {",
        f'  label="<x,y | x^{g.params.m} = y^{g.params.n}>  d={g.params.d}";',
    ]
    for info in g.nodes:
        shape = "box" if info.su2_topology == "closed-interval" else "ellipse"
        lines.append(
            f'  red{info.id.i} [shape={shape}, label="Red({info.id.i}) {info.su2_topology}"];'
        )
    for arc in g.arcs:
        ep0, ep1 = arc.endpoints
        lines.append(
            f"  red{ep0.node} -- red{ep1.node} "
            f'[label="({arc.component.k},{arc.component.kp}) '
            f's0={_sig12(ep0.s_real):.6g} s1={_sig12(ep1.s_real):.6g}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _anchor(info: ComponentInfo, ep: AttachmentPoint, y: float) -> tuple[float, float]:
    if info.su2_topology == "closed-interval":
        return 80.0 + 520.0 * (ep.s_real + 2.0) / 4.0, y
    ang = ep.t_canonical.angle
    return 340.0 + 48.0 * math.cos(ang), y - 48.0 * math.sin(ang)


def to_svg_schematic(g: IncidenceGraph) -> str:
    """Qualitative picture: interval nodes as segments, circle nodes as
    circles, arcs as cubic curves anchored at their attachment points."""
    node_y = {info.id.i: 110.0 + 150.0 * idx for idx, info in enumerate(g.nodes)}
    height = int(150 * len(g.nodes) + 80)
    info_by_id = {info.id.i: info for info in g.nodes}
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="680" height="{height}" '
        f'viewBox="0 0 680 {height}" font-family="sans-serif">',
        f"  <title>character components of &lt;x,y | x^{g.params.m} = y^{g.params.n}&gt;</title>",
    ]
    for info in g.nodes:
        y = node_y[info.id.i]
        label = f"Red({info.id.i}) {info.su2_topology}"
        if info.su2_topology == "closed-interval":
            parts.append(
                f'  <line class="node" x1="80.00" y1="{y:.2f}" x2="600.00" y2="{y:.2f}" '
                'stroke="black" stroke-width="2"/>'
            )
        else:
            parts.append(
                f'  <circle class="node" cx="340.00" cy="{y:.2f}" r="48.00" '
                'fill="none" stroke="black" stroke-width="2"/>'
            )
        parts.append(f'  <text x="20.00" y="{y - 58:.2f}" font-size="12">{label}</text>')
    for idx, arc in enumerate(g.arcs):
        ep0, ep1 = arc.endpoints
        x0, y0 = _anchor(info_by_id[ep0.node], ep0, node_y[ep0.node])
        x1, y1 = _anchor(info_by_id[ep1.node], ep1, node_y[ep1.node])
        lift = 34.0 + 16.0 * idx
        c0y, c1y = y0 - lift, y1 - lift
        parts.append(
            f'  <path class="arc" d="M {x0:.2f} {y0:.2f} C {x0:.2f} {c0y:.2f}, '
            f'{x1:.2f} {c1y:.2f}, {x1:.2f} {y1:.2f}" fill="none" stroke="#3465a4"/>'
        )
        parts.append(f'  <circle class="dot" cx="{x0:.2f}" cy="{y0:.2f}" r="2.50"/>')
        parts.append(f'  <circle class="dot" cx="{x1:.2f}" cy="{y1:.2f}" r="2.50"/>')
        lx, ly = (x0 + x1) / 2.0, min(c0y, c1y) - 3.0
        parts.append(
            f'  <text x="{lx:.2f}" y="{ly:.2f}" font-size="10" fill="#3465a4">'
            f"({arc.component.k},{arc.component.kp})</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
