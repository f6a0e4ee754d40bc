"""Incidence graph: exact attachment points, folding, serialization."""

import json
import math

import pytest

from tkchar.components import (
    GroupParams,
    alpha_root,
    attachment,
    count_irr,
    enumerate_irr,
    enumerate_red,
    joining_component,
    self_paired,
)
from tkchar.graph import (
    IncidenceGraph,
    build_graph,
    involution_twist,
    is_connected,
    red_coordinate,
    shared_endpoints,
    to_dot,
    to_json,
    to_svg_schematic,
)
from tkchar.roots import ONE, crt_attachment, root


def brute_force_endpoint(k, m, k2, n):
    """Independent scan for the unique t = exp(i*pi*c/(m*n)) with t^n and
    t^m equal to the prescribed eigenvalues (coprime orders only)."""
    hits = [
        c
        for c in range(2 * m * n)
        if root(c, m * n) ** n == root(k, m) and root(c, m * n) ** m == root(k2, n)
    ]
    assert len(hits) == 1
    return root(hits[0], m * n)


class TestTrefoil:
    def test_structure(self):
        g = build_graph(GroupParams(3, 2))
        assert len(g.nodes) == 1 and g.nodes[0].su2_topology == "closed-interval"
        assert len(g.arcs) == 1
        ep0, ep1 = g.arcs[0].endpoints
        assert ep0.node == 0 and ep1.node == 0

    def test_exact_coordinates(self):
        g = build_graph(GroupParams(3, 2))
        ep0, ep1 = g.arcs[0].endpoints
        assert ep0.t_raw == root(1, 6)
        assert ep1.t_raw == root(7, 6)
        # the mirror involution t ~ t^-1 picks the smaller angle
        assert ep1.t_canonical == root(5, 6)

    def test_against_brute_force_oracle(self):
        g = build_graph(GroupParams(3, 2))
        ep0, ep1 = g.arcs[0].endpoints
        t0 = brute_force_endpoint(1, 3, 1, 2)
        t1 = brute_force_endpoint(1, 3, 3, 2)
        assert ep0.t_raw == t0
        assert ep1.t_raw == t1
        assert abs(ep0.s_real - 2 * math.cos(t0.angle)) < 1e-12
        # s is even in the angle, so the folded representative agrees
        assert abs(ep1.s_real - 2 * math.cos(t1.angle)) < 1e-12
        assert ep0.s_real == pytest.approx(math.sqrt(3), abs=1e-12)
        assert ep1.s_real == pytest.approx(-math.sqrt(3), abs=1e-12)


class TestExactness:
    def test_power_equations_on_raw_coordinates(self):
        for m in range(2, 13):
            for n in range(2, 13):
                p = GroupParams(m, n)
                for arc in build_graph(p).arcs:
                    k, kp = arc.component.k, arc.component.kp
                    lam = root(k, m)
                    for side, ep in enumerate(arc.endpoints):
                        mu = root(kp, n) if side == 0 else root(2 * n - kp, n)
                        assert ep.t_raw ** p.b == lam
                        assert ep.t_raw ** p.a == alpha_root(p, ep.raw_index) * mu

    def test_folded_endpoints_carry_mirrored_eigenvalues(self):
        seen = 0
        for m, n in [(6, 9), (8, 12), (10, 4), (9, 12)]:
            p = GroupParams(m, n)
            for arc in build_graph(p).arcs:
                k, kp = arc.component.k, arc.component.kp
                lam = root(k, m)
                for side, ep in enumerate(arc.endpoints):
                    if not ep.folded:
                        continue
                    seen += 1
                    assert not self_paired(ep.node, p.d)
                    mu = root(kp, n) if side == 0 else root(2 * n - kp, n)
                    assert ep.t_canonical ** p.b == lam ** -1
                    assert ep.t_canonical ** p.a == alpha_root(p, ep.node) * mu ** -1
        assert seen > 0

    def test_self_paired_canonical_choice(self):
        for m, n in [(3, 2), (4, 6), (8, 12), (5, 10)]:
            p = GroupParams(m, n)
            for arc in build_graph(p).arcs:
                for ep in arc.endpoints:
                    if not self_paired(ep.node, p.d):
                        continue
                    twist = involution_twist(p, ep.node)
                    alt = twist * ep.t_canonical**-1
                    assert ep.t_canonical.angle <= alt.angle + 1e-15
                    assert ep.t_canonical in (ep.t_raw, twist * ep.t_raw**-1)
                    s = 2 * math.cos(ep.t_canonical.angle - twist.angle / 2)
                    assert ep.s_real == pytest.approx(s, abs=1e-14)

    def test_coprime_general_path_agrees_with_crt(self):
        for m, n in [(3, 2), (5, 3), (7, 4), (8, 3), (9, 2)]:
            p = GroupParams(m, n)
            for comp in enumerate_irr(p):
                lam, mu = root(comp.k, m), root(comp.kp, n)
                assert red_coordinate(p, 0, lam, mu) == crt_attachment(comp.k, m, comp.kp, n)

    def test_red_coordinate_membership_validated(self):
        p = GroupParams(6, 9)
        with pytest.raises(ValueError):
            red_coordinate(p, 0, root(1, 6), root(3, 9))  # lies on component 1

    def test_involution_twist_guard(self):
        p = GroupParams(6, 9)  # d = 3: only component 0 is self-paired
        assert involution_twist(p, 0) == ONE
        with pytest.raises(ValueError):
            involution_twist(p, 1)


class TestStructure:
    def test_counts(self):
        for m, n in [(3, 2), (4, 6), (6, 9), (8, 12)]:
            p = GroupParams(m, n)
            g = build_graph(p)
            assert len(g.nodes) == p.d // 2 + 1
            assert len(g.arcs) == count_irr(p)

    def test_two_by_two(self):
        g = build_graph(GroupParams(2, 2))
        assert len(g.nodes) == 2 and len(g.arcs) == 1
        ep0, ep1 = g.arcs[0].endpoints
        assert {ep0.node, ep1.node} == {0, 1}
        assert ep0.t_canonical == root(1, 2) and ep1.t_canonical == root(1, 2)
        assert abs(ep0.s_real) < 1e-12 and abs(ep1.s_real) < 1e-12

    def test_connected_through_ten(self):
        for m in range(2, 11):
            for n in range(2, 11):
                assert is_connected(build_graph(GroupParams(m, n))), (m, n)

    def test_disconnected_without_arcs(self):
        p = GroupParams(4, 6)
        bare = IncidenceGraph(p, tuple(enumerate_red(p)), ())
        assert not is_connected(bare)

    def test_single_node_trivially_connected(self):
        p = GroupParams(3, 2)
        bare = IncidenceGraph(p, tuple(enumerate_red(p)), ())
        assert is_connected(bare)

    def test_every_node_pair_joined_by_formula_arc(self):
        for m, n in [(8, 12), (6, 9), (12, 18), (10, 10)]:
            p = GroupParams(m, n)
            g = build_graph(p)
            by_label = {(a.component.k, a.component.kp): a for a in g.arcs}
            for i1 in range(1, p.d // 2 + 1):
                for i0 in range(i1):
                    k, kp = joining_component(p, i0, i1)
                    arc = by_label[(k, kp)]
                    nodes = {arc.endpoints[0].node, arc.endpoints[1].node}
                    assert nodes == {i0, i1}

    def test_coprime_endpoints_pairwise_distinct(self):
        for m, n in [(3, 2), (5, 3), (5, 4), (7, 3), (8, 3), (7, 2), (9, 4)]:
            assert math.gcd(m, n) == 1
            assert shared_endpoints(build_graph(GroupParams(m, n))) == []

    def test_attachment_nodes_match_component_combinatorics(self):
        for m, n in [(4, 6), (6, 9), (8, 12), (9, 3)]:
            p = GroupParams(m, n)
            for arc in build_graph(p).arcs:
                _, _, c0, c1 = attachment(p, arc.component.k, arc.component.kp)
                assert (arc.endpoints[0].node, arc.endpoints[1].node) == (c0, c1)


class TestSerialization:
    def test_json_schema_fields(self):
        doc = json.loads(to_json(build_graph(GroupParams(4, 6))))
        assert set(doc) == {"params", "nodes", "arcs"}
        assert doc["params"] == {"m": 4, "n": 6, "d": 2}
        assert {tuple(sorted(node)) for node in doc["nodes"]} == {("id", "topology")}
        for arc in doc["arcs"]:
            assert set(arc) == {"k", "kp", "endpoints"}
            for ep in arc["endpoints"]:
                assert set(ep) == {"node", "t_num", "t_den", "s_real"}

    def test_json_values(self):
        doc = json.loads(to_json(build_graph(GroupParams(6, 9))))
        assert [n["topology"] for n in doc["nodes"]] == ["closed-interval", "circle"]
        assert len(doc["arcs"]) == 20

    def test_json_deterministic(self):
        a = to_json(build_graph(GroupParams(8, 12)))
        b = to_json(build_graph(GroupParams(8, 12)))
        assert a == b

    def test_dot_shape(self):
        dot = to_dot(build_graph(GroupParams(4, 6)))
        lines = dot.strip().splitlines()
        assert lines[0] == "graph components {"
        assert lines[-1] == "}"
        node_lines = [l for l in lines if "[shape=" in l]
        edge_lines = [l for l in lines if " -- " in l]
        assert len(node_lines) == 2 and len(edge_lines) == 8
        assert all("shape=box" in l for l in node_lines)  # d = 2: both intervals
        dot2 = to_dot(build_graph(GroupParams(6, 9)))
        assert "shape=ellipse" in dot2  # circle node

    def test_dot_deterministic(self):
        g1, g2 = build_graph(GroupParams(6, 9)), build_graph(GroupParams(6, 9))
        assert to_dot(g1) == to_dot(g2)

    def test_svg_element_counts(self):
        p = GroupParams(6, 9)
        svg = to_svg_schematic(build_graph(p))
        assert svg.count('class="node"') == 2
        assert svg.count("<line") == 1 and svg.count("<circle") >= 1
        assert svg.count('class="arc"') == 20
        assert svg.count('class="dot"') == 40
        assert svg.startswith("<svg ") and svg.rstrip().endswith("</svg>")

    def test_svg_deterministic(self):
        a = to_svg_schematic(build_graph(GroupParams(4, 6)))
        b = to_svg_schematic(build_graph(GroupParams(4, 6)))
        assert a == b
