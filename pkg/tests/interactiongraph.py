# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import itertools
import json
import unittest

import numpy as np

from boolgraph.function import BooleanFunction
from boolgraph.interactiongraph import (
    NEGATIVE,
    POSITIVE,
    Arc,
    SignedDigraph,
    build_graph,
    format_matrix,
    matrices,
    to_dot,
    to_json,
)
from boolgraph.network import BooleanNetwork, format_network, parse_network

EXAMPLE_ARCS = [
    Arc(1, 1, "+"),
    Arc(1, 2, "+"),
    Arc(2, 1, "+"),
    Arc(2, 2, "+"),
    Arc(2, 3, "-"),
    Arc(3, 1, "+"),
    Arc(3, 2, "+"),
    Arc(3, 3, "-"),
]


class TestBuildGraph(unittest.TestCase):
    def test_example_network(self):
        graph = build_graph(BooleanNetwork.from_decimals([168, 128, 17]))
        self.assertEqual(graph.arcs, EXAMPLE_ARCS)
        self.assertEqual(graph.count_arcs(POSITIVE), 6)
        self.assertEqual(graph.count_arcs(NEGATIVE), 2)

    def test_input_forms_agree(self):
        from_decimals = build_graph(BooleanNetwork.from_decimals([168, 128, 17]))
        from_literals = build_graph(BooleanNetwork.from_literals(["e:3:x3 & (x1 | x2)", "b:10000000", "e:!x2&!x3"]))
        self.assertEqual(from_literals, from_decimals)

    def test_matrices(self):
        pair = matrices(build_graph(BooleanNetwork.from_decimals([168, 128, 17])))
        np.testing.assert_array_equal(pair.positive, [[1, 1, 0], [1, 1, 0], [1, 1, 0]])
        np.testing.assert_array_equal(pair.negative, [[0, 0, 0], [0, 0, -1], [0, 0, -1]])

    def test_constant_network(self):
        graph = build_graph(BooleanNetwork.from_decimals([0, 255, 0]))
        self.assertEqual(graph.arcs, [])
        pair = matrices(graph)
        self.assertEqual(format_matrix(pair.positive), "0 0 0\n0 0 0\n0 0 0")
        self.assertFalse(graph.has_only_sign(POSITIVE))

    def test_identity_network(self):
        network = BooleanNetwork.of(BooleanFunction.variable(3, j) for j in range(1, 4))
        graph = build_graph(network)
        self.assertEqual(graph.arcs, [Arc(1, 1, "+"), Arc(2, 2, "+"), Arc(3, 3, "+")])
        np.testing.assert_array_equal(matrices(graph).positive, np.eye(3, dtype=np.int64))

    def test_dual_influence_gives_both_arcs(self):
        graph = build_graph(BooleanNetwork.from_decimals([6, 6]))
        self.assertEqual(graph.signs_between(1, 2), ("+", "-"))
        self.assertEqual(graph.count_arcs(), 8)

    def test_unate_rules_single_arc_per_pair(self):
        for rules in itertools.product([8, 14, 1, 7, 10, 3], repeat=2):
            graph = build_graph(BooleanNetwork.from_decimals(rules))
            for i in (1, 2):
                for j in (1, 2):
                    self.assertLessEqual(len(graph.signs_between(i, j)), 1)

    def test_complement_duality(self):
        for rules in itertools.product(range(16), repeat=2):
            graph = build_graph(BooleanNetwork.from_decimals(rules))
            dual = build_graph(BooleanNetwork.of(BooleanFunction.from_decimal(2, r).complement() for r in rules))
            flipped = sorted(Arc(a.source, a.target, NEGATIVE if a.sign == POSITIVE else POSITIVE) for a in graph.arcs)
            self.assertEqual(dual.arcs, flipped)

    def test_sign_classes_of_networks(self):
        only_positive = [(128, 168, 192), (128, 168, 200)]
        only_negative = [(23, 51, 3), (55, 21, 7)]
        for rules in only_positive:
            self.assertTrue(build_graph(BooleanNetwork.from_decimals(rules)).has_only_sign(POSITIVE), msg=rules)
        for rules in only_negative:
            self.assertTrue(build_graph(BooleanNetwork.from_decimals(rules)).has_only_sign(NEGATIVE), msg=rules)
        self.assertTrue(build_graph(BooleanNetwork.from_decimals([128, 168, 200])).is_complete())
        self.assertTrue(build_graph(BooleanNetwork.from_decimals([55, 21, 7])).is_complete())
        self.assertFalse(build_graph(BooleanNetwork.from_decimals([128, 168, 192])).is_complete())

    def test_nested_canalizing_network(self):
        graph = build_graph(BooleanNetwork.from_decimals([1, 8, 47]))
        self.assertEqual(graph.count_arcs(POSITIVE), 3)
        self.assertEqual(graph.count_arcs(NEGATIVE), 6)
        self.assertTrue(graph.is_complete())


class TestSignedDigraph(unittest.TestCase):
    def test_from_matrices(self):
        graph = build_graph(BooleanNetwork.from_decimals([168, 128, 17]))
        self.assertEqual(SignedDigraph.from_matrices(matrices(graph)), graph)

    def test_invalid_arcs(self):
        graph = SignedDigraph(2)
        with self.assertRaises(ValueError):
            graph.add_arc(1, 3, POSITIVE)
        with self.assertRaises(ValueError):
            graph.add_arc(1, 2, "*")

    def test_acyclic(self):
        self.assertTrue(SignedDigraph(3, [(1, 2, "+"), (2, 3, "-")]).is_acyclic())
        self.assertFalse(SignedDigraph(1, [(1, 1, "-")]).is_acyclic())

    def test_without_sign(self):
        graph = build_graph(BooleanNetwork.from_decimals([168, 128, 17]))
        self.assertEqual(graph.without_sign(NEGATIVE).count_arcs(), 6)


class TestRendering(unittest.TestCase):
    def test_dot_single_vertex(self):
        self.assertEqual(to_dot(SignedDigraph(1)), 'digraph interaction_graph {\n  1 [label="1"];\n}\n')

    def test_dot_negative_self_loop(self):
        dot = to_dot(SignedDigraph(1, [(1, 1, "-")]))
        self.assertIn('  1 -> 1 [label="-", style=dashed];', dot.splitlines())

    def test_dot_example(self):
        dot = to_dot(build_graph(BooleanNetwork.from_decimals([168, 128, 17])))
        edges = [line for line in dot.splitlines() if "->" in line]
        self.assertEqual(len(edges), 8)
        self.assertIn('  2 -> 3 [label="-", style=dashed];', edges)
        self.assertIn('  3 -> 1 [label="+", style=solid];', edges)

    def test_json(self):
        data = json.loads(to_json(build_graph(BooleanNetwork.from_decimals([168, 128, 17]))))
        self.assertEqual(data["n"], 3)
        self.assertEqual(len(data["arcs"]), 8)
        self.assertIn({"from": 3, "to": 3, "sign": "-"}, data["arcs"])


class TestNetworkFormat(unittest.TestCase):
    def test_parse_network(self):
        network = parse_network("# comment\nn=3\n\nd:168@3\nd:128\nb:00010001  # nor\n")
        self.assertEqual([rule.decimal for rule in network.rules], [168, 128, 17])

    def test_format_network_reads_back(self):
        network = BooleanNetwork.from_decimals([168, 128, 17])
        text = format_network(network)
        self.assertEqual(text, "n=3\nb:10101000\nb:10000000\nb:00010001\n")
        self.assertEqual(parse_network(text), network)

    def test_malformed_network(self):
        for text in ["", "3\nd:1@1", "n=2\nd:8@2", "n=1\nd:8@2"]:
            with self.assertRaises(ValueError, msg=text):
                parse_network(text)


if __name__ == "__main__":
    unittest.main()
