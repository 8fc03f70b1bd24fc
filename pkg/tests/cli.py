# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import io
import json
import os
import tempfile
import unittest

from boolgraph.cli import EXIT_OK, EXIT_RESOURCE_LIMIT, EXIT_USAGE, run

EXAMPLE_NETWORK = os.path.join(os.path.dirname(__file__), "data", "example.net")


def invoke(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


class TestCli(unittest.TestCase):
    def test_decompose(self):
        code, out, _ = invoke("decompose", "d:21@3", "--fix", "2,3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "00 11\n01 00\n10 10\n11 00\n")

    def test_decompose_json(self):
        code, out, _ = invoke("decompose", "b:00010101", "--fix", "1", "--format", "json")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["fragments"], {"0": "0101", "1": "0001"})

    def test_influence(self):
        code, out, _ = invoke("influence", "e:3:!x2 & !x3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "x1 none\nx2 negative\nx3 negative\n")

    def test_graph_matrix(self):
        code, out, _ = invoke("graph", "--network", EXAMPLE_NETWORK)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "1 1 0\n1 1 0\n1 1 0\n\n0 0 0\n0 0 -1\n0 0 -1\n")

    def test_graph_rules_and_dot(self):
        code, out, _ = invoke("graph", "--rules", "d:0@2", "d:0@2", "--format", "dot")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, 'digraph interaction_graph {\n  1 [label="1"];\n  2 [label="2"];\n}\n')

    def test_graph_json(self):
        code, out, _ = invoke("graph", "--network", EXAMPLE_NETWORK, "--format", "json")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(json.loads(out)["arcs"]), 8)

    def test_classify_json(self):
        code, out, _ = invoke("classify", "d:232@3", "--format", "json")
        self.assertEqual(code, EXIT_OK)
        classes = json.loads(out)["classes"]
        self.assertTrue(classes["complete_positive"])
        self.assertFalse(classes["nested_canalizing"])

    def test_classify_text(self):
        code, out, _ = invoke("classify", "d:8@2")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("nested_canalizing: true", out.splitlines())
        self.assertIn("ncf witness: order=x1,x2 inputs=00 outputs=00", out.splitlines())

    def test_census(self):
        code, out, _ = invoke("census", "--arity", "3", "--class", "ncf", "--format", "count")
        self.assertEqual((code, out), (EXIT_OK, "64\n"))
        code, out, _ = invoke("census", "--arity", "2", "--class", "pbf")
        self.assertEqual((code, out), (EXIT_OK, "8\n10\n12\n14\n"))

    def test_census_csv(self):
        code, out, _ = invoke("census", "--arity", "2", "--class", "complete_pbf", "--format", "csv")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "decimal,bitstring\n8,1000\n14,1110\n")

    def test_census_paired(self):
        code, out, _ = invoke("census", "--arity", "2", "--class", "complete_pbf", "--format", "csv", "--paired")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "pbf,pbf_decimal,nbf,nbf_decimal\n1000,8,0111,7\n1110,14,0001,1\n")

    def test_dynamics(self):
        code, out, _ = invoke("dynamics", "--network", EXAMPLE_NETWORK, "--report", "fixed-points")
        self.assertEqual((code, out), (EXIT_OK, ""))
        code, out, _ = invoke("dynamics", "--network", EXAMPLE_NETWORK, "--report", "attractors")
        self.assertEqual((code, out), (EXIT_OK, "0 000 001\n"))
        code, out, _ = invoke("dynamics", "--network", EXAMPLE_NETWORK, "--report", "summary")
        self.assertEqual(json.loads(out)["basin_sizes"], [8])

    def test_cycles(self):
        code, out, _ = invoke("cycles", "--network", EXAMPLE_NETWORK, "--format", "count")
        self.assertEqual((code, out), (EXIT_OK, "6\n"))
        code, out, _ = invoke("cycles", "--network", EXAMPLE_NETWORK)
        self.assertEqual(out.splitlines()[0], "+ 1 -[+]-> 1")
        self.assertEqual(out.splitlines()[-1], "- 1 -[+]-> 2 -[-]-> 3 -[+]-> 1")

    def test_path(self):
        code, out, _ = invoke("path", "--network", EXAMPLE_NETWORK, "--from", "1", "--to", "3", "--sign", "neg")
        self.assertEqual((code, out), (EXIT_OK, "2 1 -[+]-> 2 -[-]-> 3\n"))
        code, out, _ = invoke("path", "--rules", "d:0@2", "d:8@2", "--from", "2", "--to", "1", "--sign", "pos")
        self.assertEqual((code, out), (EXIT_OK, "absent\n"))
        code, out, _ = invoke("path", "--rules", "d:0@2", "d:0@2", "--from", "1", "--to", "2", "--sign", "pos")
        self.assertEqual((code, out), (EXIT_OK, "absent\n"))

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as directory:
            target = os.path.join(directory, "graph.dot")
            code, out, _ = invoke("graph", "--network", EXAMPLE_NETWORK, "--format", "dot", "--output", target)
            self.assertEqual((code, out), (EXIT_OK, ""))
            with open(target) as f:
                self.assertTrue(f.read().startswith("digraph interaction_graph {"))

    def test_help_goes_to_stdout(self):
        code, out, err = invoke("census", "--help")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("--arity", out)
        self.assertEqual(err, "")

    def test_quiet(self):
        _, _, err = invoke("census", "--arity", "2", "--class", "ncf", "--quiet")
        self.assertEqual(err, "")
        _, _, err = invoke("census", "--arity", "2", "--class", "ncf")
        self.assertIn("INFO", err)

    def test_usage_errors(self):
        self.assertEqual(invoke("decompose", "d:21@3", "--bogus")[0], EXIT_USAGE)
        self.assertEqual(invoke("decompose", "x:21", "--fix", "1")[0], EXIT_USAGE)
        self.assertEqual(invoke("decompose", "d:21@3", "--fix", "4")[0], EXIT_USAGE)
        self.assertEqual(invoke("classify", "e:2:x1 &")[0], EXIT_USAGE)
        self.assertEqual(invoke("classify", "e:2:" + "(" * 150 + "x1" + ")" * 150)[0], EXIT_USAGE)
        self.assertEqual(invoke("graph", "--network", "/nonexistent/network.net")[0], EXIT_USAGE)
        self.assertEqual(invoke("census", "--arity", "2", "--class", "monotone")[0], EXIT_USAGE)
        self.assertEqual(invoke()[0], EXIT_USAGE)
        self.assertEqual(invoke("cycles", "--network", EXAMPLE_NETWORK, "--max-len", "0")[0], EXIT_USAGE)
        self.assertEqual(invoke("path", "--network", EXAMPLE_NETWORK, "--from", "0", "--to", "1", "--sign", "pos")[0], EXIT_USAGE)

    def test_resource_limits(self):
        code, _, err = invoke("census", "--arity", "5", "--class", "pbf")
        self.assertEqual(code, EXIT_RESOURCE_LIMIT)
        self.assertIn("resource limit exceeded", err)
        self.assertEqual(invoke("classify", "d:0@17")[0], EXIT_RESOURCE_LIMIT)

    def test_deterministic(self):
        first = invoke("cycles", "--network", EXAMPLE_NETWORK, "--format", "json")
        second = invoke("cycles", "--network", EXAMPLE_NETWORK, "--format", "json")
        self.assertEqual(first[1], second[1])


if __name__ == "__main__":
    unittest.main()
