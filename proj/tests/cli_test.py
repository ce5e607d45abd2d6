"""End-to-end checks of the hcp command-line tool.

usage: cli_test.py HCP_BINARY SOURCE_DIR
"""

import copy
import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema
from referencing import Registry, Resource

HCP = None
SRC = None


def run(*args):
    p = subprocess.run([HCP, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def load(name):
    with open(os.path.join(SRC, "schemas", name)) as f:
        return json.load(f)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        verdict = load("verdict.schema.json")
        registry = Registry().with_resource("verdict.schema.json", Resource.from_contents(verdict))
        cls.report = jsonschema.Draft202012Validator(load("report.schema.json"), registry=registry)
        cls.verdict = jsonschema.Draft202012Validator(verdict)

    def report_of(self, *args, code=0):
        rc, out, err = run(*args)
        self.assertEqual(rc, code, f"{args}: {err}")
        doc = json.loads(out)
        self.report.validate(doc)
        return doc

    def test_classify_examples(self):
        doc = self.report_of("classify", "--case", "GL", "-n", "3", "-q", "3", "-l", "2",
                             "--shape", "1^1+(1*2^1)^1")
        v = doc["verdict"]
        self.verdict.validate(v)
        self.assertEqual(v["verdict"], "Imprimitive")
        self.assertEqual(v["witness"], [1, 2])
        self.assertEqual((v["case"], v["n"], v["q"], v["l"], v["e"]), ("GL", 3, 3, 2, 1))

        v = self.report_of("classify", "--case", "Sp", "-n", "4", "-q", "2", "-l", "3")["verdict"]
        self.assertEqual(v["verdict"], "Primitive")
        self.assertEqual(v["witness"], [])

        rc, out, err = run("classify", "--case", "GL", "-n", "2", "-q", "4", "-l", "2",
                           "--shape", "1^2")
        self.assertEqual(rc, 2)
        self.assertIn("defining characteristic", err)
        self.assertEqual(out, "")

    def test_classify_factors_and_conjecture(self):
        doc = self.report_of("classify", "-l", "2", "--factor", "GU:2:3:pair", "--factor",
                             "GL:3:3:1^1+(1*2^1)^1", "--conjecture")
        self.assertEqual(doc["verdict"]["verdict"], "Imprimitive")
        self.assertEqual(doc["verdict"]["witness"], [2, 1, 2])
        self.assertFalse(doc["conjecture"]["used_in_verdict"])
        doc = self.report_of("classify", "-l", "2", "--factor", "GL:2:3:1^2")
        self.assertEqual(doc["verdict"]["verdict"], "Primitive")
        self.assertEqual(run("classify", "-l", "2", "--factor", "GL:2:3")[0], 2)
        self.assertEqual(run("classify", "-l", "2", "--factor", "SO:3:3")[0], 2)

    def test_invalid_input(self):
        bad = [
            ["classify", "-n", "3", "-q", "3", "-l", "2", "--shape", "1^1", ],
            ["classify", "-n", "3", "-q", "3", "-l", "2", "--shape", "1^3", "--bogus"],
            ["classify", "-n", "3", "-q", "6", "-l", "5", "--shape", "1^3"],
            ["classify", "--case", "SO", "-n", "4", "-q", "3", "-l", "2"],
            ["classify", "-n", "3", "-q", "3", "-l", "2"],
            ["shapes", "-n", "3", "-l", "4", "-e", "1"],
            ["shapes", "-n", "3", "-l", "2"],
            ["hecke", "--type", "A2", "--field", "3", "--param", "0"],
            ["hecke", "--type", "B2", "--field", "3", "--param", "1"],
            ["hecke", "--type", "A2", "--field", "6", "--param", "1"],
            ["hecke", "--type", "A2", "--field", "3", "--param", "1", "--subset", "1", "2"],
            ["oracle", "--corpus", "/nonexistent/corpus.json"],
            ["oracle", "--id", "no-such-case"],
            ["verify", "--criterion", "8"],
            ["classify", "-n", "2", "-q", "3", "-l", "2", "--shape", "1^2", "--format", "xml"],
            [],
        ]
        for args in bad:
            rc, out, err = run(*args)
            self.assertEqual(rc, 2, f"{args}: {out} {err}")
            self.assertTrue(err.strip(), args)

    def test_shapes(self):
        doc = self.report_of("shapes", "-n", "4", "-q", "3", "-l", "2")
        self.assertEqual(doc["e"], 1)
        self.assertEqual([s["shape"] for s in doc["shapes"]],
                         ["1^4", "1^2+(1*2^1)^1", "1^0+(1*2^1)^2", "1^0+(1*2^2)^1"])
        self.assertEqual([s["verdict"] for s in doc["shapes"]],
                         ["Primitive", "Imprimitive", "Primitive", "Primitive"])
        doc = self.report_of("shapes", "-n", "6", "-e", "2", "-l", "3")
        self.assertEqual(doc["count"], len(doc["shapes"]))
        self.assertIsNone(doc["config"]["q"])

    def test_hecke(self):
        doc = self.report_of("hecke", "--type", "A2", "--field", "3", "--param", "1")
        self.assertEqual(doc["algebra"]["dim"], 6)
        self.assertEqual(doc["simple_induced"], 0)
        self.assertTrue(all(not r["induced_simple"] for r in doc["induced"]))
        doc = self.report_of("hecke", "--type", "B2", "--field", "5", "--param", "2", "4",
                             "--subset", "2")
        self.assertEqual({tuple(r["J"]) for r in doc["induced"]}, {(2,)})
        self.assertTrue(all(r["induced_dim"] == 4 * r["simple_dim"] for r in doc["induced"]))

    def test_oracle_corpus(self):
        doc = self.report_of("oracle")
        self.assertTrue(doc["all_match"])
        with open(os.path.join(SRC, "data", "corpus.json")) as f:
            manifest = json.load(f)
        jsonschema.Draft202012Validator(load("corpus.schema.json")).validate(manifest)
        self.assertEqual(len(doc["cases"]), len(manifest["cases"]))
        dims = {c["id"]: c["dims"] for c in doc["cuspidal_dimensions"]}
        self.assertEqual(dims["cusp-gl2-3-l2"], [2])
        # Imprimitive verdicts come with an oracle-found induced simple.
        for c in doc["cases"]:
            if c["verdict"]["verdict"] == "Imprimitive":
                self.assertIn(sorted(c["verdict"]["witness"]), c["oracle_witnesses"])
            else:
                self.assertEqual(c["oracle_imprimitive"], 0)

        broken = copy.deepcopy(manifest)
        broken["cases"][0]["expected"]["oracle_simples"] += 1
        broken["cuspidal_dimensions"][0]["dims"] = [5]
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump(broken, f)
            path = f.name
        try:
            doc = self.report_of("oracle", "--corpus", path, code=1)
            self.assertFalse(doc["all_match"])
            rc, out, _ = run("oracle", "--corpus", path, "--format", "text")
            self.assertEqual(rc, 1)
            self.assertIn("MISMATCH", out)
            rc, _, _ = run("oracle", "--corpus", path, "--id", manifest["cases"][1]["id"])
            self.assertEqual(rc, 0)
        finally:
            os.unlink(path)

    def test_verify_subset(self):
        doc = self.report_of("verify", "--criterion", "1", "3")
        self.assertEqual([c["id"] for c in doc["criteria"]], [1, 3])
        self.assertTrue(doc["all_passed"])

    def test_repeat_runs_identical(self):
        invocations = [
            ["classify", "-n", "3", "-q", "3", "-l", "2", "--shape", "1^1+(1*2^1)^1"],
            ["shapes", "-n", "5", "-q", "2", "-l", "3"],
            ["hecke", "--type", "A1xA1", "--field", "3", "--param", "1", "2"],
            ["oracle", "--id", "gl3-2-l3-mixed", "--seed", "7"],
        ]
        for args in invocations:
            for fmt in ("json", "tsv", "text"):
                a = run(*args, "--format", fmt)
                b = run(*args, "--format", fmt)
                self.assertEqual(a, b, args)
                self.assertEqual(a[0], 0, a[2])

    def test_header_echoes_config(self):
        rc, out, _ = run("shapes", "-n", "3", "-q", "3", "-l", "2", "--format", "tsv", "--seed", "5")
        self.assertEqual(rc, 0)
        header = [line for line in out.splitlines() if line.startswith("#")]
        self.assertIn("# seed\t5", header)
        self.assertIn("# n\t3", header)
        rows = [line for line in out.splitlines() if not line.startswith("#")]
        self.assertEqual(rows[0].split("\t")[0], "shape")
        self.assertEqual(len(rows), 3)


if __name__ == "__main__":
    HCP, SRC = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0], "-v"])
