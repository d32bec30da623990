#!/usr/bin/env python3
from contextlib import redirect_stderr
import io
import json
import os
import tempfile
import unittest

import sigmadual.cli
from test.common import BASEDIR, diff_files

EXAMPLE_1 = [
    "--p=3",
    "--m=2",
    "--s=2",
    "--kind=type4",
    "--lam=0:1",
    "--i=7",
    "--omega=5",
]


class TestCli(unittest.TestCase):
    def setUp(self):
        self.workdir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.workdir.cleanup()

    def path(self, name):
        return os.path.join(self.workdir.name, name)

    def run_cli(self, args):
        with self.assertRaises(SystemExit) as system_exit:
            sigmadual.cli.main(args)
        return system_exit.exception.code

    def read(self, name):
        with open(self.path(name)) as fp:
            return fp.read()

    def write_spec(self, name, args):
        self.assertEqual(
            0, self.run_cli(["spec", *args, f"--out={self.path(name)}"])
        )
        return self.path(name)

    def test_spec(self):
        path = self.write_spec("example-1.json", EXAMPLE_1)
        with open(path) as fp:
            obj = json.load(fp)
        self.assertEqual("type4", obj["kind"])
        self.assertEqual([1, 0, 1], obj["field"]["modulus"])
        self.assertEqual((7, 5), (obj["i"], obj["omega"]))
        code = self.run_cli(
            ["spec", "--p=3", "--kind=type2", "--i=3", f"--out={self.path('x')}"]
        )
        self.assertEqual(2, code)

    def test_classify(self):
        spec = self.write_spec("example-1.json", EXAMPLE_1)
        actual = self.path("classify-example-1.txt")
        self.assertEqual(0, self.run_cli(["classify", f"--spec={spec}", "-o", actual]))
        diff_files(os.path.join(BASEDIR, "classify-example-1.txt"), actual)

    def test_invalid_spec(self):
        spec = self.path("bad.json")
        with open(spec, "w") as fp:
            json.dump(
                {
                    "field": {"p": 3},
                    "s": 1,
                    "lambda": {"a": [1]},
                    "kind": "type4",
                    "i": 2,
                    "t": 1,
                    "h": [[1]],
                    "omega": 2,
                },
                fp,
            )
        self.assertEqual(2, self.run_cli(["classify", f"--spec={spec}"]))
        self.assertEqual(
            2, self.run_cli(["classify", f"--spec={self.path('missing.json')}"])
        )
        with open(spec, "w") as fp:
            json.dump(
                {
                    "field": {"p": 3},
                    "s": 1,
                    "lambda": {"a": [1]},
                    "kind": "type2",
                    "i": 1.5,
                },
                fp,
            )
        self.assertEqual(2, self.run_cli(["classify", f"--spec={spec}"]))

    def test_check(self):
        spec = self.write_spec("example-1.json", EXAMPLE_1)
        out = self.path("check.txt")
        args = ["check", f"--spec={spec}", f"--out={out}"]
        code = self.run_cli([*args, "--sigma=h=1,eps=1", "--self-orthogonal"])
        self.assertEqual(0, code)
        self.assertEqual("true via mixed.plain\n", self.read("check.txt"))
        self.assertEqual(1, self.run_cli([*args, "--self-orthogonal"]))
        self.assertEqual("false via root-not-fixed\n", self.read("check.txt"))
        code = self.run_cli([*args, "--sigma=h=1,eps=1", "--self-dual"])
        self.assertEqual(1, code)
        self.assertEqual("false via mixed.unbalanced\n", self.read("check.txt"))
        self.assertEqual(2, self.run_cli(args))
        self.assertEqual(2, self.run_cli([*args, "--sigma=h=2", "--self-dual"]))

    def test_dual(self):
        spec = self.write_spec("example-1.json", EXAMPLE_1)
        out = self.path("dual.txt")
        code = self.run_cli(
            ["dual", f"--spec={spec}", "--sigma=h=1,eps=1", "--verify", f"--out={out}"]
        )
        self.assertEqual(0, code)
        lines = self.read("dual.txt").splitlines()
        self.assertEqual("dual lambda=w", lines[0])
        self.assertEqual("dual spec: type4 i=4 t=0 h=0 omega=2", lines[1])
        self.assertEqual("clause: mixed.plain", lines[2])
        self.assertEqual("MATCH", lines[-1])

    def test_enumerate(self):
        spec = self.write_spec("u.json", ["--p=3", "--kind=type2", "--i=0"])
        out = self.path("words.txt")
        args = ["enumerate", f"--spec={spec}", f"--out={out}"]
        self.assertEqual(0, self.run_cli(args))
        lines = self.read("words.txt").splitlines()
        self.assertEqual("size=3^3", lines[0])
        self.assertEqual(27, len(lines[1:-1]))
        self.assertIn("(u, 0, 0)", lines)
        self.assertEqual("d=1", lines[-1])
        self.assertEqual(2, self.run_cli([*args, "--cap=10"]))

    def test_example(self):
        out = self.path("example-3.txt")
        self.assertEqual(0, self.run_cli(["example", "3", f"--out={out}"]))
        lines = self.read("example-3.txt").splitlines()
        self.assertEqual("example 3", lines[0])
        self.assertIn("d=9", lines)
        self.assertIn("mds=true", lines)
        self.assertEqual(2, self.run_cli(["example", "4"]))

    def test_sweep(self):
        config = self.path("sweep.ini")
        with open(config, "w") as fp:
            fp.write("[field.f3]\np = 3\n\n[sweep]\nlambdas = 1/1\nsigmas = 0@1\n")
        out = self.path("summary.txt")
        log = self.path("sweep.jsonl")
        stderr = io.StringIO()
        with redirect_stderr(stderr):
            code = self.run_cli(["sweep", config, f"--log={log}", f"--out={out}"])
        self.assertEqual(0, code)
        self.assertIn("sweeping 7 cases\n", stderr.getvalue())
        self.assertEqual(
            ["specs=7 cases=7", "checks passed=70 failed=0"],
            self.read("summary.txt").splitlines()[:2],
        )
        with open(log) as fp:
            self.assertEqual(70, len(fp.readlines()))
        with open(config, "w") as fp:
            fp.write("[sweep]\ns = 1\n")
        self.assertEqual(2, self.run_cli(["sweep", config]))

    def test_sweep_bad_tokens(self):
        config = self.path("sweep.ini")
        for line in ("sigmas = oops", "lambdas = 0/1", "lambdas = 1/1\njobs = x"):
            with open(config, "w") as fp:
                fp.write(f"[field.f3]\np = 3\n\n[sweep]\n{line}\n")
            self.assertEqual(2, self.run_cli(["sweep", config]), line)


if __name__ == "__main__":
    unittest.main()
