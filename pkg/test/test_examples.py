#!/usr/bin/env python3
import io
import unittest

from sigmadual.codes import CodeSpec, Kind, code_size
from sigmadual.fixtures import build_example, f9, f25, pp
from test.common import r


class TestExamples(unittest.TestCase):
    def test_example_1(self):
        report = build_example(1)
        ctx = f9()
        self.assertEqual(r(ctx, [0, 1]), report.lam)
        self.assertEqual("type4 i=7 t=0 h=0 omega=5", report.printed)
        self.assertEqual(
            CodeSpec(ctx, 2, r(ctx, [0, 1]), Kind.TYPE4, 7, 0, (), 5), report.spec
        )
        self.assertEqual(12, code_size(report.spec))
        self.assertEqual(12, report.closure_rank)
        self.assertTrue(report.spec_matches)
        self.assertTrue(report.sigma_self_orthogonal)
        self.assertFalse(report.self_orthogonal)
        self.assertFalse(report.sigma_self_dual)

    def test_example_2(self):
        report = build_example(2)
        ctx = f25()
        self.assertEqual(6, report.closure_rank)
        self.assertIn("printed spec rejected: omega >= T", report.notes)
        self.assertIn("printed generators span the matrix code", report.notes)
        self.assertEqual(
            CodeSpec(ctx, 1, r(ctx, [2, 2]), Kind.TYPE3, 4, 2, (ctx.one,)),
            report.spec,
        )
        self.assertTrue(report.spec_matches)
        self.assertTrue(report.sigma_self_orthogonal)
        self.assertFalse(report.self_orthogonal)
        self.assertFalse(report.sigma_self_dual)

    def test_example_3(self):
        report = build_example(3)
        ctx = f9()
        self.assertEqual(4, report.closure_rank)
        self.assertEqual(r(ctx, [0, 2]), report.lam)
        self.assertTrue(report.rows_invariant)
        self.assertFalse(report.spec_matches)
        self.assertEqual(9, report.min_distance)
        self.assertTrue(report.mds)
        self.assertTrue(report.sigma_self_orthogonal)
        self.assertFalse(report.self_orthogonal)
        self.assertFalse(report.sigma_self_dual)

    def test_pp(self):
        fp = io.StringIO()
        pp(build_example(3), fp)
        lines = fp.getvalue().splitlines()
        self.assertEqual("example 3", lines[0])
        self.assertIn("lambda=2w", lines)
        self.assertIn("size=3^4", lines)
        self.assertIn("d=9", lines)
        self.assertIn("mds=true", lines)
        self.assertIn("note: constants consistent with the matrix: 2w", lines)

    def test_unknown(self):
        with self.assertRaises(ValueError):
            build_example(4)


if __name__ == "__main__":
    unittest.main()
