#!/usr/bin/env python3
import io
import json
import unittest
from unittest import mock

import numpy as np

from sigmadual import config
from sigmadual.chain_ring import RingElement, automorphisms, identity_aut
from sigmadual.codes import (
    CodeSpec,
    Kind,
    SpanBasis,
    empty_span,
    generators,
    iter_specs,
    span_basis,
)
from sigmadual.echelon import EchelonBasis
from sigmadual.oracle import (
    VerificationLog,
    brute_annihilator,
    brute_dual,
    brute_dual_via_euclidean,
    brute_self_orthogonal,
    consistent_constants,
    ideal_check,
    min_distance,
    reciprocal_annihilator,
)
from test.common import f3, r


def span_of(spec):
    return span_basis(generators(spec), spec.ring)


class TestDual(unittest.TestCase):
    def test_trivial_codes(self):
        ctx = f3()
        zero = span_of(CodeSpec(ctx, 1, r(ctx, 1), Kind.ZERO))
        whole = span_of(CodeSpec(ctx, 1, r(ctx, 1), Kind.WHOLE))
        self.assertEqual(0, zero.rank)
        self.assertEqual(6, whole.rank)
        self.assertEqual(whole, brute_dual(zero, None))
        self.assertEqual(zero, brute_dual(whole, identity_aut(ctx)))
        self.assertTrue(brute_self_orthogonal(zero, None))
        self.assertFalse(brute_self_orthogonal(whole, None))

    def test_torsion_u(self):
        ctx = f3()
        u_code = span_of(CodeSpec(ctx, 1, r(ctx, 2), Kind.TYPE2, 0))
        for sigma in automorphisms(ctx):
            self.assertEqual(u_code, brute_dual(u_code, sigma))
        self.assertEqual(3, u_code.rank)
        self.assertEqual(1, min_distance(u_code))

    def test_min_distance(self):
        ctx = f3()
        zero = empty_span(CodeSpec(ctx, 1, r(ctx, 1), Kind.ZERO).ring)
        self.assertIsNone(min_distance(zero))
        chain = span_of(CodeSpec(ctx, 1, r(ctx, 1, 1), Kind.CHAIN, 5))
        self.assertEqual(3, min_distance(chain))

    def test_euclidean_routes_agree(self):
        ctx = f3()
        for lam in (r(ctx, 2), r(ctx, 1, 1)):
            for spec in iter_specs(ctx, 1, lam):
                span = span_of(spec)
                euclidean = brute_dual(span, None)
                self.assertEqual(euclidean, reciprocal_annihilator(span), spec)
                for sigma in automorphisms(ctx):
                    self.assertEqual(
                        brute_dual(span, sigma),
                        brute_dual_via_euclidean(span, sigma),
                        spec,
                    )

    def test_limits(self):
        ctx = f3()
        span = span_of(CodeSpec(ctx, 1, r(ctx, 1), Kind.WHOLE))
        with mock.patch.object(config, "ORACLE_DIMENSION_LIMIT", 5):
            with self.assertRaises(RuntimeError):
                brute_dual(span, None)
            with self.assertRaises(RuntimeError):
                brute_annihilator(span)
        with mock.patch.object(config, "ORACLE_BLOCK_LIMIT", 1):
            with self.assertRaises(RuntimeError):
                brute_dual(span, None)


class TestAnnihilator(unittest.TestCase):
    def test_trivial_codes(self):
        ctx = f3()
        zero = span_of(CodeSpec(ctx, 1, r(ctx, 1), Kind.ZERO))
        whole = span_of(CodeSpec(ctx, 1, r(ctx, 1), Kind.WHOLE))
        self.assertEqual(whole, brute_annihilator(zero))
        self.assertEqual(zero, brute_annihilator(whole))

    def test_double_annihilator(self):
        ctx = f3()
        for spec in iter_specs(ctx, 1, r(ctx, 1)):
            span = span_of(spec)
            self.assertEqual(span, brute_annihilator(brute_annihilator(span)), spec)

    def test_needs_ring(self):
        ctx = f3()
        echelon = EchelonBasis(3, 6)
        echelon.update(np.asarray([[1, 0, 0, 0, 0, 0]], dtype=np.int64))
        with self.assertRaises(ValueError):
            brute_annihilator(SpanBasis.from_echelon(echelon, ctx, 3))


class TestIdealCheck(unittest.TestCase):
    def test_not_shift_closed(self):
        ctx = f3()
        echelon = EchelonBasis(3, 6)
        echelon.update(np.asarray([[1, 0, 0, 0, 0, 0]], dtype=np.int64))
        span = SpanBasis.from_echelon(echelon, ctx, 3)
        self.assertFalse(ideal_check(span, r(ctx, 1)))
        self.assertEqual([], consistent_constants(span))

    def test_consistent_constants(self):
        ctx = f3()
        span = span_of(CodeSpec(ctx, 1, r(ctx, 1), Kind.TYPE3, 1))
        self.assertEqual([RingElement.one(ctx)], consistent_constants(span))
        whole = span_of(CodeSpec(ctx, 1, r(ctx, 1), Kind.WHOLE))
        self.assertEqual(6, len(consistent_constants(whole)))


class TestVerificationLog(unittest.TestCase):
    def test_record(self):
        fp = io.StringIO()
        log = VerificationLog(fp)
        self.assertTrue(log.record("spec", "h=0,eps=1", "size", 3, 3))
        with self.assertLogs("sigmadual.oracle", "ERROR"):
            self.assertFalse(log.record("spec", "h=0,eps=1", "dual", True, False))
        self.assertEqual(1, log.passed)
        self.assertEqual(["dual"], [entry["check"] for entry in log.failed])
        lines = [json.loads(line) for line in fp.getvalue().splitlines()]
        self.assertEqual([True, False], [line["pass"] for line in lines])
        self.assertEqual("h=0,eps=1", lines[0]["sigma"])

    def test_without_file(self):
        log = VerificationLog()
        log.record("spec", "sigma", "size", 1, 1)
        self.assertEqual(1, log.passed)


if __name__ == "__main__":
    unittest.main()
