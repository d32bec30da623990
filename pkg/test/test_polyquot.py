#!/usr/bin/env python3
import itertools
import random
import unittest

from sigmadual.chain_ring import (
    RingElement,
    aut_apply,
    automorphisms,
    galois_aut,
    identity_aut,
    ring_elements,
)
from sigmadual.gf import gamma0_of
from sigmadual.polyquot import (
    NilExpansion,
    QuotientRing,
    flatten,
    nil_collect,
    nil_expand,
    nilpotent_power,
    psi_map,
    reciprocal,
    reverse_map,
    sigma_inner,
    sigma_map,
    twisted_shift,
    unflatten,
)
from test.common import f3, f9, f25, r


def random_poly(rng, ring, elements):
    return ring.poly(rng.choice(elements) for _ in range(ring.n))


class TestQuotientRing(unittest.TestCase):
    def test_reduction(self):
        ctx = f3()
        ring = QuotientRing(ctx, 3, r(ctx, 2))
        self.assertEqual(ring.constant(r(ctx, 2)), ring.x_power(3))
        self.assertEqual(ring.one(), ring.x_power(-1) * ring.x_power(1))
        self.assertEqual(ring.x_power(2).scale(r(ctx, 2)), ring.x_power(-1))
        self.assertEqual(ring.x_power(5), ring.poly([r(ctx, 0)] * 5 + [r(ctx, 1)]))

    def test_rejects_non_unit(self):
        ctx = f3()
        with self.assertRaises(ValueError):
            QuotientRing(ctx, 3, RingElement.u(ctx))

    def test_shift(self):
        ctx = f3()
        lam = r(ctx, 2, 1)
        ring = QuotientRing(ctx, 3, lam)
        f = ring.poly([r(ctx, 1), r(ctx, 0, 1), r(ctx, 2)])
        self.assertEqual(f.shift(), ring.x_power(1) * f)
        self.assertEqual(
            (lam * r(ctx, 2), r(ctx, 1), r(ctx, 0, 1)), twisted_shift(f.coeffs, lam)
        )

    def test_ring_laws(self):
        ctx = f9()
        ring = QuotientRing(ctx, 3, r(ctx, [0, 1], [1]))
        elements = list(ring_elements(ctx))
        rng = random.Random(1)
        for _ in range(20):
            f, g, h = (random_poly(rng, ring, elements) for _ in range(3))
            self.assertEqual(f * g, g * f)
            self.assertEqual((f * g) * h, f * (g * h))
            self.assertEqual(f * (g + h), f * g + f * h)

    def test_ring_laws_f3(self):
        ctx = f3()
        ring = QuotientRing(ctx, 3, r(ctx, 2, 1))
        elements = list(ring_elements(ctx))
        rng = random.Random(4)
        for _ in range(500):
            f, g, h = (random_poly(rng, ring, elements) for _ in range(3))
            self.assertEqual(f + g, g + f)
            self.assertEqual(f * g, g * f)
            self.assertEqual((f + g) + h, f + (g + h))
            self.assertEqual((f * g) * h, f * (g * h))
            self.assertEqual(f * (g + h), f * g + f * h)
            self.assertEqual(f, f * ring.one())


class TestNilpotent(unittest.TestCase):
    def test_field_constant(self):
        ctx = f3()
        for gamma in ctx.units():
            ring = QuotientRing(ctx, 3, RingElement.of(gamma))
            base = gamma0_of(gamma, 1)
            self.assertTrue(nilpotent_power(base, 2, ring))
            self.assertFalse(nilpotent_power(base, 3, ring))

    def test_chain_constant(self):
        ctx = f3()
        lam = r(ctx, 1, 1)
        ring = QuotientRing(ctx, 3, lam)
        base = gamma0_of(lam.a, 1)
        u = ring.constant(RingElement.u(ctx))
        self.assertEqual(u, nilpotent_power(base, 3, ring))
        self.assertTrue(nilpotent_power(base, 5, ring))
        self.assertFalse(nilpotent_power(base, 6, ring))
        with self.assertRaises(ValueError):
            nilpotent_power(base, 7, ring)

    def test_nilpotency_index_s2(self):
        ctx = f3()
        ring = QuotientRing(ctx, 9, r(ctx, 2))
        base = gamma0_of(ctx.scalar(2), 2)
        self.assertTrue(nilpotent_power(base, 8, ring))
        self.assertFalse(nilpotent_power(base, 9, ring))

    def test_nilpotency_index_every_unit(self):
        for ctx, s in ((f9(), 2), (f25(), 1)):
            n = ctx.p**s
            for gamma in ctx.units():
                ring = QuotientRing(ctx, n, RingElement.of(gamma))
                base = gamma0_of(gamma, s)
                self.assertTrue(nilpotent_power(base, n - 1, ring), gamma)
                self.assertFalse(nilpotent_power(base, n, ring), gamma)

    def test_expand_collect(self):
        ctx = f9()
        lam = r(ctx, [0, 1])
        ring = QuotientRing(ctx, 9, lam)
        base = gamma0_of(lam.a, 2)
        elements = list(ring_elements(ctx))
        rng = random.Random(2)
        for _ in range(10):
            f = random_poly(rng, ring, elements)
            self.assertEqual(f, nil_collect(nil_expand(f, base), ring))
        y3 = nilpotent_power(base, 3, ring)
        expansion = nil_expand(y3, base)
        self.assertEqual(RingElement.one(ctx), expansion.coeffs[3])
        self.assertFalse(any(expansion.coeffs[:3]) or any(expansion.coeffs[4:]))

    def test_expansion_arithmetic(self):
        ctx = f3()
        one, two = ctx.one, ctx.scalar(2)
        e = NilExpansion.of_field(one, [one, two, one]) - NilExpansion.of_field(
            one, [one]
        )
        self.assertEqual((ctx.zero, two, one), e.field_part())
        self.assertEqual((ctx.zero,), e.truncate(1).field_part())


class TestMaps(unittest.TestCase):
    def test_psi_is_a_ring_homomorphism(self):
        ctx = f9()
        for gamma in (ctx.generator, ctx.element([1, 1])):
            source = QuotientRing(ctx, 3, RingElement.one(ctx))
            target = QuotientRing(ctx, 3, RingElement.of(gamma))
            gamma0 = gamma0_of(gamma, 1)
            elements = list(ring_elements(ctx))
            rng = random.Random(3)
            for _ in range(100):
                f = random_poly(rng, source, elements)
                g = random_poly(rng, source, elements)
                self.assertEqual(
                    psi_map(f * g, gamma0, target),
                    psi_map(f, gamma0, target) * psi_map(g, gamma0, target),
                )
                self.assertEqual(
                    psi_map(f + g, gamma0, target),
                    psi_map(f, gamma0, target) + psi_map(g, gamma0, target),
                )
            self.assertEqual(target.one(), psi_map(source.one(), gamma0, target))

    def test_psi_is_bijective(self):
        ctx = f3()
        gamma = ctx.scalar(2)
        source = QuotientRing(ctx, 3, RingElement.one(ctx))
        target = QuotientRing(ctx, 3, RingElement.of(gamma))
        gamma0 = gamma0_of(gamma, 1)
        elements = list(ring_elements(ctx))
        images = {
            psi_map(source.poly(coeffs), gamma0, target)
            for coeffs in itertools.product(elements, repeat=3)
        }
        self.assertEqual(9**3, len(images))

    def test_reverse(self):
        ctx = f3()
        lam = r(ctx, 2, 1)
        ring = QuotientRing(ctx, 3, lam)
        x = ring.x_power(1)
        x_inv = reverse_map(x)
        self.assertEqual(x_inv.ring.one(), x_inv * x_inv.ring.x_power(1))
        f = ring.poly([r(ctx, 1), r(ctx, 2), r(ctx, 0, 1)])
        g = ring.poly([r(ctx, 0), r(ctx, 1, 1), r(ctx, 2)])
        self.assertEqual(reverse_map(f * g), reverse_map(f) * reverse_map(g))

    def test_reciprocal(self):
        ctx = f3()
        one, two, zero = r(ctx, 1), r(ctx, 2), r(ctx, 0)
        self.assertEqual((two, one), reciprocal([one, two, zero]))
        with self.assertRaises(ValueError):
            reciprocal([zero, zero])

    def test_sigma_inner(self):
        ctx = f3()
        u = RingElement.u(ctx)
        x = (r(ctx, 1), u)
        y = (r(ctx, 1), r(ctx, 1))
        self.assertEqual(r(ctx, 1, 1), sigma_inner(x, y, None))
        self.assertEqual(r(ctx, 1, 1), sigma_inner(x, y, identity_aut(ctx)))
        with self.assertRaises(ValueError):
            sigma_inner(x, y[:1], None)

    def test_sigma_inner_applies_sigma_to_y(self):
        ctx = f9()
        elements = list(ring_elements(ctx))
        rng = random.Random(5)
        for sigma in automorphisms(ctx):
            for _ in range(10):
                x = tuple(rng.choices(elements, k=3))
                y = tuple(rng.choices(elements, k=3))
                image = tuple(aut_apply(sigma, c) for c in y)
                self.assertEqual(sigma_inner(x, image, None), sigma_inner(x, y, sigma))

    def test_sigma_map(self):
        ctx = f9()
        sigma = galois_aut(ctx, 1)
        ring = QuotientRing(ctx, 3, r(ctx, [0, 1]))
        f = ring.x_power(1).scale(r(ctx, [0, 1]))
        image = sigma_map(f, sigma)
        self.assertEqual(r(ctx, [0, 2]), image.ring.lam)
        self.assertEqual(r(ctx, [0, 2]), image.coeffs[1])

    def test_flatten(self):
        ctx = f9()
        word = (r(ctx, [1, 2], [0, 1]), r(ctx, [2], [1, 1]))
        self.assertEqual([1, 2, 0, 1, 2, 0, 1, 1], flatten(word))
        self.assertEqual(word, unflatten(flatten(word), ctx))


if __name__ == "__main__":
    unittest.main()
