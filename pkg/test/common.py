#!/usr/bin/env python3
from contextlib import contextmanager
import os
import shutil
import subprocess
import sys
import time
import unittest

from sigmadual.chain_ring import RingElement
from sigmadual.gf import FieldCtx

LONG_TESTS = os.environ.get("SIGMADUAL_LONG_TESTS") == "1"
BASEDIR = os.path.dirname(os.path.realpath(__file__))


def diff_files(expected, actual):
    if "UPDATE_EXPECTATIONS" in os.environ:
        shutil.copyfile(actual, expected)
    subprocess.check_call(
        [
            "diff",
            "-au",
            expected,
            actual,
        ]
    )


@contextmanager
def timeit(s):
    t0 = time.time()
    try:
        yield
    finally:
        print("{} done in {:2f}s".format(s, time.time() - t0), file=sys.stderr)


def long_test(function):
    return unittest.skipUnless(LONG_TESTS, "set SIGMADUAL_LONG_TESTS=1")(function)


def f3() -> FieldCtx:
    return FieldCtx(3, 1, (0, 1))


def f5() -> FieldCtx:
    return FieldCtx(5, 1, (0, 1))


def f9() -> FieldCtx:
    return FieldCtx(3, 2, (1, 0, 1))


def r(ctx: FieldCtx, a=(), b=()) -> RingElement:
    """Ring element from coefficient lists; ints are promoted to scalars."""
    if isinstance(a, int):
        a = [a % ctx.p]
    if isinstance(b, int):
        b = [b % ctx.p]
    return RingElement(ctx.element(a), ctx.element(b))


def f25() -> FieldCtx:
    return FieldCtx(5, 2, (3, 0, 1))
